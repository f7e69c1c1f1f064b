//! Diagnostics that compare `I` with its truncations `<I_{<=delta}>`:
//! dimension and degree, regularity, the common factor, saturation, and
//! reduction numbers.

use serde::{Deserialize, Serialize};

use super::{maximal_growth, sectional_matrix_capped, SectionalError, SectionalMatrix};
use crate::gin::{rgin, GinResult};
use crate::groebner::{truncation_ideal, IdealPresentation};
use crate::monomial::MonomialIdeal;
use crate::poly::{gcd_of_all, Polynomial};

/// rgin of `ideal` and its matrix through at least `min_degree`.
pub(crate) fn full_matrix(
    ideal: &IdealPresentation,
    seed: u64,
    min_degree: u32,
) -> Result<(GinResult, SectionalMatrix), SectionalError> {
    let gin = rgin(ideal, seed)?;
    let top = (gin.regularity() + 1).max(min_degree);
    let m = SectionalMatrix::from_gin(&gin, 1, Some(top));
    Ok((gin, m))
}

/// `(dim, deg)` of `P/J` from the Hilbert series of `P/rgin(J)`.
fn dim_deg_of(ideal: &IdealPresentation, seed: u64) -> Result<(usize, i64), SectionalError> {
    let num = rgin(ideal, seed)?.rgin.hilbert_numerator();
    Ok((num.dimension(), num.multiplicity()))
}

fn require_nonzero_component(m: &SectionalMatrix, delta: u32) -> Result<(), SectionalError> {
    if m.component_is_nonzero(delta) {
        Ok(())
    } else {
        Err(SectionalError::ZeroComponent { delta })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncationDimDeg {
    pub delta: u32,
    /// `min { j > 1 : M(j, delta) != 0 }`.
    pub i: usize,
    pub dim: usize,
    pub deg: u64,
    /// `(dim, deg)` of `P/<I_{<=delta}>`, computed directly.
    pub observed_delta: (usize, i64),
    /// `(dim, deg)` of `P/<I_{<=delta+1}>`, computed directly.
    pub observed_next: (usize, i64),
}

impl TruncationDimDeg {
    /// Both truncations have the predicted dimension and degree.
    pub fn verified(&self) -> bool {
        let expected = (self.dim, self.deg as i64);
        self.observed_delta == expected && self.observed_next == expected
    }
}

/// Predicts `dim` and `deg` of both `P/<I_{<=delta}>` and
/// `P/<I_{<=delta+1}>` from column `delta`, then checks them on the
/// truncations themselves.
///
/// Needs `0 != I_delta != P_delta` and `M(i, delta) = M(i, delta + 1)` for
/// `i = min { j > 1 : M(j, delta) != 0 }`.
pub fn truncation_dim_deg(
    ideal: &IdealPresentation,
    delta: u32,
    seed: u64,
) -> Result<TruncationDimDeg, SectionalError> {
    let m = sectional_matrix_capped(ideal, seed, delta + 1)?;
    truncation_dim_deg_in(ideal, &m, delta, seed)
}

pub(crate) fn truncation_dim_deg_in(
    ideal: &IdealPresentation,
    m: &SectionalMatrix,
    delta: u32,
    seed: u64,
) -> Result<TruncationDimDeg, SectionalError> {
    const OP: &str = "truncation_dim_deg";
    m.check_degree(delta + 1)?;
    let n = m.arity();
    if !m.component_is_proper(delta) {
        return Err(SectionalError::Precondition {
            op: OP,
            reason: format!("I_{delta} = P_{delta}"),
        });
    }
    // with I_delta = 0 the truncation is the zero ideal and the count is off
    require_nonzero_component(m, delta)?;
    let i = (2..=n)
        .find(|&j| m.at(j, delta) != 0)
        .ok_or_else(|| SectionalError::Precondition {
            op: OP,
            reason: "fewer than two variables".into(),
        })?;
    if m.at(i, delta) != m.at(i, delta + 1) {
        return Err(SectionalError::Precondition {
            op: OP,
            reason: format!("M({i},{delta}) != M({i},{})", delta + 1),
        });
    }
    let observed_delta = dim_deg_of(&truncation_ideal(ideal, delta)?, seed)?;
    let observed_next = dim_deg_of(&truncation_ideal(ideal, delta + 1)?, seed)?;
    Ok(TruncationDimDeg {
        delta,
        i,
        dim: n - i + 1,
        deg: m.at(i, delta),
        observed_delta,
        observed_next,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncationRegularity {
    pub delta: u32,
    pub regularity: u32,
    /// `reg(<I_{<=delta}>) <= delta`.
    pub holds: bool,
}

/// Under `n`-maximal growth in degree `delta`, `reg(<I_{<=delta}>) <= delta`.
pub fn truncation_regularity_check(
    ideal: &IdealPresentation,
    delta: u32,
    seed: u64,
) -> Result<TruncationRegularity, SectionalError> {
    let m = sectional_matrix_capped(ideal, seed, delta + 1)?;
    truncation_regularity_in(ideal, &m, delta, seed)
}

pub(crate) fn truncation_regularity_in(
    ideal: &IdealPresentation,
    m: &SectionalMatrix,
    delta: u32,
    seed: u64,
) -> Result<TruncationRegularity, SectionalError> {
    if !maximal_growth(m, m.arity(), delta)? {
        return Err(SectionalError::Precondition {
            op: "truncation_regularity_check",
            reason: format!("no {}-maximal growth in degree {delta}", m.arity()),
        });
    }
    let regularity = rgin(&truncation_ideal(ideal, delta)?, seed)?.regularity();
    Ok(TruncationRegularity {
        delta,
        regularity,
        holds: regularity <= delta,
    })
}

/// The `M`-potential degree of the GCD of `I_delta`: `M(2, delta)`.
pub fn potential_gcd_degree(m: &SectionalMatrix, delta: u32) -> Result<u64, SectionalError> {
    m.check_row(2)?;
    m.check_degree(delta)?;
    require_nonzero_component(m, delta)?;
    Ok(m.at(2, delta))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationGcd {
    pub delta: u32,
    /// Normalized: integer content 1, positive leading coefficient.
    pub gcd: Polynomial,
    pub potential_degree: u64,
}

/// The GCD of `<I_{<=delta}>`, computed over a basis of the truncation.
///
/// Requires `I_delta != 0` and 2-maximal growth in degree `delta`. The GCD
/// must have degree `M(2, delta)` and divide every generator of
/// `<I_{<=delta+1}>`; either failure is reported as an error.
pub fn gcd_of_truncation(
    ideal: &IdealPresentation,
    delta: u32,
    seed: u64,
) -> Result<TruncationGcd, SectionalError> {
    let m = sectional_matrix_capped(ideal, seed, delta + 1)?;
    gcd_of_truncation_in(ideal, &m, delta)
}

pub(crate) fn gcd_of_truncation_in(
    ideal: &IdealPresentation,
    m: &SectionalMatrix,
    delta: u32,
) -> Result<TruncationGcd, SectionalError> {
    let potential_degree = potential_gcd_degree(m, delta)?;
    if !maximal_growth(m, 2, delta)? {
        return Err(SectionalError::Precondition {
            op: "gcd_of_truncation",
            reason: format!("no 2-maximal growth in degree {delta}"),
        });
    }
    let trunc = truncation_ideal(ideal, delta)?;
    let gcd = gcd_of_all(trunc.generators()).expect("I_delta != 0");
    let found = gcd.degree().expect("gcd of nonzero polynomials");
    if u64::from(found) != potential_degree {
        return Err(SectionalError::GcdDegreeMismatch {
            expected: potential_degree,
            found,
        });
    }
    let next = truncation_ideal(ideal, delta + 1)?;
    if let Some(g) = next.generators().iter().find(|g| g.exact_div(&gcd).is_none()) {
        return Err(SectionalError::GcdNotShared {
            delta,
            generator: g.to_string(),
        });
    }
    Ok(TruncationGcd {
        delta,
        gcd,
        potential_degree,
    })
}

/// `r_s(P/I) = max { d : M(n - s, d) != 0 }`.
pub fn reduction_number(
    ideal: &IdealPresentation,
    s: usize,
    seed: u64,
) -> Result<u32, SectionalError> {
    reduction_number_of(&rgin(ideal, seed)?.rgin, s)
}

/// [`reduction_number`] for a strongly stable ideal, i.e. `rgin(I)`.
pub fn reduction_number_of(rgin: &MonomialIdeal, s: usize) -> Result<u32, SectionalError> {
    let n = rgin.arity();
    if s > n {
        return Err(SectionalError::RowOutOfRange { i: 0, n });
    }
    if rgin.is_whole() {
        return Err(SectionalError::WholeRing);
    }
    if s == n {
        // cutting by n forms leaves K in degree 0
        return Ok(0);
    }
    let row = n - s;
    let restricted = rgin.restrict_to_first_vars(row).expect("1 <= row <= n");
    if restricted.is_whole() {
        return Err(SectionalError::WholeRing);
    }
    // strongly stable: Artinian iff some power of the last variable is in it
    let artinian = restricted
        .generators()
        .iter()
        .any(|g| g.exponent(row - 1) == g.degree());
    if !artinian {
        return Err(SectionalError::InfiniteReductionNumber { s, row });
    }
    let (series, dim) = restricted.hilbert_numerator().reduced();
    debug_assert_eq!(dim, 0);
    let top = series
        .iter()
        .rposition(|&c| c != 0)
        .expect("a proper ideal leaves 1 outside");
    Ok(top as u32)
}

/// `r(P/I) = r_{dim(P/I)}(P/I)`.
pub fn reduction_number_total(rgin: &MonomialIdeal) -> Result<u32, SectionalError> {
    reduction_number_of(rgin, rgin.hilbert_numerator().dimension())
}

/// For saturated `I`: `n`-maximal growth in degree `delta` iff
/// `(n-1)`-maximal growth there. Returns whether the two flags agree.
pub fn saturated_growth_equivalence(
    ideal: &IdealPresentation,
    delta: u32,
    seed: u64,
) -> Result<bool, SectionalError> {
    let (gin, m) = full_matrix(ideal, seed, delta + 1)?;
    if gin.rgin.involves_last_variable() {
        return Err(SectionalError::NotSaturated);
    }
    let n = m.arity();
    if n < 2 {
        return Err(SectionalError::RowOutOfRange { i: 0, n });
    }
    Ok(maximal_growth(&m, n, delta)? == maximal_growth(&m, n - 1, delta)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncationSaturation {
    pub delta: u32,
    /// `<I_{<=delta}>` is saturated.
    pub saturated: bool,
    /// `(n-1)`-maximal growth in degree `delta`.
    pub hypothesis: bool,
}

impl TruncationSaturation {
    /// The hypothesis forces a saturated truncation.
    pub fn consistent(&self) -> bool {
        !self.hypothesis || self.saturated
    }
}

/// Saturation of `<I_{<=delta}>` for saturated `I`. When `M` has
/// `(n-1)`-maximal growth in degree `delta` the truncation must be saturated;
/// otherwise the verdict is informational.
pub fn truncation_saturation(
    ideal: &IdealPresentation,
    delta: u32,
    seed: u64,
) -> Result<TruncationSaturation, SectionalError> {
    let (gin, m) = full_matrix(ideal, seed, delta + 1)?;
    truncation_saturation_in(ideal, &gin.rgin, &m, delta, seed)
}

pub(crate) fn truncation_saturation_in(
    ideal: &IdealPresentation,
    rgin_of_ideal: &MonomialIdeal,
    m: &SectionalMatrix,
    delta: u32,
    seed: u64,
) -> Result<TruncationSaturation, SectionalError> {
    if rgin_of_ideal.involves_last_variable() {
        return Err(SectionalError::NotSaturated);
    }
    let n = m.arity();
    if n < 2 {
        return Err(SectionalError::RowOutOfRange { i: 0, n });
    }
    let hypothesis = maximal_growth(m, n - 1, delta)?;
    let trunc = truncation_ideal(ideal, delta)?;
    let saturated = !rgin(&trunc, seed)?.rgin.involves_last_variable();
    Ok(TruncationSaturation {
        delta,
        saturated,
        hypothesis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, PowerProduct, Ring};
    use std::sync::Arc;

    fn ideal(r: &Arc<Ring>, gens: &[&str]) -> IdealPresentation {
        IdealPresentation::new(r, gens.iter().map(|g| parse_polynomial(g, r).unwrap())).unwrap()
    }

    #[test]
    fn reduction_numbers_of_running_example() {
        let r = Ring::new(&["x", "y", "z"]).unwrap();
        let i = ideal(&r, &["x^4 - y^2*z^2", "x*y^2 - y*z^2 - z^3"]);
        assert_eq!(reduction_number(&i, 1, 42).unwrap(), 5);
        assert_eq!(reduction_number(&i, 2, 42).unwrap(), 2);
        assert!(matches!(
            reduction_number(&i, 0, 42),
            Err(SectionalError::InfiniteReductionNumber { s: 0, row: 3 })
        ));
        let lt = ideal(&r, &["x*y^2", "x^4", "x^3*y*z^2", "y^5*z^2"]);
        assert_eq!(reduction_number(&lt, 1, 42).unwrap(), 6);
    }

    #[test]
    fn artinian_socle_degree() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let j = MonomialIdeal::new(&r, [[2, 0], [0, 2]].map(|e| PowerProduct::from_slice(&e)));
        // not strongly stable: go through rgin
        let i = IdealPresentation::from_monomial_ideal(&j);
        assert_eq!(reduction_number(&i, 0, 1).unwrap(), 2);
    }

    #[test]
    fn principal_gcd() {
        let r = Ring::new(&["x", "y", "z"]).unwrap();
        let i = ideal(&r, &["x^2 + y*z"]);
        let g = gcd_of_truncation(&i, 2, 3).unwrap();
        assert_eq!(g.gcd.to_string(), "x^2 + y*z");
        assert_eq!(g.potential_degree, 2);
        let m = sectional_matrix_capped(&i, 3, 2).unwrap();
        assert!(matches!(
            potential_gcd_degree(&m, 1),
            Err(SectionalError::ZeroComponent { delta: 1 })
        ));
    }
}
