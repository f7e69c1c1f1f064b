//! Gröbner bases: Buchberger with degree truncation, normal forms, leading
//! term ideals, truncations `<I_{<=delta}>` and ideal equality.

mod engine;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::monomial::MonomialIdeal;
use crate::poly::{same_ring, Polynomial, PowerProduct, Ring, TermOrder};

pub(crate) use engine::Terms;
use engine::{full_reduce, interreduce, lead, Kernel};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("generator {index} does not belong to the ring {ring}")]
    ForeignGenerator { index: usize, ring: String },
    #[error("generator {index} is not homogeneous: {poly}")]
    NotHomogeneous { index: usize, poly: String },
    #[error("a degree-capped basis does not determine the leading term ideal")]
    CappedBasis,
    #[error("the ideals live in different rings")]
    RingMismatch,
}

/// A finite generating set of a polynomial ideal. Zero generators are
/// dropped; an empty list presents the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPresentation {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
}

impl IdealPresentation {
    pub fn new(
        ring: &Arc<Ring>,
        generators: impl IntoIterator<Item = Polynomial>,
    ) -> Result<Self, GroebnerError> {
        let mut gens = Vec::new();
        for (index, g) in generators.into_iter().enumerate() {
            if !same_ring(g.ring(), ring) {
                return Err(GroebnerError::ForeignGenerator {
                    index,
                    ring: ring.to_string(),
                });
            }
            if !g.is_zero() {
                gens.push(g.with_order(TermOrder::DegRevLex));
            }
        }
        Ok(IdealPresentation {
            ring: Arc::clone(ring),
            generators: gens,
        })
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        IdealPresentation {
            ring: Arc::clone(ring),
            generators: Vec::new(),
        }
    }

    pub fn from_monomial_ideal(ideal: &MonomialIdeal) -> Self {
        let gens = ideal
            .generators()
            .iter()
            .map(|t| Polynomial::monomial(ideal.ring(), t.clone(), BigRational::one()))
            .collect();
        IdealPresentation {
            ring: Arc::clone(ideal.ring()),
            generators: gens,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    /// Errors with the first non-homogeneous generator.
    pub fn require_homogeneous(&self) -> Result<(), GroebnerError> {
        match self.generators.iter().position(|g| !g.is_homogeneous()) {
            None => Ok(()),
            Some(index) => Err(GroebnerError::NotHomogeneous {
                index,
                poly: self.generators[index].to_string(),
            }),
        }
    }

    pub fn max_generator_degree(&self) -> Option<u32> {
        self.generators.iter().filter_map(Polynomial::degree).max()
    }

    /// The monomial ideal generated by the generators, when every generator
    /// is a monomial.
    pub fn as_monomial_ideal(&self) -> Option<MonomialIdeal> {
        if !self.generators.iter().all(Polynomial::is_monomial) {
            return None;
        }
        Some(MonomialIdeal::new(
            &self.ring,
            self.generators
                .iter()
                .map(|g| g.leading_monomial().expect("nonzero").clone()),
        ))
    }

    /// Image under `x_i -> sum_j m_ij x_j`; the matrix must be invertible.
    pub fn apply_linear_change(
        &self,
        matrix: &[Vec<i64>],
    ) -> Result<IdealPresentation, crate::poly::PolyError> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.apply_linear_change(matrix))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IdealPresentation {
            ring: Arc::clone(&self.ring),
            generators: gens,
        })
    }

    pub(crate) fn with_unchecked_change(&self, matrix: &[Vec<i64>]) -> IdealPresentation {
        IdealPresentation {
            ring: Arc::clone(&self.ring),
            generators: self
                .generators
                .iter()
                .map(|g| g.substitute_linear_unchecked(matrix))
                .collect(),
        }
    }
}

impl fmt::Display for IdealPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return f.write_str("(0)");
        }
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A reduced Gröbner basis, possibly truncated at a degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    order: TermOrder,
    elements: Vec<Polynomial>,
    degree_cap: Option<u32>,
    minimal_generator_degrees: Vec<u32>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    /// Elements sorted by degree, then increasing leading term; each has
    /// integer content 1 and a positive leading coefficient.
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn degree_cap(&self) -> Option<u32> {
        self.degree_cap
    }

    /// Degrees of a minimal homogeneous generating set (within the cap), in
    /// increasing order. Meaningful for homogeneous input only.
    pub fn minimal_generator_degrees(&self) -> &[u32] {
        &self.minimal_generator_degrees
    }

    pub fn leading_monomials(&self) -> Vec<PowerProduct> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial().expect("nonzero").clone())
            .collect()
    }

    /// Leading term ideal in all degrees up to the cap; exact when uncapped.
    pub(crate) fn leading_monomial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(&self.ring, self.leading_monomials())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.elements, self.order)
    }

    /// Membership test; exact for uncapped bases, and for homogeneous `f` of
    /// degree at most the cap.
    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }
}

pub(crate) fn to_terms(f: &Polynomial, order: TermOrder) -> Terms {
    let f = f.with_order(order).normalized();
    f.terms()
        .iter()
        .map(|(t, c)| {
            debug_assert!(c.is_integer());
            (t.clone(), c.to_integer())
        })
        .collect()
}

pub(crate) fn from_terms(ring: &Arc<Ring>, order: TermOrder, terms: Terms) -> Polynomial {
    Polynomial::from_sorted_terms(
        ring,
        order,
        terms
            .into_iter()
            .map(|(t, c)| (t, BigRational::from_integer(c)))
            .collect(),
    )
}

/// Remainder of `f` on division by `basis`: no term of the result is
/// divisible by a leading term of `basis`, and `f - result` lies in the ideal
/// they generate. The result is exact over `Q` (not rescaled).
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: TermOrder) -> Polynomial {
    let ring = f.ring();
    let basis: Vec<Polynomial> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.with_order(order))
        .collect();
    let mut rem: HashMap<PowerProduct, BigRational> = HashMap::new();
    let mut p = f.with_order(order);
    while let Some((t, c)) = p.leading_term() {
        let divisor = basis
            .iter()
            .find(|g| g.leading_monomial().expect("nonzero").divides(t));
        match divisor {
            Some(g) => {
                let (lg, cg) = g.leading_term().expect("nonzero");
                let q = lg.quotient_of(t).expect("divides");
                let coeff = c / cg;
                p = &p - &g.mul_term(&q, &coeff);
            }
            None => {
                rem.insert(t.clone(), c.clone());
                let lead_only =
                    Polynomial::monomial(ring, t.clone(), c.clone()).with_order(order);
                p = &p - &lead_only;
            }
        }
    }
    Polynomial::from_terms(ring, order, rem)
}

/// Buchberger's algorithm (normal strategy, Gebauer-Moeller criteria).
///
/// With `degree_cap = Some(D)` the input must be homogeneous; the result then
/// spans `I_d` for every `d <= D`.
pub fn buchberger(
    ideal: &IdealPresentation,
    order: TermOrder,
    degree_cap: Option<u32>,
) -> Result<GroebnerBasis, GroebnerError> {
    if degree_cap.is_some() {
        ideal.require_homogeneous()?;
    }
    Ok(run(ideal, order, degree_cap, true))
}

/// Shared driver; `reduce` selects a fully interreduced result over a merely
/// minimal one (enough for leading terms).
pub(crate) fn run(
    ideal: &IdealPresentation,
    order: TermOrder,
    degree_cap: Option<u32>,
    reduce: bool,
) -> GroebnerBasis {
    let inputs: Vec<Terms> = ideal
        .generators
        .iter()
        .map(|g| to_terms(g, order))
        .collect();
    let kernel = Kernel { order, degree_cap };
    let out = kernel.run(inputs);
    let basis = if reduce {
        interreduce(out.basis, order)
    } else {
        out.basis
    };
    let mut degrees = out.minimal_generator_degrees;
    degrees.sort_unstable();
    GroebnerBasis {
        ring: Arc::clone(&ideal.ring),
        order,
        elements: basis
            .into_iter()
            .map(|t| from_terms(&ideal.ring, order, t))
            .collect(),
        degree_cap,
        minimal_generator_degrees: degrees,
    }
}

/// Minimal generators of `LT(I)`; rejects degree-capped bases.
pub fn leading_term_ideal(basis: &GroebnerBasis) -> Result<MonomialIdeal, GroebnerError> {
    if basis.degree_cap.is_some() {
        return Err(GroebnerError::CappedBasis);
    }
    Ok(basis.leading_monomial_ideal())
}

/// Generators of `<I_{<=delta}>`: the elements of degree at most `delta` of a
/// basis capped at `delta`. Yields the zero ideal when `I_d = 0` for all
/// `d <= delta`.
pub fn truncation_ideal(
    ideal: &IdealPresentation,
    delta: u32,
) -> Result<IdealPresentation, GroebnerError> {
    ideal.require_homogeneous()?;
    let gb = run(ideal, TermOrder::DegRevLex, Some(delta), true);
    Ok(IdealPresentation {
        ring: Arc::clone(&ideal.ring),
        generators: gb
            .elements
            .into_iter()
            .filter(|g| g.degree().is_some_and(|d| d <= delta))
            .collect(),
    })
}

/// True iff both presentations generate the same ideal.
pub fn ideal_equal(a: &IdealPresentation, b: &IdealPresentation) -> Result<bool, GroebnerError> {
    if !same_ring(&a.ring, &b.ring) {
        return Err(GroebnerError::RingMismatch);
    }
    let ga = run(a, TermOrder::DegRevLex, None, false);
    let gb = run(b, TermOrder::DegRevLex, None, false);
    Ok(b.generators.iter().all(|f| ga.contains(f)) && a.generators.iter().all(|f| gb.contains(f)))
}

/// True iff `f` lies in the ideal.
pub fn is_member(f: &Polynomial, ideal: &IdealPresentation) -> bool {
    run(ideal, TermOrder::DegRevLex, None, false).contains(f)
}

/// Every S-polynomial of `basis` reduces to zero modulo `basis`.
pub fn s_polynomials_reduce_to_zero(basis: &[Polynomial], order: TermOrder) -> bool {
    let terms: Vec<Terms> = basis.iter().map(|g| to_terms(g, order)).collect();
    for i in 0..terms.len() {
        for j in i + 1..terms.len() {
            let lcm = lead(&terms[i]).lcm(lead(&terms[j]));
            let (fi, fj) = (&basis[i].with_order(order), &basis[j].with_order(order));
            let (li, ci) = fi.leading_term().expect("nonzero");
            let (lj, cj) = fj.leading_term().expect("nonzero");
            let s = &fi.mul_term(&li.quotient_of(&lcm).expect("lcm"), &(BigRational::one() / ci))
                - &fj.mul_term(&lj.quotient_of(&lcm).expect("lcm"), &(BigRational::one() / cj));
            let s_terms: Terms = if s.is_zero() { Vec::new() } else { to_terms(&s, order) };
            if !full_reduce(s_terms, &terms, order).is_empty() {
                return false;
            }
        }
    }
    true
}
