//! Hilbert polynomial and series of `R_i = P / (I + (L_1, ..., L_{n-i}))`
//! read off one column of the sectional matrix, and the dimension/degree
//! criterion that follows.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{check_generation, maximal_growth, SectionalError, SectionalMatrix};
use crate::binomial::binom;
use crate::monomial::divide_by_one_minus_t;

/// Univariate polynomial in `x` with rational coefficients, lowest degree
/// first, no trailing zeros. Serialized as a list of `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        RationalPolynomial::new(vec![c])
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn evaluate(&self, x: i64) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(x));
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &x + c)
    }

    fn add(&self, other: &RationalPolynomial) -> RationalPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = BigRational::zero();
        RationalPolynomial::new(
            (0..len)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) + other.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }

    fn scale(&self, c: &BigRational) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `C(x + a, k)` as a polynomial in `x`.
    fn binomial_in_x(a: i64, k: u32) -> RationalPolynomial {
        let mut acc = vec![BigRational::one()];
        for r in 0..k as i64 {
            // multiply by (x + a - r)
            let shift = BigRational::from_integer(BigInt::from(a - r));
            let mut next = vec![BigRational::zero(); acc.len() + 1];
            for (e, c) in acc.iter().enumerate() {
                next[e + 1] += c;
                next[e] += c * &shift;
            }
            acc = next;
        }
        let factorial: BigInt = (1..=k as i64).map(BigInt::from).product();
        let inv = BigRational::new(BigInt::one(), factorial);
        RationalPolynomial::new(acc.into_iter().map(|c| c * &inv).collect())
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let var = match e {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            };
            match (a.is_one(), var.is_empty(), a.is_integer()) {
                (true, false, _) => f.write_str(&var)?,
                (_, true, _) => write!(f, "{a}")?,
                (false, false, true) => write!(f, "{a}*{var}")?,
                (false, false, false) => write!(f, "({a})*{var}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for RationalPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strings.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        let coeffs = strings
            .iter()
            .map(|s| BigRational::from_str(s).map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RationalPolynomial::new(coeffs))
    }
}

/// `HS_{R_i}(t)` in closed form: the head `sum_{d <= delta} M(i,d) t^d`
/// plus `t^{delta+1} sum_j M(j,delta) / (1-t)^{i-j+1}`, and the same series
/// as one fraction over `(1-t)^i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionSeries {
    pub i: usize,
    pub delta: u32,
    pub head: Vec<u64>,
    /// `(M(j, delta), i - j + 1)` for `j = 1..=i`.
    pub tail: Vec<(u64, u32)>,
    /// Numerator over `(1-t)^i`, lowest degree first.
    pub numerator: Vec<i64>,
    pub denominator_exponent: u32,
}

impl SectionSeries {
    /// Coefficient of `t^d`.
    pub fn coefficient(&self, d: u32) -> i128 {
        let k = self.denominator_exponent as i64;
        if k == 0 {
            return self.numerator.get(d as usize).copied().unwrap_or(0) as i128;
        }
        self.numerator
            .iter()
            .enumerate()
            .filter(|&(e, _)| e as u32 <= d)
            .map(|(e, &c)| c as i128 * binom(d as i64 - e as i64 + k - 1, k - 1) as i128)
            .sum()
    }

    /// The fraction with all common factors `(1-t)` cancelled.
    pub fn reduced(&self) -> (Vec<i64>, u32) {
        let mut num = self.numerator.clone();
        let mut k = self.denominator_exponent;
        if num.iter().all(|&c| c == 0) {
            return (vec![0], 0);
        }
        while k > 0 && num.iter().sum::<i64>() == 0 {
            num = divide_by_one_minus_t(&num);
            k -= 1;
        }
        while num.len() > 1 && num.last() == Some(&0) {
            num.pop();
        }
        (num, k)
    }
}

/// Everything about the `i`-th section that one column determines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionHilbertSummary {
    pub i: usize,
    pub delta: u32,
    pub hilbert_polynomial: RationalPolynomial,
    pub series: SectionSeries,
    /// Krull dimension of `R_i`.
    pub dim: u32,
    /// Multiplicity of `R_i` (0 when `R_i` has finite length 0).
    pub deg: i64,
}

fn growth_precondition(
    m: &SectionalMatrix,
    delta: u32,
    i: usize,
    op: &'static str,
) -> Result<(), SectionalError> {
    check_generation(m, delta, op)?;
    if !maximal_growth(m, i, delta)? {
        return Err(SectionalError::Precondition {
            op,
            reason: format!("no {i}-maximal growth in degree {delta}"),
        });
    }
    Ok(())
}

/// `p_i(x) = sum_j C(i - j + x - delta - 1, i - j) M(j, delta)`.
pub fn hilbert_polynomial_of_section(
    m: &SectionalMatrix,
    delta: u32,
    i: usize,
) -> Result<RationalPolynomial, SectionalError> {
    growth_precondition(m, delta, i, "hilbert_polynomial_of_section")?;
    let mut p = RationalPolynomial::zero();
    for j in 1..=i {
        let value = m.at(j, delta);
        if value == 0 {
            continue;
        }
        let k = (i - j) as u32;
        let term = RationalPolynomial::binomial_in_x(k as i64 - delta as i64 - 1, k);
        p = p.add(&term.scale(&BigRational::from_integer(BigInt::from(value))));
    }
    Ok(p)
}

pub fn hilbert_series_of_section(
    m: &SectionalMatrix,
    delta: u32,
    i: usize,
) -> Result<SectionSeries, SectionalError> {
    growth_precondition(m, delta, i, "hilbert_series_of_section")?;
    let head: Vec<u64> = (0..=delta).map(|d| m.at(i, d)).collect();
    let tail: Vec<(u64, u32)> = (1..=i).map(|j| (m.at(j, delta), (i - j + 1) as u32)).collect();

    // (1-t)^i * head + t^{delta+1} * sum_j M(j,delta) (1-t)^{j-1}
    let mut numerator = vec![0i64; delta as usize + i + 2];
    let one_minus_t_pow = |k: usize| -> Vec<i64> {
        (0..=k)
            .map(|e| {
                let c = binom(k as i64, e as i64) as i64;
                if e % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .collect()
    };
    let base = one_minus_t_pow(i);
    for (d, &h) in head.iter().enumerate() {
        for (e, &b) in base.iter().enumerate() {
            numerator[d + e] += h as i64 * b;
        }
    }
    for j in 1..=i {
        let value = m.at(j, delta) as i64;
        for (e, &b) in one_minus_t_pow(j - 1).iter().enumerate() {
            numerator[delta as usize + 1 + e] += value * b;
        }
    }
    while numerator.len() > 1 && numerator.last() == Some(&0) {
        numerator.pop();
    }
    Ok(SectionSeries {
        i,
        delta,
        head,
        tail,
        numerator,
        denominator_exponent: i as u32,
    })
}

pub fn section_summary(
    m: &SectionalMatrix,
    delta: u32,
    i: usize,
) -> Result<SectionHilbertSummary, SectionalError> {
    let hilbert_polynomial = hilbert_polynomial_of_section(m, delta, i)?;
    let series = hilbert_series_of_section(m, delta, i)?;
    let (num, dim) = series.reduced();
    Ok(SectionHilbertSummary {
        i,
        delta,
        hilbert_polynomial,
        dim,
        deg: num.iter().sum(),
        series,
    })
}

/// Dimension and degree of `P/I` read from column `delta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimDeg {
    pub delta: u32,
    /// `min { j : M(j, delta) != 0 }`.
    pub i: usize,
    pub dim: usize,
    pub deg: u64,
}

/// `dim(P/I) = n - i + 1` and `deg(P/I) = M(i, delta)` for
/// `i = min { j : M(j, delta) != 0 }`, provided `I_delta != P_delta`, `I` is
/// generated in degree `<= delta + 1` and `M(i, delta) = M(i, delta + 1)`.
pub fn dim_deg(m: &SectionalMatrix, delta: u32) -> Result<DimDeg, SectionalError> {
    let inconclusive = |reason: String| SectionalError::Inconclusive { delta, reason };
    m.check_degree(delta + 1)?;
    if !m.component_is_proper(delta) {
        return Err(inconclusive(format!("I_{delta} = P_{delta}")));
    }
    if let Err(SectionalError::Precondition { reason, .. }) = check_generation(m, delta, "dim_deg") {
        return Err(inconclusive(reason));
    }
    let i = (1..=m.arity())
        .find(|&j| m.at(j, delta) != 0)
        .expect("row n is nonzero");
    if m.at(i, delta) != m.at(i, delta + 1) {
        return Err(inconclusive(format!(
            "M({i},{delta}) = {} differs from M({i},{}) = {}",
            m.at(i, delta),
            delta + 1,
            m.at(i, delta + 1)
        )));
    }
    Ok(DimDeg {
        delta,
        i,
        dim: m.arity() - i + 1,
        deg: m.at(i, delta),
    })
}
