use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ring::same_ring;
use super::{PolyError, PowerProduct, Ring, TermOrder};

/// A polynomial with exact rational coefficients.
///
/// Terms are kept strictly descending under `order` with no zero coefficients;
/// the zero polynomial has no terms. Values are immutable: every operation
/// returns a fresh polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<Ring>,
    order: TermOrder,
    terms: Vec<(PowerProduct, BigRational)>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: Arc::clone(ring),
            order: TermOrder::default(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: BigRational) -> Self {
        Self::monomial(ring, PowerProduct::one(ring.arity()), c)
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, BigRational::one())
    }

    pub fn monomial(ring: &Arc<Ring>, pp: PowerProduct, c: BigRational) -> Self {
        assert_eq!(pp.arity(), ring.arity(), "power product arity");
        let terms = if c.is_zero() { Vec::new() } else { vec![(pp, c)] };
        Polynomial {
            ring: Arc::clone(ring),
            order: TermOrder::default(),
            terms,
        }
    }

    pub fn variable(ring: &Arc<Ring>, index: usize) -> Self {
        Self::monomial(
            ring,
            PowerProduct::var_power(ring.arity(), index, 1),
            BigRational::one(),
        )
    }

    /// Builds a canonical polynomial from arbitrary terms: like terms are
    /// collected, zeros dropped, and the result sorted under `order`.
    pub fn from_terms(
        ring: &Arc<Ring>,
        order: TermOrder,
        terms: impl IntoIterator<Item = (PowerProduct, BigRational)>,
    ) -> Self {
        let mut acc: HashMap<PowerProduct, BigRational> = HashMap::new();
        for (pp, c) in terms {
            assert_eq!(pp.arity(), ring.arity(), "power product arity");
            *acc.entry(pp).or_insert_with(BigRational::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        Polynomial {
            ring: Arc::clone(ring),
            order,
            terms,
        }
    }

    pub(crate) fn from_sorted_terms(
        ring: &Arc<Ring>,
        order: TermOrder,
        terms: Vec<(PowerProduct, BigRational)>,
    ) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| order.compare(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial {
            ring: Arc::clone(ring),
            order,
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn terms(&self) -> &[(PowerProduct, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_term(&self) -> Option<(&PowerProduct, &BigRational)> {
        self.terms.first().map(|(p, c)| (p, c))
    }

    pub fn leading_monomial(&self) -> Option<&PowerProduct> {
        self.terms.first().map(|(p, _)| p)
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(p, _)| p.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .iter()
            .map(|(p, _)| p.exponent(var))
            .max()
            .unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((p, _)) => {
                let d = p.degree();
                self.terms.iter().all(|(q, _)| q.degree() == d)
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(p, _)| p.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn with_order(&self, order: TermOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        Polynomial {
            ring: Arc::clone(&self.ring),
            order,
            terms,
        }
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<(), PolyError> {
        if !same_ring(&self.ring, &other.ring) || self.order != other.order {
            return Err(PolyError::RingMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial {
                terms: Vec::new(),
                ..self.clone()
            });
        }
        let mut acc: HashMap<PowerProduct, BigRational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (pa, ca) in &self.terms {
            for (pb, cb) in &other.terms {
                *acc.entry(pa.mul(pb)).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = self.order;
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        Ok(Polynomial {
            ring: Arc::clone(&self.ring),
            order,
            terms,
        })
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        let order = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: &BigRational| if negate_other { -c } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (pa, ca) = &self.terms[i];
            let (pb, cb) = &other.terms[j];
            match order.compare(pa, pb) {
                Ordering::Greater => {
                    out.push((pa.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((pb.clone(), sign(cb)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { ca - cb } else { ca + cb };
                    if !c.is_zero() {
                        out.push((pa.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(p, c)| (p.clone(), sign(c))));
        Polynomial {
            ring: Arc::clone(&self.ring),
            order,
            terms: out,
        }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial {
                terms: Vec::new(),
                ..self.clone()
            };
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            order: self.order,
            terms: self.terms.iter().map(|(p, a)| (p.clone(), a * c)).collect(),
        }
    }

    /// Multiplies by the term `c * pp`.
    pub fn mul_term(&self, pp: &PowerProduct, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial {
                terms: Vec::new(),
                ..self.clone()
            };
        }
        // multiplication by a monomial preserves any monomial order
        Polynomial {
            ring: Arc::clone(&self.ring),
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(p, a)| (p.mul(pp), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring).with_order(self.order);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.ring.arity(), "evaluation point arity");
        let mut total = BigRational::zero();
        for (pp, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(pp.exponents()) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += v;
        }
        total
    }

    /// Substitutes `x_i -> sum_j m[i][j] x_j`.
    ///
    /// Fails on a non-square or singular matrix.
    pub fn apply_linear_change(&self, matrix: &[Vec<i64>]) -> Result<Polynomial, PolyError> {
        let n = self.ring.arity();
        check_square(matrix, n)?;
        if determinant(matrix).is_zero() {
            return Err(PolyError::SingularMatrix);
        }
        Ok(self.substitute_linear_unchecked(matrix))
    }

    pub(crate) fn substitute_linear_unchecked(&self, matrix: &[Vec<i64>]) -> Polynomial {
        let n = self.ring.arity();
        let images: Vec<Polynomial> = (0..n)
            .map(|i| {
                Polynomial::from_terms(
                    &self.ring,
                    self.order,
                    (0..n).map(|j| {
                        (
                            PowerProduct::var_power(n, j, 1),
                            BigRational::from_integer(BigInt::from(matrix[i][j])),
                        )
                    }),
                )
            })
            .collect();
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|l| vec![Polynomial::one(&self.ring).with_order(self.order), l.clone()])
            .collect();
        let mut acc: HashMap<PowerProduct, BigRational> = HashMap::new();
        for (pp, c) in &self.terms {
            let mut image = Polynomial::constant(&self.ring, c.clone()).with_order(self.order);
            for (i, &e) in pp.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                image = &image * &powers[i][e as usize];
            }
            for (q, a) in image.terms {
                *acc.entry(q).or_insert_with(BigRational::zero) += a;
            }
        }
        Polynomial::from_terms(&self.ring, self.order, acc)
    }

    /// Scales to integer coefficients with content 1 and a positive leading
    /// coefficient. The zero polynomial is returned unchanged.
    pub fn normalized(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for (_, c) in &self.terms {
            let v = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_gcd.gcd(&v);
        }
        let mut factor = BigRational::new(den_lcm, num_gcd);
        if self.terms[0].1.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let divisor = divisor.with_order(self.order);
        let (lm, lc) = divisor.leading_term().expect("nonzero");
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((pp, c)) = rem.leading_term() {
            let q = lm.quotient_of(pp)?;
            let qc = c / lc;
            rem = &rem - &divisor.mul_term(&q, &qc);
            quotient.push((q, qc));
        }
        Some(Polynomial::from_sorted_terms(&self.ring, self.order, quotient))
    }

    pub fn display(&self) -> String {
        self.to_string()
    }
}

fn check_square(matrix: &[Vec<i64>], n: usize) -> Result<(), PolyError> {
    if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
        return Err(PolyError::MatrixShape {
            expected: n,
            rows: matrix.len(),
        });
    }
    Ok(())
}

/// Exact determinant of an integer matrix (fraction-free elimination).
pub fn determinant(matrix: &[Vec<i64>]) -> BigInt {
    let n = matrix.len();
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &a[n - 1][n - 1]
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomials from different rings")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomials from different rings")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomials from different rings")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: Arc::clone(&self.ring),
            order: self.order,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (pp, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if pp.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{}", pp.display(&self.ring))?;
            } else {
                write!(f, "{magnitude}*{}", pp.display(&self.ring))?;
            }
        }
        Ok(())
    }
}
