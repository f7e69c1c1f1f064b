//! Monomial ideals: minimal generators, Borel moves, Hilbert data, colon and
//! saturation.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::binomial::{binom, monomial_count};
use crate::poly::{monomials_of_degree, PowerProduct, Ring, TermOrder};

/// Largest number of monomials [`count_monomials_oracle`] will enumerate.
pub const ENUMERATION_GUARD: u128 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MonomialError {
    #[error("enumeration of {count} monomials exceeds the guard of {guard}")]
    EnumerationTooLarge { count: u128, guard: u128 },
    #[error("variable count {i} is outside 1..={n}")]
    BadRestriction { i: usize, n: usize },
}

/// A monomial ideal given by its minimal generators.
///
/// Generators form a divisibility antichain and are stored by increasing
/// degree, then decreasing DegRevLex. The zero ideal has no generators and the
/// whole ring is generated by `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Arc<Ring>,
    gens: Vec<PowerProduct>,
}

impl MonomialIdeal {
    pub fn new(ring: &Arc<Ring>, gens: impl IntoIterator<Item = PowerProduct>) -> Self {
        let gens: Vec<PowerProduct> = gens.into_iter().collect();
        assert!(
            gens.iter().all(|g| g.arity() == ring.arity()),
            "generator arity differs from ring arity"
        );
        MonomialIdeal {
            ring: Arc::clone(ring),
            gens: minimalize(gens),
        }
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        MonomialIdeal {
            ring: Arc::clone(ring),
            gens: Vec::new(),
        }
    }

    pub fn whole(ring: &Arc<Ring>) -> Self {
        MonomialIdeal {
            ring: Arc::clone(ring),
            gens: vec![PowerProduct::one(ring.arity())],
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn arity(&self) -> usize {
        self.ring.arity()
    }

    pub fn generators(&self) -> &[PowerProduct] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        self.gens.iter().any(PowerProduct::is_one)
    }

    pub fn max_generator_degree(&self) -> Option<u32> {
        self.gens.iter().map(PowerProduct::degree).max()
    }

    pub fn contains(&self, t: &PowerProduct) -> bool {
        self.gens.iter().any(|g| g.divides(t))
    }

    /// Borel-move closure: for every generator `t`, every `x_j | t` and
    /// every `i < j`, `x_i * t / x_j` lies in the ideal. Checking generators
    /// suffices.
    pub fn is_strongly_stable(&self) -> bool {
        let n = self.arity();
        self.gens.iter().all(|t| {
            (1..n).all(|j| {
                t.exponent(j) == 0
                    || (0..j).all(|i| {
                        let moved = t
                            .with_exponent(j, t.exponent(j) - 1)
                            .with_exponent(i, t.exponent(i) + 1);
                        self.contains(&moved)
                    })
            })
        })
    }

    /// Image under `x_{i+1}, ..., x_n -> 0`, as an ideal of `Q[x_1..x_i]`.
    pub fn restrict_to_first_vars(&self, i: usize) -> Result<MonomialIdeal, MonomialError> {
        let n = self.arity();
        if i == 0 || i > n {
            return Err(MonomialError::BadRestriction { i, n });
        }
        let ring = if i == n {
            Arc::clone(&self.ring)
        } else {
            self.ring.prefix(i)
        };
        let gens = self
            .gens
            .iter()
            .filter(|g| g.supported_in_first(i))
            .map(|g| g.truncated(i))
            .collect();
        // a subset of an antichain is an antichain; order is preserved
        Ok(MonomialIdeal { ring, gens })
    }

    /// Number of degree-`d` monomials outside the ideal.
    pub fn hilbert_function_value(&self, d: u32) -> u64 {
        let value = self.hilbert_numerator().series_coefficient(d);
        u64::try_from(value).expect("Hilbert function values are non-negative")
    }

    pub fn hilbert_numerator(&self) -> HilbertNumerator {
        HilbertNumerator {
            coeffs: trim(numerator(self.gens.clone())),
            arity: self.arity(),
        }
    }

    /// `J : x_k` for one variable.
    pub fn colon_variable(&self, k: usize) -> MonomialIdeal {
        let x = PowerProduct::var_power(self.arity(), k, 1);
        MonomialIdeal::new(&self.ring, self.gens.iter().map(|g| g.colon(&x)))
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(&self.ring, gens)
    }

    /// `J : m` where `m = (x_1, ..., x_n)`.
    pub fn colon_by_irrelevant(&self) -> MonomialIdeal {
        (1..self.arity()).fold(self.colon_variable(0), |acc, k| {
            acc.intersection(&self.colon_variable(k))
        })
    }

    /// `J : m^infinity`, by iterating the colon to a fixed point.
    pub fn saturate(&self) -> MonomialIdeal {
        let mut current = self.clone();
        loop {
            let next = current.colon_by_irrelevant();
            if next == current {
                return current;
            }
            current = next;
        }
    }

    /// Generators with the exponent of `x_n` set to 0, i.e. `J : x_n^infinity`.
    /// For strongly stable ideals this is the saturation.
    pub fn drop_last_variable(&self) -> MonomialIdeal {
        let last = self.arity() - 1;
        MonomialIdeal::new(
            &self.ring,
            self.gens.iter().map(|g| g.with_exponent(last, 0)),
        )
    }

    /// True when some minimal generator is divisible by `x_n`.
    pub fn involves_last_variable(&self) -> bool {
        let last = self.arity() - 1;
        self.gens.iter().any(|g| g.exponent(last) > 0)
    }

    pub fn display_generators(&self) -> Vec<String> {
        self.gens
            .iter()
            .map(|g| g.display(&self.ring).to_string())
            .collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("(0)");
        }
        write!(f, "({})", self.display_generators().join(", "))
    }
}

fn canonical_cmp(a: &PowerProduct, b: &PowerProduct) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| TermOrder::DegRevLex.compare(b, a))
}

fn minimalize(mut gens: Vec<PowerProduct>) -> Vec<PowerProduct> {
    gens.sort_by(canonical_cmp);
    gens.dedup();
    let mut kept: Vec<PowerProduct> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// Numerator `N(t)` of the Hilbert series `HS_{P/J}(t) = N(t) / (1-t)^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertNumerator {
    coeffs: Vec<i64>,
    arity: usize,
}

impl HilbertNumerator {
    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Coefficient of `t^d` in `N(t) / (1-t)^n`.
    pub fn series_coefficient(&self, d: u32) -> i128 {
        let n = self.arity as i64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|&(k, &c)| c != 0 && k as u32 <= d)
            .map(|(k, &c)| {
                let m = d as i64 - k as i64;
                c as i128 * binom(m + n - 1, n - 1) as i128
            })
            .sum()
    }

    pub fn expand(&self, up_to: u32) -> Vec<i128> {
        (0..=up_to).map(|d| self.series_coefficient(d)).collect()
    }

    /// Cancels factors `(1 - t)` shared with the denominator. Returns the
    /// reduced numerator and the remaining denominator exponent, which is the
    /// Krull dimension of `P/J` (zero numerator: `P/J = 0`, exponent 0).
    pub fn reduced(&self) -> (Vec<i64>, usize) {
        let mut num = self.coeffs.clone();
        let mut exponent = self.arity;
        if num.iter().all(|&c| c == 0) {
            return (vec![0], 0);
        }
        while exponent > 0 && num.iter().sum::<i64>() == 0 {
            num = divide_by_one_minus_t(&num);
            exponent -= 1;
        }
        (num, exponent)
    }

    pub fn dimension(&self) -> usize {
        self.reduced().1
    }

    /// `deg(P/J)`: the reduced numerator evaluated at 1.
    pub fn multiplicity(&self) -> i64 {
        self.reduced().0.iter().sum()
    }
}

/// Exact division of `num(t)` by `(1 - t)`; requires `num(1) = 0`.
pub(crate) fn divide_by_one_minus_t(num: &[i64]) -> Vec<i64> {
    // num = (1 - t) q  <=>  q_k = sum_{j <= k} num_j
    let mut q = Vec::with_capacity(num.len().saturating_sub(1));
    let mut running = 0i64;
    for &c in &num[..num.len().saturating_sub(1)] {
        running += c;
        q.push(running);
    }
    debug_assert_eq!(running + num.last().copied().unwrap_or(0), 0);
    if q.is_empty() {
        q.push(0);
    }
    trim(q)
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && v.last() == Some(&0) {
        v.pop();
    }
    if v.is_empty() {
        v.push(0);
    }
    v
}

fn add_shifted(acc: &mut Vec<i64>, other: &[i64], shift: usize) {
    if acc.len() < other.len() + shift {
        acc.resize(other.len() + shift, 0);
    }
    for (k, &c) in other.iter().enumerate() {
        acc[k + shift] += c;
    }
}

fn product_of_one_minus(degrees: impl IntoIterator<Item = u32>) -> Vec<i64> {
    let mut acc = vec![1i64];
    for d in degrees {
        let d = d as usize;
        let mut next = acc.clone();
        next.resize(acc.len() + d, 0);
        for (k, &c) in acc.iter().enumerate() {
            next[k + d] -= c;
        }
        acc = next;
    }
    acc
}

/// Pivot recursion `N(J) = N(J + (p)) + t^{deg p} N(J : p)` on minimal
/// generators.
fn numerator(gens: Vec<PowerProduct>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(PowerProduct::is_one) {
        return vec![0];
    }
    let n = gens[0].arity();
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        return product_of_one_minus(gens.iter().map(PowerProduct::degree));
    }

    // the variable occurring in most generators; it occurs in at least two
    let var = (0..n)
        .max_by_key(|&k| (gens.iter().filter(|g| g.exponent(k) > 0).count(), std::cmp::Reverse(k)))
        .expect("non-empty ring");
    let mut exps: Vec<u32> = gens
        .iter()
        .map(|g| g.exponent(var))
        .filter(|&e| e > 0)
        .collect();
    exps.sort_unstable();
    let mut e = exps[(exps.len() - 1) / 2];
    // keep the pivot outside J: stay below any pure power of the variable
    if let Some(pure) = gens
        .iter()
        .filter(|g| g.degree() == g.exponent(var))
        .map(|g| g.exponent(var))
        .min()
    {
        e = e.min(pure - 1);
    }
    debug_assert!(e >= 1);
    let pivot = PowerProduct::var_power(n, var, e);

    let mut with_pivot: Vec<PowerProduct> = gens
        .iter()
        .filter(|g| !pivot.divides(g))
        .cloned()
        .collect();
    with_pivot.push(pivot.clone());
    let colon = minimalize(gens.iter().map(|g| g.colon(&pivot)).collect());

    let mut acc = numerator(minimalize(with_pivot));
    add_shifted(&mut acc, &numerator(colon), e as usize);
    acc
}

/// Standard monomials of degree `d`, counted by brute-force enumeration.
pub fn count_monomials_oracle(ideal: &MonomialIdeal, d: u32) -> Result<u64, MonomialError> {
    let count = monomial_count(ideal.arity(), d);
    if count > ENUMERATION_GUARD {
        return Err(MonomialError::EnumerationTooLarge {
            count,
            guard: ENUMERATION_GUARD,
        });
    }
    Ok(monomials_of_degree(ideal.arity(), d)
        .iter()
        .filter(|t| !ideal.contains(t))
        .count() as u64)
}
