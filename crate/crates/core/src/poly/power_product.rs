use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use super::Ring;

/// Exponent vector of a monomial `x_1^{e_1} ... x_n^{e_n}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PowerProduct {
    exps: SmallVec<[u32; 6]>,
}

impl PowerProduct {
    pub fn new(exps: impl Into<Vec<u32>>) -> Self {
        PowerProduct {
            exps: SmallVec::from_vec(exps.into()),
        }
    }

    pub fn from_slice(exps: &[u32]) -> Self {
        PowerProduct {
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn one(arity: usize) -> Self {
        PowerProduct {
            exps: SmallVec::from_elem(0, arity),
        }
    }

    /// `x_index^power` in a ring of the given arity.
    pub fn var_power(arity: usize, index: usize, power: u32) -> Self {
        let mut pp = PowerProduct::one(arity);
        pp.exps[index] = power;
        pp
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &PowerProduct) -> PowerProduct {
        debug_assert_eq!(self.arity(), other.arity());
        PowerProduct {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &PowerProduct) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &PowerProduct) -> Option<PowerProduct> {
        let mut exps = SmallVec::with_capacity(self.arity());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            if a > b {
                return None;
            }
            exps.push(b - a);
        }
        Some(PowerProduct { exps })
    }

    pub fn lcm(&self, other: &PowerProduct) -> PowerProduct {
        PowerProduct {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &PowerProduct) -> PowerProduct {
        PowerProduct {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    /// `self / gcd(self, other)`, the generator of `(self) : (other)`.
    pub fn colon(&self, other: &PowerProduct) -> PowerProduct {
        PowerProduct {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &PowerProduct) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// True when only `x_1, ..., x_i` occur.
    pub fn supported_in_first(&self, i: usize) -> bool {
        self.exps[i.min(self.arity())..].iter().all(|&e| e == 0)
    }

    /// Drops all positions from `i` on (callers check the support first).
    pub fn truncated(&self, i: usize) -> PowerProduct {
        PowerProduct {
            exps: SmallVec::from_slice(&self.exps[..i]),
        }
    }

    pub fn with_exponent(&self, index: usize, value: u32) -> PowerProduct {
        let mut pp = self.clone();
        pp.exps[index] = value;
        pp
    }

    pub fn display<'a>(&'a self, ring: &'a Ring) -> DisplayPowerProduct<'a> {
        DisplayPowerProduct { pp: self, ring }
    }
}

/// Renders a power product as `x^2*y` (or `1`) with the ring's names.
pub struct DisplayPowerProduct<'a> {
    pp: &'a PowerProduct,
    ring: &'a Ring,
}

impl fmt::Display for DisplayPowerProduct<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.pp.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.ring.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// All power products of degree `d` in `n` variables, in no particular order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<PowerProduct> {
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fill(&mut out, &mut current, 0, d);
    out
}

fn fill(out: &mut Vec<PowerProduct>, current: &mut Vec<u32>, pos: usize, left: u32) {
    let n = current.len();
    if n == 0 {
        if left == 0 {
            out.push(PowerProduct::one(0));
        }
        return;
    }
    if pos == n - 1 {
        current[pos] = left;
        out.push(PowerProduct::from_slice(current));
        current[pos] = 0;
        return;
    }
    for e in (0..=left).rev() {
        current[pos] = e;
        fill(out, current, pos + 1, left - e);
    }
    current[pos] = 0;
}
