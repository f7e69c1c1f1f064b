//! `i`-binomial expansions and the shifted sums `(h_i)^s_t`.

use serde::{Deserialize, Serialize};

use super::SectionalError;
use crate::binomial::{binom, try_binom};

/// `h = C(h(i), i) + C(h(i-1), i-1) + ... + C(h(j), j)` with
/// `h(i) > h(i-1) > ... > h(j) >= j >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialExpansion {
    pub h: u64,
    pub i: u32,
    /// `(top, bottom)` pairs, bottoms descending from `i`.
    pub terms: Vec<(u64, u32)>,
}

impl BinomialExpansion {
    /// Recomputes `h` from the terms.
    pub fn value(&self) -> u128 {
        self.terms
            .iter()
            .map(|&(top, bottom)| binom(top as i64, bottom as i64))
            .sum()
    }
}

/// The greedy expansion: at each bottom `k`, the largest top with
/// `C(top, k)` not exceeding what is left.
pub fn binomial_expansion(h: u64, i: u32) -> Result<BinomialExpansion, SectionalError> {
    if h == 0 {
        return Err(SectionalError::NonPositive);
    }
    if i == 0 {
        return Err(SectionalError::NonPositive);
    }
    Ok(expansion_unchecked(h, i))
}

/// Like [`binomial_expansion`], with the empty expansion for `h = 0`.
pub(crate) fn expansion_unchecked(h: u64, i: u32) -> BinomialExpansion {
    let mut rest = h as u128;
    let mut terms = Vec::new();
    let mut k = i;
    while rest > 0 && k > 0 {
        // C(top, k) grows with top: bracket the last top that fits, then bisect
        let fits = |top: u64| try_binom(top, k as u64).is_some_and(|c| c <= rest);
        let mut lo = k as u64;
        let mut hi = lo + 1;
        while fits(hi) {
            lo = hi;
            hi *= 2;
        }
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if fits(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let top = lo;
        rest -= try_binom(top, k as u64).expect("fits by construction");
        terms.push((top, k));
        k -= 1;
    }
    BinomialExpansion { h, i, terms }
}

/// `(h_i)^s_t = sum C(top + s, bottom + t)`, with `C(a, b) = 0` for `a < b`.
pub fn expansion_shift(e: &BinomialExpansion, s: i64, t: i64) -> Result<u128, SectionalError> {
    let mut total = 0u128;
    for &(top, bottom) in &e.terms {
        let b = bottom as i64 + t;
        if b < 0 {
            return Err(SectionalError::NegativeBottom { bottom: b });
        }
        total += binom(top as i64 + s, b);
    }
    Ok(total)
}

/// `(h_d)^+_+`, the Macaulay bound; 0 for `h = 0`.
pub fn macaulay_upper(h: u64, d: u32) -> u128 {
    shifted(h, d, 1, 1)
}

/// `(h_d)^-`, the Green bound; 0 for `h = 0`.
pub fn green_lower(h: u64, d: u32) -> u128 {
    shifted(h, d, -1, 0)
}

fn shifted(h: u64, d: u32, s: i64, t: i64) -> u128 {
    if h == 0 || d == 0 {
        return 0;
    }
    expansion_shift(&expansion_unchecked(h, d), s, t).expect("non-negative bottoms")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_expansions() {
        assert_eq!(binomial_expansion(1, 4).unwrap().terms, vec![(4, 4)]);
        assert_eq!(binomial_expansion(5, 3).unwrap().terms, vec![(4, 3), (2, 2)]);
        assert_eq!(
            binomial_expansion(11, 4).unwrap().terms,
            vec![(5, 4), (4, 3), (2, 2), (1, 1)]
        );
        assert!(binomial_expansion(0, 3).is_err());
    }

    #[test]
    fn shifts() {
        let one = binomial_expansion(1, 6).unwrap();
        assert_eq!(expansion_shift(&one, 1, 1).unwrap(), 1);
        let five = binomial_expansion(5, 3).unwrap();
        assert_eq!(expansion_shift(&five, 1, 1).unwrap(), 6);
        let eleven = binomial_expansion(11, 4).unwrap();
        assert_eq!(expansion_shift(&eleven, -1, 0).unwrap(), 2);
        assert_eq!(green_lower(11, 4), 2);
        assert!(matches!(
            expansion_shift(&five, 0, -3),
            Err(SectionalError::NegativeBottom { bottom: -1 })
        ));
    }
}
