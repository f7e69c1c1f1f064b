//! Small exact binomial helpers shared by the Hilbert-function code.

/// `C(n, k)` with the convention `C(n, k) = 0` for `k < 0` or `n < k`, and
/// `C(n, 0) = 1` for every `n` (including negative `n`). Panics on overflow.
pub fn binom(n: i64, k: i64) -> u128 {
    if k < 0 {
        return 0;
    }
    if k == 0 {
        return 1;
    }
    if n < k {
        return 0;
    }
    try_binom(n as u64, k as u64).expect("binomial coefficient overflow")
}

/// `C(n, k)` for non-negative arguments, `None` on overflow.
pub fn try_binom(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) after the multiplication
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// Number of monomials of degree `d` in `n` variables.
pub fn monomial_count(n: usize, d: u32) -> u128 {
    if n == 0 {
        return u128::from(d == 0);
    }
    binom(d as i64 + n as i64 - 1, n as i64 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_and_conventions() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(1, 2), 0);
        assert_eq!(binom(0, 1), 0);
        assert_eq!(binom(0, 0), 1);
        assert_eq!(binom(-3, 0), 1);
        assert_eq!(binom(-1, 2), 0);
        assert_eq!(binom(60, 30), 118_264_581_564_861_424);
        assert_eq!(monomial_count(3, 2), 6);
        assert_eq!(monomial_count(4, 8), 165);
    }
}
