//! `M(i, d)` straight from the definition: cut by `n - i` random linear
//! forms and count by exact linear algebra. Test oracle only.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SectionalError;
use crate::binomial::monomial_count;
use crate::gin::ENTRY_BOUND;
use crate::groebner::IdealPresentation;
use crate::poly::{monomials_of_degree, Polynomial, PowerProduct};

/// Largest `rows * columns` product the oracle will eliminate.
pub const ORACLE_GUARD: usize = 4_000_000;

/// Stream used for the oracle's forms, disjoint from the rgin trial streams.
const ORACLE_STREAM: u64 = 1 << 32;

/// `dim_K (P / (I + (L_1, ..., L_{n-i})))_d` for random linear forms.
///
/// The forms are `L_k = x_{i+k} - sum_{j <= i} a_{kj} x_j`, so the quotient
/// is `K[x_1..x_i]` modulo the image of `I` under `x_{i+k} -> sum a_{kj} x_j`.
pub fn sectional_matrix_direct_oracle(
    ideal: &IdealPresentation,
    i: usize,
    d: u32,
    seed: u64,
) -> Result<u64, SectionalError> {
    ideal.require_homogeneous()?;
    let n = ideal.ring().arity();
    if i == 0 || i > n {
        return Err(SectionalError::RowOutOfRange { i, n });
    }
    let matrix = section_matrix(seed, n, i);
    let images: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .filter(|g| g.degree().is_some_and(|e| e <= d))
        .map(|g| g.substitute_linear_unchecked(&matrix))
        .filter(|g| !g.is_zero())
        .collect();

    let columns = monomials_of_degree(i, d);
    let index: HashMap<PowerProduct, usize> = columns
        .iter()
        .enumerate()
        .map(|(k, m)| (m.clone(), k))
        .collect();
    let total = columns.len();
    let rows: usize = images
        .iter()
        .map(|g| monomial_count(i, d - g.degree().expect("nonzero")) as usize)
        .sum();
    if rows.saturating_mul(total) > ORACLE_GUARD {
        return Err(SectionalError::OracleTooLarge { rows, columns: total });
    }

    let mut echelon = Echelon::new(total);
    'outer: for g in &images {
        let g = g.normalized();
        let e = g.degree().expect("nonzero");
        for m in monomials_of_degree(i, d - e) {
            let mut v = vec![BigInt::zero(); total];
            for (t, c) in g.terms() {
                let key = t.truncated(i).mul(&m);
                debug_assert!(c.is_integer());
                v[index[&key]] = c.to_integer();
            }
            echelon.insert(v);
            if echelon.rank() == total {
                break 'outer;
            }
        }
    }
    Ok((total - echelon.rank()) as u64)
}

/// Identity on `x_1..x_i`, random combinations of them for the rest.
fn section_matrix(seed: u64, n: usize, i: usize) -> Vec<Vec<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(ORACLE_STREAM + i as u64);
    (0..n)
        .map(|row| {
            (0..n)
                .map(|col| match (row < i, col < i) {
                    (true, _) => i64::from(row == col),
                    (false, true) => rng.gen_range(-ENTRY_BOUND..=ENTRY_BOUND),
                    (false, false) => 0,
                })
                .collect()
        })
        .collect()
}

/// Fraction-free row echelon form, grown one vector at a time.
struct Echelon {
    width: usize,
    /// Pivot column to reduced row.
    rows: HashMap<usize, Vec<BigInt>>,
}

impl Echelon {
    fn new(width: usize) -> Self {
        Echelon {
            width,
            rows: HashMap::new(),
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn insert(&mut self, mut v: Vec<BigInt>) {
        for col in 0..self.width {
            if v[col].is_zero() {
                continue;
            }
            match self.rows.get(&col) {
                Some(row) => {
                    // v <- p*v - v[col]*row with p the pivot of row
                    let p = &row[col];
                    let g = p.gcd(&v[col]);
                    let a = p / &g;
                    let b = &v[col] / &g;
                    for k in col..self.width {
                        if row[k].is_zero() && v[k].is_zero() {
                            continue;
                        }
                        v[k] = &a * &v[k] - &b * &row[k];
                    }
                    make_primitive(&mut v[col..]);
                }
                None => {
                    make_primitive(&mut v[col..]);
                    self.rows.insert(col, v);
                    return;
                }
            }
        }
    }
}

fn make_primitive(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for c in v.iter() {
        if !c.is_zero() {
            g = g.gcd(c);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    let g = g.abs();
    for c in v.iter_mut() {
        *c /= &g;
    }
}
