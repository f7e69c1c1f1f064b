//! Shared by the integration tests: fixture loading and a seeded corpus of
//! random homogeneous ideals.
#![allow(dead_code)]

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use secmat::binomial::binom;
use secmat::document::parse_document;
use secmat::gin::rgin;
use secmat::groebner::IdealPresentation;
use secmat::monomial::MonomialIdeal;
use secmat::poly::{monomials_of_degree, Polynomial, PowerProduct, Ring};
use secmat::sectional::binomial_expansion;

pub fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn fixture(name: &str) -> IdealPresentation {
    let path = fixtures_dir().join(format!("{name}.ideal"));
    let text = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    parse_document(&text).expect("fixture parses").ideal()
}

/// Fixtures that are paper examples, one ideal each.
pub const PAPER_FIXTURES: &[&str] = &[
    "ex-first",
    "ex-conca",
    "ex-regexampletrunc",
    "ex-before-reg",
    "ex-dim-deg",
    "ex-gcd",
    "ex-robbiano",
    "ex-five-variables",
    "ex-same-hf-i",
    "ex-same-hf-j",
    "ex-same-betti-i",
    "ex-same-betti-j",
    "ex-same-matrix-i",
    "ex-same-matrix-j",
    "ex-same-rgin",
    "rgin-z5-xyz3",
];

/// Largest regularity accepted into the random corpus; bigger ones make the
/// oracle and the Lex bases slow without exercising anything new.
pub const CORPUS_REG_GUARD: u32 = 10;

/// Random homogeneous polynomial of degree `d`, 1 to 3 terms, coefficients
/// in -3..=3.
pub fn random_form(rng: &mut ChaCha8Rng, ring: &Arc<Ring>, d: u32) -> Polynomial {
    let monomials = monomials_of_degree(ring.arity(), d);
    let terms = rng.gen_range(1..=3usize.min(monomials.len()));
    let mut f = Polynomial::zero(ring);
    for _ in 0..terms {
        let t = monomials[rng.gen_range(0..monomials.len())].clone();
        let mut c = 0;
        while c == 0 {
            c = rng.gen_range(-3i64..=3);
        }
        f = &f + &Polynomial::monomial(ring, t, BigRational::from_integer(c.into()));
    }
    f
}

/// Random homogeneous ideal: up to `vars` variables (at least 2), up to
/// `gens` generators of degree 1 to `max_deg`.
pub fn random_ideal(seed: u64, vars: usize, gens: usize, max_deg: u32) -> IdealPresentation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=vars);
    let ring = Ring::with_arity(n);
    let k = rng.gen_range(1..=gens);
    let gens: Vec<Polynomial> = (0..k)
        .map(|_| {
            let d = rng.gen_range(1..=max_deg);
            random_form(&mut rng, &ring, d)
        })
        .collect();
    IdealPresentation::new(&ring, gens).unwrap()
}

/// Corpus candidate `seed`: 2 to 4 variables, 1 to 4 generators of degree 1
/// to 5.
pub fn random_candidate(seed: u64) -> IdealPresentation {
    random_ideal(seed, 4, 4, 5)
}

/// The first `count` candidates that are nonzero, proper and pass the
/// regularity guard, with the seeds they came from.
pub fn random_corpus(count: usize) -> Vec<(u64, IdealPresentation)> {
    let mut out = Vec::new();
    let mut seed = 0;
    while out.len() < count {
        let ideal = random_candidate(seed);
        if !ideal.is_zero_ideal() {
            let gin = rgin(&ideal, 42).expect("random ideals are homogeneous");
            if !gin.rgin.is_whole() && gin.regularity() <= CORPUS_REG_GUARD {
                out.push((seed, ideal));
            }
        }
        seed += 1;
    }
    out
}

/// `dim (P/J)_d` by listing monomials.
pub fn brute_force_hf(j: &MonomialIdeal, d: u32) -> u64 {
    monomials_of_degree(j.arity(), d)
        .iter()
        .filter(|t| !j.contains(t))
        .count() as u64
}

/// Strongly stable ideal generated by the Borel moves of `gens`.
pub fn borel_closure(ring: &Arc<Ring>, gens: Vec<PowerProduct>) -> MonomialIdeal {
    let n = ring.arity();
    let mut all = gens;
    let mut k = 0;
    while k < all.len() {
        let t = all[k].clone();
        for j in 1..n {
            if t.exponent(j) == 0 {
                continue;
            }
            for i in 0..j {
                let u = t.with_exponent(j, t.exponent(j) - 1).with_exponent(i, t.exponent(i) + 1);
                if !all.contains(&u) {
                    all.push(u);
                }
            }
        }
        k += 1;
    }
    MonomialIdeal::new(ring, all)
}

/// Every `i`-binomial representation `sum C(top_k, k)` (tops strictly
/// decreasing, `top_k >= k`) with value at most `h_max`, grouped by value.
pub fn binomial_representations(i: u32, h_max: u64) -> HashMap<u64, Vec<Vec<(u64, u32)>>> {
    fn go(
        k: u32,
        max_top: u64,
        acc: u64,
        h_max: u64,
        terms: &mut Vec<(u64, u32)>,
        seen: &mut HashMap<u64, Vec<Vec<(u64, u32)>>>,
    ) {
        if !terms.is_empty() {
            seen.entry(acc).or_default().push(terms.clone());
        }
        if k == 0 {
            return;
        }
        for top in u64::from(k)..max_top {
            let v = binom(top as i64, i64::from(k)) as u64;
            if acc + v > h_max {
                break;
            }
            terms.push((top, k));
            go(k - 1, top, acc + v, h_max, terms, seen);
            terms.pop();
        }
    }
    let mut seen = HashMap::new();
    go(i, h_max + u64::from(i) + 1, 0, h_max, &mut Vec::new(), &mut seen);
    seen
}

/// Checks that every `1 <= h <= h_max` has exactly one `i`-binomial
/// representation for each `1 <= i <= i_max`, and that it is the one
/// `binomial_expansion` returns.
pub fn check_binomial_uniqueness(h_max: u64, i_max: u32) -> Result<(), String> {
    for i in 1..=i_max {
        let seen = binomial_representations(i, h_max);
        for h in 1..=h_max {
            let reps = seen.get(&h).map_or(&[][..], Vec::as_slice);
            if reps.len() != 1 {
                return Err(format!("h={h} i={i}: {} representations {reps:?}", reps.len()));
            }
            let e = binomial_expansion(h, i).map_err(|e| e.to_string())?;
            if e.terms != reps[0] || e.value() != u128::from(h) {
                return Err(format!("h={h} i={i}: expansion {:?}, expected {:?}", e.terms, reps[0]));
            }
        }
    }
    Ok(())
}
