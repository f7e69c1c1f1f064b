//! Generic initial ideals for DegRevLex, computed by random changes of
//! coordinates, plus regularity and saturation tests read off `rgin(I)`.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groebner::{self, GroebnerError, IdealPresentation};
use crate::monomial::MonomialIdeal;
use crate::poly::{determinant, TermOrder};

/// Entries of the random matrices are drawn uniformly from this range.
pub const ENTRY_BOUND: i64 = 1000;
/// Number of disagreeing trial pairs tolerated before giving up.
pub const MAX_TRIAL_PAIRS: u32 = 5;
pub const DEFAULT_SEED: u64 = 42;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GinError {
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error("genericity not reached: {pairs} pairs of random coordinate changes disagreed (seed {seed})")]
    GenericityNotReached { seed: u64, pairs: u32 },
    #[error("internal invariant violated: rgin {0} is not strongly stable")]
    NotStronglyStable(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GinMethod {
    /// Two independent random coordinate changes gave the same leading term
    /// ideal.
    RandomCoordinates,
    /// The input is a strongly stable monomial ideal, which in
    /// characteristic 0 is its own generic initial ideal.
    BorelFixed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GinResult {
    pub rgin: MonomialIdeal,
    pub trials_used: u32,
    pub seed: u64,
    /// True once the result is certified: by agreement of two random trials,
    /// or directly for Borel-fixed input.
    pub agreed: bool,
    pub method: GinMethod,
    /// When set, `rgin` is only correct in degrees up to this bound.
    pub degree_cap: Option<u32>,
    /// Degrees of a minimal generating set of the input ideal, ascending.
    pub generator_degrees: Vec<u32>,
}

impl GinResult {
    /// Highest degree of a minimal generator; 0 for the zero ideal.
    pub fn regularity(&self) -> u32 {
        self.rgin.max_generator_degree().unwrap_or(0)
    }

    /// Highest degree of a minimal generator of the input ideal.
    pub fn generation_degree(&self) -> Option<u32> {
        self.generator_degrees.last().copied()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GinOptions {
    pub seed: u64,
    pub degree_cap: Option<u32>,
    /// Return strongly stable monomial input unchanged.
    pub borel_shortcut: bool,
}

impl Default for GinOptions {
    fn default() -> Self {
        GinOptions {
            seed: DEFAULT_SEED,
            degree_cap: None,
            borel_shortcut: true,
        }
    }
}

impl GinOptions {
    pub fn with_seed(seed: u64) -> Self {
        GinOptions {
            seed,
            ..GinOptions::default()
        }
    }
}

/// The invertible `n x n` integer matrix used by trial `trial` under `seed`.
/// Each trial reads its own ChaCha stream, so the matrices do not depend on
/// the order in which trials run.
pub fn random_change(seed: u64, trial: u64, n: usize) -> Vec<Vec<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    loop {
        let m: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(-ENTRY_BOUND..=ENTRY_BOUND)).collect())
            .collect();
        if !determinant(&m).is_zero() {
            return m;
        }
    }
}

/// `LT_DegRevLex(g(I))` for the matrix `g`, optionally capped in degree.
pub fn leading_ideal_after_change(
    ideal: &IdealPresentation,
    matrix: &[Vec<i64>],
    degree_cap: Option<u32>,
) -> Result<MonomialIdeal, GinError> {
    ideal.require_homogeneous()?;
    let changed = ideal
        .apply_linear_change(matrix)
        .expect("random changes are invertible and square");
    Ok(lt_of(&changed, degree_cap).0)
}

fn lt_of(ideal: &IdealPresentation, degree_cap: Option<u32>) -> (MonomialIdeal, Vec<u32>) {
    let gb = groebner::run(ideal, TermOrder::DegRevLex, degree_cap, false);
    (gb.leading_monomial_ideal(), gb.minimal_generator_degrees().to_vec())
}

/// `rgin(I)` with the default options.
pub fn rgin(ideal: &IdealPresentation, seed: u64) -> Result<GinResult, GinError> {
    rgin_with(ideal, GinOptions::with_seed(seed))
}

pub fn rgin_with(ideal: &IdealPresentation, options: GinOptions) -> Result<GinResult, GinError> {
    ideal.require_homogeneous()?;
    let n = ideal.ring().arity();
    let cap = options.degree_cap;
    let truncate = |j: MonomialIdeal| match cap {
        Some(c) => MonomialIdeal::new(
            j.ring(),
            j.generators().iter().filter(|g| g.degree() <= c).cloned(),
        ),
        None => j,
    };

    if options.borel_shortcut {
        if let Some(mono) = ideal.as_monomial_ideal() {
            if mono.is_strongly_stable() {
                let rgin = truncate(mono);
                let generator_degrees = rgin.generators().iter().map(|g| g.degree()).collect();
                return Ok(GinResult {
                    rgin,
                    trials_used: 0,
                    seed: options.seed,
                    agreed: true,
                    method: GinMethod::BorelFixed,
                    degree_cap: cap,
                    generator_degrees,
                });
            }
        }
    }

    for pair in 0..MAX_TRIAL_PAIRS {
        let (a, b) = (2 * pair as u64, 2 * pair as u64 + 1);
        let (ga, gb) = (random_change(options.seed, a, n), random_change(options.seed, b, n));
        let ((ja, generator_degrees), (jb, _)) = std::thread::scope(|s| {
            let ha = s.spawn(|| lt_of(&ideal.with_unchecked_change(&ga), cap));
            let jb = lt_of(&ideal.with_unchecked_change(&gb), cap);
            (ha.join().expect("trial thread panicked"), jb)
        });
        if ja == jb {
            if !ja.is_strongly_stable() {
                return Err(GinError::NotStronglyStable(ja.to_string()));
            }
            return Ok(GinResult {
                rgin: ja,
                trials_used: 2 * (pair + 1),
                seed: options.seed,
                agreed: true,
                method: GinMethod::RandomCoordinates,
                degree_cap: cap,
                generator_degrees,
            });
        }
    }
    Err(GinError::GenericityNotReached {
        seed: options.seed,
        pairs: MAX_TRIAL_PAIRS,
    })
}

/// `reg(I)`: the highest degree of a minimal generator of `rgin(I)`.
pub fn regularity(ideal: &IdealPresentation, seed: u64) -> Result<u32, GinError> {
    Ok(rgin(ideal, seed)?.regularity())
}

/// `I` is saturated iff no minimal generator of `rgin(I)` involves `x_n`.
pub fn is_saturated(ideal: &IdealPresentation, seed: u64) -> Result<bool, GinError> {
    Ok(!rgin(ideal, seed)?.rgin.involves_last_variable())
}
