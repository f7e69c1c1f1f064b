//! Sectional matrices `M_{P/I}(i, d)`: the Hilbert function of `P/I` cut by
//! `n - i` generic linear forms, with the growth, persistence, dimension,
//! truncation and saturation diagnostics read off them.
//!
//! Every entry is computed from `rgin(I)`: for a strongly stable ideal,
//! cutting by generic forms is the same as setting the last `n - i`
//! variables to zero.

mod expansion;
mod oracle;
mod report;
mod section;
mod truncation;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::binomial::{binom, monomial_count};
use crate::gin::{rgin_with, GinError, GinOptions, GinResult};
use crate::groebner::{GroebnerError, IdealPresentation};
use crate::monomial::MonomialIdeal;

pub use expansion::{
    binomial_expansion, expansion_shift, green_lower, macaulay_upper, BinomialExpansion,
};
pub use oracle::{sectional_matrix_direct_oracle, ORACLE_GUARD};
pub use report::{
    analyze, analyze_with, AnalysisReport, DimDegEntry, DiscrepancyNote, GcdEntry, GrowthReport,
    PotentialGcd, PredictedRow, ReductionNumberEntry, TruncationSaturationEntry,
    REPORT_SCHEMA_VERSION,
};
pub use section::{
    dim_deg, hilbert_polynomial_of_section, hilbert_series_of_section, section_summary, DimDeg,
    RationalPolynomial, SectionHilbertSummary, SectionSeries,
};
pub use truncation::{
    gcd_of_truncation, potential_gcd_degree, reduction_number, reduction_number_of,
    reduction_number_total, saturated_growth_equivalence, truncation_dim_deg,
    truncation_regularity_check, truncation_saturation, TruncationDimDeg, TruncationGcd,
    TruncationRegularity, TruncationSaturation,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SectionalError {
    #[error(transparent)]
    Gin(#[from] GinError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error("the ideal is the whole ring")]
    WholeRing,
    #[error("degree {d} lies beyond the computed columns (last column {max})")]
    DegreeOutOfRange { d: u32, max: u32 },
    #[error("row {i} is outside 1..={n}")]
    RowOutOfRange { i: usize, n: usize },
    #[error("binomial expansions need positive h and i")]
    NonPositive,
    #[error("binomial with negative bottom index {bottom}")]
    NegativeBottom { bottom: i64 },
    #[error("precondition of {op} violated: {reason}")]
    Precondition { op: &'static str, reason: String },
    #[error("inconclusive at degree {delta}: {reason}")]
    Inconclusive { delta: u32, reason: String },
    #[error("infinite reduction number: row {row} of the sectional matrix never vanishes")]
    InfiniteReductionNumber { s: usize, row: usize },
    #[error("I_{delta} = 0, so there is no GCD to predict")]
    ZeroComponent { delta: u32 },
    #[error("the ideal is not saturated")]
    NotSaturated,
    #[error("internal invariant violated: GCD of degree {found}, expected {expected}")]
    GcdDegreeMismatch { expected: u64, found: u32 },
    #[error("internal invariant violated: the GCD of <I_<={delta}> does not divide {generator}")]
    GcdNotShared { delta: u32, generator: String },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("oracle matrix with {rows} rows and {columns} columns exceeds the guard")]
    OracleTooLarge { rows: usize, columns: usize },
}

/// `M(i, d)` for `1 <= i <= n`, `0 <= d <= D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionalMatrix {
    arity: usize,
    /// `rows[i - 1][d] = M(i, d)`.
    rows: Vec<Vec<u64>>,
    /// Regularity of the ideal, when known.
    reg: Option<u32>,
    /// Highest degree of a minimal generator of the ideal; `None` for the
    /// zero ideal or when unknown.
    generation_degree: Option<u32>,
    /// Whether `generation_degree` is reliable.
    generation_known: bool,
    /// Minimal generators of the strongly stable ideal the entries come from.
    #[serde(skip)]
    source: Option<MonomialIdeal>,
}

/// How many columns to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SectionalOptions {
    pub seed: u64,
    /// Columns beyond the regularity; the usual display stops at `reg + 1`.
    pub extra_degrees: u32,
    /// Overrides the last column when set.
    pub max_degree: Option<u32>,
}

impl Default for SectionalOptions {
    fn default() -> Self {
        SectionalOptions {
            seed: crate::gin::DEFAULT_SEED,
            extra_degrees: 1,
            max_degree: None,
        }
    }
}

impl SectionalOptions {
    pub fn with_seed(seed: u64) -> Self {
        SectionalOptions {
            seed,
            ..SectionalOptions::default()
        }
    }
}

/// `M_{P/I}` up to degree `reg(I) + 1`.
pub fn sectional_matrix(ideal: &IdealPresentation, seed: u64) -> Result<SectionalMatrix, SectionalError> {
    sectional_matrix_with(ideal, SectionalOptions::with_seed(seed))
}

pub fn sectional_matrix_with(
    ideal: &IdealPresentation,
    options: SectionalOptions,
) -> Result<SectionalMatrix, SectionalError> {
    let gin = rgin_with(ideal, GinOptions::with_seed(options.seed))?;
    Ok(SectionalMatrix::from_gin(&gin, options.extra_degrees, options.max_degree))
}

/// `M_{P/I}(i, d)` for `d <= max_degree` only, from an `rgin` truncated at
/// that degree. Cheaper when the regularity is large; the regularity is then
/// unknown.
pub fn sectional_matrix_capped(
    ideal: &IdealPresentation,
    seed: u64,
    max_degree: u32,
) -> Result<SectionalMatrix, SectionalError> {
    let gin = rgin_with(
        ideal,
        GinOptions {
            seed,
            degree_cap: Some(max_degree),
            borel_shortcut: true,
        },
    )?;
    let mut m = SectionalMatrix::from_strongly_stable(&gin.rgin, max_degree);
    m.reg = None;
    m.generation_degree = None;
    m.generation_known = false;
    Ok(m)
}

impl SectionalMatrix {
    pub(crate) fn from_gin(gin: &GinResult, extra_degrees: u32, max_degree: Option<u32>) -> Self {
        let reg = gin.regularity();
        let d_max = max_degree.unwrap_or(reg + extra_degrees);
        let mut m = SectionalMatrix::from_strongly_stable(&gin.rgin, d_max);
        m.reg = if gin.degree_cap.is_none() { Some(reg) } else { None };
        m.generation_degree = gin.generation_degree();
        m.generation_known = gin.degree_cap.is_none();
        m
    }

    /// Sectional matrix of `P/J` for a strongly stable `J`, read off by
    /// restricting to the first `i` variables.
    pub fn from_strongly_stable(j: &MonomialIdeal, max_degree: u32) -> Self {
        assert!(j.is_strongly_stable(), "sectioning by variables needs a strongly stable ideal");
        let n = j.arity();
        let rows = (1..=n)
            .map(|i| {
                let restricted = j.restrict_to_first_vars(i).expect("1 <= i <= n");
                let num = restricted.hilbert_numerator();
                (0..=max_degree)
                    .map(|d| u64::try_from(num.series_coefficient(d)).expect("non-negative"))
                    .collect()
            })
            .collect();
        SectionalMatrix {
            arity: n,
            rows,
            reg: j.max_generator_degree().or(Some(0)),
            generation_degree: j.max_generator_degree(),
            generation_known: true,
            source: Some(j.clone()),
        }
    }

    /// A bare table of entries (`rows[i - 1][d]`), e.g. for checking bounds
    /// of a matrix that did not come from an ideal.
    pub fn from_rows(rows: Vec<Vec<u64>>) -> Self {
        assert!(!rows.is_empty(), "at least one row");
        let width = rows[0].len();
        assert!(width > 0 && rows.iter().all(|r| r.len() == width), "rectangular table");
        SectionalMatrix {
            arity: rows.len(),
            rows,
            reg: None,
            generation_degree: None,
            generation_known: false,
            source: None,
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Index of the last column.
    pub fn max_degree(&self) -> u32 {
        (self.rows[0].len() - 1) as u32
    }

    pub fn reg(&self) -> Option<u32> {
        self.reg
    }

    pub fn generation_degree(&self) -> Option<u32> {
        self.generation_degree
    }

    pub fn generation_known(&self) -> bool {
        self.generation_known
    }

    pub fn source(&self) -> Option<&MonomialIdeal> {
        self.source.as_ref()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// `M(i, d)`, 1-based in `i`.
    pub fn get(&self, i: usize, d: u32) -> Result<u64, SectionalError> {
        self.check_row(i)?;
        self.check_degree(d)?;
        Ok(self.rows[i - 1][d as usize])
    }

    pub(crate) fn at(&self, i: usize, d: u32) -> u64 {
        self.rows[i - 1][d as usize]
    }

    pub(crate) fn check_row(&self, i: usize) -> Result<(), SectionalError> {
        if i == 0 || i > self.arity {
            return Err(SectionalError::RowOutOfRange { i, n: self.arity });
        }
        Ok(())
    }

    pub(crate) fn check_degree(&self, d: u32) -> Result<(), SectionalError> {
        if d > self.max_degree() {
            return Err(SectionalError::DegreeOutOfRange {
                d,
                max: self.max_degree(),
            });
        }
        Ok(())
    }

    /// True when the ideal contains a unit: every entry vanishes.
    pub fn is_whole_ring(&self) -> bool {
        self.rows.iter().all(|r| r[0] == 0)
    }

    /// `I_d != P_d`.
    pub fn component_is_proper(&self, d: u32) -> bool {
        self.at(self.arity, d) != 0
    }

    /// `I_d != 0`.
    pub fn component_is_nonzero(&self, d: u32) -> bool {
        (self.at(self.arity, d) as u128) < monomial_count(self.arity, d)
    }

    /// Sectional matrix of the same ideal restricted to fewer columns.
    pub fn truncated_to(&self, max_degree: u32) -> SectionalMatrix {
        let keep = (max_degree.min(self.max_degree()) + 1) as usize;
        SectionalMatrix {
            rows: self.rows.iter().map(|r| r[..keep].to_vec()).collect(),
            ..self.clone()
        }
    }

    /// Paper-style table: a degree header, then one line per row `i`.
    pub fn to_table(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for SectionalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .chain(std::iter::once(format!("_{}", self.max_degree()).len()))
            .max()
            .unwrap_or(1);
        let label = self.arity.to_string().len();
        write!(f, "{:label$} ", "")?;
        for d in 0..=self.max_degree() {
            write!(f, " {:>width$}", format!("_{d}"))?;
        }
        writeln!(f)?;
        for (k, row) in self.rows.iter().enumerate() {
            write!(f, "{:>label$}:", k + 1)?;
            for v in row {
                write!(f, " {v:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Which inequality of the sectional-matrix bounds failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Inequality {
    /// `M(i, d+1) <= sum_{j <= i} M(j, d)`.
    Sum,
    /// `M(i, d+1) <= (M(i, d)_d)^+_+`.
    Macaulay,
    /// `M(i-1, d) - M(i-2, d) <= ((M(i, d) - M(i-1, d))_{d-1})^-`.
    Difference,
    /// `M(i-1, d) <= (M(i, d)_d)^-`.
    Green,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundViolation {
    pub inequality: Inequality,
    pub i: usize,
    pub d: u32,
    pub lhs: i128,
    pub rhs: i128,
}

/// Checks the four inequalities at every `(i, d)` the table covers. The
/// binomial-expansion bounds are taken with `(0_d)^. = 0` and skipped where
/// the expansion index would be 0.
///
/// The difference bound uses the `(d-1)`-binomial expansion: the difference
/// `M(i, d) - M(i-1, d)` is the degree-`d` part of `L * R_i`, a quotient
/// algebra shifted by one. With the `d`-expansion the bound already fails
/// for the polynomial ring (`n = 3`, `i = 3`, `d = 2`: `2 <= 1`).
pub fn check_bounds(m: &SectionalMatrix) -> Vec<BoundViolation> {
    let n = m.arity;
    let top = m.max_degree();
    let mut out = Vec::new();
    let mut push = |inequality, i, d, lhs: i128, rhs: i128| {
        if lhs > rhs {
            out.push(BoundViolation {
                inequality,
                i,
                d,
                lhs,
                rhs,
            });
        }
    };
    for d in 0..=top {
        for i in 1..=n {
            if d < top {
                let sum: i128 = (1..=i).map(|j| m.at(j, d) as i128).sum();
                push(Inequality::Sum, i, d, m.at(i, d + 1) as i128, sum);
                if d > 0 {
                    let bound = macaulay_upper(m.at(i, d), d) as i128;
                    push(Inequality::Macaulay, i, d, m.at(i, d + 1) as i128, bound);
                }
            }
            if d == 0 {
                continue;
            }
            if i >= 3 && d >= 2 {
                let lhs = m.at(i - 1, d) as i128 - m.at(i - 2, d) as i128;
                let diff = m.at(i, d) as i128 - m.at(i - 1, d) as i128;
                let rhs = if diff < 0 {
                    // the table is not monotone in i; report against 0
                    0
                } else {
                    green_lower(diff as u64, d - 1) as i128
                };
                push(Inequality::Difference, i, d, lhs, rhs);
            }
            if i >= 2 {
                push(
                    Inequality::Green,
                    i,
                    d,
                    m.at(i - 1, d) as i128,
                    green_lower(m.at(i, d), d) as i128,
                );
            }
        }
    }
    out
}

/// `i`-maximal growth in degree `d`: `M(i, d+1) = sum_{j <= i} M(j, d)`.
pub fn maximal_growth(m: &SectionalMatrix, i: usize, d: u32) -> Result<bool, SectionalError> {
    m.check_row(i)?;
    m.check_degree(d + 1)?;
    let sum: u64 = (1..=i).map(|j| m.at(j, d)).sum();
    Ok(m.at(i, d + 1) == sum)
}

/// Maximal growth of the Hilbert function (Macaulay's equality) in degree
/// `d`, given `H(d)` and `H(d+1)`.
pub fn hilbert_maximal_growth(h_d: u64, h_next: u64, d: u32) -> bool {
    h_next as u128 == macaulay_upper(h_d, d)
}

/// Compares `i`-maximal growth in degree `d` with "rgin has no minimal
/// generator of degree `d+1` in `x_1..x_i`"; returns whether they agree.
pub fn no_new_generators_check(
    m: &SectionalMatrix,
    rgin: &MonomialIdeal,
    i: usize,
    d: u32,
) -> Result<bool, SectionalError> {
    let growth = maximal_growth(m, i, d)?;
    let no_generators = !rgin
        .generators()
        .iter()
        .any(|g| g.degree() == d + 1 && g.supported_in_first(i));
    Ok(growth == no_generators)
}

/// `M(i, delta + d) = sum_j C(i - j + d - 1, i - j) M(j, delta)`, valid when
/// the ideal is generated in degree `<= delta + 1` and has `i`-maximal growth
/// in degree `delta`.
pub fn persistence_extend(
    m: &SectionalMatrix,
    delta: u32,
    i: usize,
    d: u32,
) -> Result<u128, SectionalError> {
    const OP: &str = "persistence_extend";
    if d == 0 {
        return Err(SectionalError::Precondition {
            op: OP,
            reason: "the offset d must be at least 1".into(),
        });
    }
    check_generation(m, delta, OP)?;
    if !maximal_growth(m, i, delta)? {
        return Err(SectionalError::Precondition {
            op: OP,
            reason: format!("no {i}-maximal growth in degree {delta}"),
        });
    }
    Ok(persistence_value(m, delta, i, d))
}

pub(crate) fn persistence_value(m: &SectionalMatrix, delta: u32, i: usize, d: u32) -> u128 {
    (1..=i)
        .map(|j| {
            let k = (i - j) as i64;
            binom(k + d as i64 - 1, k) * m.at(j, delta) as u128
        })
        .sum()
}

pub(crate) fn check_generation(
    m: &SectionalMatrix,
    delta: u32,
    op: &'static str,
) -> Result<(), SectionalError> {
    if !m.generation_known {
        return Err(SectionalError::Precondition {
            op,
            reason: "the generation degree of the ideal is unknown".into(),
        });
    }
    match m.generation_degree {
        Some(g) if g > delta + 1 => Err(SectionalError::Precondition {
            op,
            reason: format!("the ideal has a minimal generator of degree {g} > {}", delta + 1),
        }),
        _ => Ok(()),
    }
}
