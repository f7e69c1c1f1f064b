//! One pass over an ideal that collects every invariant the sectional matrix
//! yields, each recomputed through the individual operations.

use serde::{Deserialize, Serialize};

use super::section::{dim_deg, hilbert_polynomial_of_section, RationalPolynomial};
use super::truncation::{
    gcd_of_truncation_in, reduction_number_of, truncation_dim_deg_in, truncation_regularity_in,
    truncation_saturation_in, TruncationDimDeg, TruncationRegularity,
};
use super::{
    check_bounds, maximal_growth, persistence_value, BoundViolation, SectionalError,
    SectionalMatrix,
};
use crate::gin::{rgin, GinMethod};
use crate::groebner::IdealPresentation;

/// Bumped whenever a field of [`AnalysisReport`] changes meaning.
pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Columns predicted beyond the last computed one.
const PREDICTED_COLUMNS: u32 = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub ring: Vec<String>,
    pub generators: Vec<String>,
    pub seed: u64,
    pub rgin: Vec<String>,
    pub gin_method: GinMethod,
    pub gin_trials: u32,
    pub reg: u32,
    /// Degrees of a minimal generating set of the ideal.
    pub generator_degrees: Vec<u32>,
    /// `matrix[i - 1][d] = M(i, d)`.
    pub matrix: Vec<Vec<u64>>,
    pub bound_violations: Vec<BoundViolation>,
    pub dim: usize,
    pub deg: u64,
    /// Column the dimension and degree were read from; `None` when `P/I` has
    /// finite length and they come from the Hilbert series instead.
    pub dim_deg_delta: Option<u32>,
    /// Every column from which dimension and degree can already be read.
    pub dim_deg: Vec<DimDegEntry>,
    /// Hilbert polynomial of `P/I`.
    pub hilbert_polynomial: RationalPolynomial,
    /// Reduced Hilbert series of `P/I`: numerator and denominator exponent.
    pub hilbert_series: (Vec<i64>, u32),
    pub reduction_numbers: Vec<ReductionNumberEntry>,
    /// `r(P/I) = r_{dim}(P/I)`, when finite.
    pub reduction_number: Option<u32>,
    pub growth: GrowthReport,
    pub potential_gcd_degrees: Vec<PotentialGcd>,
    pub gcd: Vec<GcdEntry>,
    pub saturated: bool,
    /// Present for saturated ideals: the `n` and `(n-1)` growth flags agree in
    /// every computed degree.
    pub saturated_growth_agrees: Option<bool>,
    pub truncation_dim_deg: Vec<TruncationDimDeg>,
    pub truncation_regularity: Vec<TruncationRegularity>,
    pub truncation_saturation: Vec<TruncationSaturationEntry>,
    pub notes: Vec<DiscrepancyNote>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimDegEntry {
    pub delta: u32,
    pub i: usize,
    pub dim: usize,
    pub deg: u64,
    /// Read below the regularity.
    pub early: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionNumberEntry {
    pub s: usize,
    /// `None` when row `n - s` never vanishes.
    pub value: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthReport {
    /// `maximal_growth[i - 1][d]`: `i`-maximal growth in degree `d`, for
    /// every `d` below the last column.
    pub maximal_growth: Vec<Vec<bool>>,
    /// Per row, the first degree `delta` with `i`-maximal growth and all
    /// generators in degree `<= delta + 1`; from there on growth persists.
    pub persistent_from: Vec<Option<u32>>,
    pub predicted: Vec<PredictedRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedRow {
    pub i: usize,
    pub from_delta: u32,
    /// `(d, M(i, d))` for a few `d` past the last column.
    pub values: Vec<(u32, u64)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PotentialGcd {
    pub delta: u32,
    pub degree: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcdEntry {
    pub delta: u32,
    pub gcd: String,
    pub degree: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncationSaturationEntry {
    pub delta: u32,
    pub saturated: bool,
    /// `(n-1)`-maximal growth in degree `delta`.
    pub hypothesis: bool,
}

/// A statement whose literal reading disagrees with what the matrix
/// machinery computes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscrepancyNote {
    pub kind: String,
    pub delta: u32,
    pub i: usize,
    pub stated: usize,
    pub computed: usize,
    /// Measured directly on the truncation, when available.
    pub observed: Option<usize>,
    pub message: String,
}

fn invariant(what: String) -> SectionalError {
    SectionalError::Invariant(what)
}

/// Full report at the default extent (`reg + 1` columns).
pub fn analyze(ideal: &IdealPresentation, seed: u64) -> Result<AnalysisReport, SectionalError> {
    analyze_with(ideal, seed, None)
}

/// [`analyze`] with at least `max_degree` columns.
pub fn analyze_with(
    ideal: &IdealPresentation,
    seed: u64,
    max_degree: Option<u32>,
) -> Result<AnalysisReport, SectionalError> {
    let gin = rgin(ideal, seed)?;
    if gin.rgin.is_whole() {
        return Err(SectionalError::WholeRing);
    }
    let reg = gin.regularity();
    let top = max_degree.map_or(reg + 1, |d| d.max(reg + 1));
    let m = SectionalMatrix::from_gin(&gin, 1, Some(top));
    let n = m.arity();

    let bound_violations = check_bounds(&m);
    if !bound_violations.is_empty() {
        return Err(invariant(format!(
            "the sectional matrix violates {} bound(s)",
            bound_violations.len()
        )));
    }

    // dimension and degree
    let numerator = gin.rgin.hilbert_numerator();
    let series = numerator.reduced();
    let series_dim_deg = (numerator.dimension(), numerator.multiplicity());
    let mut entries = Vec::new();
    for delta in 0..top {
        if let Ok(dd) = dim_deg(&m, delta) {
            entries.push(DimDegEntry {
                delta,
                i: dd.i,
                dim: dd.dim,
                deg: dd.deg,
                early: delta < reg,
            });
        }
    }
    let at_reg = entries.iter().find(|e| e.delta == reg).copied();
    let (dim, deg, dim_deg_delta) = match at_reg {
        Some(e) => (e.dim, e.deg, Some(reg)),
        None if m.at(n, reg) == 0 => (0, series_dim_deg.1 as u64, None),
        None => {
            return Err(invariant(format!(
                "dimension and degree not readable at the regularity {reg}"
            )))
        }
    };
    if (dim, deg as i64) != series_dim_deg {
        return Err(invariant(format!(
            "matrix gives dim {dim}, deg {deg}; Hilbert series gives {series_dim_deg:?}"
        )));
    }
    if let Some(e) = entries.iter().find(|e| (e.dim, e.deg) != (dim, deg)) {
        return Err(invariant(format!(
            "column {} gives dim {}, deg {}",
            e.delta, e.dim, e.deg
        )));
    }
    let hilbert_polynomial = hilbert_polynomial_of_section(&m, reg, n)?;

    // reduction numbers
    let reduction_numbers: Vec<ReductionNumberEntry> = (0..=n)
        .map(|s| match reduction_number_of(&gin.rgin, s) {
            Ok(v) => Ok(ReductionNumberEntry { s, value: Some(v) }),
            Err(SectionalError::InfiniteReductionNumber { .. }) => {
                Ok(ReductionNumberEntry { s, value: None })
            }
            Err(e) => Err(e),
        })
        .collect::<Result<_, _>>()?;
    let reduction_number = reduction_numbers[dim].value;

    let growth = growth_report(&m)?;

    // common factors
    let mut potential_gcd_degrees = Vec::new();
    let mut gcd = Vec::new();
    if n >= 2 {
        for delta in 0..=top {
            if m.component_is_nonzero(delta) {
                potential_gcd_degrees.push(PotentialGcd {
                    delta,
                    degree: m.at(2, delta),
                });
            }
        }
        let first = (0..top).find(|&d| {
            m.component_is_nonzero(d) && m.at(2, d) >= 1 && maximal_growth(&m, 2, d) == Ok(true)
        });
        if let Some(delta) = first.filter(|&d| d <= reg) {
            let g = gcd_of_truncation_in(ideal, &m, delta)?;
            gcd.push(GcdEntry {
                delta,
                gcd: g.gcd.to_string(),
                degree: g.potential_degree,
            });
        }
    }

    // truncations
    let mut truncation_dim_deg = Vec::new();
    let first_trunc = (0..top.min(reg + 1)).find(|&d| truncation_dim_deg_applies(&m, d));
    if let Some(delta) = first_trunc {
        let t = truncation_dim_deg_in(ideal, &m, delta, seed)?;
        if !t.verified() {
            return Err(invariant(format!(
                "truncation at {delta}: predicted ({}, {}), observed {:?} and {:?}",
                t.dim, t.deg, t.observed_delta, t.observed_next
            )));
        }
        truncation_dim_deg.push(t);
    }
    // below the lowest generator degree the truncation is zero
    let low = gin.generator_degrees.first().copied().unwrap_or(0);
    let mut truncation_regularity = Vec::new();
    if let Some(delta) = (low..top).find(|&d| maximal_growth(&m, n, d) == Ok(true)) {
        let t = truncation_regularity_in(ideal, &m, delta, seed)?;
        if !t.holds {
            return Err(invariant(format!(
                "reg(<I_<={delta}>) = {} exceeds {delta}",
                t.regularity
            )));
        }
        truncation_regularity.push(t);
    }

    // saturation
    let saturated = !gin.rgin.involves_last_variable();
    let mut saturated_growth_agrees = None;
    let mut truncation_saturation = Vec::new();
    let mut notes = Vec::new();
    if saturated && n >= 2 {
        let agrees = (0..top).all(|d| maximal_growth(&m, n, d) == maximal_growth(&m, n - 1, d));
        if !agrees {
            return Err(invariant("n and (n-1) growth flags differ on a saturated ideal".into()));
        }
        saturated_growth_agrees = Some(agrees);
        for delta in low..=reg.min(top - 1) {
            let t = truncation_saturation_in(ideal, &gin.rgin, &m, delta, seed)?;
            if !t.consistent() {
                return Err(invariant(format!(
                    "<I_<={delta}> is not saturated despite (n-1)-maximal growth"
                )));
            }
            truncation_saturation.push(TruncationSaturationEntry {
                delta: t.delta,
                saturated: t.saturated,
                hypothesis: t.hypothesis,
            });
        }
        if let Some(note) = saturated_dimension_note(ideal, &m, reg, seed)? {
            notes.push(note);
        }
    }

    Ok(AnalysisReport {
        schema_version: REPORT_SCHEMA_VERSION,
        ring: ideal.ring().names().to_vec(),
        generators: ideal.generators().iter().map(|g| g.to_string()).collect(),
        seed,
        rgin: gin.rgin.display_generators(),
        gin_method: gin.method,
        gin_trials: gin.trials_used,
        reg,
        generator_degrees: gin.generator_degrees.clone(),
        matrix: m.rows().to_vec(),
        bound_violations,
        dim,
        deg,
        dim_deg_delta,
        dim_deg: entries,
        hilbert_polynomial,
        hilbert_series: (series.0, series.1 as u32),
        reduction_numbers,
        reduction_number,
        growth,
        potential_gcd_degrees,
        gcd,
        saturated,
        saturated_growth_agrees,
        truncation_dim_deg,
        truncation_regularity,
        truncation_saturation,
        notes,
    })
}

fn growth_report(m: &SectionalMatrix) -> Result<GrowthReport, SectionalError> {
    let n = m.arity();
    let top = m.max_degree();
    let generated_by = |delta: u32| m.generation_degree().map_or(true, |g| g <= delta + 1);
    let flags: Vec<Vec<bool>> = (1..=n)
        .map(|i| (0..top).map(|d| maximal_growth(m, i, d)).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()?;
    let persistent_from: Vec<Option<u32>> = (0..n)
        .map(|k| (0..top).find(|&d| flags[k][d as usize] && generated_by(d)))
        .collect();
    let mut predicted = Vec::new();
    for (k, from) in persistent_from.iter().enumerate() {
        let Some(delta) = *from else { continue };
        let i = k + 1;
        // persistence must reproduce every stored entry first
        for d in delta + 1..=top {
            if persistence_value(m, delta, i, d - delta) != u128::from(m.at(i, d)) {
                return Err(invariant(format!(
                    "persistence from {delta} mispredicts M({i},{d})"
                )));
            }
        }
        let values = (top + 1..=top + PREDICTED_COLUMNS)
            .map(|d| {
                let v = persistence_value(m, delta, i, d - delta);
                u64::try_from(v)
                    .map(|v| (d, v))
                    .map_err(|_| invariant(format!("M({i},{d}) overflows")))
            })
            .collect::<Result<_, _>>()?;
        predicted.push(PredictedRow {
            i,
            from_delta: delta,
            values,
        });
    }
    Ok(GrowthReport {
        maximal_growth: flags,
        persistent_from,
        predicted,
    })
}

fn truncation_dim_deg_applies(m: &SectionalMatrix, delta: u32) -> bool {
    if m.arity() < 2 || !m.component_is_proper(delta) || !m.component_is_nonzero(delta) {
        return false;
    }
    match (2..=m.arity()).find(|&j| m.at(j, delta) != 0) {
        Some(i) => m.at(i, delta) == m.at(i, delta + 1),
        None => false,
    }
}

/// For a saturated ideal with `(n-1)`-maximal growth in degree `delta`, the
/// truncation's dimension is stated as `n - i` while the column criterion
/// gives `n - i + 1`; both are recorded at the first such `delta`.
fn saturated_dimension_note(
    ideal: &IdealPresentation,
    m: &SectionalMatrix,
    reg: u32,
    seed: u64,
) -> Result<Option<DiscrepancyNote>, SectionalError> {
    let n = m.arity();
    let delta = (0..=reg.min(m.max_degree() - 1)).find(|&d| {
        m.component_is_proper(d)
            && m.component_is_nonzero(d)
            && maximal_growth(m, n - 1, d) == Ok(true)
            && (2..=n).any(|j| m.at(j, d) != 0)
    });
    let Some(delta) = delta else { return Ok(None) };
    let i = (2..=n).find(|&j| m.at(j, delta) != 0).expect("checked above");
    let observed = truncation_dim_deg_in(ideal, m, delta, seed)
        .ok()
        .map(|t| t.observed_delta.0);
    let (stated, computed) = (n - i, n - i + 1);
    Ok(Some(DiscrepancyNote {
        kind: "saturated-truncation-dimension".into(),
        delta,
        i,
        stated,
        computed,
        observed,
        message: format!(
            "the saturated-truncation statement gives dimension n-i = {stated} for <I_<={delta}>; \
             the column criterion gives n-i+1 = {computed} (Krull dimension of the quotient); \
             the stated value equals the projective dimension"
        ),
    }))
}
