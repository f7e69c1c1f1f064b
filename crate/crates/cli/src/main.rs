//! `secmat`: sectional matrices and derived invariants of the ideal in an
//! input file.
//!
//! Exit codes: 0 ok, 2 parse error, 3 semantic error (non-homogeneous input,
//! unreadable file, ...), 4 genericity not reached, 5 internal invariant
//! violated.

mod render;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use secmat::document::parse_document;
use secmat::gin::{rgin, GinError, GinMethod, DEFAULT_SEED};
use secmat::groebner::{buchberger, leading_term_ideal, truncation_ideal, IdealPresentation};
use secmat::poly::TermOrder;
use secmat::sectional::{
    analyze_with, check_bounds, sectional_matrix_direct_oracle, sectional_matrix_with,
    SectionalError, SectionalMatrix, SectionalOptions,
};

#[derive(Parser)]
#[command(name = "secmat", version, about = "Sectional matrices of homogeneous polynomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the sectional matrix up to degree reg + 1.
    Secmat(MatrixArgs),
    /// Sectional matrix plus every invariant read off it.
    Analyze(MatrixArgs),
    /// Minimal generators of the DegRevLex generic initial ideal.
    Rgin(InputArgs),
    /// Minimal generators of the leading term ideal.
    Lt(LtArgs),
}

#[derive(Args)]
struct InputArgs {
    /// File of the form `ring x, y, z; ideal f1, f2, ...;`
    file: PathBuf,
    /// Seed for the random coordinate changes.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Work with the ideal generated by the elements of degree <= DELTA.
    #[arg(long, value_name = "DELTA")]
    truncate: Option<u32>,
    /// Structured output instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct MatrixArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Last column to print (secmat) or the least last column (analyze).
    #[arg(long)]
    max_degree: Option<u32>,
    /// Recompute every entry by linear algebra over random hyperplane
    /// sections and compare.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct LtArgs {
    #[command(flatten)]
    input: InputArgs,
    /// degrevlex, lex or deglex.
    #[arg(long, default_value = "degrevlex")]
    order: TermOrder,
}

#[derive(Debug)]
enum Failure {
    Parse(String),
    Semantic(String),
    Genericity(String),
    Invariant(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Semantic(_) => 3,
            Failure::Genericity(_) => 4,
            Failure::Invariant(_) => 5,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Semantic(m) | Failure::Genericity(m) | Failure::Invariant(m) => m,
        }
    }
}

impl From<GinError> for Failure {
    fn from(e: GinError) -> Self {
        match e {
            GinError::GenericityNotReached { .. } => Failure::Genericity(e.to_string()),
            GinError::NotStronglyStable(_) => Failure::Invariant(e.to_string()),
            GinError::Groebner(_) => Failure::Semantic(e.to_string()),
        }
    }
}

impl From<SectionalError> for Failure {
    fn from(e: SectionalError) -> Self {
        match e {
            SectionalError::Gin(g) => g.into(),
            SectionalError::Invariant(_)
            | SectionalError::GcdDegreeMismatch { .. }
            | SectionalError::GcdNotShared { .. } => Failure::Invariant(e.to_string()),
            _ => Failure::Semantic(e.to_string()),
        }
    }
}

impl From<secmat::groebner::GroebnerError> for Failure {
    fn from(e: secmat::groebner::GroebnerError) -> Self {
        Failure::Semantic(e.to_string())
    }
}

/// `--json` output of `secmat`.
#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub schema_version: u32,
    pub ring: Vec<String>,
    pub generators: Vec<String>,
    pub seed: u64,
    pub reg: Option<u32>,
    /// `matrix[i - 1][d] = M(i, d)`.
    pub matrix: Vec<Vec<u64>>,
}

/// `--json` output of `rgin` and `lt`.
#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorsDocument {
    pub schema_version: u32,
    pub ring: Vec<String>,
    pub order: String,
    /// Absent for `lt`, whose result does not depend on it.
    pub seed: Option<u64>,
    pub method: Option<GinMethod>,
    pub generators: Vec<String>,
}

const SCHEMA_VERSION: u32 = secmat::sectional::REPORT_SCHEMA_VERSION;

fn load(args: &InputArgs) -> Result<IdealPresentation, Failure> {
    let src = fs::read_to_string(&args.file)
        .map_err(|e| Failure::Semantic(format!("cannot read the file: {e}")))?;
    let doc = parse_document(&src).map_err(|e| {
        Failure::Parse(format!("{}:{}: {}", args.file.display(), e.position, e.kind))
    })?;
    let ideal = doc.ideal();
    ideal.require_homogeneous()?;
    match args.truncate {
        Some(delta) => Ok(truncation_ideal(&ideal, delta)?),
        None => Ok(ideal),
    }
}

/// Compares every entry with the linear-algebra oracle; entries too large
/// for the oracle are skipped.
fn oracle_check(ideal: &IdealPresentation, m: &SectionalMatrix, seed: u64) -> Result<String, Failure> {
    let (mut checked, mut skipped) = (0usize, 0usize);
    for i in 1..=m.arity() {
        for d in 0..=m.max_degree() {
            match sectional_matrix_direct_oracle(ideal, i, d, seed) {
                Ok(v) => {
                    let stored = m.get(i, d)?;
                    if v != stored {
                        return Err(Failure::Invariant(format!(
                            "oracle gives M({i},{d}) = {v}, the rgin route gives {stored}"
                        )));
                    }
                    checked += 1;
                }
                Err(SectionalError::OracleTooLarge { .. }) => skipped += 1,
                Err(e) => return Err(e.into()),
            }
        }
    }
    Ok(format!("oracle: {checked} entries agree, {skipped} too large to check"))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn secmat_cmd(args: &MatrixArgs) -> Result<String, Failure> {
    let ideal = load(&args.input)?;
    let seed = args.input.seed;
    let options = SectionalOptions {
        max_degree: args.max_degree,
        ..SectionalOptions::with_seed(seed)
    };
    let m = sectional_matrix_with(&ideal, options)?;
    let violations = check_bounds(&m);
    if let Some(v) = violations.first() {
        return Err(Failure::Invariant(format!(
            "the matrix violates the {:?} bound at ({}, {})",
            v.inequality, v.i, v.d
        )));
    }
    if args.oracle {
        eprintln!("{}", oracle_check(&ideal, &m, seed)?);
    }
    if args.input.json {
        Ok(to_json(&MatrixDocument {
            schema_version: SCHEMA_VERSION,
            ring: ideal.ring().names().to_vec(),
            generators: ideal.generators().iter().map(|g| g.to_string()).collect(),
            seed,
            reg: m.reg(),
            matrix: m.rows().to_vec(),
        }))
    } else {
        Ok(m.to_string())
    }
}

fn analyze_cmd(args: &MatrixArgs) -> Result<String, Failure> {
    let ideal = load(&args.input)?;
    let seed = args.input.seed;
    let report = analyze_with(&ideal, seed, args.max_degree)?;
    if args.oracle {
        let m = SectionalMatrix::from_rows(report.matrix.clone());
        eprintln!("{}", oracle_check(&ideal, &m, seed)?);
    }
    if args.input.json {
        Ok(to_json(&report))
    } else {
        Ok(render::report(&report))
    }
}

fn rgin_cmd(args: &InputArgs) -> Result<String, Failure> {
    let ideal = load(args)?;
    let gin = rgin(&ideal, args.seed)?;
    if args.json {
        return Ok(to_json(&GeneratorsDocument {
            schema_version: SCHEMA_VERSION,
            ring: ideal.ring().names().to_vec(),
            order: TermOrder::DegRevLex.to_string(),
            seed: Some(args.seed),
            method: Some(gin.method),
            generators: gin.rgin.display_generators(),
        }));
    }
    Ok(format!("rgin = {}\nseed = {}\n", gin.rgin, args.seed))
}

fn lt_cmd(args: &LtArgs) -> Result<String, Failure> {
    let ideal = load(&args.input)?;
    let basis = buchberger(&ideal, args.order, None)?;
    let lt = leading_term_ideal(&basis)?;
    if args.input.json {
        return Ok(to_json(&GeneratorsDocument {
            schema_version: SCHEMA_VERSION,
            ring: ideal.ring().names().to_vec(),
            order: args.order.to_string(),
            seed: None,
            method: None,
            generators: lt.display_generators(),
        }));
    }
    Ok(format!("lt({}) = {}\n", args.order, lt))
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Secmat(a) => secmat_cmd(a),
        Command::Analyze(a) => analyze_cmd(a),
        Command::Rgin(a) => rgin_cmd(a),
        Command::Lt(a) => lt_cmd(a),
    }
}

fn input_file(cli: &Cli) -> &Path {
    match &cli.command {
        Command::Secmat(a) | Command::Analyze(a) => &a.input.file,
        Command::Rgin(a) => &a.file,
        Command::Lt(a) => &a.input.file,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::from(3);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            match &f {
                Failure::Parse(m) => eprintln!("error: {m}"),
                _ => eprintln!("error: {}: {}", input_file(&cli).display(), f.message()),
            }
            ExitCode::from(f.code())
        }
    }
}
