//! Acceptance checks: one line per criterion, exit status 1 if any fails.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use secmat::gin::{is_saturated, random_change, rgin};
use secmat::groebner::{buchberger, leading_term_ideal, truncation_ideal, IdealPresentation};
use secmat::monomial::MonomialIdeal;
use secmat::poly::TermOrder;
use secmat::sectional::*;

type Check = Result<(), String>;

const SEED: u64 = 42;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn matrix(ideal: &IdealPresentation) -> Result<SectionalMatrix, String> {
    sectional_matrix(ideal, SEED).map_err(e)
}

fn matrix_to(ideal: &IdealPresentation, max_degree: u32) -> Result<SectionalMatrix, String> {
    let opts = SectionalOptions {
        max_degree: Some(max_degree),
        ..SectionalOptions::with_seed(SEED)
    };
    sectional_matrix_with(ideal, opts).map_err(e)
}

fn same_rows(what: &str, m: &SectionalMatrix, expected: &[&[u64]]) -> Check {
    let width = expected[0].len() as u32;
    ensure!(m.max_degree() + 1 >= width, "{what}: only {} columns", m.max_degree() + 1);
    let got = m.truncated_to(width - 1);
    ensure!(got.rows() == expected, "{what}: got\n{}", got.to_table());
    Ok(())
}

fn gens(j: &MonomialIdeal) -> Vec<String> {
    let mut g = j.display_generators();
    g.sort();
    g
}

fn same_gens(what: &str, j: &MonomialIdeal, expected: &[&str]) -> Check {
    let mut want: Vec<String> = expected.iter().map(|s| s.to_string()).collect();
    want.sort();
    ensure!(gens(j) == want, "{what}: got {}", j);
    Ok(())
}

fn criterion_golden_matrices() -> Check {
    let cases: &[(&str, &[&[u64]])] = &[
        ("ex-first", &[&[1, 1, 1, 0, 0, 0, 0, 0], &[1, 2, 3, 3, 2, 1, 0, 0], &[1, 3, 6, 9, 11, 12, 12, 12]]),
        ("ex-conca", &[&[1, 1, 1, 0, 0, 0, 0, 0], &[1, 2, 3, 3, 2, 1, 1, 0], &[1, 3, 6, 9, 11, 12, 12, 12]]),
        (
            "ex-regexampletrunc",
            &[
                &[1, 1, 1, 1, 0, 0, 0, 0, 0],
                &[1, 2, 3, 4, 4, 3, 2, 1, 1],
                &[1, 3, 6, 10, 14, 17, 19, 20, 21],
                &[1, 4, 10, 20, 34, 51, 70, 90, 111],
            ],
        ),
        (
            "ex-before-reg",
            &[&[1, 1, 0, 0, 0, 0], &[1, 2, 1, 1, 1, 1], &[1, 3, 4, 4, 5, 6], &[1, 4, 8, 11, 15, 21]],
        ),
        (
            "ex-dim-deg",
            &[
                &[1, 1, 1, 0, 0, 0, 0, 0],
                &[1, 2, 3, 1, 1, 1, 1, 1],
                &[1, 3, 6, 7, 7, 8, 9, 10],
                &[1, 4, 10, 17, 24, 32, 40, 50],
            ],
        ),
        (
            "ex-gcd",
            &[
                &[1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
                &[1, 2, 2, 1, 1, 0, 0, 0, 0, 0],
                &[1, 3, 5, 6, 6, 4, 3, 2, 1, 1],
            ],
        ),
        (
            "ex-five-variables",
            &[
                &[1, 1, 1, 1, 1, 0, 0, 0, 0],
                &[1, 2, 3, 4, 5, 1, 1, 1, 1],
                &[1, 3, 6, 10, 15, 13, 14, 14, 15],
                &[1, 4, 10, 20, 35, 47, 61, 75, 90],
                &[1, 5, 15, 35, 70, 117, 178, 253, 343],
            ],
        ),
        ("ex-same-hf-i", &[&[1, 1, 0, 0, 0], &[1, 2, 1, 0, 0], &[1, 3, 3, 0, 0]]),
        ("ex-same-hf-j", &[&[1, 1, 0, 0, 0], &[1, 2, 0, 0, 0], &[1, 3, 3, 0, 0]]),
        ("ex-same-betti-i", &[&[1, 1, 1, 1, 1, 0, 0], &[1, 2, 3, 4, 5, 1, 1], &[1, 3, 6, 10, 15, 11, 12]]),
        ("ex-same-betti-j", &[&[1, 1, 1, 1, 1, 0, 0], &[1, 2, 3, 4, 5, 1, 1], &[1, 3, 6, 10, 15, 11, 12]]),
        (
            "ex-same-matrix-i",
            &[&[1, 1, 1, 1, 1, 0, 0, 0], &[1, 2, 3, 4, 5, 1, 1, 1], &[1, 3, 6, 10, 15, 12, 12, 13]],
        ),
        (
            "ex-same-matrix-j",
            &[&[1, 1, 1, 1, 1, 0, 0, 0], &[1, 2, 3, 4, 5, 1, 1, 1], &[1, 3, 6, 10, 15, 12, 12, 13]],
        ),
        (
            "ex-same-rgin",
            &[
                &[1, 1, 1, 1, 0, 0, 0, 0, 0],
                &[1, 2, 3, 4, 2, 0, 0, 0, 0],
                &[1, 3, 6, 10, 12, 12, 7, 0, 0],
            ],
        ),
    ];
    for (name, expected) in cases {
        same_rows(name, &matrix(&common::fixture(name))?, expected)?;
    }
    let dim_deg = common::fixture("ex-dim-deg");
    let t3: &[&[u64]] = &[&[1, 1, 1, 0, 0], &[1, 2, 3, 1, 1], &[1, 3, 6, 7, 8], &[1, 4, 10, 17, 25]];
    let t4: &[&[u64]] = &[
        &[1, 1, 1, 0, 0, 0],
        &[1, 2, 3, 1, 1, 1],
        &[1, 3, 6, 7, 7, 8],
        &[1, 4, 10, 17, 24, 32],
    ];
    same_rows("ex-dim-deg <=3", &matrix(&truncation_ideal(&dim_deg, 3).map_err(e)?)?, t3)?;
    same_rows("ex-dim-deg <=4", &matrix(&truncation_ideal(&dim_deg, 4).map_err(e)?)?, t4)?;
    Ok(())
}

fn criterion_rgin() -> Check {
    let cases: &[(&str, &[&str])] = &[
        ("ex-first", &["x^3", "x^2*y^2", "x*y^4", "y^6"]),
        ("rgin-z5-xyz3", &["x^5", "x^4*y", "x^3*y^3"]),
        ("ex-before-reg", &["x^2", "x*y", "x*z^2", "x*z*w", "x*w^3"]),
        (
            "ex-same-matrix-i",
            &["x^5", "x^4*y", "x^3*y^2", "x^2*y^3", "x*y^4", "x^4*z", "x^3*y*z", "x^2*y^2*z", "x^3*z^2", "x^2*y*z^3"],
        ),
        (
            "ex-same-matrix-j",
            &["x^5", "x^4*y", "x^3*y^2", "x^2*y^3", "x*y^4", "x^4*z", "x^3*y*z", "x^2*y^2*z", "x*y^3*z", "x^3*z^3"],
        ),
    ];
    for (name, expected) in cases {
        let gin = rgin(&common::fixture(name), SEED).map_err(e)?;
        same_gens(name, &gin.rgin, expected)?;
    }
    Ok(())
}

fn criterion_invariants() -> Check {
    let first = common::fixture("ex-first");
    let report = analyze(&first, SEED).map_err(e)?;
    ensure!(
        (report.dim, report.deg, report.reg) == (1, 12, 6),
        "ex-first: dim {} deg {} reg {}",
        report.dim,
        report.deg,
        report.reg
    );
    let gin = rgin(&first, SEED).map_err(e)?.rgin;
    let (r1, r2) = (reduction_number_of(&gin, 1).map_err(e)?, reduction_number_of(&gin, 2).map_err(e)?);
    ensure!((r1, r2) == (5, 2), "ex-first: r_1 {r1} r_2 {r2}");
    let from_report: Vec<_> = report.reduction_numbers.iter().map(|r| (r.s, r.value)).collect();
    ensure!(from_report[1..3] == [(1, Some(5)), (2, Some(2))], "ex-first report: {from_report:?}");

    let lt = leading_term_ideal(&buchberger(&first, TermOrder::DegRevLex, None).map_err(e)?).map_err(e)?;
    let lt = IdealPresentation::from_monomial_ideal(&lt);
    let r1_lt = reduction_number(&lt, 1, SEED).map_err(e)?;
    ensure!(r1_lt == 6, "r_1(P/LT) = {r1_lt}");

    let before = matrix(&common::fixture("ex-before-reg"))?;
    let dd = dim_deg(&before, 2).map_err(e)?;
    ensure!((dd.dim, dd.deg) == (3, 1), "ex-before-reg at 2: {dd:?}");

    let t = truncation_dim_deg(&common::fixture("ex-dim-deg"), 3, SEED).map_err(e)?;
    ensure!((t.dim, t.deg) == (3, 1) && t.verified(), "ex-dim-deg truncation: {t:?}");
    Ok(())
}

fn criterion_large_degree_macaulay() -> Check {
    const TOP: u32 = 60;
    let ideal = common::fixture("ex-regexampletrunc");
    let m = matrix_to(&ideal, TOP)?;
    ensure!(!maximal_growth(&m, 4, 6).map_err(e)?, "4-maximal growth already at 6");
    for d in 7..TOP {
        ensure!(maximal_growth(&m, 4, d).map_err(e)?, "no 4-maximal growth at {d}");
    }
    // H by counting standard monomials of the leading term ideal
    let lt = leading_term_ideal(&buchberger(&ideal, TermOrder::DegRevLex, None).map_err(e)?).map_err(e)?;
    let h: Vec<u64> = (0..=TOP).map(|d| common::brute_force_hf(&lt, d)).collect();
    ensure!(h == m.rows()[3], "brute-force H differs from row 4");
    let macaulay = |d: u32| -> Result<bool, String> {
        let x = binomial_expansion(h[d as usize], d).map_err(e)?;
        Ok(expansion_shift(&x, 1, 1).map_err(e)? == u128::from(h[d as usize + 1]))
    };
    // growth from 49 on; 48 is the last degree without it
    ensure!(!macaulay(48)?, "Macaulay maximal growth at 48");
    for d in 49..TOP {
        ensure!(macaulay(d)?, "no Macaulay maximal growth at {d}");
    }
    Ok(())
}

fn check_gcd(name: &str, delta: u32, expected: &str) -> Check {
    let ideal = common::fixture(name);
    let g = gcd_of_truncation(&ideal, delta, SEED).map_err(e)?;
    ensure!(g.gcd.to_string() == expected, "{name}: gcd {}", g.gcd);
    ensure!(g.gcd.degree() == Some(1) && g.potential_degree == 1, "{name}: degree {:?}", g.gcd.degree());
    let m = matrix(&ideal)?;
    ensure!(m.get(2, delta).map_err(e)? == 1, "{name}: M(2,{delta}) != 1");
    for f in truncation_ideal(&ideal, delta + 1).map_err(e)?.generators() {
        ensure!(f.exact_div(&g.gcd).is_some(), "{name}: {} does not divide {f}", g.gcd);
    }
    Ok(())
}

fn criterion_gcd() -> Check {
    check_gcd("ex-gcd", 3, "x + y")?;
    check_gcd("ex-five-variables", 5, "x")
}

fn criterion_saturation() -> Check {
    let ideal = common::fixture("ex-robbiano");
    ensure!(is_saturated(&ideal, SEED).map_err(e)?, "ex-robbiano not saturated");
    let t = truncation_ideal(&ideal, 3).map_err(e)?;
    ensure!(!is_saturated(&t, SEED).map_err(e)?, "ex-robbiano <=3 saturated");
    Ok(())
}

/// Stops after the first failing case of one property.
fn properties(what: &str, ideal: &IdealPresentation) -> Check {
    let gin = rgin(ideal, SEED).map_err(e)?;
    let reg = gin.regularity();
    let m = matrix_to(ideal, reg + 1)?;
    let n = m.arity();

    // (a)
    let violations = check_bounds(&m);
    ensure!(violations.is_empty(), "{what} (a): {violations:?}");

    // (b)
    for order in [TermOrder::DegRevLex, TermOrder::Lex] {
        let lt = leading_term_ideal(&buchberger(ideal, order, None).map_err(e)?).map_err(e)?;
        let mlt = matrix_to(&IdealPresentation::from_monomial_ideal(&lt), reg + 1)?;
        for i in 1..=n {
            for d in 0..=reg + 1 {
                let (a, b) = (m.get(i, d).map_err(e)?, mlt.get(i, d).map_err(e)?);
                ensure!(a <= b, "{what} (b) {order}: M({i},{d}) = {a} > {b}");
                ensure!(i < n || a == b, "{what} (b) {order}: row {n} differs in degree {d}");
            }
        }
    }

    // (c)
    for i in 1..=n {
        for d in 0..=reg + 1 {
            match sectional_matrix_direct_oracle(ideal, i, d, SEED + 1) {
                Ok(v) => ensure!(v == m.get(i, d).map_err(e)?, "{what} (c): oracle M({i},{d}) = {v}"),
                Err(SectionalError::OracleTooLarge { .. }) => {}
                Err(err) => return Err(format!("{what} (c): {err}")),
            }
        }
    }

    // (d)
    let wide = matrix_to(ideal, reg + 4)?;
    let gen = wide.generation_degree().ok_or(format!("{what} (d): generation degree unknown"))?;
    for i in 1..=n {
        for delta in 0..reg + 4 {
            if !maximal_growth(&wide, i, delta).map_err(e)? || gen > delta + 1 {
                continue;
            }
            for d in delta + 1..=reg + 4 {
                let v = persistence_extend(&wide, delta, i, d - delta).map_err(e)?;
                let stored = u128::from(wide.get(i, d).map_err(e)?);
                ensure!(v == stored, "{what} (d): M({i},{d}) from {delta} = {v}, stored {stored}");
            }
        }
    }

    // (e)
    for trial in 0..3 {
        let g = random_change(0xacce_97ed, 1000 + trial, n);
        let moved = rgin(&ideal.apply_linear_change(&g).map_err(e)?, SEED).map_err(e)?;
        ensure!(moved.rgin == gin.rgin, "{what} (e): trial {trial} gives {}", moved.rgin);
    }

    // (f)
    let lt = leading_term_ideal(&buchberger(ideal, TermOrder::DegRevLex, None).map_err(e)?).map_err(e)?;
    for j in [&gin.rgin, &lt] {
        let num = j.hilbert_numerator();
        for d in 0..=12 {
            let brute = common::brute_force_hf(j, d);
            ensure!(num.series_coefficient(d) == i128::from(brute), "{what} (f): degree {d} of {j}");
        }
    }
    Ok(())
}

fn criterion_properties() -> Check {
    for name in common::PAPER_FIXTURES {
        properties(name, &common::fixture(name))?;
    }
    for (seed, ideal) in common::random_corpus(50) {
        properties(&format!("random ideal {seed}"), &ideal)?;
    }
    // (g)
    common::check_binomial_uniqueness(2000, 8).map_err(|m| format!("(g) {m}"))
}

fn criterion_discrepancy_note() -> Check {
    let report = analyze(&common::fixture("ex-five-variables"), SEED).map_err(e)?;
    let notes: Vec<_> = report.notes.iter().filter(|n| n.kind == "saturated-truncation-dimension").collect();
    ensure!(notes.len() == 1, "{} notes", notes.len());
    let note = notes[0];
    ensure!(
        note.computed == 4 && note.computed == note.stated + 1 && note.observed == Some(4),
        "{note:?}"
    );
    Ok(())
}

fn criterion_truncation_not_saturated() -> Option<Check> {
    if !common::fixtures_dir().join("ex-truncatnosat.ideal").exists() {
        return None;
    }
    Some((|| {
        let ideal = common::fixture("ex-truncatnosat");
        let expected: &[&[u64]] = &[
            &[1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[1, 2, 3, 4, 5, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0],
            &[1, 3, 6, 10, 15, 17, 13, 13, 11, 9, 7, 5, 3, 1, 0],
            &[1, 4, 10, 20, 35, 52, 65, 78, 89, 98, 105, 110, 113, 114, 114],
        ];
        same_rows("ex-truncatnosat", &matrix_to(&ideal, 14)?, expected)?;
        let m = matrix(&ideal)?;
        ensure!(potential_gcd_degree(&m, 5).map_err(e)? == 2, "potential gcd degree");
        ensure!(maximal_growth(&m, 2, 5).map_err(e)?, "no 2-maximal growth at 5");
        ensure!(!maximal_growth(&m, 3, 5).map_err(e)?, "3-maximal growth at 5");
        let g = gcd_of_truncation(&ideal, 5, SEED).map_err(e)?;
        ensure!(g.gcd.degree() == Some(2), "gcd {}", g.gcd);
        let t = truncation_saturation(&ideal, 5, SEED).map_err(e)?;
        ensure!(!t.saturated && !t.hypothesis, "{t:?}");
        Ok(())
    })())
}

fn run(check: impl FnOnce() -> Check) -> (Check, Duration) {
    let start = Instant::now();
    let result = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    (result, start.elapsed())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("1 golden matrices", criterion_golden_matrices),
        ("2 rgin reproduction", criterion_rgin),
        ("3 invariants", criterion_invariants),
        ("4 large-degree Macaulay check", criterion_large_degree_macaulay),
        ("5 gcd of truncations", criterion_gcd),
        ("6 saturation", criterion_saturation),
        ("7 property suites", criterion_properties),
        ("8 dimension discrepancy note", criterion_discrepancy_note),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let (result, time) = run(check);
        match result {
            Ok(()) => println!("PASS {name} ({:.2}s)", time.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("FAIL {name} ({:.2}s): {msg}", time.as_secs_f64());
            }
        }
    }
    match criterion_truncation_not_saturated() {
        None => println!("SKIP non-saturated truncation of a point set (no fixtures/ex-truncatnosat.ideal)"),
        Some(Ok(())) => println!("PASS non-saturated truncation of a point set"),
        Some(Err(msg)) => {
            failed += 1;
            println!("FAIL non-saturated truncation of a point set: {msg}");
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
