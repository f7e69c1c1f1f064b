//! Text form of an analysis report: the matrix block, then `key = value`
//! lines.

use std::fmt::Write;

use secmat::sectional::{AnalysisReport, SectionalMatrix};

fn series_numerator(coeffs: &[i64]) -> String {
    let mut out = String::new();
    for (e, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        let a = c.unsigned_abs();
        match e {
            0 => write!(out, "{a}").unwrap(),
            _ if a != 1 => write!(out, "{a}*").unwrap(),
            _ => {}
        }
        match e {
            0 => {}
            1 => out.push('t'),
            _ => write!(out, "t^{e}").unwrap(),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn report(r: &AnalysisReport) -> String {
    let mut out = SectionalMatrix::from_rows(r.matrix.clone()).to_string();
    let mut kv = |key: String, value: String| {
        writeln!(out, "{key} = {value}").unwrap();
    };
    kv("seed".into(), r.seed.to_string());
    let rgin = if r.rgin.is_empty() { "0".to_string() } else { join(&r.rgin) };
    kv("rgin".into(), format!("({rgin})"));
    kv(
        "gin method".into(),
        match r.gin_method {
            secmat::gin::GinMethod::RandomCoordinates => format!("random coordinates, {} trials", r.gin_trials),
            secmat::gin::GinMethod::BorelFixed => "strongly stable input".into(),
        },
    );
    if !r.generator_degrees.is_empty() {
        kv("generator degrees".into(), join(&r.generator_degrees));
    }
    kv("reg".into(), r.reg.to_string());
    kv("dim".into(), r.dim.to_string());
    kv("deg".into(), r.deg.to_string());
    if let Some(first) = r.dim_deg.first() {
        kv("dim/deg readable from degree".into(), first.delta.to_string());
    }
    kv("hilbert polynomial".into(), r.hilbert_polynomial.to_string());
    let (num, k) = &r.hilbert_series;
    let den = match k {
        0 => String::new(),
        1 => " / (1-t)".into(),
        k => format!(" / (1-t)^{k}"),
    };
    kv("hilbert series".into(), format!("({}){den}", series_numerator(num)));
    for e in &r.reduction_numbers {
        let v = e.value.map_or("inf".to_string(), |v| v.to_string());
        kv(format!("r_{}", e.s), v);
    }
    kv(
        "reduction number".into(),
        r.reduction_number.map_or("inf".to_string(), |v| v.to_string()),
    );
    for (k, from) in r.growth.persistent_from.iter().enumerate() {
        if let Some(d) = from {
            kv(format!("maximal growth of row {} from degree", k + 1), d.to_string());
        }
    }
    for p in &r.growth.predicted {
        let vals = join(p.values.iter().map(|(d, v)| format!("M({},{d})={v}", p.i)));
        kv(format!("predicted row {}", p.i), vals);
    }
    if !r.potential_gcd_degrees.is_empty() {
        kv(
            "potential gcd degrees".into(),
            join(r.potential_gcd_degrees.iter().map(|p| format!("{}:{}", p.delta, p.degree))),
        );
    }
    for g in &r.gcd {
        kv(format!("gcd({})", g.delta), g.gcd.clone());
    }
    kv("saturated".into(), r.saturated.to_string());
    for t in &r.truncation_dim_deg {
        kv(format!("truncation({}).dim", t.delta), t.dim.to_string());
        kv(format!("truncation({}).deg", t.delta), t.deg.to_string());
    }
    for t in &r.truncation_regularity {
        kv(format!("truncation({}).reg", t.delta), t.regularity.to_string());
    }
    for t in &r.truncation_saturation {
        kv(format!("truncation({}).saturated", t.delta), t.saturated.to_string());
    }
    for n in &r.notes {
        kv(format!("note[{}]", n.kind), n.message.clone());
    }
    out
}
