//! Report construction and rendering.
//!
//! `analyze` and `amalgamate` build a schema-1 JSON value first; the text
//! renderer works from that value, never from the analysis structs, so both
//! output formats carry byte-identical exact scalars by construction.

use serde_json::{json, Value};

use intersectq::exactmath::{fmt_rat, fmt_scalar, QuadElem, Rat};
use intersectq::honeycomb::{rat_f64, AmalgamatedReport, HoneycombAnalysis};
use intersectq::mcverify::McReport;

pub fn scalar_str(x: &QuadElem) -> String {
    fmt_scalar(x)
}

pub fn point_str(p: &[QuadElem]) -> String {
    let coords: Vec<String> = p.iter().map(fmt_scalar).collect();
    format!("({})", coords.join(", "))
}

fn exact(x: &QuadElem) -> Value {
    json!({ "exact": fmt_scalar(x), "float": x.to_f64() })
}

fn exact_rat(r: &Rat) -> Value {
    json!({ "exact": fmt_rat(r), "float": rat_f64(r) })
}

pub fn analysis_value(input: &str, a: &HoneycombAnalysis, mc: Option<&McReport>) -> Value {
    let classes: Vec<Value> = a
        .classes
        .iter()
        .enumerate()
        .map(|(i, c)| {
            json!({
                "class": i + 1,
                "count": c.count,
                "vertices": c.fingerprint.vertices,
                "edges": c.fingerprint.edges,
                "facets": c.fingerprint.facets,
                "volume": exact(&c.volume),
                "p": exact_rat(&c.p),
                "second_moment": exact(&c.second_moment),
            })
        })
        .collect();
    let mut closure = QuadElem::zero();
    for c in &a.classes {
        closure = &closure + &(&c.volume * &QuadElem::from_int(c.count as i64));
    }
    let mut v = json!({
        "schema": 1,
        "kind": "analysis",
        "input": input,
        "dim": a.n,
        "field_d": a.field_d,
        "cells": a.cells.len(),
        "tile_volume": exact(&a.tile_volume),
        "volume_closure": exact(&closure),
        "classes": classes,
        "incidence": a.incidence,
        "merit": {
            "g": { "exact": a.merit.g.to_string(), "float": a.merit.g_float },
            "rate_reduction_bits": a.merit.rate_reduction,
            "entropy_bits": a.merit.entropy,
            "mean_second_moment": exact(&a.merit.mean_second_moment),
        },
    });
    if let Some(mc) = mc {
        v["mc"] = mc_value(mc);
    }
    v
}

fn mc_value(mc: &McReport) -> Value {
    let probs: Vec<Value> = mc
        .probabilities
        .classes
        .iter()
        .map(|c| {
            json!({
                "class": c.class + 1,
                "hits": c.hits,
                "estimate": c.estimate,
                "std_error": c.std_error,
                "exact": fmt_rat(&c.exact),
                "exact_float": c.exact_float,
                "z": c.z,
            })
        })
        .collect();
    json!({
        "rng": mc.probabilities.rng,
        "seed": mc.probabilities.seed,
        "samples": mc.probabilities.samples,
        "probabilities": probs,
        "max_abs_z": mc.probabilities.max_abs_z,
        "mse": {
            "estimate": fmt_scalar(&mc.mse.estimate),
            "estimate_float": mc.mse.estimate_float,
            "std_error": mc.mse.std_error,
            "exact": fmt_scalar(&mc.mse.exact),
            "exact_float": mc.mse.exact_float,
            "z": mc.mse.z,
        },
    })
}

pub fn amalgamation_value(
    input: &str,
    before: &HoneycombAnalysis,
    rep: &AmalgamatedReport,
) -> Value {
    let classes: Vec<Value> = rep
        .classes
        .iter()
        .map(|c| {
            json!({
                "member_classes": c.member_classes.iter().map(|&i| i + 1).collect::<Vec<_>>(),
                "count": c.count,
                "volume": exact(&c.volume),
                "p": exact_rat(&c.p),
                "second_moment": exact(&c.second_moment),
            })
        })
        .collect();
    json!({
        "schema": 1,
        "kind": "amalgamation",
        "input": input,
        "merged": [rep.merged.0 + 1, rep.merged.1 + 1],
        "kept": rep.kept.iter().map(|&i| i + 1).collect::<Vec<_>>(),
        "classes": classes,
        "merit_before": { "exact": before.merit.g.to_string(), "float": before.merit.g_float },
        "merit_after": { "exact": rep.merit.g.to_string(), "float": rep.merit.g_float },
    })
}

fn get<'v>(v: &'v Value, key: &str) -> Result<&'v Value, String> {
    v.get(key).ok_or_else(|| format!("report is missing '{key}'"))
}

fn float_of(v: &Value) -> f64 {
    v.as_f64().unwrap_or(f64::NAN)
}

fn exact_cell(v: &Value) -> Result<(String, f64), String> {
    let e = get(v, "exact")?.as_str().ok_or("exact scalar must be a string")?.to_string();
    Ok((e, float_of(get(v, "float")?)))
}

/// Pad to a fixed width (left-aligned).
fn pad(s: &str, w: usize) -> String {
    format!("{s:<w$}")
}

fn render_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let line = |cells: Vec<String>, out: &mut String| {
        let padded: Vec<String> =
            cells.iter().zip(&widths).map(|(c, &w)| pad(c, w)).collect();
        out.push_str(padded.join("  ").trim_end());
        out.push('\n');
    };
    line(header.iter().map(|s| s.to_string()).collect(), &mut out);
    for row in rows {
        line(row.clone(), &mut out);
    }
    out
}

pub fn render_text(v: &Value) -> Result<String, String> {
    match get(v, "kind")?.as_str() {
        Some("analysis") => render_analysis_text(v),
        Some("amalgamation") => render_amalgamation_text(v),
        _ => Err("unknown report kind".into()),
    }
}

fn render_analysis_text(v: &Value) -> Result<String, String> {
    let mut out = String::new();
    let input = get(v, "input")?.as_str().unwrap_or("?");
    let dim = get(v, "dim")?;
    let cells = get(v, "cells")?;
    out.push_str(&format!("honeycomb {input}: dimension {dim}, {cells} cells per tile\n"));
    let (tv, tvf) = exact_cell(get(v, "tile_volume")?)?;
    out.push_str(&format!("tile volume = {tv} ({tvf:.6})\n"));
    let (cl, _) = exact_cell(get(v, "volume_closure")?)?;
    out.push_str(&format!("volume closure: sum of count * V = {cl}\n\n"));

    let classes = get(v, "classes")?.as_array().ok_or("classes must be an array")?;
    let mut rows = Vec::new();
    for c in classes {
        let opt = |key: &str| match c.get(key) {
            Some(Value::Number(n)) => n.to_string(),
            _ => "-".to_string(),
        };
        let (vol, volf) = exact_cell(get(c, "volume")?)?;
        let (p, pf) = exact_cell(get(c, "p")?)?;
        let (u, uf) = exact_cell(get(c, "second_moment")?)?;
        rows.push(vec![
            format!("P{}", get(c, "class")?),
            get(c, "count")?.to_string(),
            opt("vertices"),
            opt("edges"),
            opt("facets"),
            vol,
            format!("({volf:.6})"),
            p,
            format!("({pf:.6})"),
            u,
            format!("({uf:.6})"),
        ]);
    }
    out.push_str(&render_table(
        &["class", "N", "v", "e", "f", "V", "", "p", "", "U", ""],
        &rows,
    ));

    out.push('\n');
    let incidence = get(v, "incidence")?.as_array().ok_or("incidence must be an array")?;
    out.push_str("incidence (facets of a class-i cell against class j):\n");
    for (i, row) in incidence.iter().enumerate() {
        let cells: Vec<String> =
            row.as_array().ok_or("incidence rows")?.iter().map(|x| x.to_string()).collect();
        out.push_str(&format!("  P{}: [{}]\n", i + 1, cells.join(", ")));
    }

    out.push('\n');
    let merit = get(v, "merit")?;
    let (g, gf) = exact_cell(get(merit, "g")?)?;
    out.push_str(&format!("G = {g} ≈ {gf:.6}\n"));
    let (msm, msmf) = exact_cell(get(merit, "mean_second_moment")?)?;
    out.push_str(&format!("sum of count * U = {msm} ({msmf:.6})\n"));
    out.push_str(&format!(
        "rate reduction = {:.6} bits, class entropy = {:.6} bits\n",
        float_of(get(merit, "rate_reduction_bits")?),
        float_of(get(merit, "entropy_bits")?)
    ));

    if let Some(mc) = v.get("mc") {
        out.push('\n');
        out.push_str(&render_mc_text(mc)?);
    }
    Ok(out)
}

fn render_mc_text(mc: &Value) -> Result<String, String> {
    let mut out = String::new();
    out.push_str(&format!(
        "monte carlo: {} samples, seed {}, rng {}\n",
        get(mc, "samples")?,
        get(mc, "seed")?,
        get(mc, "rng")?.as_str().unwrap_or("?")
    ));
    let probs = get(mc, "probabilities")?.as_array().ok_or("mc probabilities")?;
    let mut rows = Vec::new();
    for c in probs {
        rows.push(vec![
            format!("P{}", get(c, "class")?),
            get(c, "hits")?.to_string(),
            format!("{:.6}", float_of(get(c, "estimate")?)),
            format!("{:.6}", float_of(get(c, "std_error")?)),
            get(c, "exact")?.as_str().unwrap_or("?").to_string(),
            format!("{:+.2}", float_of(get(c, "z")?)),
        ]);
    }
    out.push_str(&render_table(&["class", "hits", "p_hat", "se", "p", "z"], &rows));
    let mse = get(mc, "mse")?;
    out.push_str(&format!(
        "mse/dim: estimate {:.7} (se {:.2e}), exact {} ≈ {:.7}, z = {:+.2}\n",
        float_of(get(mse, "estimate_float")?),
        float_of(get(mse, "std_error")?),
        get(mse, "exact")?.as_str().unwrap_or("?"),
        float_of(get(mse, "exact_float")?),
        float_of(get(mse, "z")?)
    ));
    out.push_str(&format!("max |z| = {:.2}\n", float_of(get(mc, "max_abs_z")?)));
    Ok(out)
}

fn render_amalgamation_text(v: &Value) -> Result<String, String> {
    let mut out = String::new();
    let merged = get(v, "merged")?;
    out.push_str(&format!(
        "amalgamation of {}: merged classes {}\n\n",
        get(v, "input")?.as_str().unwrap_or("?"),
        merged
    ));
    let classes = get(v, "classes")?.as_array().ok_or("classes must be an array")?;
    let mut rows = Vec::new();
    for (i, c) in classes.iter().enumerate() {
        let members = get(c, "member_classes")?.to_string();
        let (vol, volf) = exact_cell(get(c, "volume")?)?;
        let (p, pf) = exact_cell(get(c, "p")?)?;
        let (u, uf) = exact_cell(get(c, "second_moment")?)?;
        rows.push(vec![
            format!("Q{}", i + 1),
            members,
            get(c, "count")?.to_string(),
            vol,
            format!("({volf:.6})"),
            p,
            format!("({pf:.6})"),
            u,
            format!("({uf:.6})"),
        ]);
    }
    out.push_str(&render_table(
        &["class", "from", "N", "V", "", "p", "", "U", ""],
        &rows,
    ));
    out.push('\n');
    let (gb, gbf) = exact_cell(get(v, "merit_before")?)?;
    let (ga, gaf) = exact_cell(get(v, "merit_after")?)?;
    out.push_str(&format!("G before = {gb} ≈ {gbf:.6}\n"));
    out.push_str(&format!("G after  = {ga} ≈ {gaf:.6}\n"));
    Ok(out)
}
