//! Rendering of derive, linked-pair and verify results.

use std::fmt::Write as _;

use serde_json::{json, Value};
use srnt_core::engine::SrntCertificate;
use srnt_core::linked::LinkedPairParams;
use srnt_core::params::{DegreeBound, FeasibilityReport};
use srnt_core::Rational;

use crate::error::CliError;
use crate::sweep::SweepSummary;
use crate::table::{render_text, ExactValue, OutputFormat, TableRow, CSV_HEADER};

fn output_err(e: impl ToString) -> CliError {
    CliError::Output(e.to_string())
}

pub fn degree_bound_id(d: DegreeBound) -> &'static str {
    match d {
        DegreeBound::Pass => "pass",
        DegreeBound::FailCor2 => "fail-k-below-3c-1",
        DegreeBound::FailCor4 => "fail-4k-below-14c+25",
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".into(), |v| v.to_string())
}

fn exact(r: Rational) -> Value {
    serde_json::to_value(ExactValue(r)).expect("exact values serialize")
}

fn derive_json(r: &FeasibilityReport) -> Value {
    let p = &r.partial;
    json!({
        "k": p.k,
        "c": p.c,
        "verdict": if r.is_feasible() { "feasible" } else { "infeasible" },
        "failures": r.failures.iter().map(|c| c.id()).collect::<Vec<_>>(),
        "degree_bound": degree_bound_id(r.degree_bound),
        "s": p.s,
        "lambda1": p.q,
        "lambda2": p.lambda2,
        "ell": exact(p.ell),
        "n": exact(p.n),
        "m1": p.m1.map(exact),
        "m2": p.m2.map(exact),
        "K1": p.krein.map(|k| exact(k.0)),
        "K2": p.krein.map(|k| exact(k.1)),
    })
}

/// A derive report in the requested format.
pub fn render_derive(r: &FeasibilityReport, format: OutputFormat) -> Result<String, CliError> {
    let p = &r.partial;
    let failures: Vec<&str> = r.failures.iter().map(|c| c.id()).collect();
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(&derive_json(r))
            .map(|s| s + "\n")
            .map_err(output_err),
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "k",
                "c",
                "verdict",
                "failures",
                "degree_bound",
                "s",
                "lambda1",
                "lambda2",
                "ell",
                "n",
                "m1",
                "m2",
                "K1",
                "K2",
            ])
            .map_err(output_err)?;
            let blank = |v: String| if v == "-" { String::new() } else { v };
            w.write_record([
                p.k.to_string(),
                p.c.to_string(),
                if r.is_feasible() {
                    "feasible"
                } else {
                    "infeasible"
                }
                .into(),
                failures.join(";"),
                degree_bound_id(r.degree_bound).into(),
                blank(opt(p.s)),
                blank(opt(p.q)),
                blank(opt(p.lambda2)),
                p.ell.to_string(),
                p.n.to_string(),
                blank(opt(p.m1)),
                blank(opt(p.m2)),
                blank(opt(p.krein.map(|k| k.0))),
                blank(opt(p.krein.map(|k| k.1))),
            ])
            .map_err(output_err)?;
            String::from_utf8(w.into_inner().map_err(output_err)?).map_err(output_err)
        }
        OutputFormat::Text => {
            let mut out = String::new();
            let verdict = if r.is_feasible() {
                "feasible"
            } else {
                "infeasible"
            };
            writeln!(out, "(k, c) = ({}, {}): {verdict}", p.k, p.c).unwrap();
            if !failures.is_empty() {
                writeln!(out, "failed: {}", failures.join(", ")).unwrap();
            }
            writeln!(out, "degree bound: {}", degree_bound_id(r.degree_bound)).unwrap();
            match &r.params {
                Some(params) => out.push_str(&render_text(&[TableRow::from(params)], None)),
                None => {
                    let rows = [
                        ("s", opt(p.s)),
                        ("λ₁", opt(p.q)),
                        ("λ₂", opt(p.lambda2)),
                        ("ℓ", p.ell.to_string()),
                        ("n", p.n.to_string()),
                        ("m₁", opt(p.m1)),
                        ("m₂", opt(p.m2)),
                        ("K₁", opt(p.krein.map(|k| k.0))),
                        ("K₂", opt(p.krein.map(|k| k.1))),
                    ];
                    for (name, value) in rows {
                        writeln!(out, "{name:>3} = {value}").unwrap();
                    }
                }
            }
            Ok(out)
        }
    }
}

fn known_pair(q: i128) -> Option<(&'static str, &'static str)> {
    match q {
        1 => Some(("clebsch", "petersen")),
        2 => Some(("higman-sims", "m22")),
        _ => None,
    }
}

/// Both parameter sets of a linked pair.
pub fn render_linked(lp: &LinkedPairParams, format: OutputFormat) -> Result<String, CliError> {
    let rows = [TableRow::from(&lp.unprimed), TableRow::from(&lp.primed)];
    let existence = match known_pair(lp.q) {
        Some((x, x2)) => format!("known: {x} / {x2}"),
        None if lp.open_existence => "open existence".into(),
        None => "unknown".into(),
    };
    match format {
        OutputFormat::Json => {
            let v = json!({
                "q": lp.q,
                "r": lp.r,
                "discriminant": lp.discriminant,
                "open_existence": lp.open_existence,
                "known_as": known_pair(lp.q).map(|(a, b)| [a, b]),
                "unprimed": rows[0],
                "primed": rows[1],
            });
            serde_json::to_string_pretty(&v)
                .map(|s| s + "\n")
                .map_err(output_err)
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header = vec!["side"];
            header.extend(CSV_HEADER);
            w.write_record(&header).map_err(output_err)?;
            for (side, row) in ["unprimed", "primed"].iter().zip(&rows) {
                let mut rec = vec![side.to_string()];
                rec.extend(row.cells());
                w.write_record(&rec).map_err(output_err)?;
            }
            String::from_utf8(w.into_inner().map_err(output_err)?).map_err(output_err)
        }
        OutputFormat::Text => {
            let mut out = String::new();
            writeln!(out, "linked pair q = {}: {existence}", lp.q).unwrap();
            writeln!(out, "c = r(r + 1) with r = {}", lp.r).unwrap();
            writeln!(out, "Δ = (c - 1)²(4c + 1) = {}", lp.discriminant).unwrap();
            out.push_str(&render_text(&rows, Some(("", &["X", "X′"]))));
            Ok(out)
        }
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// The certificate line plus, when present, a per-vertex summary.
pub fn render_verify(cert: &SrntCertificate, sweep: Option<&SweepSummary>) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "SRNT: (k, c) = ({}, {}), n = {}",
        cert.k, cert.c, cert.n
    )
    .unwrap();
    writeln!(
        out,
        "connected: {}, bipartite: {}",
        yes(cert.connected),
        yes(cert.bipartite)
    )
    .unwrap();
    out.push_str(&render_text(&[TableRow::from(&cert.params)], None));
    let Some(s) = sweep else { return out };
    let all = |count: usize| {
        if count == s.vertices {
            "pass at every vertex".to_string()
        } else {
            format!("pass at {count} of {} vertices", s.vertices)
        }
    };
    writeln!(out, "vertices checked: {}", s.vertices).unwrap();
    writeln!(out, "block identities: {}", all(s.block_identities)).unwrap();
    writeln!(out, "X₂ annihilator: {}", all(s.annihilator)).unwrap();
    let diameters: Vec<String> = s
        .diameters
        .iter()
        .map(|(d, n)| format!("{d} at {n} vertices"))
        .collect();
    writeln!(out, "X₂ diameter: {}", diameters.join(", ")).unwrap();
    for spectrum in &s.spectra {
        let parts: Vec<String> = spectrum.iter().map(|(e, m)| format!("{e}^{m}")).collect();
        writeln!(out, "X₂ spectrum: {}", parts.join(" ")).unwrap();
    }
    if let Some((ran, held)) = s.antipodal {
        if ran == held && s.diameters.keys().eq([3].iter()) {
            writeln!(
                out,
                "Moore case: diameter-3 antipodal structure at every vertex"
            )
            .unwrap();
        } else {
            writeln!(out, "Moore case: antipodal at {held} of {ran} vertices").unwrap();
        }
    }
    for (&(k, c, n), count) in &s.x2_certified {
        let scope = if *count == s.vertices {
            "every vertex".to_string()
        } else {
            format!("{count} of {} vertices", s.vertices)
        };
        writeln!(out, "X₂ certifies ({k}, {c}) with n = {n} at {scope}").unwrap();
    }
    if let Some((v, why)) = &s.x2_uncertified {
        writeln!(
            out,
            "X₂ not SRNT at {} vertices (vertex {v}: {why})",
            s.x2_uncertified_count
        )
        .unwrap();
    }
    for (v, why) in &s.failures {
        writeln!(out, "violation at vertex {v}: {why}").unwrap();
    }
    writeln!(out, "result: {}", if s.passed() { "pass" } else { "FAIL" }).unwrap();
    out
}
