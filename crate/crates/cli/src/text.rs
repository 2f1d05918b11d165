//! Human-readable rendering of a [`RunReport`].

use std::fmt::Write;

use serde_json::Value;

use crate::report::{OracleVerdict, RunReport, Status};

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn value(out: &mut String, indent: usize, key: &str, v: &Value) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            if let (Some(Value::String(rendered)), true) = (map.get("rendered"), map.contains_key("terms") || map.contains_key("rows")) {
                let _ = writeln!(out, "{pad}{key}: {rendered}");
                return;
            }
            let _ = writeln!(out, "{pad}{key}:");
            for (k, v) in map {
                value(out, indent + 1, k, v);
            }
        }
        Value::Array(items) if items.iter().any(|i| i.is_object()) => {
            let _ = writeln!(out, "{pad}{key}:");
            for (i, item) in items.iter().enumerate() {
                value(out, indent + 1, &format!("[{}]", i + 1), item);
            }
        }
        Value::Array(items) => {
            let shown: Vec<String> = items.iter().map(scalar).collect();
            let _ = writeln!(out, "{pad}{key}: [{}]", shown.join(", "));
        }
        other => {
            let _ = writeln!(out, "{pad}{key}: {}", scalar(other));
        }
    }
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().map(|a| a.iter().map(scalar).collect()).unwrap_or_default()
}

fn rendered(v: &Value) -> String {
    v.get("rendered").map(scalar).unwrap_or_else(|| scalar(v))
}

fn prop1(out: &mut String, d: &Value) {
    let _ = writeln!(out, "matrix: {}", rendered(&d["matrix"]));
    for col in d["columns"].as_array().into_iter().flatten() {
        let k = scalar(&col["column"]);
        if col["holds"].as_bool() == Some(true) {
            let reduced: Vec<String> = col["reduced"].as_array().into_iter().flatten().map(rendered).collect();
            let _ = writeln!(out, "column {k}: holds; J_{k} = ({})", reduced.join(", "));
            continue;
        }
        let _ = writeln!(out, "column {k}: fails");
        for e in col["evidence"].as_array().into_iter().flatten() {
            if e["contained"].as_bool() == Some(true) {
                continue;
            }
            let cols = strings(&e["columns"]).join(",");
            let missing: Vec<String> = e["terms"]
                .as_array()
                .into_iter()
                .flatten()
                .filter(|t| t["covered_by"].is_null())
                .map(|t| scalar(&t["term"]))
                .collect();
            let _ = writeln!(
                out,
                "  minor {cols} = {}: {} outside the radical of column {k}",
                scalar(&e["minor"]),
                missing.join(", ")
            );
        }
    }
    let _ = writeln!(out, "reducing columns: [{}]", strings(&d["reducing_columns"]).join(", "));
}

fn classify(out: &mut String, d: &Value) {
    let _ = writeln!(out, "matrix: {}", rendered(&d["matrix"]));
    if let Some(units) = d.get("unit_entries") {
        let cells: Vec<String> = units
            .as_array()
            .into_iter()
            .flatten()
            .map(|c| format!("({})", strings(c).join(",")))
            .collect();
        let _ = writeln!(out, "unit entries: {}", cells.join(" "));
        let _ = writeln!(out, "reducing columns: [{}]", strings(&d["reducing_columns"]).join(", "));
    }
    let forms = d["forms"].as_array().cloned().unwrap_or_default();
    if forms.is_empty() && d.get("unit_entries").is_none() {
        let _ = writeln!(out, "no form matched");
    }
    for m in &forms {
        let renaming: Vec<String> = m["renaming"]
            .as_object()
            .into_iter()
            .flatten()
            .map(|(k, v)| format!("{k}={}", scalar(v)))
            .collect();
        let exponents: Vec<String> = m["exponents"]
            .as_object()
            .into_iter()
            .flatten()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let applicable: Vec<String> = m["applicable"]
            .as_array()
            .into_iter()
            .flatten()
            .map(|a| format!("{} ({})", scalar(&a["proposition"]), scalar(&a["condition"])))
            .collect();
        let _ = writeln!(
            out,
            "form {}: {}; columns {}{}; {}; {}",
            scalar(&m["form"]),
            scalar(&m["transformed"]),
            strings(&m["columns"]).join(","),
            if m["rows_swapped"].as_bool() == Some(true) { ", rows swapped" } else { "" },
            renaming.join(" "),
            exponents.join(" "),
        );
        let _ = writeln!(out, "  applies: {}", applicable.join("; "));
    }
}

pub fn render(r: &RunReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "command: {}", r.command);
    if let Some(err) = &r.error {
        let _ = writeln!(out, "error: {err}");
    }
    if let Some(params) = &r.params {
        let _ = writeln!(out, "params:");
        for (k, v) in params {
            let _ = writeln!(out, "  {k} = {}", serde_json::to_string(v).expect("number"));
        }
    }
    if let Some(sys) = &r.system {
        let _ = writeln!(out, "system ({}):", sys.variables.join(","));
        let _ = writeln!(out, "  f  = {}", sys.f.rendered);
        let _ = writeln!(out, "  f1 = {}", sys.f1.rendered);
        let _ = writeln!(out, "  f2 = {}", sys.f2.rendered);
        let _ = writeln!(out, "  matrix = {}", sys.matrix.rendered);
        let _ = writeln!(out, "  case = {}", sys.case);
        let [c1, c2] = sys.minor_columns;
        let _ = writeln!(out, "  M1 = {}  (columns {},{})", sys.m1.rendered, c1[0], c1[1]);
        let _ = writeln!(out, "  M2 = {}  (columns {},{})", sys.m2.rendered, c2[0], c2[1]);
        let triple: Vec<&str> = sys.triple.iter().map(|p| p.rendered.as_str()).collect();
        let chart = if sys.affine { ", chart x0 = 1" } else { "" };
        let _ = writeln!(out, "  triple ({}{chart}) = {{{}}}", sys.variant, triple.join(", "));
    }
    if let Some(details) = &r.details {
        match r.command.as_str() {
            "prop1" => prop1(&mut out, details),
            "classify" => classify(&mut out, details),
            _ => {
                if let Value::Object(map) = details {
                    for (k, v) in map {
                        value(&mut out, 0, k, v);
                    }
                }
            }
        }
    }
    if !r.checks.is_empty() {
        let _ = writeln!(out, "checks:");
        for c in &r.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            match &c.detail {
                Some(d) if !c.passed || d.len() < 60 => {
                    let _ = writeln!(out, "  [{mark}] {} ({d})", c.name);
                }
                _ => {
                    let _ = writeln!(out, "  [{mark}] {}", c.name);
                }
            }
        }
    }
    if !r.oracle.is_empty() {
        let _ = writeln!(out, "oracle:");
        for o in &r.oracle {
            let verdict = match o.verdict {
                OracleVerdict::Equal => "equal",
                OracleVerdict::EqualUpToUnmatchedPoints => "equal-up-to-unmatched-points",
                OracleVerdict::NotEqual => "not-equal",
            };
            let ext = o
                .extension_degree
                .map(|k| format!(", K = {k}{}", if o.escalated { " (escalated)" } else { "" }))
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "  {} over {}: {verdict} ({} vs {} points{ext})",
                o.comparison, o.field, o.left_count, o.right_count
            );
            if !o.left_minus_right.is_empty() {
                let _ = writeln!(out, "    only left:  {}", o.left_minus_right.join(" "));
            }
            if !o.right_minus_left.is_empty() {
                let _ = writeln!(out, "    only right: {}", o.right_minus_left.join(" "));
            }
        }
    }
    let status = match r.status {
        Status::Pass => "pass",
        Status::CheckFailed => "check-failed",
        Status::InputError => "input-error",
        Status::Inconclusive => "inconclusive",
    };
    let _ = writeln!(out, "status: {status}");
    out
}
