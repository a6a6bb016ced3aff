//! Report assembly. Exact scalars serialize as rational strings, float
//! scalars as JSON numbers, so a report never launders exactness.

use crate::config::ConfigDoc;
use crate::pipeline::{Abort, Analysis};
use chain_conic::{ConicKind, FocalConic, Line, Point, Scalar, TangencyCertificate};
use serde_json::{json, Map, Value};

pub fn scalar_value<S: Scalar>(v: &S) -> Value {
    if S::EXACT {
        Value::String(v.to_string())
    } else {
        json!(v.to_f64())
    }
}

fn point_value<S: Scalar>(p: &Point<S>) -> Value {
    json!({"x": scalar_value(&p.x), "y": scalar_value(&p.y)})
}

fn line_value<S: Scalar>(l: &Line<S>) -> Value {
    json!({"a": scalar_value(&l.a), "b": scalar_value(&l.b), "c": scalar_value(&l.c)})
}

pub fn kind_str(kind: ConicKind) -> &'static str {
    match kind {
        ConicKind::Ellipse => "ellipse",
        ConicKind::Hyperbola => "hyperbola",
        ConicKind::Parabola => "parabola",
        ConicKind::Circle => "circle",
    }
}

/// Largest relative deviation of the per-side witnesses from the fitted
/// conic: distance ratios for central kinds, directrix residuals for a
/// parabola. Exactly 0.0 under the exact backend.
pub fn max_relative_spread<S: Scalar>(
    conic: &FocalConic<S>,
    certificates: &[TangencyCertificate<S>],
) -> f64 {
    let mut worst: f64 = 0.0;
    match conic {
        FocalConic::Central { r_sq, .. } => {
            let r_sq = r_sq.to_f64();
            for c in certificates {
                if let Some(d) = &c.dist_sq_to_l {
                    worst = worst.max((d.to_f64() / r_sq - 1.0).abs());
                }
            }
        }
        FocalConic::Parabola { focus, directrix } => {
            let base = directrix.eval(focus).to_f64().abs();
            for c in certificates {
                worst = worst.max(directrix.eval(&c.reflected_focus).to_f64().abs() / base);
            }
        }
    }
    worst
}

fn conic_value<S: Scalar>(
    conic: &FocalConic<S>,
    certificates: &[TangencyCertificate<S>],
) -> Value {
    let mut section = Map::new();
    section.insert("kind".into(), json!(kind_str(conic.kind())));
    match conic {
        FocalConic::Central {
            focus_k,
            focus_l,
            r_sq,
            ..
        } => {
            section.insert("focusK".into(), point_value(focus_k));
            section.insert("focusL".into(), point_value(focus_l));
            section.insert("rSq".into(), scalar_value(r_sq));
        }
        FocalConic::Parabola { focus, directrix } => {
            section.insert("focusK".into(), point_value(focus));
            section.insert("directrix".into(), line_value(directrix));
        }
    }
    let certs: Vec<Value> = certificates
        .iter()
        .map(|c| {
            json!({
                "side": line_value(&c.side),
                "reflectedFocus": point_value(&c.reflected_focus),
                "distSqToL": c.dist_sq_to_l.as_ref().map(|d| scalar_value(d)),
            })
        })
        .collect();
    section.insert("certificates".into(), Value::Array(certs));
    section.insert(
        "maxRelativeSpread".into(),
        json!(max_relative_spread(conic, certificates)),
    );
    section.insert("pass".into(), json!(true));
    Value::Object(section)
}

pub fn backend_value(kind: &str, tolerance: f64) -> Value {
    json!({"kind": kind, "tolerance": tolerance})
}

pub fn build_report<S: Scalar>(
    doc: &ConfigDoc,
    analysis: &Analysis<S>,
    backend: &str,
    tolerance: f64,
    timing_ms: u128,
) -> Value {
    let mut report = Map::new();
    report.insert(
        "config".into(),
        serde_json::to_value(doc).expect("document serializes"),
    );
    report.insert("backend".into(), backend_value(backend, tolerance));
    report.insert(
        "closure".into(),
        json!({
            "residual": scalar_value(&analysis.closure_residual),
            "exactZero": analysis.closure_residual.is_zero(),
            "pass": analysis.closure_pass,
        }),
    );

    let conic = match (&analysis.conic, &analysis.failure) {
        (Some((conic, certs)), _) => conic_value(conic, certs),
        (None, Some(f)) if f.code != "NotClosed" => json!({"pass": false}),
        _ => Value::Null,
    };
    report.insert("conic".into(), conic);

    if analysis.chain.n() == 6 {
        let brianchon = match &analysis.brianchon {
            Some((det, pass)) => json!({"determinant": scalar_value(det), "pass": pass}),
            None => Value::Null,
        };
        report.insert("brianchon".into(), brianchon);
    }

    if let Some(f) = &analysis.failure {
        report.insert(
            "error".into(),
            json!({"code": f.code, "message": f.message, "detail": f.detail}),
        );
    }
    report.insert("pass".into(), json!(analysis.failure.is_none()));
    report.insert("timingMs".into(), json!(timing_ms as u64));
    Value::Object(report)
}

/// Error-only document for aborted runs (degenerate input, bad document).
pub fn abort_report(doc: Option<&ConfigDoc>, abort: &Abort, backend: &str, tolerance: f64) -> Value {
    let mut report = Map::new();
    if let Some(doc) = doc {
        report.insert(
            "config".into(),
            serde_json::to_value(doc).expect("document serializes"),
        );
    }
    report.insert("backend".into(), backend_value(backend, tolerance));
    report.insert(
        "error".into(),
        json!({"code": abort.code, "message": abort.message}),
    );
    report.insert("pass".into(), json!(false));
    Value::Object(report)
}

/// Free-standing error document for input problems before a backend runs.
pub fn error_doc(code: &str, message: &str) -> Value {
    json!({"error": {"code": code, "message": message}, "pass": false})
}

fn pass_str(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "FAIL"
    }
}

/// Plain-text table for `--pretty`.
pub fn human_report<S: Scalar>(
    analysis: &Analysis<S>,
    backend: &str,
    tolerance: f64,
    timing_ms: u128,
) -> String {
    let mut out = String::new();
    let n = analysis.chain.n();
    out.push_str(&format!("backend    {backend} (tol {tolerance:e})\n"));
    out.push_str(&format!("n          {n}\n"));
    out.push_str(&format!(
        "closure    {}  residual = {}\n",
        pass_str(analysis.closure_pass),
        analysis.closure_residual
    ));
    match &analysis.conic {
        Some((conic, certs)) => {
            let extra = match conic {
                FocalConic::Central { r_sq, .. } => format!("rSq = {r_sq}"),
                FocalConic::Parabola { directrix, .. } => {
                    format!(
                        "directrix = {}x + {}y + {} = 0",
                        directrix.a, directrix.b, directrix.c
                    )
                }
            };
            out.push_str(&format!(
                "conic      pass  kind = {}  {extra}  spread = {:e}\n",
                kind_str(conic.kind()),
                max_relative_spread(conic, certs)
            ));
        }
        None => {
            let status = match &analysis.failure {
                Some(f) if f.code != "NotClosed" => "FAIL ",
                _ => "-    ",
            };
            out.push_str(&format!("conic      {status}\n"));
        }
    }
    if n == 6 {
        match &analysis.brianchon {
            Some((det, pass)) => out.push_str(&format!(
                "brianchon  {}  determinant = {det}\n",
                pass_str(*pass)
            )),
            None => out.push_str("brianchon  -\n"),
        }
    }
    if let Some(f) = &analysis.failure {
        out.push_str(&format!("error      {}: {}\n", f.code, f.message));
    }
    out.push_str(&format!(
        "verdict    {}  ({timing_ms} ms)\n",
        pass_str(analysis.failure.is_none())
    ));
    out
}
