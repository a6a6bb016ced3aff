//! Subcommand drivers. Every command returns the text it wants printed and
//! a process exit code; `main` owns the actual I/O.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 invalid flags or
//! document, 3 generator retries exhausted, 4 degenerate geometry.

use crate::args::{Backend, GenerateArgs, InputArgs, RenderArgs, VerifyArgs};
use crate::config::{doc_to_string, from_config, parse_doc, to_config, ConfigDoc};
use crate::pipeline::run_analysis;
use crate::report::{abort_report, build_report, error_doc, human_report};
use crate::render::render_scene;
use crate::sweep::separation;
use chain_conic::{random_config, ChainConfiguration, GeneratorError, GeneratorProfile, Rat, Scalar};
use std::time::Instant;

fn json_text(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("document serializes") + "\n"
}

pub fn cmd_generate(args: &GenerateArgs) -> (String, i32) {
    if args.n < 3 {
        return (
            json_text(&error_doc(
                "InvalidConfiguration",
                &format!("chain length must exceed 2, got {}", args.n),
            )),
            2,
        );
    }
    let mut profile = GeneratorProfile::new(separation(args.profile), args.seed);
    profile.n_range = 3..=args.n.max(12);
    match random_config(args.n, &profile) {
        Ok(config) => (doc_to_string(&from_config(&config), args.pretty), 0),
        Err(e @ GeneratorError::ExhaustedRetries { .. }) => {
            (json_text(&error_doc("ExhaustedRetries", &e.to_string())), 3)
        }
        Err(e) => (json_text(&error_doc("UnknownScenario", &e.to_string())), 2),
    }
}

pub fn load_input(input: &InputArgs) -> Result<(ConfigDoc, ChainConfiguration<Rat>), String> {
    if let Some(name) = &input.scenario {
        let config = chain_conic::scenario(name)
            .map_err(|e| json_text(&error_doc("UnknownScenario", &e.to_string())))?;
        return Ok((from_config(&config), config));
    }
    let path = input
        .config
        .as_deref()
        .ok_or_else(|| json_text(&error_doc("InvalidConfiguration", "provide CONFIG or --scenario")))?;
    let text = if path == "-" {
        std::io::read_to_string(std::io::stdin())
            .map_err(|e| json_text(&error_doc("InvalidConfiguration", &format!("stdin: {e}"))))?
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| json_text(&error_doc("InvalidConfiguration", &format!("{path}: {e}"))))?
    };
    let doc = parse_doc(&text).map_err(|e| json_text(&error_doc("InvalidConfiguration", &e)))?;
    let config = to_config(&doc).map_err(|e| json_text(&error_doc("InvalidConfiguration", &e)))?;
    Ok((doc, config))
}

fn verify_backend<S: Scalar>(
    doc: &ConfigDoc,
    config: &ChainConfiguration<S>,
    backend: &str,
    tol: f64,
    pretty: bool,
) -> (String, i32) {
    let started = Instant::now();
    match run_analysis(config, tol) {
        Ok(analysis) => {
            let timing_ms = started.elapsed().as_millis();
            let text = if pretty {
                human_report(&analysis, backend, tol, timing_ms)
            } else {
                json_text(&build_report(doc, &analysis, backend, tol, timing_ms))
            };
            (text, analysis.outcome().exit_code())
        }
        Err(abort) => (
            json_text(&abort_report(Some(doc), &abort, backend, tol)),
            abort.outcome.exit_code(),
        ),
    }
}

pub fn cmd_verify(args: &VerifyArgs, tol: f64) -> (String, i32) {
    let (doc, config) = match load_input(&args.input) {
        Ok(loaded) => loaded,
        Err(text) => return (text, 2),
    };
    match args.backend {
        Backend::Exact => verify_backend::<Rat>(&doc, &config, "exact", tol, args.pretty),
        Backend::Float => {
            verify_backend::<f64>(&doc, &config.to_float(), "float", tol, args.pretty)
        }
    }
}

pub fn cmd_render(args: &RenderArgs) -> (String, i32) {
    let (doc, config) = match load_input(&args.input) {
        Ok(loaded) => loaded,
        Err(text) => return (text, 2),
    };
    match run_analysis::<Rat>(&config, 0.0) {
        Err(abort) => (
            json_text(&abort_report(Some(&doc), &abort, "exact", 0.0)),
            abort.outcome.exit_code(),
        ),
        Ok(analysis) => {
            if analysis.failure.is_some() && !args.force {
                return (json_text(&build_report(&doc, &analysis, "exact", 0.0, 0)), 1);
            }
            let conic = analysis.conic.as_ref().map(|(conic, _)| conic);
            (
                render_scene(&analysis.chain, analysis.polygon.as_ref(), conic),
                0,
            )
        }
    }
}
