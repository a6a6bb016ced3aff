//! Verification driver shared by `verify`, `sweep` and `render`: runs the
//! whole pipeline on one configuration and separates "a check failed"
//! (exit 1) from "the input is degenerate" (exit 4).

use chain_conic::{
    brianchon_diagonals, center_polygon, closure_residual, concurrency_det, lines_concurrent,
    propagate, verify_closure, verify_inscribed_conic, CenterPolygon, Chain, ChainConfiguration,
    ChainError, ConicError, FocalConic, GeometryError, Scalar, TangencyCertificate,
};
use serde_json::{json, Value};

/// Exit class of a verification. `InvalidInput` is reserved for documents
/// that violate preconditions (n ≤ 2, equal parameters, zero radius, …).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    FailedCheck,
    InvalidInput,
    Degenerate,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Pass => 0,
            Outcome::FailedCheck => 1,
            Outcome::InvalidInput => 2,
            Outcome::Degenerate => 4,
        }
    }
}

/// A theorem check that came out false (the run still completed).
#[derive(Debug, Clone)]
pub struct Failure {
    pub code: &'static str,
    pub message: String,
    pub detail: Value,
}

/// A run that could not complete: degenerate geometry or bad input.
#[derive(Debug, Clone)]
pub struct Abort {
    pub outcome: Outcome,
    pub code: String,
    pub message: String,
}

pub struct Analysis<S> {
    pub chain: Chain<S>,
    pub closure_residual: S,
    pub closure_pass: bool,
    pub polygon: Option<CenterPolygon<S>>,
    pub conic: Option<(FocalConic<S>, Vec<TangencyCertificate<S>>)>,
    /// Diagonal-concurrency determinant and its verdict (n = 6 only).
    pub brianchon: Option<(S, bool)>,
    /// First failed check; later stages are skipped once set.
    pub failure: Option<Failure>,
}

impl<S> Analysis<S> {
    pub fn outcome(&self) -> Outcome {
        if self.failure.is_some() {
            Outcome::FailedCheck
        } else {
            Outcome::Pass
        }
    }
}

fn geometry_code(e: &GeometryError) -> &'static str {
    match e {
        GeometryError::CoincidentPoints => "CoincidentPoints",
        GeometryError::CollinearPoints => "CollinearPoints",
        GeometryError::DuplicatePoints => "DuplicatePoints",
        GeometryError::TangentContact => "TangentContact",
        GeometryError::NotOnCurves => "NotOnCurves",
    }
}

fn chain_abort(e: ChainError) -> Abort {
    let message = e.to_string();
    let (outcome, code) = match &e {
        ChainError::InvalidConfiguration(_) => {
            (Outcome::InvalidInput, "InvalidConfiguration".to_string())
        }
        ChainError::DegenerateStep { source, .. } => {
            (Outcome::Degenerate, geometry_code(source).to_string())
        }
        ChainError::DuplicateChainPoint { .. } => {
            (Outcome::Degenerate, "DuplicateChainPoint".to_string())
        }
        ChainError::DegenerateCenter { .. } => (Outcome::Degenerate, "DegenerateCenter".to_string()),
        ChainError::NotClosed => (Outcome::Degenerate, "NotClosed".to_string()),
    };
    Abort {
        outcome,
        code,
        message,
    }
}

fn conic_abort(e: &ConicError) -> Abort {
    let code = match e {
        ConicError::DegenerateConic => "DegenerateConic",
        ConicError::FocusOnTangent => "FocusOnTangent",
        ConicError::CoincidentPoints => "CoincidentPoints",
        ConicError::WrongArity { .. } => "WrongArity",
        ConicError::DegenerateDiagonal { .. } => "DegenerateDiagonal",
        _ => unreachable!("check failures are not aborts"),
    };
    Abort {
        outcome: Outcome::Degenerate,
        code: code.to_string(),
        message: e.to_string(),
    }
}

/// Full pipeline: propagate → closure → center polygon → inscribed conic →
/// (n = 6) Brianchon. Stops at the first failed check; degeneracies abort.
pub fn run_analysis<S: Scalar>(
    config: &ChainConfiguration<S>,
    tol: f64,
) -> Result<Analysis<S>, Abort> {
    let chain = propagate(config, tol).map_err(chain_abort)?;
    let residual = closure_residual(&chain);
    let closure_pass = verify_closure(&chain, tol);

    let mut analysis = Analysis {
        closure_residual: residual,
        closure_pass,
        polygon: None,
        conic: None,
        brianchon: None,
        failure: None,
        chain,
    };

    if !closure_pass {
        analysis.failure = Some(Failure {
            code: "NotClosed",
            message: ChainError::NotClosed.to_string(),
            detail: json!({}),
        });
        return Ok(analysis);
    }

    let polygon = match center_polygon(&analysis.chain, tol) {
        Ok(p) => p,
        Err(e) => return Err(chain_abort(e)),
    };

    let config = &analysis.chain.config;
    match verify_inscribed_conic(
        &config.carrier_k.center,
        &config.carrier_l.generalized(),
        &polygon,
        tol,
    ) {
        Ok((conic, certificates)) => analysis.conic = Some((conic, certificates)),
        Err(ConicError::NotInscribed { index, residual }) => {
            analysis.failure = Some(Failure {
                code: "NotInscribed",
                message: ConicError::NotInscribed { index, residual }.to_string(),
                detail: json!({"side": index, "relativeResidual": residual}),
            });
        }
        Err(ConicError::DirectrixNotParallel { residual }) => {
            analysis.failure = Some(Failure {
                code: "DirectrixNotParallel",
                message: ConicError::DirectrixNotParallel { residual }.to_string(),
                detail: json!({"relativeResidual": residual}),
            });
        }
        Err(e @ ConicError::ClassificationConflict { .. }) => {
            analysis.failure = Some(Failure {
                code: "ClassificationConflict",
                message: e.to_string(),
                detail: json!({}),
            });
        }
        Err(e) => return Err(conic_abort(&e)),
    }
    analysis.polygon = Some(polygon);

    if analysis.chain.n() == 6 && analysis.failure.is_none() {
        let polygon = analysis.polygon.as_ref().expect("polygon just set");
        let [d1, d2, d3] = brianchon_diagonals(polygon).map_err(|e| conic_abort(&e))?;
        let det = concurrency_det(&d1, &d2, &d3);
        let pass = lines_concurrent(&d1, &d2, &d3, tol);
        if !pass {
            analysis.failure = Some(Failure {
                code: "BrianchonNotConcurrent",
                message: "main diagonals of the center hexagon are not concurrent".to_string(),
                detail: json!({"determinant": crate::report::scalar_value(&det)}),
            });
        }
        analysis.brianchon = Some((det, pass));
    }

    Ok(analysis)
}
