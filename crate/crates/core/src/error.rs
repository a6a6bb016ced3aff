//! Error taxonomy. Indices in error payloads are 1-based cyclic, matching
//! the usual labeling P_1…P_n of the construction.

use crate::conic::ConicKind;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("coincident points")]
    CoincidentPoints,
    #[error("collinear points")]
    CollinearPoints,
    #[error("duplicate points")]
    DuplicatePoints,
    #[error("curves touch at the known point")]
    TangentContact,
    #[error("point does not lie on both curves")]
    NotOnCurves,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
    #[error("degenerate step {index}: {source}")]
    DegenerateStep {
        index: usize,
        source: GeometryError,
    },
    #[error("chain point Q{index} coincides with a neighboring P point")]
    DuplicateChainPoint { index: usize },
    #[error("chain does not close; center polygon undefined")]
    NotClosed,
    /// A circumcenter would be at infinity. Collinear quadruples are caught
    /// during propagation (`DegenerateStep`), so a chain built through the
    /// public API never reaches this; kept for completeness.
    #[error("degenerate center at index {index}")]
    DegenerateCenter { index: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConicError {
    #[error("degenerate conic: reflected-focus distance equals the focal distance")]
    DegenerateConic,
    #[error("focus lies on the tangent line")]
    FocusOnTangent,
    #[error("side {index} breaks the fixed-conic property (relative residual {residual:e})")]
    NotInscribed { index: usize, residual: f64 },
    #[error("fitted directrix is not parallel to the carrier line (residual {residual:e})")]
    DirectrixNotParallel { residual: f64 },
    #[error("classified {kind:?} but K lies {position} c(L)")]
    ClassificationConflict {
        kind: ConicKind,
        position: &'static str,
    },
    #[error("Brianchon check needs a hexagon, got {n} vertices")]
    WrongArity { n: usize },
    #[error("opposite vertices {i} and {j} coincide")]
    DegenerateDiagonal { i: usize, j: usize },
    #[error("coincident points")]
    CoincidentPoints,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("exhausted {budget} retries without a valid configuration")]
    ExhaustedRetries { budget: u32 },
    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),
}
