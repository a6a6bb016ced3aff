//! Closed chains of circles over two carriers, their circumcenter
//! polygons, and the fixed conic inscribed in every such polygon.
//!
//! Starting from points P_1…P_n on a circle c(K) and Q_1 on a second
//! carrier c(L) (a circle or a line), each support circle is drawn through
//! P_i, Q_i, P_{i+1} and Q_{i+1} is its second intersection with c(L).
//! The crate verifies, in exact rational arithmetic:
//!
//! * **closure** — for even n the closing quadruple P_nQ_nQ_1P_1 is
//!   concyclic, with residual exactly zero;
//! * **the inscribed conic** — every side O_iO_{i+1} of the polygon of
//!   support-circle centers is tangent to one fixed conic with foci K and
//!   L (a parabola with focus K when c(L) is a line);
//! * **Brianchon concurrency** — for n = 6 the main diagonals of the
//!   center hexagon meet in a point;
//! * **classification** — K inside c(L) gives an ellipse, outside a
//!   hyperbola, and a line carrier a parabola.
//!
//! A parallel `f64` realization of every operation cross-checks the exact
//! results under a relative tolerance.

pub mod chain;
pub mod conic;
pub mod error;
pub mod generator;
pub mod kernel;
pub mod scalar;

pub use chain::{
    center_polygon, closure_residual, propagate, verify_closure, Carrier, CarrierL,
    CenterPolygon, Chain, ChainConfiguration, QStart,
};
pub use conic::{
    bisector_coincidence_check, brianchon_check, brianchon_diagonals, classify,
    conic_from_focus_tangent, is_tangent, verify_inscribed_conic, ConicKind, FocalConic,
    TangencyCertificate,
};
pub use error::{ChainError, ConicError, GeneratorError, GeometryError};
pub use generator::{random_config, random_config_with_stats, scenario, CarrierSeparation, GeneratorProfile};
pub use kernel::{
    circumcircle, concurrency_det, concyclic4, concyclic4_residual, dist_sq, line_through,
    lines_concurrent, param_point, perpendicular_bisector, reflect_point, second_intersection,
    GeneralizedCircle, Line, Point, ProperCircle,
};
pub use scalar::{residual_ok, Rat, Scalar};
