//! The fixed conic inscribed in the center polygon.
//!
//! A conic with foci K, L is handled entirely through the reflected-focus
//! characterization: a line is tangent iff the mirror image of K across it
//! lies at distance r = 2a from L. That keeps every check a squared-
//! distance identity — exact over the rationals. The parabola case (c(L)
//! a line) replaces the distance identity with membership of the mirror
//! images in one line, the directrix.

use crate::chain::{CenterPolygon, Chain};
use crate::error::ConicError;
use crate::kernel::{
    dist_sq, line_through, lines_concurrent, perpendicular_bisector, reflect_point,
    GeneralizedCircle, Line, Point,
};
use crate::scalar::Scalar;


#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConicKind {
    Ellipse,
    Hyperbola,
    Parabola,
    Circle,
}

/// Focal representation; never a 6-coefficient quadratic. For the central
/// kinds, `r_sq` is the squared radius of the reflected-focus circle
/// centered at L (r = 2a).
#[derive(Debug, Clone, PartialEq)]
pub enum FocalConic<S> {
    Central {
        kind: ConicKind,
        focus_k: Point<S>,
        focus_l: Point<S>,
        r_sq: S,
    },
    Parabola {
        focus: Point<S>,
        directrix: Line<S>,
    },
}

impl<S> FocalConic<S> {
    pub fn kind(&self) -> ConicKind {
        match self {
            FocalConic::Central { kind, .. } => *kind,
            FocalConic::Parabola { .. } => ConicKind::Parabola,
        }
    }
}

/// Per-side witness: the mirror image of K and (central kinds) its squared
/// distance to L. For a parabola, membership in the directrix replaces the
/// distance.
#[derive(Debug, Clone, PartialEq)]
pub struct TangencyCertificate<S> {
    pub side: Line<S>,
    pub reflected_focus: Point<S>,
    pub dist_sq_to_l: Option<S>,
}

/// Kind by the trichotomy |KL|² vs rSq, cross-checked against the position
/// of K relative to c(L): strictly inside must give an ellipse, strictly
/// outside a hyperbola.
pub fn classify<S: Scalar>(
    k: &Point<S>,
    carrier_l: &GeneralizedCircle<S>,
    r_sq: &S,
    tol: f64,
) -> Result<ConicKind, ConicError> {
    let circle = match carrier_l {
        GeneralizedCircle::Straight(_) => return Ok(ConicKind::Parabola),
        GeneralizedCircle::Proper(c) => c,
    };
    let l = &circle.center;
    if k == l {
        return Ok(ConicKind::Circle);
    }
    let d2 = dist_sq(k, l);
    let diff = d2.clone() - r_sq.clone();
    let degenerate = if S::EXACT {
        diff.is_zero()
    } else {
        diff.to_f64().abs() <= tol * r_sq.to_f64()
    };
    if degenerate {
        return Err(ConicError::DegenerateConic);
    }
    let kind = if diff.is_negative() {
        ConicKind::Ellipse
    } else {
        ConicKind::Hyperbola
    };
    let position = match d2.partial_cmp(&circle.radius_sq) {
        Some(std::cmp::Ordering::Less) => "inside",
        Some(std::cmp::Ordering::Greater) => "outside",
        _ => "on",
    };
    let consistent = matches!(
        (kind, position),
        (ConicKind::Ellipse, "inside") | (ConicKind::Hyperbola, "outside")
    );
    if !consistent {
        return Err(ConicError::ClassificationConflict { kind, position });
    }
    Ok(kind)
}

/// Conic with foci K, L tangent to the given line: reflect K, measure the
/// distance to L.
pub fn conic_from_focus_tangent<S: Scalar>(
    k: &Point<S>,
    l: &Point<S>,
    tangent: &Line<S>,
    tol: f64,
) -> Result<FocalConic<S>, ConicError> {
    if tangent.contains(k, tol) {
        return Err(ConicError::FocusOnTangent);
    }
    let t = reflect_point(k, tangent);
    let r_sq = dist_sq(l, &t);
    if k == l {
        return Ok(FocalConic::Central {
            kind: ConicKind::Circle,
            focus_k: k.clone(),
            focus_l: l.clone(),
            r_sq,
        });
    }
    let d2 = dist_sq(k, l);
    let diff = d2 - r_sq.clone();
    let degenerate = if S::EXACT {
        r_sq.is_zero() || diff.is_zero()
    } else {
        let scale = r_sq.to_f64().max(diff.to_f64().abs());
        r_sq.to_f64() <= tol * scale || diff.to_f64().abs() <= tol * r_sq.to_f64()
    };
    if degenerate {
        return Err(ConicError::DegenerateConic);
    }
    let kind = if diff.is_negative() {
        ConicKind::Ellipse
    } else {
        ConicKind::Hyperbola
    };
    Ok(FocalConic::Central {
        kind,
        focus_k: k.clone(),
        focus_l: l.clone(),
        r_sq,
    })
}

/// Certify that every polygon side is tangent to one fixed conic with
/// focus K (and focus L for a proper carrier).
///
/// Proper c(L): all squared reflected-focus distances must agree — exactly
/// in the rational realization, with relative spread ≤ `tol` in float.
/// Line c(L): the reflected points must be collinear on a line parallel to
/// the carrier, which becomes the directrix.
pub fn verify_inscribed_conic<S: Scalar>(
    k: &Point<S>,
    carrier_l: &GeneralizedCircle<S>,
    polygon: &CenterPolygon<S>,
    tol: f64,
) -> Result<(FocalConic<S>, Vec<TangencyCertificate<S>>), ConicError> {
    let n = polygon.n();
    let mut sides = Vec::with_capacity(n);
    for i in 0..n {
        sides.push(polygon.side(i).map_err(|_| ConicError::CoincidentPoints)?);
    }
    let reflected: Vec<Point<S>> = sides.iter().map(|s| reflect_point(k, s)).collect();
    match carrier_l {
        GeneralizedCircle::Proper(circle) => {
            let l = &circle.center;
            let dists: Vec<S> = reflected.iter().map(|t| dist_sq(t, l)).collect();
            let mean = dists
                .iter()
                .fold(S::zero(), |acc, d| acc + d.clone())
                / S::from_int(n as i64);
            if mean.is_zero() {
                return Err(ConicError::DegenerateConic);
            }
            let mut worst = (0usize, 0.0f64);
            let mut all_exact = true;
            for (i, d) in dists.iter().enumerate() {
                let spread = (d.clone() - mean.clone()) / mean.clone();
                if !spread.is_zero() {
                    all_exact = false;
                }
                let s = spread.to_f64().abs();
                if s > worst.1 {
                    worst = (i, s);
                }
            }
            let pass = if S::EXACT {
                all_exact
            } else {
                worst.1 <= tol
            };
            if !pass {
                return Err(ConicError::NotInscribed {
                    index: worst.0 + 1,
                    residual: worst.1,
                });
            }
            let kind = classify(k, carrier_l, &mean, tol)?;
            let certificates = sides
                .into_iter()
                .zip(reflected)
                .zip(dists)
                .map(|((side, t), d)| TangencyCertificate {
                    side,
                    reflected_focus: t,
                    dist_sq_to_l: Some(d),
                })
                .collect();
            Ok((
                FocalConic::Central {
                    kind,
                    focus_k: k.clone(),
                    focus_l: l.clone(),
                    r_sq: mean,
                },
                certificates,
            ))
        }
        GeneralizedCircle::Straight(carrier) => {
            let directrix = line_through(&reflected[0], &reflected[1])
                .map_err(|_| ConicError::CoincidentPoints)?;
            let k_res = directrix.eval(k);
            if k_res.is_zero() {
                // focus on the directrix: no parabola
                return Err(ConicError::DegenerateConic);
            }
            let mut worst = (0usize, 0.0f64);
            let mut all_exact = true;
            for (i, t) in reflected.iter().enumerate() {
                // residual relative to the focus-directrix distance; the
                // coefficient norm cancels in the ratio
                let res = directrix.eval(t) / k_res.clone();
                if !res.is_zero() {
                    all_exact = false;
                }
                let s = res.to_f64().abs();
                if s > worst.1 {
                    worst = (i, s);
                }
            }
            let pass = if S::EXACT { all_exact } else { worst.1 <= tol };
            if !pass {
                return Err(ConicError::NotInscribed {
                    index: worst.0 + 1,
                    residual: worst.1,
                });
            }
            let cross = directrix.a.clone() * carrier.b.clone()
                - directrix.b.clone() * carrier.a.clone();
            let parallel = if S::EXACT {
                cross.is_zero()
            } else {
                let nd = directrix.a.to_f64().hypot(directrix.b.to_f64());
                let nc = carrier.a.to_f64().hypot(carrier.b.to_f64());
                cross.to_f64().abs() <= tol * nd * nc
            };
            if !parallel {
                return Err(ConicError::DirectrixNotParallel {
                    residual: cross.to_f64().abs(),
                });
            }
            let certificates = sides
                .into_iter()
                .zip(reflected)
                .map(|(side, t)| TangencyCertificate {
                    side,
                    reflected_focus: t,
                    dist_sq_to_l: None,
                })
                .collect();
            Ok((
                FocalConic::Parabola {
                    focus: k.clone(),
                    directrix,
                },
                certificates,
            ))
        }
    }
}

/// Tangency of a single line, by the reflected-focus characterization.
pub fn is_tangent<S: Scalar>(conic: &FocalConic<S>, l: &Line<S>, tol: f64) -> bool {
    match conic {
        FocalConic::Central {
            focus_k,
            focus_l,
            r_sq,
            ..
        } => {
            let t = reflect_point(focus_k, l);
            let diff = dist_sq(&t, focus_l) - r_sq.clone();
            if S::EXACT {
                diff.is_zero()
            } else {
                diff.to_f64().abs() <= tol * r_sq.to_f64()
            }
        }
        FocalConic::Parabola { focus, directrix } => {
            let t = reflect_point(focus, l);
            let res = directrix.eval(&t);
            if S::EXACT {
                res.is_zero()
            } else {
                let k_res = directrix.eval(focus).to_f64();
                res.to_f64().abs() <= tol * k_res.abs()
            }
        }
    }
}

/// The three main diagonals O_1O_4, O_2O_5, O_3O_6.
pub fn brianchon_diagonals<S: Scalar>(
    polygon: &CenterPolygon<S>,
) -> Result<[Line<S>; 3], ConicError> {
    if polygon.n() != 6 {
        return Err(ConicError::WrongArity { n: polygon.n() });
    }
    let v = &polygon.vertices;
    let mut diagonals = Vec::with_capacity(3);
    for i in 0..3 {
        diagonals.push(line_through(&v[i], &v[i + 3]).map_err(|_| {
            ConicError::DegenerateDiagonal { i: i + 1, j: i + 4 }
        })?);
    }
    Ok([
        diagonals[0].clone(),
        diagonals[1].clone(),
        diagonals[2].clone(),
    ])
}

/// Concurrency of the main diagonals of the center hexagon.
pub fn brianchon_check<S: Scalar>(polygon: &CenterPolygon<S>, tol: f64) -> Result<bool, ConicError> {
    let [d1, d2, d3] = brianchon_diagonals(polygon)?;
    Ok(lines_concurrent(&d1, &d2, &d3, tol))
}

/// The proof's central step made executable: at vertex i, with T and U the
/// mirror images of K across the sides meeting at O_i, the perpendicular
/// bisector of TU must coincide with the perpendicular bisector of
/// Q_i Q_{i+1}.
pub fn bisector_coincidence_check<S: Scalar>(
    chain: &Chain<S>,
    i: usize,
    tol: f64,
) -> Result<bool, ConicError> {
    let n = chain.n();
    let k = &chain.config.carrier_k.center;
    let prev = chain
        .side((i + n - 1) % n)
        .map_err(|_| ConicError::CoincidentPoints)?;
    let cur = chain.side(i).map_err(|_| ConicError::CoincidentPoints)?;
    let t = reflect_point(k, &prev);
    let u = reflect_point(k, &cur);
    let qi = &chain.q[i % n];
    let qn = &chain.q[(i + 1) % n];
    if t == u || qi == qn {
        return Err(ConicError::CoincidentPoints);
    }
    let lhs = perpendicular_bisector(&t, &u).expect("distinct by the check above");
    let rhs = perpendicular_bisector(qi, qn).expect("distinct by the check above");
    Ok(lhs.same_line(&rhs, tol))
}
