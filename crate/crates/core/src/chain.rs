//! Chains over the carriers c(K) and c(L): propagation, closure, and the
//! circumcenter polygon.
//!
//! The propagation rule builds the support circle through P_i, Q_i,
//! P_{i+1} and takes the second intersection with c(L) as Q_{i+1}, so the
//! first n−1 quadruples are cyclic by construction. Whether P_1 lies on
//! the closing circle through P_n, Q_n, Q_1 is exactly the closure
//! theorem — it is measured, never assumed.

use crate::error::{ChainError, GeometryError};
use crate::kernel::{
    circumcircle, concyclic4_residual, line_through, param_point, second_intersection,
    GeneralizedCircle, Line, Point, ProperCircle,
};
use crate::scalar::{residual_ok, Rat, Scalar};


/// Carrier circle with its exact radius; the rational parametrization
/// needs the radius itself, not just radiusSq.
#[derive(Debug, Clone, PartialEq)]
pub struct Carrier<S> {
    pub center: Point<S>,
    pub radius: S,
}

impl<S: Scalar> Carrier<S> {
    pub fn circle(&self) -> ProperCircle<S> {
        ProperCircle::new(
            self.center.clone(),
            self.radius.clone() * self.radius.clone(),
        )
    }

    pub fn point_at(&self, t: &S) -> Point<S> {
        param_point(&self.circle(), t, &self.radius)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum CarrierL<S> {
    Circle(Carrier<S>),
    Line(Line<S>),
}

impl<S: Scalar> CarrierL<S> {
    pub fn generalized(&self) -> GeneralizedCircle<S> {
        match self {
            CarrierL::Circle(c) => GeneralizedCircle::Proper(c.circle()),
            CarrierL::Line(l) => GeneralizedCircle::Straight(l.clone()),
        }
    }

    /// Point for parameter `t`: circle parametrization, or the affine
    /// parametrization `anchor + t·(b, −a)` of a line, anchored where the
    /// line crosses the y-axis (x-axis for vertical lines).
    pub fn point_at(&self, t: &S) -> Point<S> {
        match self {
            CarrierL::Circle(c) => c.point_at(t),
            CarrierL::Line(l) => {
                let anchor = if !l.b.is_zero() {
                    Point::new(S::zero(), -l.c.clone() / l.b.clone())
                } else {
                    Point::new(-l.c.clone() / l.a.clone(), S::zero())
                };
                Point::new(
                    anchor.x + t.clone() * l.b.clone(),
                    anchor.y - t.clone() * l.a.clone(),
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum QStart<S> {
    Param(S),
    Point(Point<S>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChainConfiguration<S> {
    pub carrier_k: Carrier<S>,
    pub carrier_l: CarrierL<S>,
    pub p_params: Vec<S>,
    pub q_start: QStart<S>,
}

impl<S: Scalar> ChainConfiguration<S> {
    pub fn n(&self) -> usize {
        self.p_params.len()
    }

    /// Q_1 as a concrete point on c(L).
    pub fn q1(&self) -> Point<S> {
        match &self.q_start {
            QStart::Param(t) => self.carrier_l.point_at(t),
            QStart::Point(p) => p.clone(),
        }
    }

    pub fn validate(&self, tol: f64) -> Result<(), ChainError> {
        let bad = |msg: &str| Err(ChainError::InvalidConfiguration(msg.to_string()));
        if self.n() < 3 {
            return bad("n must exceed 2");
        }
        if !self.carrier_k.radius.is_positive() {
            return bad("carrierK radius must be positive");
        }
        match &self.carrier_l {
            CarrierL::Circle(c) => {
                if !c.radius.is_positive() {
                    return bad("carrierL radius must be positive");
                }
                if *c == self.carrier_k {
                    return bad("carriers must be distinct curves");
                }
            }
            CarrierL::Line(l) => {
                if l.a.is_zero() && l.b.is_zero() {
                    return bad("carrierL line requires (a, b) != (0, 0)");
                }
            }
        }
        for i in 0..self.n() {
            for j in (i + 1)..self.n() {
                if self.p_params[i] == self.p_params[j] {
                    return bad("pParams must be pairwise distinct");
                }
            }
        }
        if let QStart::Point(p) = &self.q_start {
            if !self.carrier_l.generalized().contains(p, tol) {
                return bad("qStart point does not lie on carrierL");
            }
        }
        Ok(())
    }
}

impl ChainConfiguration<Rat> {
    /// Float shadow of an exact configuration.
    pub fn to_float(&self) -> ChainConfiguration<f64> {
        let pf = |p: &Point<Rat>| Point::new(p.x.to_f64(), p.y.to_f64());
        ChainConfiguration {
            carrier_k: Carrier {
                center: pf(&self.carrier_k.center),
                radius: self.carrier_k.radius.to_f64(),
            },
            carrier_l: match &self.carrier_l {
                CarrierL::Circle(c) => CarrierL::Circle(Carrier {
                    center: pf(&c.center),
                    radius: c.radius.to_f64(),
                }),
                CarrierL::Line(l) => {
                    CarrierL::Line(Line::new(l.a.to_f64(), l.b.to_f64(), l.c.to_f64()))
                }
            },
            p_params: self.p_params.iter().map(|t| t.to_f64()).collect(),
            q_start: match &self.q_start {
                QStart::Param(t) => QStart::Param(t.to_f64()),
                QStart::Point(p) => QStart::Point(pf(p)),
            },
        }
    }
}

/// A realized chain. `support[i]` is the circle through the quadruple
/// P_i, Q_i, Q_{i+1}, P_{i+1} for i < n−1; `support[n−1]` passes through
/// P_n, Q_n, Q_1 by construction and through P_1 exactly when the chain
/// closes.
#[derive(Debug, Clone, PartialEq)]
pub struct Chain<S> {
    pub config: ChainConfiguration<S>,
    pub p: Vec<Point<S>>,
    pub q: Vec<Point<S>>,
    pub support: Vec<ProperCircle<S>>,
}

impl<S: Scalar> Chain<S> {
    pub fn n(&self) -> usize {
        self.p.len()
    }

    /// Side O_i O_{i+1} of the center polygon (0-based, indices mod n).
    pub fn side(&self, i: usize) -> Result<Line<S>, GeometryError> {
        let n = self.n();
        line_through(
            &self.support[i % n].center,
            &self.support[(i + 1) % n].center,
        )
    }
}

pub fn propagate<S: Scalar>(
    config: &ChainConfiguration<S>,
    tol: f64,
) -> Result<Chain<S>, ChainError> {
    config.validate(tol)?;
    let n = config.n();
    let p: Vec<Point<S>> = config
        .p_params
        .iter()
        .map(|t| config.carrier_k.point_at(t))
        .collect();
    let base = config.carrier_l.generalized();
    let q1 = config.q1();
    if q1 == p[0] || q1 == p[n - 1] {
        return Err(ChainError::DuplicateChainPoint { index: 1 });
    }
    let mut q = Vec::with_capacity(n);
    q.push(q1);
    let mut support = Vec::with_capacity(n);
    for i in 0..n - 1 {
        let step = |source| ChainError::DegenerateStep {
            index: i + 1,
            source,
        };
        let circle = circumcircle(&p[i], &q[i], &p[i + 1]).map_err(step)?;
        let next = second_intersection(&circle, &base, &q[i], tol).map_err(step)?;
        if next == p[i] || next == p[i + 1] {
            return Err(ChainError::DuplicateChainPoint { index: i + 2 });
        }
        support.push(circle);
        q.push(next);
    }
    let closing = circumcircle(&p[n - 1], &q[n - 1], &q[0])
        .map_err(|source| ChainError::DegenerateStep { index: n, source })?;
    support.push(closing);
    Ok(Chain {
        config: config.clone(),
        p,
        q,
        support,
    })
}

/// Scale-normalized concyclicity residual of the closing quadruple
/// P_n, Q_n, Q_1, P_1. Exactly zero in the rational realization iff the
/// chain closes.
pub fn closure_residual<S: Scalar>(chain: &Chain<S>) -> S {
    let n = chain.n();
    concyclic4_residual(&chain.p[n - 1], &chain.q[n - 1], &chain.q[0], &chain.p[0])
}

pub fn verify_closure<S: Scalar>(chain: &Chain<S>, tol: f64) -> bool {
    residual_ok(&closure_residual(chain), tol)
}

/// The polygon O_1…O_n of support-circle centers.
#[derive(Debug, Clone, PartialEq)]
pub struct CenterPolygon<S> {
    pub vertices: Vec<Point<S>>,
}

impl<S: Scalar> CenterPolygon<S> {
    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn side(&self, i: usize) -> Result<Line<S>, GeometryError> {
        let n = self.n();
        line_through(&self.vertices[i % n], &self.vertices[(i + 1) % n])
    }
}

/// Centers of the support circles, available once the chain is verified
/// closed. Collinear quadruples (centers at infinity) never get this far:
/// propagation rejects them as `DegenerateStep`.
pub fn center_polygon<S: Scalar>(
    chain: &Chain<S>,
    tol: f64,
) -> Result<CenterPolygon<S>, ChainError> {
    if !verify_closure(chain, tol) {
        return Err(ChainError::NotClosed);
    }
    Ok(CenterPolygon {
        vertices: chain.support.iter().map(|c| c.center.clone()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::dist_sq;
    use num::traits::Zero;

    fn r(n: i64, d: i64) -> Rat {
        Rat::from_ratio(n, d)
    }

    fn family_config(p_params: Vec<Rat>, q_start_t: Rat) -> ChainConfiguration<Rat> {
        ChainConfiguration {
            carrier_k: Carrier {
                center: Point::new(r(0, 1), r(0, 1)),
                radius: r(1, 1),
            },
            carrier_l: CarrierL::Circle(Carrier {
                center: Point::new(r(4, 1), r(0, 1)),
                radius: r(2, 1),
            }),
            p_params,
            q_start: QStart::Param(q_start_t),
        }
    }

    #[test]
    fn propagation_invariants_hold() {
        let cfg = family_config(vec![r(0, 1), r(1, 1), r(-1, 1), r(1, 3)], r(0, 1));
        let chain = propagate(&cfg, 0.0).unwrap();
        let ck = cfg.carrier_k.circle();
        let cl = cfg.carrier_l.generalized();
        for p in &chain.p {
            assert!(ck.contains(p, 0.0));
        }
        for q in &chain.q {
            assert!(cl.contains(q, 0.0));
        }
        // support[i] carries P_i, Q_i, Q_{i+1} for every i (the closing
        // circle included), and P_{i+1} for the n−1 leading quadruples
        let n = chain.n();
        for i in 0..n {
            let c = &chain.support[i];
            assert!(c.contains(&chain.p[i], 0.0));
            assert!(c.contains(&chain.q[i], 0.0));
            assert!(c.contains(&chain.q[(i + 1) % n], 0.0));
            if i < n - 1 {
                assert!(c.contains(&chain.p[i + 1], 0.0));
            }
        }
    }

    #[test]
    fn even_chain_closes_exactly() {
        let cfg = family_config(vec![r(0, 1), r(1, 1), r(-1, 1), r(1, 3)], r(0, 1));
        let chain = propagate(&cfg, 0.0).unwrap();
        assert!(closure_residual(&chain).is_zero());
        assert!(verify_closure(&chain, 0.0));
        let polygon = center_polygon(&chain, 0.0).unwrap();
        assert_eq!(polygon.n(), 4);
        // every center is equidistant from its quadruple
        for (i, c) in chain.support.iter().enumerate() {
            let d = dist_sq(&c.center, &chain.q[i]);
            assert_eq!(d, c.radius_sq);
        }
    }

    #[test]
    fn generic_odd_chain_does_not_close() {
        let cfg = family_config(vec![r(0, 1), r(1, 1), r(-1, 1)], r(1, 2));
        let chain = propagate(&cfg, 0.0).unwrap();
        assert!(!closure_residual(&chain).is_zero());
        assert_eq!(center_polygon(&chain, 0.0), Err(ChainError::NotClosed));
    }

    #[test]
    fn equal_params_are_rejected() {
        let cfg = family_config(vec![r(0, 1), r(1, 1), r(1, 1), r(1, 3)], r(0, 1));
        assert!(matches!(
            propagate(&cfg, 0.0),
            Err(ChainError::InvalidConfiguration(_))
        ));
    }

    #[test]
    fn n_must_exceed_two() {
        let cfg = family_config(vec![r(0, 1), r(1, 1)], r(0, 1));
        assert!(matches!(
            propagate(&cfg, 0.0),
            Err(ChainError::InvalidConfiguration(_))
        ));
    }

    #[test]
    fn tangent_step_is_a_degenerate_step() {
        // support circle through P_1, Q_1, P_2 is externally tangent to
        // carrierL at Q_1 = (1,0)
        let cfg = ChainConfiguration {
            carrier_k: Carrier {
                center: Point::new(r(3, 1), r(0, 1)),
                radius: r(1, 1),
            },
            carrier_l: CarrierL::Circle(Carrier {
                center: Point::new(r(0, 1), r(0, 1)),
                radius: r(1, 1),
            }),
            p_params: vec![r(1, 1), r(-1, 1), r(0, 1), r(1, 3)],
            q_start: QStart::Param(r(0, 1)),
        };
        assert_eq!(
            propagate(&cfg, 0.0),
            Err(ChainError::DegenerateStep {
                index: 1,
                source: GeometryError::TangentContact
            })
        );
    }

    #[test]
    fn line_carrier_points_satisfy_the_line() {
        let l = CarrierL::<Rat>::Line(Line::new(r(2, 1), r(-3, 1), r(5, 1)));
        for t in [r(0, 1), r(7, 3), r(-4, 5)] {
            let p = l.point_at(&t);
            assert!(l.generalized().contains(&p, 0.0));
        }
        let vertical = CarrierL::<Rat>::Line(Line::new(r(1, 1), r(0, 1), r(-2, 1)));
        let p = vertical.point_at(&r(3, 1));
        assert!(vertical.generalized().contains(&p, 0.0));
    }

    #[test]
    fn float_shadow_agrees_with_exact() {
        let cfg = family_config(vec![r(0, 1), r(1, 1), r(-1, 1), r(1, 3)], r(0, 1));
        let chain = propagate(&cfg, 0.0).unwrap();
        let fchain = propagate(&cfg.to_float(), 1e-9).unwrap();
        for (a, b) in chain.q.iter().zip(&fchain.q) {
            assert!((a.x.to_f64() - b.x).abs() <= 1e-9 * (1.0 + a.x.to_f64().abs()));
            assert!((a.y.to_f64() - b.y).abs() <= 1e-9 * (1.0 + a.y.to_f64().abs()));
        }
        assert!(verify_closure(&fchain, 1e-9));
    }
}
