//! Field-generic 2D primitives and square-root-free constructions.
//!
//! Everything is closed over the scalar field: rational inputs produce
//! rational outputs. Circles carry squared radii, the second intersection
//! of two circles is the reflection of the known common point across the
//! line of centers, and predicates are (normalized) determinants — no
//! radical ever appears, so the rational realization certifies the
//! theorems exactly.

use crate::error::GeometryError;
use crate::scalar::{residual_ok, Scalar};


#[derive(Debug, Clone, PartialEq)]
pub struct Point<S> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> Point<S> {
    pub fn new(x: S, y: S) -> Self {
        Point { x, y }
    }
}

pub fn dist_sq<S: Scalar>(p: &Point<S>, q: &Point<S>) -> S {
    let dx = p.x.clone() - q.x.clone();
    let dy = p.y.clone() - q.y.clone();
    dx.clone() * dx + dy.clone() * dy
}

/// `a·x + b·y + c = 0` with `(a, b) ≠ (0, 0)`.
///
/// Coefficient triples are homogeneous: two values describe the same line
/// iff the triples are proportional (see [`Line::same_line`]).
#[derive(Debug, Clone, PartialEq)]
pub struct Line<S> {
    pub a: S,
    pub b: S,
    pub c: S,
}

impl<S: Scalar> Line<S> {
    pub fn new(a: S, b: S, c: S) -> Self {
        debug_assert!(
            !(a.is_zero() && b.is_zero()),
            "line requires (a, b) != (0, 0)"
        );
        Line { a, b, c }
    }

    /// Signed residual `a·x + b·y + c`.
    pub fn eval(&self, p: &Point<S>) -> S {
        self.a.clone() * p.x.clone() + self.b.clone() * p.y.clone() + self.c.clone()
    }

    /// Membership. Float realization: distance to the line must not exceed
    /// `tol` times the point magnitude.
    pub fn contains(&self, p: &Point<S>, tol: f64) -> bool {
        let r = self.eval(p);
        if S::EXACT {
            return r.is_zero();
        }
        let norm = self.a.to_f64().hypot(self.b.to_f64());
        let mag = 1.0 + p.x.to_f64().abs().max(p.y.to_f64().abs());
        r.to_f64().abs() <= tol * norm * mag
    }

    /// Scale-invariant equality: all three 2×2 minors of the coefficient
    /// rows vanish (exactly, or relative to the coefficient magnitudes).
    pub fn same_line(&self, other: &Line<S>, tol: f64) -> bool {
        let m1 = self.a.clone() * other.b.clone() - other.a.clone() * self.b.clone();
        let m2 = self.a.clone() * other.c.clone() - other.a.clone() * self.c.clone();
        let m3 = self.b.clone() * other.c.clone() - other.b.clone() * self.c.clone();
        if S::EXACT {
            return m1.is_zero() && m2.is_zero() && m3.is_zero();
        }
        let n1 = coeff_norm(self);
        let n2 = coeff_norm(other);
        let scale = n1 * n2;
        [m1, m2, m3]
            .iter()
            .all(|m| m.to_f64().abs() <= tol * scale)
    }
}

fn coeff_norm<S: Scalar>(l: &Line<S>) -> f64 {
    let (a, b, c) = (l.a.to_f64(), l.b.to_f64(), l.c.to_f64());
    (a * a + b * b + c * c).sqrt()
}

/// Circle stored by center and *squared* radius, keeping the rational
/// realization closed under every construction.
#[derive(Debug, Clone, PartialEq)]
pub struct ProperCircle<S> {
    pub center: Point<S>,
    pub radius_sq: S,
}

impl<S: Scalar> ProperCircle<S> {
    pub fn new(center: Point<S>, radius_sq: S) -> Self {
        debug_assert!(radius_sq.is_positive(), "radiusSq must be positive");
        ProperCircle { center, radius_sq }
    }

    /// Signed residual `|p − center|² − radiusSq`.
    pub fn eval(&self, p: &Point<S>) -> S {
        dist_sq(p, &self.center) - self.radius_sq.clone()
    }

    /// Membership. Float realization: residual relative to radiusSq.
    pub fn contains(&self, p: &Point<S>, tol: f64) -> bool {
        let r = self.eval(p);
        if S::EXACT {
            r.is_zero()
        } else {
            r.to_f64().abs() <= tol * self.radius_sq.to_f64().abs()
        }
    }
}

/// A proper circle or a line — the carrier c(L) may degenerate to a line.
#[derive(Debug, Clone, PartialEq)]
pub enum GeneralizedCircle<S> {
    Proper(ProperCircle<S>),
    Straight(Line<S>),
}

impl<S: Scalar> GeneralizedCircle<S> {
    pub fn contains(&self, p: &Point<S>, tol: f64) -> bool {
        match self {
            GeneralizedCircle::Proper(c) => c.contains(p, tol),
            GeneralizedCircle::Straight(l) => l.contains(p, tol),
        }
    }
}

/// Line through two distinct points.
pub fn line_through<S: Scalar>(p: &Point<S>, q: &Point<S>) -> Result<Line<S>, GeometryError> {
    if p == q {
        return Err(GeometryError::CoincidentPoints);
    }
    Ok(Line::new(
        p.y.clone() - q.y.clone(),
        q.x.clone() - p.x.clone(),
        p.x.clone() * q.y.clone() - q.x.clone() * p.y.clone(),
    ))
}

/// Locus equidistant from `p` and `q`; `p` and `q` are mirror images
/// across it.
pub fn perpendicular_bisector<S: Scalar>(
    p: &Point<S>,
    q: &Point<S>,
) -> Result<Line<S>, GeometryError> {
    if p == q {
        return Err(GeometryError::CoincidentPoints);
    }
    let two = S::from_int(2);
    let a = two.clone() * (q.x.clone() - p.x.clone());
    let b = two * (q.y.clone() - p.y.clone());
    let c = (p.x.clone() * p.x.clone() + p.y.clone() * p.y.clone())
        - (q.x.clone() * q.x.clone() + q.y.clone() * q.y.clone());
    Ok(Line::new(a, b, c))
}

/// Mirror image of `p` across `l`.
pub fn reflect_point<S: Scalar>(p: &Point<S>, l: &Line<S>) -> Point<S> {
    let norm_sq = l.a.clone() * l.a.clone() + l.b.clone() * l.b.clone();
    let k = l.eval(p) / norm_sq;
    let two = S::from_int(2);
    Point::new(
        p.x.clone() - two.clone() * k.clone() * l.a.clone(),
        p.y.clone() - two * k * l.b.clone(),
    )
}

/// Circle through three pairwise distinct, non-collinear points.
///
/// The center solves `2(q−p)·O = |q|²−|p|²` and `2(r−p)·O = |r|²−|p|²`
/// (Cramer); radiusSq is the squared distance to any input.
pub fn circumcircle<S: Scalar>(
    p: &Point<S>,
    q: &Point<S>,
    r: &Point<S>,
) -> Result<ProperCircle<S>, GeometryError> {
    if p == q || q == r || p == r {
        return Err(GeometryError::DuplicatePoints);
    }
    let two = S::from_int(2);
    let a11 = two.clone() * (q.x.clone() - p.x.clone());
    let a12 = two.clone() * (q.y.clone() - p.y.clone());
    let a21 = two.clone() * (r.x.clone() - p.x.clone());
    let a22 = two * (r.y.clone() - p.y.clone());
    let sq = |pt: &Point<S>| pt.x.clone() * pt.x.clone() + pt.y.clone() * pt.y.clone();
    let b1 = sq(q) - sq(p);
    let b2 = sq(r) - sq(p);
    let det = a11.clone() * a22.clone() - a12.clone() * a21.clone();
    if det.is_zero() {
        return Err(GeometryError::CollinearPoints);
    }
    let ox = (b1.clone() * a22 - b2.clone() * a12) / det.clone();
    let oy = (a11 * b2 - a21 * b1) / det;
    let center = Point::new(ox, oy);
    let radius_sq = dist_sq(&center, p);
    Ok(ProperCircle::new(center, radius_sq))
}

/// Second common point of `through` and `base`, given one common point.
///
/// Two circles meeting at `known` are symmetric across their line of
/// centers, so the other intersection is `reflect_point(known, center
/// line)`; for a line base, reflect across the perpendicular dropped from
/// the circle center onto it. A reflection that fixes `known` means the
/// curves touch there.
pub fn second_intersection<S: Scalar>(
    through: &ProperCircle<S>,
    base: &GeneralizedCircle<S>,
    known: &Point<S>,
    tol: f64,
) -> Result<Point<S>, GeometryError> {
    if !through.contains(known, tol) || !base.contains(known, tol) {
        return Err(GeometryError::NotOnCurves);
    }
    let axis = match base {
        GeneralizedCircle::Proper(c) => {
            // Concentric circles through one common point coincide; no
            // unique second point, same degeneracy class as tangency.
            line_through(&through.center, &c.center)
                .map_err(|_| GeometryError::TangentContact)?
        }
        GeneralizedCircle::Straight(l) => Line::new(
            -l.b.clone(),
            l.a.clone(),
            l.b.clone() * through.center.x.clone() - l.a.clone() * through.center.y.clone(),
        ),
    };
    let out = reflect_point(known, &axis);
    let touched = if S::EXACT {
        out == *known
    } else {
        dist_sq(&out, known).to_f64() <= tol * tol * through.radius_sq.to_f64()
    };
    if touched {
        return Err(GeometryError::TangentContact);
    }
    Ok(out)
}

fn det3<S: Scalar>(m: [[S; 3]; 3]) -> S {
    let [[a, b, c], [d, e, f], [g, h, i]] = m;
    a * (e.clone() * i.clone() - f.clone() * h.clone())
        - b * (d.clone() * i - f * g.clone())
        + c * (d * h - e * g)
}

/// Scale-normalized concyclicity residual: the 4×4 determinant with rows
/// `(x, y, x²+y², 1)` divided by the square of the mean pairwise squared
/// distance. Zero iff the four points lie on one generalized circle; the
/// normalization makes the value invariant under similarity transforms.
pub fn concyclic4_residual<S: Scalar>(
    p1: &Point<S>,
    p2: &Point<S>,
    p3: &Point<S>,
    p4: &Point<S>,
) -> S {
    let pts = [p1, p2, p3, p4];
    let row = |p: &Point<S>| {
        [
            p.x.clone(),
            p.y.clone(),
            p.x.clone() * p.x.clone() + p.y.clone() * p.y.clone(),
            S::one(),
        ]
    };
    let rows: Vec<[S; 4]> = pts.iter().map(|p| row(p)).collect();
    let minor = |skip: usize| -> S {
        let pick = |r: &[S; 4]| {
            let mut it = (0..4).filter(|&k| k != skip).map(|k| r[k].clone());
            [it.next().unwrap(), it.next().unwrap(), it.next().unwrap()]
        };
        det3([pick(&rows[1]), pick(&rows[2]), pick(&rows[3])])
    };
    let mut det = S::zero();
    for (j, sign) in [(0, 1), (1, -1), (2, 1), (3, -1)] {
        det = det + S::from_int(sign) * rows[0][j].clone() * minor(j);
    }
    let mut sum = S::zero();
    for i in 0..4 {
        for j in (i + 1)..4 {
            sum = sum + dist_sq(pts[i], pts[j]);
        }
    }
    if sum.is_zero() {
        return det; // all four points coincide; determinant is 0
    }
    let scale = sum / S::from_int(6);
    det / (scale.clone() * scale)
}

/// True iff the four points lie on one generalized circle (a common line
/// counts — documented convention).
pub fn concyclic4<S: Scalar>(
    p1: &Point<S>,
    p2: &Point<S>,
    p3: &Point<S>,
    p4: &Point<S>,
    tol: f64,
) -> bool {
    residual_ok(&concyclic4_residual(p1, p2, p3, p4), tol)
}

/// Point on the circle for the rational parametrization
/// `center + radius · ((1−t²)/(1+t²), 2t/(1+t²))`.
///
/// `radius` must be the exact (positive) square root of `circle.radiusSq`;
/// the point `(center.x − radius, center.y)` is unreachable (t = ∞).
pub fn param_point<S: Scalar>(circle: &ProperCircle<S>, t: &S, radius: &S) -> Point<S> {
    debug_assert!(
        radius.clone() * radius.clone() == circle.radius_sq && radius.is_positive(),
        "radius must be the exact square root of radiusSq"
    );
    let t2 = t.clone() * t.clone();
    let d = S::one() + t2.clone();
    Point::new(
        circle.center.x.clone() + radius.clone() * (S::one() - t2) / d.clone(),
        circle.center.y.clone() + radius.clone() * S::from_int(2) * t.clone() / d,
    )
}

/// 3×3 determinant of the coefficient rows — the concurrency residual.
pub fn concurrency_det<S: Scalar>(l1: &Line<S>, l2: &Line<S>, l3: &Line<S>) -> S {
    det3([
        [l1.a.clone(), l1.b.clone(), l1.c.clone()],
        [l2.a.clone(), l2.b.clone(), l2.c.clone()],
        [l3.a.clone(), l3.b.clone(), l3.c.clone()],
    ])
}

/// True iff the three lines meet in one point. Three parallel lines share
/// an ideal point and return true — documented projective convention.
pub fn lines_concurrent<S: Scalar>(l1: &Line<S>, l2: &Line<S>, l3: &Line<S>, tol: f64) -> bool {
    let det = concurrency_det(l1, l2, l3);
    if S::EXACT {
        det.is_zero()
    } else {
        let scale = coeff_norm(l1) * coeff_norm(l2) * coeff_norm(l3);
        det.to_f64().abs() <= tol * scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    fn pt(x: i64, y: i64) -> Point<Rat> {
        Point::new(Rat::from_int(x), Rat::from_int(y))
    }

    fn r(n: i64, d: i64) -> Rat {
        Rat::from_ratio(n, d)
    }

    #[test]
    fn perpendicular_bisector_examples() {
        // (0,0),(2,0) -> x = 1; (-1,2),(3,2) -> x = 1
        let l = perpendicular_bisector(&pt(0, 0), &pt(2, 0)).unwrap();
        let x_eq_1 = Line::new(Rat::from_int(1), Rat::from_int(0), Rat::from_int(-1));
        assert!(l.same_line(&x_eq_1, 0.0));
        let l = perpendicular_bisector(&pt(-1, 2), &pt(3, 2)).unwrap();
        assert!(l.same_line(&x_eq_1, 0.0));
        assert_eq!(
            perpendicular_bisector(&pt(0, 0), &pt(0, 0)),
            Err(GeometryError::CoincidentPoints)
        );
    }

    #[test]
    fn perpendicular_bisector_swaps_its_points() {
        let p = Point::new(r(1, 3), r(-2, 7));
        let q = Point::new(r(5, 2), r(4, 9));
        let l = perpendicular_bisector(&p, &q).unwrap();
        assert_eq!(reflect_point(&p, &l), q);
        assert_eq!(reflect_point(&q, &l), p);
    }

    #[test]
    fn reflect_point_examples() {
        let x_eq_1 = Line::new(Rat::from_int(1), Rat::from_int(0), Rat::from_int(-1));
        assert_eq!(reflect_point(&pt(0, 0), &x_eq_1), pt(2, 0));
        // point on the mirror is fixed
        let y_eq_m5 = Line::new(Rat::from_int(0), Rat::from_int(1), Rat::from_int(5));
        assert_eq!(reflect_point(&pt(2, -5), &y_eq_m5), pt(2, -5));
        // y = x - 1 is x - y - 1 = 0; (0,1) -> (2,-1)
        let diag = Line::new(Rat::from_int(1), Rat::from_int(-1), Rat::from_int(-1));
        assert_eq!(reflect_point(&pt(0, 1), &diag), pt(2, -1));
    }

    #[test]
    fn circumcircle_examples() {
        let c = circumcircle(&pt(0, 0), &pt(2, 0), &pt(0, 2)).unwrap();
        assert_eq!(c.center, pt(1, 1));
        assert_eq!(c.radius_sq, Rat::from_int(2));
        let c = circumcircle(&pt(1, 0), &pt(0, 1), &pt(-1, 0)).unwrap();
        assert_eq!(c.center, pt(0, 0));
        assert_eq!(c.radius_sq, Rat::from_int(1));
        assert_eq!(
            circumcircle(&pt(0, 0), &pt(1, 1), &pt(2, 2)),
            Err(GeometryError::CollinearPoints)
        );
        assert_eq!(
            circumcircle(&pt(0, 0), &pt(0, 0), &pt(2, 2)),
            Err(GeometryError::DuplicatePoints)
        );
    }

    #[test]
    fn second_intersection_examples() {
        // circles centered (4,0) r²=9 and (0,0) r²=25 meet at (4,±3)
        let through = ProperCircle::new(pt(4, 0), Rat::from_int(9));
        let base = GeneralizedCircle::Proper(ProperCircle::new(pt(0, 0), Rat::from_int(25)));
        assert_eq!(
            second_intersection(&through, &base, &pt(4, 3), 0.0).unwrap(),
            pt(4, -3)
        );
        // circle (1,1) r²=2 and line y=0 meet at (0,0) and (2,0)
        let through = ProperCircle::new(pt(1, 1), Rat::from_int(2));
        let y0 = GeneralizedCircle::Straight(Line::new(
            Rat::from_int(0),
            Rat::from_int(1),
            Rat::from_int(0),
        ));
        assert_eq!(
            second_intersection(&through, &y0, &pt(0, 0), 0.0).unwrap(),
            pt(2, 0)
        );
        // internal tangency at (1,0)
        let through = ProperCircle::new(pt(2, 0), Rat::from_int(1));
        let base = GeneralizedCircle::Proper(ProperCircle::new(pt(0, 0), Rat::from_int(1)));
        assert_eq!(
            second_intersection(&through, &base, &pt(1, 0), 0.0),
            Err(GeometryError::TangentContact)
        );
        // precondition violation
        assert_eq!(
            second_intersection(&through, &base, &pt(5, 5), 0.0),
            Err(GeometryError::NotOnCurves)
        );
    }

    #[test]
    fn second_intersection_is_an_involution() {
        let through = ProperCircle::new(Point::new(r(4, 1), r(0, 1)), Rat::from_int(9));
        let base = GeneralizedCircle::Proper(ProperCircle::new(pt(0, 0), Rat::from_int(25)));
        let out = second_intersection(&through, &base, &pt(4, 3), 0.0).unwrap();
        assert!(through.contains(&out, 0.0) && base.contains(&out, 0.0));
        assert_eq!(
            second_intersection(&through, &base, &out, 0.0).unwrap(),
            pt(4, 3)
        );
    }

    #[test]
    fn concyclic4_examples() {
        assert!(concyclic4(&pt(1, 0), &pt(0, 1), &pt(-1, 0), &pt(0, -1), 0.0));
        assert!(!concyclic4(&pt(0, 0), &pt(1, 0), &pt(2, 0), &pt(3, 1), 0.0));
        // four collinear points are a generalized circle — documented
        assert!(concyclic4(&pt(0, 0), &pt(1, 0), &pt(2, 0), &pt(3, 0), 0.0));
    }

    #[test]
    fn param_point_examples() {
        let unit = ProperCircle::new(pt(0, 0), Rat::from_int(1));
        let one = Rat::from_int(1);
        assert_eq!(param_point(&unit, &Rat::from_int(0), &one), pt(1, 0));
        assert_eq!(param_point(&unit, &Rat::from_int(1), &one), pt(0, 1));
        let c = ProperCircle::new(pt(3, 0), Rat::from_int(4));
        let p = param_point(&c, &r(1, 2), &Rat::from_int(2));
        assert_eq!(p, Point::new(r(21, 5), r(8, 5)));
        assert!(c.contains(&p, 0.0));
    }

    #[test]
    fn lines_concurrent_examples() {
        let x0 = Line::new(Rat::from_int(1), Rat::from_int(0), Rat::from_int(0));
        let y0 = Line::new(Rat::from_int(0), Rat::from_int(1), Rat::from_int(0));
        let yx = Line::new(Rat::from_int(1), Rat::from_int(-1), Rat::from_int(0));
        assert!(lines_concurrent(&x0, &y0, &yx, 0.0));
        let x1 = Line::new(Rat::from_int(1), Rat::from_int(0), Rat::from_int(-1));
        assert!(!lines_concurrent(&x0, &x1, &y0, 0.0));
        // three parallels meet at an ideal point — documented convention
        let x2 = Line::new(Rat::from_int(1), Rat::from_int(0), Rat::from_int(-2));
        assert!(lines_concurrent(&x0, &x1, &x2, 0.0));
    }

    #[test]
    fn reflection_is_involutive() {
        let l = Line::new(r(3, 2), r(-5, 7), r(1, 3));
        let p = Point::new(r(-4, 5), r(9, 2));
        assert_eq!(reflect_point(&reflect_point(&p, &l), &l), p);
    }

    #[test]
    fn float_predicates_use_tolerance() {
        let p1 = Point::new(1.0f64, 0.0);
        let p2 = Point::new(0.0, 1.0);
        let p3 = Point::new(-1.0, 0.0);
        let p4 = Point::new(1e-11, -1.0);
        assert!(concyclic4(&p1, &p2, &p3, &p4, 1e-9));
        assert!(!concyclic4(&p1, &p2, &p3, &Point::new(0.1, -1.0), 1e-9));
    }
}
