//! Deterministic SVG scenes: fixed 1000×1000 viewBox, 5% margin, stable
//! element order and ids, coordinates printed with three decimals. Equal
//! input bytes give equal output bytes.

use chain_conic::{
    dist_sq, CarrierL, CenterPolygon, Chain, ConicKind, FocalConic, Line, Point, Rat, Scalar,
};
use std::fmt::Write;

const VIEW: f64 = 1000.0;
const MARGIN: f64 = 50.0; // 5% on each side
const CONTENT: f64 = VIEW - 2.0 * MARGIN;
const CONIC_SAMPLES: usize = 256;

struct Frame {
    scale: f64,
    xmin: f64,
    ymax: f64,
    ox: f64,
    oy: f64,
}

impl Frame {
    fn from_bbox(xmin: f64, xmax: f64, ymin: f64, ymax: f64) -> Frame {
        let w = (xmax - xmin).max(1e-9);
        let h = (ymax - ymin).max(1e-9);
        let scale = CONTENT / w.max(h);
        Frame {
            scale,
            xmin,
            ymax,
            ox: MARGIN + (CONTENT - w * scale) / 2.0,
            oy: MARGIN + (CONTENT - h * scale) / 2.0,
        }
    }

    fn map(&self, p: (f64, f64)) -> (f64, f64) {
        (
            self.ox + (p.0 - self.xmin) * self.scale,
            self.oy + (self.ymax - p.1) * self.scale,
        )
    }
}

fn fmt(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

fn fpoint(p: &Point<Rat>) -> (f64, f64) {
    (p.x.to_f64(), p.y.to_f64())
}

struct Bbox {
    xmin: f64,
    xmax: f64,
    ymin: f64,
    ymax: f64,
}

impl Bbox {
    fn new() -> Bbox {
        Bbox {
            xmin: f64::INFINITY,
            xmax: f64::NEG_INFINITY,
            ymin: f64::INFINITY,
            ymax: f64::NEG_INFINITY,
        }
    }

    fn add(&mut self, p: (f64, f64)) {
        self.xmin = self.xmin.min(p.0);
        self.xmax = self.xmax.max(p.0);
        self.ymin = self.ymin.min(p.1);
        self.ymax = self.ymax.max(p.1);
    }

    fn add_circle(&mut self, center: (f64, f64), r: f64) {
        self.add((center.0 - r, center.1 - r));
        self.add((center.0 + r, center.1 + r));
    }

    fn center(&self) -> (f64, f64) {
        ((self.xmin + self.xmax) / 2.0, (self.ymin + self.ymax) / 2.0)
    }

    fn reach_from(&self, p: (f64, f64)) -> f64 {
        let corners = [
            (self.xmin, self.ymin),
            (self.xmin, self.ymax),
            (self.xmax, self.ymin),
            (self.xmax, self.ymax),
        ];
        corners
            .iter()
            .map(|c| ((c.0 - p.0).powi(2) + (c.1 - p.1).powi(2)).sqrt())
            .fold(1.0f64, f64::max)
    }
}

fn circle_element(out: &mut String, id: &str, frame: &Frame, center: (f64, f64), r: f64, style: &str) {
    let (cx, cy) = frame.map(center);
    writeln!(
        out,
        "<circle id=\"{id}\" cx=\"{}\" cy=\"{}\" r=\"{}\" {style}/>",
        fmt(cx),
        fmt(cy),
        fmt(r * frame.scale)
    )
    .unwrap();
}

/// Scene-spanning segment of an infinite line, clipped by generous reach.
fn line_element(out: &mut String, id: &str, frame: &Frame, line: &Line<Rat>, bbox: &Bbox, style: &str) {
    let (a, b, c) = (line.a.to_f64(), line.b.to_f64(), line.c.to_f64());
    let norm_sq = a * a + b * b;
    let center = bbox.center();
    // foot of the perpendicular from the bbox center
    let k = (a * center.0 + b * center.1 + c) / norm_sq;
    let foot = (center.0 - k * a, center.1 - k * b);
    let norm = norm_sq.sqrt();
    let dir = (b / norm, -a / norm);
    let reach = 2.0 * bbox.reach_from(center);
    let p1 = frame.map((foot.0 - reach * dir.0, foot.1 - reach * dir.1));
    let p2 = frame.map((foot.0 + reach * dir.0, foot.1 + reach * dir.1));
    writeln!(
        out,
        "<line id=\"{id}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" {style}/>",
        fmt(p1.0),
        fmt(p1.1),
        fmt(p2.0),
        fmt(p2.1)
    )
    .unwrap();
}

fn path_element(out: &mut String, id: &str, frame: &Frame, points: &[(f64, f64)], closed: bool, style: &str) {
    let mut d = String::new();
    for (i, p) in points.iter().enumerate() {
        let (x, y) = frame.map(*p);
        let op = if i == 0 { "M" } else { "L" };
        write!(d, "{op} {} {} ", fmt(x), fmt(y)).unwrap();
    }
    if closed {
        d.push('Z');
    } else {
        d.pop();
    }
    writeln!(out, "<path id=\"{id}\" d=\"{d}\" {style}/>").unwrap();
}

fn dot(out: &mut String, id: &str, frame: &Frame, p: (f64, f64), r: f64, fill: &str) {
    let (cx, cy) = frame.map(p);
    writeln!(
        out,
        "<circle id=\"{id}\" cx=\"{}\" cy=\"{}\" r=\"{r}\" fill=\"{fill}\" stroke=\"white\" stroke-width=\"1\"/>",
        fmt(cx),
        fmt(cy)
    )
    .unwrap();
}

fn conic_elements(
    out: &mut String,
    frame: &Frame,
    bbox: &Bbox,
    conic: &FocalConic<Rat>,
) {
    const STYLE: &str = "fill=\"none\" stroke=\"#9467bd\" stroke-width=\"2\"";
    match conic {
        FocalConic::Central {
            kind,
            focus_k,
            focus_l,
            r_sq,
        } => {
            let k = fpoint(focus_k);
            let l = fpoint(focus_l);
            let r = r_sq.to_f64().sqrt();
            let a = r / 2.0;
            let c = dist_sq(focus_k, focus_l).to_f64().sqrt() / 2.0;
            let center = ((k.0 + l.0) / 2.0, (k.1 + l.1) / 2.0);
            if *kind == ConicKind::Circle {
                circle_element(out, "conic", frame, center, a, STYLE);
                return;
            }
            let u = ((l.0 - k.0) / (2.0 * c), (l.1 - k.1) / (2.0 * c));
            let v = (-u.1, u.0);
            let place = |su: f64, sv: f64| {
                (
                    center.0 + su * u.0 + sv * v.0,
                    center.1 + su * u.1 + sv * v.1,
                )
            };
            if *kind == ConicKind::Ellipse {
                let b = (a * a - c * c).sqrt();
                let mut points = Vec::with_capacity(CONIC_SAMPLES);
                for i in 0..CONIC_SAMPLES {
                    let theta = 2.0 * std::f64::consts::PI * (i as f64) / (CONIC_SAMPLES as f64);
                    points.push(place(a * theta.cos(), b * theta.sin()));
                }
                path_element(out, "conic", frame, &points, true, STYLE);
            } else {
                let b = (c * c - a * a).sqrt();
                let reach = bbox.reach_from(center);
                let t_max = (reach / a).max(1.5).acosh();
                for (branch, sign) in [("conic-branch-1", 1.0), ("conic-branch-2", -1.0)] {
                    let mut points = Vec::with_capacity(CONIC_SAMPLES + 1);
                    for i in 0..=CONIC_SAMPLES {
                        let t = t_max * (2.0 * (i as f64) / (CONIC_SAMPLES as f64) - 1.0);
                        points.push(place(sign * a * t.cosh(), b * t.sinh()));
                    }
                    path_element(out, branch, frame, &points, false, STYLE);
                }
            }
        }
        FocalConic::Parabola { focus, directrix } => {
            let f = fpoint(focus);
            let (a, b) = (directrix.a.to_f64(), directrix.b.to_f64());
            let norm_sq = a * a + b * b;
            let k = directrix.eval(focus).to_f64() / norm_sq;
            let foot = (f.0 - k * a, f.1 - k * b);
            let vertex = ((f.0 + foot.0) / 2.0, (f.1 + foot.1) / 2.0);
            let focal = ((f.0 - foot.0).powi(2) + (f.1 - foot.1).powi(2)).sqrt() / 2.0;
            let axis = ((f.0 - vertex.0) / focal, (f.1 - vertex.1) / focal);
            let side = (-axis.1, axis.0);
            let reach = bbox.reach_from(vertex);
            let mut points = Vec::with_capacity(CONIC_SAMPLES + 1);
            for i in 0..=CONIC_SAMPLES {
                let s = reach * (2.0 * (i as f64) / (CONIC_SAMPLES as f64) - 1.0);
                let h = s * s / (4.0 * focal);
                points.push((
                    vertex.0 + s * side.0 + h * axis.0,
                    vertex.1 + s * side.1 + h * axis.1,
                ));
            }
            path_element(out, "conic", frame, &points, false, STYLE);
            line_element(
                out,
                "directrix",
                frame,
                directrix,
                bbox,
                "stroke=\"#8c564b\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"",
            );
        }
    }
}

pub fn render_scene(
    chain: &Chain<Rat>,
    polygon: Option<&CenterPolygon<Rat>>,
    conic: Option<&FocalConic<Rat>>,
) -> String {
    let config = &chain.config;
    let mut bbox = Bbox::new();
    bbox.add_circle(
        fpoint(&config.carrier_k.center),
        config.carrier_k.radius.to_f64(),
    );
    if let CarrierL::Circle(c) = &config.carrier_l {
        bbox.add_circle(fpoint(&c.center), c.radius.to_f64());
    }
    for p in chain.p.iter().chain(chain.q.iter()) {
        bbox.add(fpoint(p));
    }
    if let Some(polygon) = polygon {
        for v in &polygon.vertices {
            bbox.add(fpoint(v));
        }
    }
    let frame = Frame::from_bbox(bbox.xmin, bbox.xmax, bbox.ymin, bbox.ymax);

    let mut out = String::new();
    out.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\" width=\"1000\" height=\"1000\">\n",
    );
    out.push_str("<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n");

    for (i, support) in chain.support.iter().enumerate() {
        circle_element(
            &mut out,
            &format!("support-{}", i + 1),
            &frame,
            fpoint(&support.center),
            support.radius_sq.to_f64().sqrt(),
            "fill=\"none\" stroke=\"#c8c8c8\" stroke-width=\"1\"",
        );
    }

    circle_element(
        &mut out,
        "carrier-k",
        &frame,
        fpoint(&config.carrier_k.center),
        config.carrier_k.radius.to_f64(),
        "fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\"",
    );
    match &config.carrier_l {
        CarrierL::Circle(c) => circle_element(
            &mut out,
            "carrier-l",
            &frame,
            fpoint(&c.center),
            c.radius.to_f64(),
            "fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"2\"",
        ),
        CarrierL::Line(l) => line_element(
            &mut out,
            "carrier-l",
            &frame,
            l,
            &bbox,
            "stroke=\"#2ca02c\" stroke-width=\"2\"",
        ),
    }

    if let Some(polygon) = polygon {
        let mut points = String::new();
        for v in &polygon.vertices {
            let (x, y) = frame.map(fpoint(v));
            write!(points, "{},{} ", fmt(x), fmt(y)).unwrap();
        }
        points.pop();
        writeln!(
            out,
            "<polygon id=\"center-polygon\" points=\"{points}\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"/>"
        )
        .unwrap();
    }

    if let Some(conic) = conic {
        conic_elements(&mut out, &frame, &bbox, conic);
    }

    for (i, p) in chain.p.iter().enumerate() {
        dot(&mut out, &format!("p-{}", i + 1), &frame, fpoint(p), 5.0, "#1f77b4");
    }
    for (i, q) in chain.q.iter().enumerate() {
        dot(&mut out, &format!("q-{}", i + 1), &frame, fpoint(q), 5.0, "#2ca02c");
    }
    dot(
        &mut out,
        "focus-k",
        &frame,
        fpoint(&config.carrier_k.center),
        6.0,
        "#000000",
    );
    if let Some(FocalConic::Central { focus_l, .. }) = conic {
        dot(&mut out, "focus-l", &frame, fpoint(focus_l), 6.0, "#000000");
    }

    out.push_str("</svg>\n");
    out
}
