//! The configuration document: JSON with every scalar as an exact rational
//! string "p/q" (or "p"), so serialization is lossless.

use chain_conic::{Carrier, CarrierL, ChainConfiguration, Line, Point, QStart, Rat};
use num::BigInt;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigDoc {
    pub version: u32,
    pub n: usize,
    #[serde(rename = "carrierK")]
    pub carrier_k: CircleDoc,
    #[serde(rename = "carrierL")]
    pub carrier_l: CarrierLDoc,
    #[serde(rename = "pParams")]
    pub p_params: Vec<String>,
    #[serde(rename = "qStart")]
    pub q_start: QStartDoc,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CircleDoc {
    pub cx: String,
    pub cy: String,
    pub r: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LineDoc {
    pub a: String,
    pub b: String,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CarrierLDoc {
    Line { line: LineDoc },
    Circle(CircleDoc),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum QStartDoc {
    Param(String),
    Point { x: String, y: String },
}

/// Accepts "p", "-p", "p/q" with a positive decimal q.
pub fn parse_rat(raw: &str) -> Result<Rat, String> {
    let bad = || format!("not a rational: {raw:?}");
    let (num, den) = match raw.split_once('/') {
        Some((n, d)) => (n, d),
        None => (raw, "1"),
    };
    let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
    let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
    if den <= BigInt::from(0) {
        return Err(format!("denominator must be positive: {raw:?}"));
    }
    Ok(Rat::new(num, den))
}

fn rat_str(v: &Rat) -> String {
    v.to_string()
}

pub fn from_config(config: &ChainConfiguration<Rat>) -> ConfigDoc {
    ConfigDoc {
        version: FORMAT_VERSION,
        n: config.n(),
        carrier_k: CircleDoc {
            cx: rat_str(&config.carrier_k.center.x),
            cy: rat_str(&config.carrier_k.center.y),
            r: rat_str(&config.carrier_k.radius),
        },
        carrier_l: match &config.carrier_l {
            CarrierL::Circle(c) => CarrierLDoc::Circle(CircleDoc {
                cx: rat_str(&c.center.x),
                cy: rat_str(&c.center.y),
                r: rat_str(&c.radius),
            }),
            CarrierL::Line(l) => CarrierLDoc::Line {
                line: LineDoc {
                    a: rat_str(&l.a),
                    b: rat_str(&l.b),
                    c: rat_str(&l.c),
                },
            },
        },
        p_params: config.p_params.iter().map(rat_str).collect(),
        q_start: match &config.q_start {
            QStart::Param(t) => QStartDoc::Param(rat_str(t)),
            QStart::Point(p) => QStartDoc::Point {
                x: rat_str(&p.x),
                y: rat_str(&p.y),
            },
        },
    }
}

pub fn to_config(doc: &ConfigDoc) -> Result<ChainConfiguration<Rat>, String> {
    if doc.version != FORMAT_VERSION {
        return Err(format!(
            "unsupported version {} (expected {FORMAT_VERSION})",
            doc.version
        ));
    }
    if doc.n != doc.p_params.len() {
        return Err(format!(
            "n = {} does not match {} pParams",
            doc.n,
            doc.p_params.len()
        ));
    }
    let carrier_k = Carrier {
        center: Point::new(parse_rat(&doc.carrier_k.cx)?, parse_rat(&doc.carrier_k.cy)?),
        radius: parse_rat(&doc.carrier_k.r)?,
    };
    let carrier_l = match &doc.carrier_l {
        CarrierLDoc::Circle(c) => CarrierL::Circle(Carrier {
            center: Point::new(parse_rat(&c.cx)?, parse_rat(&c.cy)?),
            radius: parse_rat(&c.r)?,
        }),
        CarrierLDoc::Line { line } => CarrierL::Line(Line::new(
            parse_rat(&line.a)?,
            parse_rat(&line.b)?,
            parse_rat(&line.c)?,
        )),
    };
    let p_params = doc
        .p_params
        .iter()
        .map(|s| parse_rat(s))
        .collect::<Result<Vec<_>, _>>()?;
    let q_start = match &doc.q_start {
        QStartDoc::Param(t) => QStart::Param(parse_rat(t)?),
        QStartDoc::Point { x, y } => QStart::Point(Point::new(parse_rat(x)?, parse_rat(y)?)),
    };
    Ok(ChainConfiguration {
        carrier_k,
        carrier_l,
        p_params,
        q_start,
    })
}

pub fn parse_doc(text: &str) -> Result<ConfigDoc, String> {
    serde_json::from_str(text).map_err(|e| format!("invalid configuration document: {e}"))
}

pub fn doc_to_string(doc: &ConfigDoc, pretty: bool) -> String {
    let mut text = if pretty {
        serde_json::to_string_pretty(doc).expect("document serializes")
    } else {
        serde_json::to_string(doc).expect("document serializes")
    };
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_strings_round_trip() {
        for raw in ["0", "7", "-3", "1/2", "-22/7", "100/10"] {
            let v = parse_rat(raw).unwrap();
            let back = parse_rat(&rat_str(&v)).unwrap();
            assert_eq!(v, back);
        }
        assert_eq!(rat_str(&parse_rat("100/10").unwrap()), "10");
    }

    #[test]
    fn malformed_rationals_are_rejected() {
        for raw in ["", "1/0", "1/-2", "0.5", "a", "1/2/3", "½"] {
            assert!(parse_rat(raw).is_err(), "accepted {raw:?}");
        }
    }

    #[test]
    fn document_round_trips_through_json() {
        let config = chain_conic::scenario("fig2-ellipse").unwrap();
        let doc = from_config(&config);
        let text = doc_to_string(&doc, false);
        let parsed = parse_doc(&text).unwrap();
        assert_eq!(parsed, doc);
        assert_eq!(to_config(&parsed).unwrap(), config);

        let line_config = chain_conic::scenario("fig3-parabola").unwrap();
        let doc = from_config(&line_config);
        let parsed = parse_doc(&doc_to_string(&doc, true)).unwrap();
        assert_eq!(to_config(&parsed).unwrap(), line_config);
    }

    #[test]
    fn version_and_arity_must_match() {
        let config = chain_conic::scenario("fig2-ellipse").unwrap();
        let mut doc = from_config(&config);
        doc.version = 2;
        assert!(to_config(&doc).is_err());
        let mut doc = from_config(&config);
        doc.n = 5;
        assert!(to_config(&doc).is_err());
    }
}
