//! Exact-rational random configurations and the canned figure scenarios.
//!
//! Sampling is rejection-based: carriers and parameters come from a
//! bounded rational grid, the candidate is propagated exactly, and any
//! degeneracy (or an ill-conditioned float shadow) discards it. Retry k
//! reruns the draw on ChaCha8 stream k of the same seed, so results are
//! reproducible across platforms and the retry sequence is documented by
//! construction.

use crate::chain::{
    center_polygon, closure_residual, propagate, verify_closure, Carrier, CarrierL, Chain,
    ChainConfiguration, QStart,
};
use crate::conic::{brianchon_check, verify_inscribed_conic, ConicKind};
use crate::error::GeneratorError;
use crate::kernel::{Line, Point};
use crate::scalar::{Rat, Scalar};
use num::traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::ops::RangeInclusive;

const RETRY_BUDGET: u32 = 1000;
/// Local redraws for one chain parameter before the whole candidate is
/// discarded.
const PARAM_DRAWS: u32 = 64;
/// Conditioning gates for the float shadow of an emitted configuration.
const GATE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CarrierSeparation {
    /// c(K) strictly nested inside c(L) — the conic is an ellipse.
    KInsideL,
    /// carriers externally disjoint — the conic is a hyperbola.
    KOutsideL,
    /// c(L) is a line avoiding c(K) — the conic is a parabola.
    LIsLine,
}

impl CarrierSeparation {
    fn expected_kind(self) -> ConicKind {
        match self {
            CarrierSeparation::KInsideL => ConicKind::Ellipse,
            CarrierSeparation::KOutsideL => ConicKind::Hyperbola,
            CarrierSeparation::LIsLine => ConicKind::Parabola,
        }
    }
}

#[derive(Debug, Clone)]
pub struct GeneratorProfile {
    pub n_range: RangeInclusive<usize>,
    pub carrier_separation: CarrierSeparation,
    /// Grid bound B: every drawn rational is p/q with |p|, |q| ≤ B.
    pub param_grid: i64,
    /// Lower bound on the squared normalized parameter gap
    /// (tᵢ−tⱼ)² / ((1+tᵢ²)(1+tⱼ²)) — the squared chordal separation of the
    /// corresponding carrier points. Stored squared to stay radical-free.
    pub min_separation_sq: Rat,
    pub seed: u64,
}

impl GeneratorProfile {
    pub fn new(carrier_separation: CarrierSeparation, seed: u64) -> Self {
        GeneratorProfile {
            n_range: 3..=12,
            carrier_separation,
            param_grid: 12,
            min_separation_sq: Rat::from_ratio(1, 400), // (1/20)²
            seed,
        }
    }
}

fn draw_rat(rng: &mut ChaCha8Rng, bound: i64) -> Rat {
    let p = rng.random_range(-bound..=bound);
    let q = rng.random_range(1..=bound);
    Rat::from_ratio(p, q)
}

fn draw_pos_rat(rng: &mut ChaCha8Rng, bound: i64) -> Rat {
    let p = rng.random_range(1..=bound);
    let q = rng.random_range(1..=bound);
    Rat::from_ratio(p, q)
}

fn draw_sign(rng: &mut ChaCha8Rng) -> Rat {
    if rng.random_range(0..2) == 0 {
        Rat::from_int(1)
    } else {
        Rat::from_int(-1)
    }
}

fn draw_carriers(
    rng: &mut ChaCha8Rng,
    separation: CarrierSeparation,
    bound: i64,
) -> Option<(Carrier<Rat>, CarrierL<Rat>)> {
    let lc = Point::new(draw_rat(rng, bound), draw_rat(rng, bound));
    match separation {
        CarrierSeparation::KInsideL => {
            let rk = draw_pos_rat(rng, bound);
            let gap = draw_pos_rat(rng, bound);
            let rl = rk.clone() + gap.clone();
            let u = rng.random_range(-bound..=bound);
            let v = rng.random_range(-bound..=bound);
            if u == 0 && v == 0 {
                return None;
            }
            // |offset| < gap, so c(K) is strictly nested: the scaling puts
            // (u, v) inside the unit disk since u²+v² < 4(1+|u|+|v|)²
            let denom = Rat::from_int(2 * (1 + u.abs() + v.abs()));
            let kc = Point::new(
                lc.x.clone() + gap.clone() * Rat::from_int(u) / denom.clone(),
                lc.y.clone() + gap * Rat::from_int(v) / denom,
            );
            Some((
                Carrier {
                    center: kc,
                    radius: rk,
                },
                CarrierL::Circle(Carrier {
                    center: lc,
                    radius: rl,
                }),
            ))
        }
        CarrierSeparation::KOutsideL => {
            let rk = draw_pos_rat(rng, bound);
            let rl = draw_pos_rat(rng, bound);
            // place K beyond rk + rl from L: externally disjoint carriers
            let shift = (rk.clone() + rl.clone() + draw_pos_rat(rng, bound)) * draw_sign(rng);
            let kc = Point::new(lc.x.clone() + shift, lc.y.clone() + draw_rat(rng, bound));
            Some((
                Carrier {
                    center: kc,
                    radius: rk,
                },
                CarrierL::Circle(Carrier {
                    center: lc,
                    radius: rl,
                }),
            ))
        }
        CarrierSeparation::LIsLine => {
            let kc = lc; // reuse the drawn point as the K center
            let rk = draw_pos_rat(rng, bound);
            let a = rng.random_range(-3i64..=3);
            let b = rng.random_range(-3i64..=3);
            if a == 0 && b == 0 {
                return None;
            }
            // strict avoidance: |a·kx + b·ky + c| = rk(|a|+|b|)(1+ε)
            // exceeds rk·√(a²+b²), so the line misses c(K)
            let reach = rk.clone() * Rat::from_int(a.abs() + b.abs());
            let offset = reach * (Rat::from_int(1) + draw_pos_rat(rng, bound)) * draw_sign(rng);
            let c = -(Rat::from_int(a) * kc.x.clone() + Rat::from_int(b) * kc.y.clone()) + offset;
            Some((
                Carrier {
                    center: kc,
                    radius: rk,
                },
                CarrierL::Line(Line::new(Rat::from_int(a), Rat::from_int(b), c)),
            ))
        }
    }
}

fn draw_params(
    rng: &mut ChaCha8Rng,
    n: usize,
    bound: i64,
    min_sep_sq: &Rat,
) -> Option<Vec<Rat>> {
    let one = Rat::from_int(1);
    let mut params: Vec<Rat> = Vec::with_capacity(n);
    'next: for _ in 0..n {
        for _ in 0..PARAM_DRAWS {
            let t = draw_rat(rng, bound);
            let separated = params.iter().all(|s| {
                let d = t.clone() - s.clone();
                let w = (one.clone() + t.clone() * t.clone())
                    * (one.clone() + s.clone() * s.clone());
                d.clone() * d >= min_sep_sq.clone() * w
            });
            if separated {
                params.push(t);
                continue 'next;
            }
        }
        return None;
    }
    Some(params)
}

/// One full candidate draw; `None` means redraw on the next stream.
fn attempt(n: usize, profile: &GeneratorProfile, rng: &mut ChaCha8Rng) -> Option<ChainConfiguration<Rat>> {
    let bound = profile.param_grid;
    let (carrier_k, carrier_l) = draw_carriers(rng, profile.carrier_separation, bound)?;
    let p_params = draw_params(rng, n, bound, &profile.min_separation_sq)?;
    let q_start = QStart::Param(draw_rat(rng, bound));
    let config = ChainConfiguration {
        carrier_k,
        carrier_l,
        p_params,
        q_start,
    };
    let chain = propagate(&config, 0.0).ok()?;
    if n % 2 == 0 {
        // closure is the theorem's content; a successfully propagated even
        // chain closes exactly
        if !verify_closure(&chain, 0.0) {
            return None;
        }
        let polygon = center_polygon(&chain, 0.0).ok()?;
        let k = &config.carrier_k.center;
        let (conic, _) =
            verify_inscribed_conic(k, &config.carrier_l.generalized(), &polygon, 0.0).ok()?;
        if conic.kind() != profile.carrier_separation.expected_kind() {
            return None;
        }
    }
    well_conditioned(&config, &chain).then_some(config)
}

/// Float-shadow gates: the emitted configuration must reproduce the exact
/// result in f64 to within `GATE_TOL` so the float backend never stumbles
/// on a certified chain.
fn well_conditioned(config: &ChainConfiguration<Rat>, exact: &Chain<Rat>) -> bool {
    let fconfig = config.to_float();
    let Ok(fchain) = propagate(&fconfig, GATE_TOL) else {
        return false;
    };
    let close = |e: &Rat, f: f64| {
        let e = e.to_f64();
        (e - f).abs() <= GATE_TOL * (1.0 + e.abs())
    };
    let points_agree = exact
        .p
        .iter()
        .zip(&fchain.p)
        .chain(exact.q.iter().zip(&fchain.q))
        .all(|(e, f)| close(&e.x, f.x) && close(&e.y, f.y));
    if !points_agree {
        return false;
    }
    let n = config.n();
    if n % 2 != 0 {
        return true;
    }
    if closure_residual(&fchain).abs() > GATE_TOL {
        return false;
    }
    let Ok(fpolygon) = center_polygon(&fchain, GATE_TOL) else {
        return false;
    };
    let k = &fconfig.carrier_k.center;
    if verify_inscribed_conic(k, &fconfig.carrier_l.generalized(), &fpolygon, GATE_TOL).is_err() {
        return false;
    }
    if n == 6 && brianchon_check(&fpolygon, GATE_TOL) != Ok(true) {
        return false;
    }
    true
}

/// Deterministic in (n, seed): retry k runs on ChaCha8 stream k. Also
/// reports how many candidates were rejected before one survived.
pub fn random_config_with_stats(
    n: usize,
    profile: &GeneratorProfile,
) -> Result<(ChainConfiguration<Rat>, u32), GeneratorError> {
    assert!(
        profile.n_range.contains(&n),
        "n outside the profile's range"
    );
    assert!(profile.param_grid >= 8, "param grid bound must be ≥ 8");
    assert!(
        profile.min_separation_sq.is_positive(),
        "minSeparation must be positive"
    );
    for retry in 0..RETRY_BUDGET {
        let mut rng = ChaCha8Rng::seed_from_u64(profile.seed);
        rng.set_stream(retry as u64);
        if let Some(config) = attempt(n, profile, &mut rng) {
            return Ok((config, retry));
        }
    }
    Err(GeneratorError::ExhaustedRetries {
        budget: RETRY_BUDGET,
    })
}

pub fn random_config(
    n: usize,
    profile: &GeneratorProfile,
) -> Result<ChainConfiguration<Rat>, GeneratorError> {
    random_config_with_stats(n, profile).map(|(config, _)| config)
}

/// Fixed hand-chosen configurations for the figure-style scenes. The
/// coordinates are representative, not reproductions of any particular
/// drawing.
pub fn scenario(name: &str) -> Result<ChainConfiguration<Rat>, GeneratorError> {
    let r = Rat::from_ratio;
    let config = match name {
        "fig2-ellipse" => ChainConfiguration {
            carrier_k: Carrier {
                center: Point::new(r(1, 2), r(1, 4)),
                radius: r(1, 1),
            },
            carrier_l: CarrierL::Circle(Carrier {
                center: Point::new(r(0, 1), r(0, 1)),
                radius: r(4, 1),
            }),
            p_params: vec![r(0, 1), r(1, 1), r(-1, 1), r(1, 3), r(3, 1), r(-3, 1)],
            q_start: QStart::Param(r(1, 2)),
        },
        "fig3-parabola" => ChainConfiguration {
            carrier_k: Carrier {
                center: Point::new(r(0, 1), r(3, 1)),
                radius: r(1, 1),
            },
            carrier_l: CarrierL::Line(Line::new(r(0, 1), r(1, 1), r(0, 1))),
            p_params: vec![r(0, 1), r(1, 1), r(-1, 1), r(1, 3), r(3, 1), r(-1, 5)],
            q_start: QStart::Param(r(-3, 1)),
        },
        "hyperbola" => ChainConfiguration {
            carrier_k: Carrier {
                center: Point::new(r(0, 1), r(0, 1)),
                radius: r(1, 1),
            },
            carrier_l: CarrierL::Circle(Carrier {
                center: Point::new(r(6, 1), r(1, 1)),
                radius: r(2, 1),
            }),
            p_params: vec![r(0, 1), r(1, 1), r(-1, 1), r(1, 3), r(3, 1), r(-1, 5)],
            q_start: QStart::Param(r(1, 2)),
        },
        _ => return Err(GeneratorError::UnknownScenario(name.to_string())),
    };
    Ok(config)
}
