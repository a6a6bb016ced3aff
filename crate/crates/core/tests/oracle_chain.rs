//! End-to-end chains checked against independently computed coordinates.
//! Every literal below was produced by a separate exact-arithmetic
//! implementation; these tests freeze the whole pipeline, not just the
//! kernel primitives.

use chain_conic::{
    bisector_coincidence_check, brianchon_check, center_polygon, closure_residual,
    concurrency_det, line_through, propagate, verify_closure, verify_inscribed_conic, Carrier,
    CarrierL, CenterPolygon, Chain, ChainConfiguration, ChainError, ConicError, ConicKind,
    FocalConic, Line, Point, QStart, Rat, Scalar,
};

fn r(n: i64, d: i64) -> Rat {
    Rat::from_ratio(n, d)
}

fn pt(x: Rat, y: Rat) -> Point<Rat> {
    Point::new(x, y)
}

/// Unit circle c(K) at the origin, c(L) centered (4,0) with radius 2.
fn family_config(p_params: Vec<Rat>, q_start: Rat) -> ChainConfiguration<Rat> {
    ChainConfiguration {
        carrier_k: Carrier {
            center: pt(r(0, 1), r(0, 1)),
            radius: r(1, 1),
        },
        carrier_l: CarrierL::Circle(Carrier {
            center: pt(r(4, 1), r(0, 1)),
            radius: r(2, 1),
        }),
        p_params,
        q_start: QStart::Param(q_start),
    }
}

fn closed_polygon(chain: &Chain<Rat>) -> CenterPolygon<Rat> {
    assert!(verify_closure(chain, 0.0));
    center_polygon(chain, 0.0).unwrap()
}

#[test]
fn n4_family_matches_oracle() {
    let cfg = family_config(vec![r(0, 1), r(1, 1), r(-1, 1), r(1, 3)], r(0, 1));
    let chain = propagate(&cfg, 0.0).unwrap();

    let expected_q = [
        pt(r(6, 1), r(0, 1)),
        pt(r(52, 25), r(-14, 25)),
        pt(r(52, 25), r(14, 25)),
        pt(r(76, 29), r(-42, 29)),
    ];
    assert_eq!(chain.q, expected_q);

    let polygon = closed_polygon(&chain);
    let expected_o = [
        pt(r(7, 2), r(7, 2)),
        pt(r(7, 8), r(0, 1)),
        pt(r(7, 5), r(-7, 10)),
        pt(r(7, 2), r(7, 6)),
    ];
    assert_eq!(polygon.vertices, expected_o);

    let (conic, certificates) =
        verify_inscribed_conic(&cfg.carrier_k.center, &cfg.carrier_l.generalized(), &polygon, 0.0)
            .unwrap();
    assert_eq!(conic.kind(), ConicKind::Hyperbola);
    match conic {
        FocalConic::Central { r_sq, focus_l, .. } => {
            assert_eq!(r_sq, r(9, 1));
            assert_eq!(focus_l, pt(r(4, 1), r(0, 1)));
        }
        FocalConic::Parabola { .. } => panic!("central conic expected"),
    }
    for c in &certificates {
        assert_eq!(c.dist_sq_to_l, Some(r(9, 1)));
    }
}

#[test]
fn n6_family_matches_oracle() {
    let cfg = family_config(
        vec![r(0, 1), r(1, 1), r(-1, 1), r(1, 3), r(3, 1), r(-1, 5)],
        r(1, 2),
    );
    let chain = propagate(&cfg, 0.0).unwrap();

    let expected_q = [
        pt(r(26, 5), r(8, 5)),
        pt(r(5772, 2837), r(-1050, 2837)),
        pt(r(5772, 2837), r(1050, 2837)),
        pt(r(9412, 3977), r(-4590, 3977)),
        pt(r(43108, 21193), r(-7790, 21193)),
        pt(r(10452, 2417), r(4770, 2417)),
    ];
    assert_eq!(chain.q, expected_q);

    let polygon = closed_polygon(&chain);
    let expected_o = [
        pt(r(143, 58), r(143, 58)),
        pt(r(715, 888), r(0, 1)),
        pt(r(715, 589), r(-715, 1178)),
        pt(r(0, 1), r(-3575, 2114)),
        pt(r(1430, 997), r(5005, 1994)),
        pt(r(715, 194), r(-143, 194)),
    ];
    assert_eq!(polygon.vertices, expected_o);

    let (conic, _) =
        verify_inscribed_conic(&cfg.carrier_k.center, &cfg.carrier_l.generalized(), &polygon, 0.0)
            .unwrap();
    match conic {
        FocalConic::Central { kind, r_sq, .. } => {
            assert_eq!(kind, ConicKind::Hyperbola);
            assert_eq!(r_sq, r(901, 101));
        }
        FocalConic::Parabola { .. } => panic!("central conic expected"),
    }

    // Brianchon: the determinant vanishes identically, not merely within
    // tolerance.
    let v = &polygon.vertices;
    let d1 = line_through(&v[0], &v[3]).unwrap();
    let d2 = line_through(&v[1], &v[4]).unwrap();
    let d3 = line_through(&v[2], &v[5]).unwrap();
    assert_eq!(concurrency_det(&d1, &d2, &d3), r(0, 1));
    assert_eq!(brianchon_check(&polygon, 0.0), Ok(true));
}

#[test]
fn n6_bisector_coincidence_holds_at_every_vertex() {
    let cfg = family_config(
        vec![r(0, 1), r(1, 1), r(-1, 1), r(1, 3), r(3, 1), r(-1, 5)],
        r(1, 2),
    );
    let chain = propagate(&cfg, 0.0).unwrap();
    for i in 0..chain.n() {
        assert_eq!(bisector_coincidence_check(&chain, i, 0.0), Ok(true));
    }
}

#[test]
fn odd_chain_residuals_are_frozen() {
    let cfg3 = family_config(vec![r(0, 1), r(1, 1), r(-1, 1)], r(1, 2));
    let chain3 = propagate(&cfg3, 0.0).unwrap();
    assert_eq!(closure_residual(&chain3), r(191781200, 2839633379));

    let cfg5 = family_config(vec![r(0, 1), r(1, 1), r(-1, 1), r(1, 3), r(3, 1)], r(1, 2));
    let chain5 = propagate(&cfg5, 0.0).unwrap();
    assert_eq!(
        closure_residual(&chain5),
        r(1904913307440, 20218215482089)
    );

    assert_eq!(center_polygon(&chain3, 0.0), Err(ChainError::NotClosed));
}

#[test]
fn parabola_scenario_matches_oracle() {
    let cfg = ChainConfiguration {
        carrier_k: Carrier {
            center: pt(r(0, 1), r(3, 1)),
            radius: r(1, 1),
        },
        carrier_l: CarrierL::Line(Line::new(r(0, 1), r(1, 1), r(0, 1))),
        p_params: vec![r(0, 1), r(1, 1), r(-1, 1), r(1, 3), r(3, 1), r(-1, 5)],
        q_start: QStart::Param(r(-3, 1)),
    };
    let chain = propagate(&cfg, 0.0).unwrap();

    let expected_p = [
        pt(r(1, 1), r(3, 1)),
        pt(r(0, 1), r(4, 1)),
        pt(r(0, 1), r(2, 1)),
        pt(r(4, 5), r(18, 5)),
        pt(r(-4, 5), r(18, 5)),
        pt(r(12, 13), r(34, 13)),
    ];
    assert_eq!(chain.p, expected_p);

    let expected_q = [
        pt(r(-3, 1), r(0, 1)),
        pt(r(4, 7), r(0, 1)),
        pt(r(14, 1), r(0, 1)),
        pt(r(-2, 5), r(0, 1)),
        pt(r(2, 5), r(0, 1)),
        pt(r(-2, 1), r(0, 1)),
    ];
    assert_eq!(chain.q, expected_q);

    let polygon = closed_polygon(&chain);
    let expected_o = [
        pt(r(-17, 14), r(25, 14)),
        pt(r(51, 7), r(3, 1)),
        pt(r(34, 5), r(-2, 5)),
        pt(r(0, 1), r(28, 15)),
        pt(r(-4, 5), r(8, 5)),
        pt(r(-5, 2), r(7, 2)),
    ];
    assert_eq!(polygon.vertices, expected_o);

    let (conic, certificates) =
        verify_inscribed_conic(&cfg.carrier_k.center, &cfg.carrier_l.generalized(), &polygon, 0.0)
            .unwrap();
    match &conic {
        FocalConic::Parabola { focus, directrix } => {
            assert_eq!(*focus, pt(r(0, 1), r(3, 1)));
            assert!(directrix.same_line(&Line::new(r(0, 1), r(1, 1), r(-24, 25)), 0.0));
        }
        FocalConic::Central { .. } => panic!("parabola expected"),
    }
    for c in &certificates {
        assert_eq!(c.reflected_focus.y, r(24, 25));
        assert_eq!(c.dist_sq_to_l, None);
    }
    assert_eq!(brianchon_check(&polygon, 0.0), Ok(true));
}

#[test]
fn fixed_scene_conics_are_frozen() {
    let ellipse = chain_conic::scenario("fig2-ellipse").unwrap();
    let chain = propagate(&ellipse, 0.0).unwrap();
    let polygon = closed_polygon(&chain);
    let (conic, _) = verify_inscribed_conic(
        &ellipse.carrier_k.center,
        &ellipse.carrier_l.generalized(),
        &polygon,
        0.0,
    )
    .unwrap();
    match conic {
        FocalConic::Central { kind, r_sq, .. } => {
            assert_eq!(kind, ConicKind::Ellipse);
            assert_eq!(r_sq, r(12625, 761));
        }
        FocalConic::Parabola { .. } => panic!("central conic expected"),
    }

    let hyperbola = chain_conic::scenario("hyperbola").unwrap();
    let chain = propagate(&hyperbola, 0.0).unwrap();
    let polygon = closed_polygon(&chain);
    let (conic, _) = verify_inscribed_conic(
        &hyperbola.carrier_k.center,
        &hyperbola.carrier_l.generalized(),
        &polygon,
        0.0,
    )
    .unwrap();
    match conic {
        FocalConic::Central { kind, r_sq, .. } => {
            assert_eq!(kind, ConicKind::Hyperbola);
            assert_eq!(r_sq, r(1013, 113));
        }
        FocalConic::Parabola { .. } => panic!("central conic expected"),
    }
}

#[test]
fn perturbed_polygon_fails_the_certificate() {
    let cfg = family_config(vec![r(0, 1), r(1, 1), r(-1, 1), r(1, 3)], r(0, 1));
    let chain = propagate(&cfg, 0.0).unwrap();
    let mut polygon = closed_polygon(&chain);
    polygon.vertices[2].x += r(1, 1000);
    let err = verify_inscribed_conic(
        &cfg.carrier_k.center,
        &cfg.carrier_l.generalized(),
        &polygon,
        0.0,
    )
    .unwrap_err();
    assert!(matches!(err, ConicError::NotInscribed { .. }));
}

#[test]
fn perturbed_chain_breaks_bisector_coincidence() {
    let cfg = family_config(vec![r(0, 1), r(1, 1), r(-1, 1), r(1, 3)], r(0, 1));
    let mut chain = propagate(&cfg, 0.0).unwrap();
    chain.support[1].center.y += r(1, 1000);
    let results: Vec<bool> = (0..chain.n())
        .map(|i| bisector_coincidence_check(&chain, i, 0.0).unwrap())
        .collect();
    assert!(results.contains(&false));
}

#[test]
fn reversed_traversal_retraces_the_chain() {
    let cfg = family_config(
        vec![r(0, 1), r(1, 1), r(-1, 1), r(1, 3), r(3, 1), r(-1, 5)],
        r(1, 2),
    );
    let chain = propagate(&cfg, 0.0).unwrap();

    let mut reversed_params = cfg.p_params.clone();
    reversed_params.reverse();
    let reversed_cfg = ChainConfiguration {
        q_start: QStart::Point(chain.q.last().unwrap().clone()),
        p_params: reversed_params,
        ..cfg
    };
    let reversed = propagate(&reversed_cfg, 0.0).unwrap();

    let mut expected_p = chain.p.clone();
    expected_p.reverse();
    let mut expected_q = chain.q.clone();
    expected_q.reverse();
    assert_eq!(reversed.p, expected_p);
    assert_eq!(reversed.q, expected_q);
}

#[test]
fn brianchon_rejects_a_non_tangential_hexagon() {
    let vertices = vec![
        pt(r(0, 1), r(0, 1)),
        pt(r(4, 1), r(0, 1)),
        pt(r(5, 1), r(2, 1)),
        pt(r(3, 1), r(5, 1)),
        pt(r(1, 1), r(4, 1)),
        pt(r(-1, 1), r(2, 1)),
    ];
    let polygon = CenterPolygon { vertices };
    let v = &polygon.vertices;
    let d1 = line_through(&v[0], &v[3]).unwrap();
    let d2 = line_through(&v[1], &v[4]).unwrap();
    let d3 = line_through(&v[2], &v[5]).unwrap();
    assert_eq!(concurrency_det(&d1, &d2, &d3), r(-156, 1));
    assert_eq!(brianchon_check(&polygon, 0.0), Ok(false));
}

#[test]
fn chain_steps_never_reuse_points() {
    // every support circle carries its defining quadruple
    let cfg = family_config(
        vec![r(0, 1), r(1, 1), r(-1, 1), r(1, 3), r(3, 1), r(-1, 5)],
        r(1, 2),
    );
    let chain = propagate(&cfg, 0.0).unwrap();
    let n = chain.n();
    for i in 0..n {
        let circle = &chain.support[i];
        assert!(circle.contains(&chain.p[i], 0.0));
        assert!(circle.contains(&chain.q[i], 0.0));
        assert!(circle.contains(&chain.q[(i + 1) % n], 0.0));
        assert!(circle.contains(&chain.p[(i + 1) % n], 0.0));
        assert_ne!(chain.p[i], chain.q[i]);
        assert_ne!(chain.q[i], chain.q[(i + 1) % n]);
    }
}
