mod common;

use std::f64::consts::{PI, TAU};

use common::{quadrilateral, random_ellipse_focus, random_polygon_body, rng};
use minperim::geometry::{unit, BodySpec, ConvexBody, RadialFunction, Vec2};
use proptest::prelude::*;
use rand::Rng;

fn body_from_seed(seed: u64) -> ConvexBody {
    let mut g = rng(seed);
    match seed % 3 {
        0 => random_polygon_body(&mut g, 7),
        1 => random_ellipse_focus(&mut g),
        _ => {
            // Smooth radial body: a centred ellipse shifted off the origin,
            // described through its radial function.
            let (p, q, shift) = (g.gen_range(0.6..1.6), g.gen_range(0.6..1.6), g.gen_range(-0.3..0.3));
            let poly = ConvexBody::polygon(
                (0..256)
                    .map(|k| {
                        let t = TAU * k as f64 / 256.0;
                        Vec2::new(p * t.cos() + shift, q * t.sin())
                    })
                    .collect(),
            )
            .unwrap();
            ConvexBody::radial(poly.sample(1024).unwrap())
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gauge_is_positively_homogeneous(seed in any::<u64>(), t in 0.0..TAU, len in 0.01f64..50.0, lambda in 0.0f64..20.0) {
        let body = body_from_seed(seed);
        let x = unit(t) * len;
        let lhs = body.norm(x * lambda);
        let rhs = lambda * body.norm(x);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + rhs));
    }

    #[test]
    fn boundary_has_norm_one(seed in any::<u64>(), t in 0.0..TAU) {
        let body = body_from_seed(seed);
        let x = unit(t) * body.radial_value(t);
        prop_assert!((body.norm(x) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sandwich_between_euclidean_balls(seed in any::<u64>(), t in 0.0..TAU, len in 0.01f64..50.0) {
        let body = body_from_seed(seed);
        let x = unit(t) * len;
        let g = body.norm(x);
        prop_assert!(g >= len / body.r_out() * (1.0 - 1e-12));
        prop_assert!(g <= len / body.r_in() * (1.0 + 1e-12));
    }

    #[test]
    fn reflection_negates_arguments(seed in any::<u64>(), t in 0.0..TAU) {
        let body = body_from_seed(seed);
        let x = unit(t) * 2.5;
        prop_assert!((body.reflected().norm(x) - body.norm(-x)).abs() < 1e-12);
    }

    #[test]
    fn scaling_divides_the_gauge(seed in any::<u64>(), t in 0.0..TAU, s in 0.1f64..10.0) {
        let body = body_from_seed(seed);
        let x = unit(t) * 1.7;
        prop_assert!((body.scaled(s).norm(x) - body.norm(x) / s).abs() < 1e-12 * (1.0 + body.norm(x) / s));
        prop_assert!((body.scaled_to_unit_area().area() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn json_round_trip(seed in any::<u64>(), t in 0.0..TAU) {
        let body = body_from_seed(seed);
        let back: ConvexBody = serde_json::from_str(&serde_json::to_string(&body).unwrap()).unwrap();
        let x = unit(t);
        prop_assert!((back.norm(x) - body.norm(x)).abs() < 1e-12);
    }
}

/// Exact gauges are sub-additive to rounding. A radial body interpolates `r`
/// linearly in angle, which bends the chords between samples, so its gauge is
/// sub-additive only up to a relative `O(h²)` defect.
#[test]
fn subadditive_on_ten_thousand_pairs() {
    let mut g = rng(11);
    let bodies = [
        ConvexBody::unit_area_disk(),
        quadrilateral(),
        ConvexBody::ellipse_focus(1.0, Vec2::new(0.7, -0.2)).unwrap(),
        body_from_seed(2),
        body_from_seed(5),
    ];
    for body in &bodies {
        let slack = if body.has_exact_gauge() {
            1e-12
        } else {
            let h = TAU / body.sample(1024).unwrap().len() as f64;
            h * h
        };
        for _ in 0..2000 {
            let x = Vec2::new(g.gen_range(-5.0..5.0), g.gen_range(-5.0..5.0));
            let y = Vec2::new(g.gen_range(-5.0..5.0), g.gen_range(-5.0..5.0));
            let lhs = body.norm(x + y);
            let rhs = body.norm(x) + body.norm(y);
            assert!(lhs <= rhs * (1.0 + slack) + 1e-12, "{lhs} > {rhs}");
        }
    }
}

#[test]
fn documented_gauges() {
    let disk = ConvexBody::unit_area_disk();
    assert!((disk.norm(Vec2::new(1.0, 0.0)) - PI.sqrt()).abs() < 1e-12);
    assert!((disk.area() - 1.0).abs() < 1e-12);
    // Ellipse with focus at the origin: (|x| + e·x)/p.
    let ef = ConvexBody::ellipse_focus(2.0, Vec2::new(0.5, 0.0)).unwrap();
    assert!((ef.norm(Vec2::new(1.0, 0.0)) - 0.75).abs() < 1e-15);
    assert!((ef.norm(Vec2::new(-1.0, 0.0)) - 0.25).abs() < 1e-15);
    // Square of half side 1 is the max norm.
    let sq = ConvexBody::square(1.0).unwrap();
    assert!((sq.norm(Vec2::new(0.3, -0.8)) - 0.8).abs() < 1e-15);
}

#[test]
fn invalid_bodies_are_rejected() {
    let not_convex = r#"{"type": "polygon", "vertices": [[1, 0], [0, 1], [-1, 0], [0.5, 0.2]]}"#;
    assert!(serde_json::from_str::<ConvexBody>(not_convex).is_err());
    let outside = r#"{"type": "polygon", "vertices": [[1, 1], [2, 1], [1, 2]]}"#;
    assert!(serde_json::from_str::<ConvexBody>(outside).is_err());
    assert!(ConvexBody::ellipse_focus(1.0, Vec2::new(1.0, 0.0)).is_err());
    assert!(ConvexBody::disk(-1.0).is_err());
    assert!(RadialFunction::new(vec![1.0; 100]).is_err());
    assert!(RadialFunction::new(vec![1.0, 1.0, f64::NAN, 1.0]).is_err());
    let spec: BodySpec = serde_json::from_str(r#"{"type": "disk"}"#).unwrap();
    assert!((ConvexBody::try_from(spec).unwrap().area() - 1.0).abs() < 1e-12);
}
