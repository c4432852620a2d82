mod common;

use std::cmp::Ordering;
use std::f64::consts::TAU;

use common::rng;
use minperim::geometry::{ConvexBody, Vec2};
use minperim::lattice::{
    count_lattice_points, count_primitive_points, increasing_slope_construct, lattice_hull,
    primitive_vectors_in_disk, slope_cmp, slope_order, LatticePolygon, LatticeVector, RealPolygon,
};
use proptest::prelude::*;
use rand::Rng;

fn lv(x: i64, y: i64) -> LatticeVector {
    LatticeVector::new(x, y)
}

fn float_angle(v: LatticeVector) -> f64 {
    (v.y as f64).atan2(v.x as f64).rem_euclid(TAU)
}

fn nonzero() -> impl Strategy<Value = LatticeVector> {
    (-40i64..=40, -40i64..=40)
        .prop_filter("nonzero", |&(x, y)| (x, y) != (0, 0))
        .prop_map(|(x, y)| lv(x, y))
}

/// A random convex lattice polygon: hull of random points.
fn hull_polygon(seed: u64) -> Option<LatticePolygon> {
    let mut g = rng(seed);
    let r = g.gen_range(2..30);
    let pts: Vec<LatticeVector> = (0..g.gen_range(3..25))
        .map(|_| lv(g.gen_range(-r..=r), g.gen_range(-r..=r)))
        .collect();
    LatticePolygon::new(lattice_hull(&pts)).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// Small coordinates keep atan2 exact enough to separate distinct
    /// directions, so it serves as an oracle for the integer comparator.
    #[test]
    fn slope_order_matches_angles(a in nonzero(), b in nonzero()) {
        let by_angle = if a.cross(b) == 0 && a.dot(b) > 0 {
            a.norm_sq().cmp(&b.norm_sq())
        } else {
            float_angle(a).total_cmp(&float_angle(b))
        };
        prop_assert_eq!(slope_cmp(a, b), by_angle);
    }

    #[test]
    fn slope_order_is_sorted_and_a_permutation(v in prop::collection::vec(nonzero(), 1..40)) {
        let sorted = slope_order(v.clone());
        prop_assert!(sorted.windows(2).all(|w| slope_cmp(w[0], w[1]) != Ordering::Greater));
        let (mut a, mut b) = (v, sorted);
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn edges_rebuild_the_polygon(seed in any::<u64>()) {
        if let Some(p) = hull_polygon(seed) {
            let rebuilt = increasing_slope_construct(&p.edges()).unwrap();
            prop_assert!(rebuilt.merges.is_empty());
            prop_assert_eq!(rebuilt.polygon.normalized(), p.normalized());
            prop_assert_eq!(LatticePolygon::from_edges(&p.edges()).unwrap().normalized(), p.normalized());
        }
    }

    #[test]
    fn construction_merges_parallel_vectors(v in prop::collection::vec(nonzero(), 2..20)) {
        let mut v = v;
        let closing: LatticeVector = -v.iter().sum::<LatticeVector>();
        v.push(closing);
        match increasing_slope_construct(&v) {
            Ok(c) => {
                let edges = c.polygon.edges();
                // One edge per direction, equal to the sum of that direction's inputs.
                for e in &edges {
                    let sum: LatticeVector = v.iter().filter(|z| z.same_direction(*e)).sum();
                    prop_assert_eq!(sum, *e);
                }
                prop_assert!(edges.windows(2).all(|w| w[0].cross(w[1]) > 0));
                let merged: usize = c.merges.iter().map(|m| m.parts.len() - 1).sum();
                let nonzero = v.iter().filter(|z| !z.is_zero()).count();
                prop_assert_eq!(edges.len() + merged, nonzero);
            }
            Err(_) => {
                // Only when fewer than three directions exist.
                let dirs: Vec<LatticeVector> = v.iter().copied().filter(|z| !z.is_zero()).collect();
                let distinct = slope_order(dirs.clone())
                    .windows(2)
                    .filter(|w| !w[0].same_direction(w[1]))
                    .count()
                    + usize::from(!dirs.is_empty());
                prop_assert!(distinct < 3);
            }
        }
    }

    #[test]
    fn hull_contains_all_points(seed in any::<u64>()) {
        let mut g = rng(seed);
        let pts: Vec<LatticeVector> = (0..30).map(|_| lv(g.gen_range(-9..=9), g.gen_range(-9..=9))).collect();
        let h = lattice_hull(&pts);
        if h.len() >= 3 {
            for p in &pts {
                for i in 0..h.len() {
                    let e = h[(i + 1) % h.len()] - h[i];
                    prop_assert!(e.cross(*p - h[i]) >= 0);
                }
            }
        }
    }

    #[test]
    fn counts_match_brute_force(seed in any::<u64>()) {
        let mut g = rng(seed);
        let c = Vec2::new(g.gen_range(-3.0..3.0), g.gen_range(-3.0..3.0));
        let r = g.gen_range(1.0..12.0);
        let pts: Vec<Vec2> = (0..8)
            .map(|_| c + Vec2::new(g.gen_range(-r..r), g.gen_range(-r..r)))
            .collect();
        if let Ok(poly) = RealPolygon::hull(&pts) {
            let v = poly.vertices();
            let inside = |x: i64, y: i64| {
                let q = Vec2::new(x as f64, y as f64);
                (0..v.len()).all(|i| {
                    let e = v[(i + 1) % v.len()] - v[i];
                    let d = q - v[i];
                    e.x * d.y - e.y * d.x >= -1e-9
                })
            };
            let (mut all, mut prim) = (0u64, 0u64);
            for x in -20..=20 {
                for y in -20..=20 {
                    if inside(x, y) {
                        all += 1;
                        if lv(x, y).is_primitive() {
                            prim += 1;
                        }
                    }
                }
            }
            prop_assert_eq!(count_lattice_points(&poly).count, all);
            prop_assert_eq!(count_primitive_points(&poly).count, prim);
        }
    }
}

#[test]
fn primitive_enumeration_matches_brute_force() {
    for radius in [0.5, 1.0, 2.3, 7.0, 15.5] {
        let mut got = primitive_vectors_in_disk(radius).unwrap();
        got.sort();
        let r = radius.ceil() as i64;
        let mut want = Vec::new();
        for x in -r..=r {
            for y in -r..=r {
                let z = lv(x, y);
                if !z.is_zero() && z.is_primitive() && ((x * x + y * y) as f64) <= radius * radius {
                    want.push(z);
                }
            }
        }
        want.sort();
        assert_eq!(got, want, "radius {radius}");
    }
}

#[test]
fn polygon_perimeter_is_orientation_sensitive() {
    let tri = ConvexBody::polygon(vec![Vec2::new(2.0, -1.0), Vec2::new(-1.0, 2.0), Vec2::new(-1.0, -1.0)]).unwrap();
    let p = LatticePolygon::new(vec![lv(0, 0), lv(1, 0), lv(1, 1)]).unwrap();
    let anticlockwise = p.perimeter(&tri);
    let clockwise = p.perimeter(&tri.reflected());
    // Edges (1,0), (0,1), (-1,-1) against their negatives.
    let sum = |s: f64| [lv(1, 0), lv(0, 1), lv(-1, -1)].iter().map(|e| tri.norm(e.to_vec2() * s)).sum::<f64>();
    assert!((anticlockwise - sum(1.0)).abs() < 1e-12);
    assert!((clockwise - sum(-1.0)).abs() < 1e-12);
    assert!((anticlockwise - 3.0).abs() < 1e-12);
    assert!((clockwise - 4.0).abs() < 1e-12);
}

#[test]
fn invalid_polygons_are_rejected() {
    assert!(LatticePolygon::new(vec![lv(0, 0), lv(0, 1), lv(1, 0)]).is_err());
    assert!(LatticePolygon::new(vec![lv(0, 0), lv(1, 0), lv(2, 0), lv(0, 1)]).is_err());
    assert!(increasing_slope_construct(&[lv(1, 0), lv(0, 1)]).is_err());
    assert!(increasing_slope_construct(&[lv(1, 0), lv(-1, 0)]).is_err());
}
