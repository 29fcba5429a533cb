//! Support-function and membership laws on catalog and random bodies.

use std::f64::consts::TAU;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crosskit_core::body::ConvexBody;
use crosskit_core::constructions::{random_polygon, PairName};
use crosskit_core::{Direction, Point2, RigidMotion, TIE_TOL};

fn catalog() -> Vec<ConvexBody> {
    PairName::ALL
        .iter()
        .flat_map(|n| {
            let np = n.build();
            [np.d, np.l]
        })
        .collect()
}

fn body_for(seed: u64) -> ConvexBody {
    let cat = catalog();
    if seed.is_multiple_of(3) {
        cat[(seed / 3) as usize % cat.len()].clone()
    } else {
        random_polygon(&mut ChaCha8Rng::seed_from_u64(seed))
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn translation_covariance(seed in any::<u64>(), vx in -10.0..10.0f64, vy in -10.0..10.0f64, a in 0.0..TAU) {
        let body = body_for(seed);
        let v = Point2 { x: vx, y: vy };
        let moved = body.apply_motion(&RigidMotion::translation(v));
        let dir = Direction::new(a);
        let want = body.support_value(dir) + v.dot(dir.normal());
        prop_assert!((moved.support_value(dir) - want).abs() <= 1e-9);
    }

    #[test]
    fn rotation_covariance(seed in any::<u64>(), theta in -10.0..10.0f64, a in 0.0..TAU) {
        let body = body_for(seed);
        let moved = body.apply_motion(&RigidMotion::rotation(theta));
        let dir = Direction::new(a);
        let want = body.support_value(Direction::new(a - theta));
        prop_assert!((moved.support_value(dir) - want).abs() <= 1e-9);
    }

    #[test]
    fn polygon_support_is_vertex_max(seed in any::<u64>(), a in 0.0..TAU) {
        let body = random_polygon(&mut ChaCha8Rng::seed_from_u64(seed));
        let dir = Direction::new(a);
        let vmax = body.polygon_vertices().unwrap().iter().map(|v| v.dot(dir.normal())).fold(f64::NEG_INFINITY, f64::max);
        prop_assert_eq!(body.support_value(dir), vmax);
    }

    #[test]
    fn contact_endpoints_on_supporting_line(seed in any::<u64>(), a in 0.0..TAU) {
        let body = body_for(seed);
        let c = body.contact_set(Direction::new(a));
        for p in [c.first, c.last] {
            prop_assert!((p.dot(c.dir.normal()) - c.offset).abs() <= 1e-9);
        }
    }
}

/// `contains` against "⟨P, n(α)⟩ ≤ h(α) + tol for 4096 sampled α".
#[test]
fn contains_matches_dense_direction_oracle() {
    const DIRS: usize = 4096;
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let dirs: Vec<Direction> = (0..DIRS)
        .map(|k| Direction::new(k as f64 * TAU / DIRS as f64))
        .collect();
    let mut bodies = catalog();
    bodies.extend((0..92).map(|_| random_polygon(&mut rng)));
    let mut mismatches = Vec::new();
    for body in &bodies {
        let h: Vec<f64> = dirs.iter().map(|d| body.support_value(*d)).collect();
        let (lo, hi) = body.bbox();
        let pad = (hi - lo) * 0.2;
        for _ in 0..100 {
            let p = Point2 {
                x: rng.random_range(lo.x - pad.x..hi.x + pad.x),
                y: rng.random_range(lo.y - pad.y..hi.y + pad.y),
            };
            let oracle = dirs
                .iter()
                .zip(&h)
                .all(|(d, h)| p.dot(d.normal()) <= h + TIE_TOL);
            if body.contains(p).is_inside() != oracle {
                mismatches.push((body, p));
            }
        }
    }
    // sampled directions can only miss the narrow range of separating
    // normals at a corner; a much finer sweep must find it
    const FINE: usize = 1 << 18;
    for (body, p) in &mismatches {
        assert!(!body.contains(*p).is_inside());
        let separated = (0..FINE).any(|k| {
            let d = Direction::new(k as f64 * TAU / FINE as f64);
            p.dot(d.normal()) > body.support_value(d) + TIE_TOL
        });
        assert!(
            separated,
            "{p} is not separated by any of {FINE} directions"
        );
    }
    assert!(
        mismatches.len() <= 10,
        "{} mismatches in 10⁴ points",
        mismatches.len()
    );
}
