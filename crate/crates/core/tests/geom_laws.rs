//! Laws of directions, directed lines and rigid motions.

use std::f64::consts::{PI, TAU};

use proptest::prelude::*;

use crosskit_core::constructions::PairName;
use crosskit_core::geom::reduce_angle;
use crosskit_core::{pt, AlongOrder, DirectedLine, Direction, Point2, RigidMotion, TIE_TOL};

fn motion() -> impl Strategy<Value = RigidMotion> {
    (-10.0..10.0f64, -5.0..5.0f64, -5.0..5.0f64, any::<bool>())
        .prop_map(|(r, x, y, f)| RigidMotion::new(r, pt(x, y), f))
}

proptest! {
    #[test]
    fn normal_flips_under_half_turn(a in -100.0..100.0f64) {
        let (n, m) = (Direction::new(a).normal(), Direction::new(a + PI).normal());
        prop_assert!((n + m).norm() <= 1e-12);
        prop_assert!(Direction::new(a).unit().dot(n).abs() <= 1e-12);
    }

    #[test]
    fn reduction_is_idempotent(a in -1e4..1e4f64) {
        let r = reduce_angle(a);
        prop_assert!((0.0..TAU).contains(&r));
        prop_assert_eq!(reduce_angle(r), r);
    }

    #[test]
    fn along_order_is_a_total_preorder(a in 0.0..TAU, c in -3.0..3.0f64, s in prop::collection::vec(-5.0..5.0f64, 3)) {
        let line = DirectedLine::new(Direction::new(a), c);
        let p: Vec<Point2> = s.iter().map(|&t| line.point_at(t)).collect();
        let ord = |i: usize, j: usize| line.along_order(p[i], p[j], TIE_TOL).unwrap();
        for i in 0..3 {
            prop_assert_eq!(ord(i, i), AlongOrder::Equal);
            for j in 0..3 {
                let flipped = match ord(j, i) {
                    AlongOrder::Before => AlongOrder::After,
                    AlongOrder::After => AlongOrder::Before,
                    AlongOrder::Equal => AlongOrder::Equal,
                };
                prop_assert_eq!(ord(i, j), flipped);
                for k in 0..3 {
                    if ord(i, j) == AlongOrder::Before && ord(j, k) == AlongOrder::Before {
                        prop_assert_eq!(ord(i, k), AlongOrder::Before);
                    }
                }
            }
        }
    }

    #[test]
    fn motions_preserve_distances_and_invert(m in motion(), pts in prop::collection::vec((-5.0..5.0f64, -5.0..5.0f64), 2..8)) {
        let pts: Vec<Point2> = pts.into_iter().map(|(x, y)| pt(x, y)).collect();
        let inv = m.inverse();
        for &p in &pts {
            prop_assert!(inv.apply(m.apply(p)).dist(p) <= 1e-9);
            for &q in &pts {
                prop_assert!((m.apply(p).dist(m.apply(q)) - p.dist(q)).abs() <= 1e-9);
            }
        }
    }

    #[test]
    fn composition_is_associative(a in motion(), b in motion(), c in motion(), x in -5.0..5.0f64, y in -5.0..5.0f64) {
        let p = pt(x, y);
        let left = a.compose(&b).compose(&c).apply(p);
        let right = a.compose(&b.compose(&c)).apply(p);
        prop_assert!(left.dist(right) <= 1e-9);
    }

    #[test]
    fn bodies_return_under_the_inverse_motion(m in motion(), which in 0..4usize) {
        let body = PairName::ALL[which].build().d;
        let back = body.apply_motion(&m).apply_motion(&m.inverse());
        for (p, q) in body.boundary_samples(16).iter().zip(back.boundary_samples(16)) {
            prop_assert!(p.dist(q) <= 1e-9);
        }
    }
}
