//! The exact clipping referee used by the acceptance suite, checked on
//! configurations with known component counts, then against the rule.

#[path = "support/clip.rs"]
mod clip;

use crosskit_core::constructions::random_polygon_pair;
use crosskit_core::crossing::evaluate_pair;
use crosskit_core::tangency::SearchConfig;
use crosskit_core::{pt, Point2};

fn square(cx: f64, cy: f64, r: f64, phase: f64) -> Vec<Point2> {
    (0..4)
        .map(|i| pt(cx, cy) + Point2::polar(phase + i as f64 * std::f64::consts::FRAC_PI_2) * r)
        .collect()
}

#[test]
fn known_counts() {
    let a = square(0.0, 0.0, 1.0, 0.0);
    let cases = [
        (square(0.3, 0.1, 1.0, 0.0), 1),
        (square(0.0, 0.0, 1.0, std::f64::consts::FRAC_PI_4), 4),
        (square(5.0, 0.0, 1.0, 0.0), 1),
        (square(0.0, 0.0, 2.0, 0.0), 0),
        (square(0.0, 0.0, 0.5, 0.0), 1),
    ];
    for (b, want) in cases {
        assert_eq!(
            clip::difference_components(&a, &b, 1e-18).len(),
            want,
            "{b:?}"
        );
    }
    // both squares have area 2 and meet in a regular octagon of inradius √2/2
    let b = square(0.0, 0.0, 1.0, std::f64::consts::FRAC_PI_4);
    let total: f64 = clip::difference_components(&a, &b, 1e-18).iter().sum();
    let octagon = 4.0 * (std::f64::consts::PI / 8.0).tan();
    assert!((total - (2.0 - octagon)).abs() < 1e-12, "{total}");
}

#[test]
fn rule_matches_clipping_on_random_pairs() {
    let cfg = SearchConfig::default();
    for index in 0..300 {
        let (d, l, _) = random_polygon_pair(3, index);
        let r = evaluate_pair(&d, &l, &cfg).unwrap();
        if r.is_ambiguous() {
            continue;
        }
        let (vd, vl) = (d.polygon_vertices().unwrap(), l.polygon_vertices().unwrap());
        let exact = (
            clip::difference_components(&vd, &vl, 1e-18).len(),
            clip::difference_components(&vl, &vd, 1e-18).len(),
        );
        assert_eq!(r.counts, exact, "index {index}");
    }
}
