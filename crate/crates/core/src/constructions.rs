//! Named body pairs: the octagon and hexagon counterexamples, the ellipse
//! and disk pairs, and seeded random polygon pairs.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::body::{BoundaryPiece, ConvexBody, GraphKind};
use crate::crossing::Predicates;
use crate::error::{Error, Result};
use crate::geom::{pt, Point2, RigidMotion};

#[derive(Clone, Debug, PartialEq)]
pub struct NamedPair {
    pub name: String,
    pub d: ConvexBody,
    pub l: ConvexBody,
    /// `L = motion(D)`.
    pub motion: RigidMotion,
    pub expected: Predicates,
    /// Expected component counts of `D \ L` and `L \ D`, where fixed.
    pub expected_counts: Option<(usize, usize)>,
    pub provenance: &'static str,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairName {
    OctagonPair,
    HexagonPair,
    EllipsePair,
    DiskPair,
}

impl PairName {
    pub const ALL: [PairName; 4] = [
        PairName::OctagonPair,
        PairName::HexagonPair,
        PairName::EllipsePair,
        PairName::DiskPair,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PairName::OctagonPair => "octagon_pair",
            PairName::HexagonPair => "hexagon_pair",
            PairName::EllipsePair => "ellipse_pair",
            PairName::DiskPair => "disk_pair",
        }
    }

    pub fn parse(s: &str) -> Option<PairName> {
        PairName::ALL.into_iter().find(|p| p.as_str() == s)
    }

    /// The pair with default parameters.
    pub fn build(self) -> NamedPair {
        match self {
            PairName::OctagonPair => make_octagon_pair(),
            PairName::HexagonPair => make_hexagon_pair(),
            PairName::EllipsePair => make_ellipse_pair(2.0, 1.0).expect("2 > 1"),
            PairName::DiskPair => make_disk_pair(RigidMotion::translation(pt(1.0, 0.0))),
        }
    }
}

/// Graph arc replacing the edge `a → b` of a counterclockwise polygon,
/// scaled so the canonical span `[-1, 1]` maps onto the edge.
pub fn graph_arc_on_edge(kind: GraphKind, a: Point2, b: Point2) -> BoundaryPiece {
    let e = b - a;
    let frame = RigidMotion::new((-e).angle(), a.lerp(b, 0.5), false);
    BoundaryPiece::GraphArc {
        kind,
        frame,
        scale: 0.5 * e.norm(),
    }
}

/// Regular octagon (circumradius 1, centre at the origin, axis-parallel
/// straight edges) with the four diagonal edges bulged out by parabolic arcs
/// on one opposite pair and quartic arcs on the other.
pub fn octagon_x() -> ConvexBody {
    let v: Vec<Point2> = (0..8)
        .map(|j| Point2::polar(PI / 8.0 + PI / 4.0 * j as f64))
        .collect();
    let pieces = (0..8)
        .map(|j| {
            let (a, b) = (v[j], v[(j + 1) % 8]);
            match j {
                0 | 4 => graph_arc_on_edge(GraphKind::Parabolic, a, b),
                2 | 6 => graph_arc_on_edge(GraphKind::Quartic, a, b),
                _ => BoundaryPiece::Segment { a, b },
            }
        })
        .collect();
    ConvexBody::from_pieces(pieces).expect("octagon construction is valid")
}

/// `Y` is `X` turned by 90° about its centre, which trades parabolic and
/// quartic arc positions.
pub fn make_octagon_pair() -> NamedPair {
    let x = octagon_x();
    let motion = RigidMotion::rotation(FRAC_PI_2);
    NamedPair {
        name: "octagon_pair".into(),
        l: x.apply_motion(&motion),
        d: x,
        motion,
        expected: Predicates::from_array([false, false, false, false, true]),
        expected_counts: Some((2, 2)),
        provenance: "octagon with parabolic and quartic arcs and its quarter turn",
    }
}

/// Radius of the circular arc that replaces a unit hexagon edge, tangent at
/// both ends to the neighbouring edge lines.
///
/// The neighbouring edges meet the chord at 120°, so the tangents turn by
/// 120° along the arc; a chord of length 1 under a 120° arc has radius
/// `1 / (2 sin 60°) = 1/√3`, and the centre sits `r/2` inside the chord
/// midpoint.
pub const HEXAGON_ARC_RADIUS: f64 = 0.577_350_269_189_625_8;

fn hexagon_arc(a: Point2, b: Point2) -> BoundaryPiece {
    let e = b - a;
    let outward = pt(e.y, -e.x) * (1.0 / e.norm());
    let r = HEXAGON_ARC_RADIUS;
    let center = a.lerp(b, 0.5) - outward * (0.5 * r);
    let start = (a - center).angle();
    BoundaryPiece::CircularArc {
        center,
        radius: r,
        start_angle: start,
        end_angle: start + TAU / 3.0,
    }
}

/// Unit regular hexagon (vertices at multiples of 60°, horizontal top and
/// bottom edges) with the edges `V2 V3` and `V5 V0` replaced by tangent
/// circular arcs.
pub fn hexagon_d() -> ConvexBody {
    let v: Vec<Point2> = (0..6).map(|j| Point2::polar(PI / 3.0 * j as f64)).collect();
    let pieces = (0..6)
        .map(|j| {
            let (a, b) = (v[j], v[(j + 1) % 6]);
            if j == 2 || j == 5 {
                hexagon_arc(a, b)
            } else {
                BoundaryPiece::Segment { a, b }
            }
        })
        .collect();
    ConvexBody::from_pieces(pieces).expect("hexagon construction is valid")
}

/// `L` is `D` turned counterclockwise by 60° about the centre.
pub fn make_hexagon_pair() -> NamedPair {
    let d = hexagon_d();
    let motion = RigidMotion::rotation(PI / 3.0);
    NamedPair {
        name: "hexagon_pair".into(),
        l: d.apply_motion(&motion),
        d,
        motion,
        expected: Predicates::from_array([false, true, false, true, true]),
        expected_counts: Some((2, 2)),
        provenance: "hexagon with two tangent circular arcs and its 60° turn",
    }
}

/// Ellipse with semi-axes `a > b` at the origin and its quarter turn.
pub fn make_ellipse_pair(a: f64, b: f64) -> Result<NamedPair> {
    if !(b > 0.0 && a > b) {
        return Err(Error::NotEccentric { a, b });
    }
    let d = ConvexBody::ellipse(Point2::ORIGIN, a, b, 0.0)?;
    let motion = RigidMotion::rotation(FRAC_PI_2);
    Ok(NamedPair {
        name: "ellipse_pair".into(),
        l: d.apply_motion(&motion),
        d,
        motion,
        expected: Predicates::from_array([true, true, true, true, true]),
        expected_counts: Some((2, 2)),
        provenance: "ellipse and its quarter turn about the centre",
    })
}

/// Unit disk at the origin and its image under `motion`.
pub fn make_disk_pair(motion: RigidMotion) -> NamedPair {
    let d = ConvexBody::disk(Point2::ORIGIN, 1.0).expect("unit disk");
    NamedPair {
        name: "disk_pair".into(),
        l: d.apply_motion(&motion),
        d,
        motion,
        expected: Predicates::default(),
        expected_counts: None,
        provenance: "unit disk and a congruent copy",
    }
}

/// Rotation about the origin by a uniform angle, then a translation of
/// uniform length in `[0, max_shift]` and uniform direction; optionally a
/// reflection with probability 1/2.
pub fn random_motion(rng: &mut impl Rng, max_shift: f64, allow_reflection: bool) -> RigidMotion {
    let rotation = rng.random_range(0.0..TAU);
    let len = rng.random_range(0.0..=max_shift);
    let dir = rng.random_range(0.0..TAU);
    let reflect = allow_reflection && rng.random_bool(0.5);
    RigidMotion::new(rotation, Point2::polar(dir) * len, reflect)
}

/// Seeded motion for the disk suite.
pub fn seeded_motion(seed: u64) -> RigidMotion {
    random_motion(&mut ChaCha8Rng::seed_from_u64(seed), 2.0, true)
}

/// Uniform point of the unit disk.
fn disk_point(rng: &mut impl Rng) -> Point2 {
    let r = rng.random_range(0.0f64..1.0).sqrt();
    Point2::polar(rng.random_range(0.0..TAU)) * r
}

/// Minimum area for random hulls; thinner draws are redrawn.
const MIN_RANDOM_AREA: f64 = 1e-3;

/// Convex hull of `k ∈ [3, 12]` uniform points of the unit disk.
pub fn random_polygon(rng: &mut impl Rng) -> ConvexBody {
    loop {
        let k = rng.random_range(3..=12);
        let pts: Vec<Point2> = (0..k).map(|_| disk_point(rng)).collect();
        if let Ok(body) = ConvexBody::convex_hull(&pts) {
            if let Some(vs) = body.polygon_vertices() {
                let n = vs.len();
                let area = 0.5 * (0..n).map(|i| vs[i].cross(vs[(i + 1) % n])).sum::<f64>();
                if area >= MIN_RANDOM_AREA {
                    return body;
                }
            }
        }
    }
}

/// Pair `i` of the random suite for `seed`: two independent random hulls,
/// the second moved by a random rotation and a translation of length in `[0, 2]`.
pub fn random_polygon_pair(seed: u64, index: u64) -> (ConvexBody, ConvexBody, RigidMotion) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let d = random_polygon(&mut rng);
    let l0 = random_polygon(&mut rng);
    let m = random_motion(&mut rng, 2.0, false);
    (d, l0.apply_motion(&m), m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{Direction, TIE_TOL};

    #[test]
    fn octagon_is_valid_and_c1() {
        let x = octagon_x();
        assert!(x.validate().is_empty());
        let kinds: Vec<&str> = x.pieces().iter().map(|p| p.kind_name()).collect();
        assert_eq!(kinds.iter().filter(|k| **k == "parabolic").count(), 2);
        assert_eq!(kinds.iter().filter(|k| **k == "quartic").count(), 2);
        let n = x.pieces().len();
        for i in 0..n {
            let (p, q) = (&x.pieces()[i], &x.pieces()[(i + 1) % n]);
            if p.is_curved() || q.is_curved() {
                assert!(
                    p.tangent_at(1.0).dist(q.tangent_at(0.0)) < 1e-12,
                    "junction {i}"
                );
            }
        }
    }

    #[test]
    fn octagon_rotation_swaps_arc_kinds() {
        let pair = make_octagon_pair();
        // piece j of Y sits on edge j + 2 of X
        for (j, b) in pair.l.pieces().iter().enumerate() {
            let a = &pair.d.pieces()[(j + 2) % 8];
            assert!(a.start().dist(b.start()) < 1e-12);
            let swapped = matches!(
                (a.kind_name(), b.kind_name()),
                ("parabolic", "quartic") | ("quartic", "parabolic") | ("segment", "segment")
            );
            assert!(swapped);
        }
    }

    #[test]
    fn hexagon_arcs_meet_edges_tangentially() {
        let d = hexagon_d();
        assert!(d.validate().is_empty());
        let n = d.pieces().len();
        for i in 0..n {
            let (p, q) = (&d.pieces()[i], &d.pieces()[(i + 1) % n]);
            if p.is_curved() || q.is_curved() {
                assert!(p.tangent_at(1.0).dist(q.tangent_at(0.0)) < 1e-12);
            }
        }
        assert!((HEXAGON_ARC_RADIUS - 1.0 / 3f64.sqrt()).abs() < 1e-16);
    }

    #[test]
    fn ellipse_pair_rejects_circles() {
        assert!(matches!(
            make_ellipse_pair(1.0, 1.0),
            Err(Error::NotEccentric { .. })
        ));
        assert!(make_ellipse_pair(2.0, 1.0).is_ok());
    }

    #[test]
    fn named_pairs_relate_by_motion() {
        for name in PairName::ALL {
            let p = name.build();
            assert!(p.d.validate().is_empty() && p.l.validate().is_empty());
            for k in 0..32 {
                let dir = Direction::new(k as f64 * 0.2);
                let moved = p.d.apply_motion(&p.motion).support_value(dir);
                assert!((moved - p.l.support_value(dir)).abs() < TIE_TOL);
            }
            assert_eq!(PairName::parse(name.as_str()), Some(name));
        }
    }

    #[test]
    fn random_pairs_are_deterministic_and_valid() {
        for i in 0..50 {
            let (a, b, _) = random_polygon_pair(1, i);
            let (c, d, _) = random_polygon_pair(1, i);
            assert_eq!((&a, &b), (&c, &d));
            assert!(a.validate().is_empty() && b.validate().is_empty());
            let k = a.pieces().len();
            assert!((3..=12).contains(&k));
        }
        assert_ne!(random_polygon_pair(1, 0).0, random_polygon_pair(2, 0).0);
    }
}
