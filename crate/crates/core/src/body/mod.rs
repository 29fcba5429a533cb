//! Compact convex bodies bounded by a counterclockwise chain of pieces.

mod piece;

use std::f64::consts::{PI, TAU};
use std::fmt;

use serde::{Deserialize, Serialize};

pub use piece::{BoundaryPiece, GraphKind};

use crate::error::{Error, Result};
use crate::geom::{pt, DirectedLine, Direction, Point2, RigidMotion, TIE_TOL};

/// Allowed gap between consecutive pieces of a chain.
pub const CLOSURE_TOL: f64 = 1e-8;
/// Allowed clockwise tangent jump at a junction.
pub const TURN_TOL: f64 = 1e-9;
/// Allowed deviation of the accumulated tangent turn from 2π.
pub const TOTAL_TURN_TOL: f64 = 1e-6;
/// Pieces shorter than this are rejected.
pub const MIN_PIECE_LENGTH: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Membership {
    Interior,
    Boundary,
    Outside,
}

impl Membership {
    /// Closed-set membership: boundary counts as inside.
    pub fn is_inside(self) -> bool {
        self != Membership::Outside
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BodyKind {
    Point,
    Segment,
    Region,
}

/// A broken invariant reported by [`ConvexBody::validate`].
#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    ChainNotClosed { after_piece: usize, gap: f64 },
    TangentTurnNegative { after_piece: usize, turn: f64 },
    TotalTurn { turn: f64 },
    ZeroLength { piece: usize },
    BadParameter { piece: usize, reason: String },
    NonFinite { piece: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ChainNotClosed { after_piece, gap } => {
                write!(
                    f,
                    "chain not closed after piece {after_piece} (gap {gap:e})"
                )
            }
            Violation::TangentTurnNegative { after_piece, turn } => {
                write!(
                    f,
                    "tangent turn negative after piece {after_piece} ({turn:e} rad)"
                )
            }
            Violation::TotalTurn { turn } => write!(f, "total tangent turn {turn} differs from 2π"),
            Violation::ZeroLength { piece } => write!(f, "piece {piece} has zero length"),
            Violation::BadParameter { piece, reason } => write!(f, "piece {piece}: {reason}"),
            Violation::NonFinite { piece } => write!(f, "piece {piece} has non-finite coordinates"),
        }
    }
}

/// Points of a body on its supporting line of one direction, ordered along it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ContactSet {
    pub dir: Direction,
    pub offset: f64,
    pub first: Point2,
    pub last: Point2,
}

impl ContactSet {
    pub fn line(&self) -> DirectedLine {
        DirectedLine::new(self.dir, self.offset)
    }

    pub fn is_point(&self, tol: f64) -> bool {
        self.first.dist(self.last) <= tol
    }

    /// Coordinate interval `[first, last]` along the line direction.
    pub fn interval(&self) -> (f64, f64) {
        let u = self.dir.unit();
        (self.first.dot(u), self.last.dot(u))
    }
}

/// Position on a boundary chain: piece index and local parameter.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChainPos {
    pub piece: usize,
    pub t: f64,
}

impl ChainPos {
    pub fn new(piece: usize, t: f64) -> Self {
        Self { piece, t }
    }

    /// Single real coordinate `piece + t`, increasing counterclockwise.
    pub fn scalar(&self) -> f64 {
        self.piece as f64 + self.t
    }
}

/// A nonempty compact convex set of the plane.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexBody {
    pieces: Vec<BoundaryPiece>,
    anchor: Point2,
}

impl ConvexBody {
    pub fn point(p: Point2) -> Self {
        Self {
            pieces: Vec::new(),
            anchor: p,
        }
    }

    pub fn segment(a: Point2, b: Point2) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::shape("vertices", "non-finite coordinate"));
        }
        if a.dist(b) <= TIE_TOL {
            return Err(Error::shape("vertices", "segment endpoints coincide"));
        }
        Ok(Self {
            pieces: vec![
                BoundaryPiece::Segment { a, b },
                BoundaryPiece::Segment { a: b, b: a },
            ],
            anchor: a,
        })
    }

    pub fn disk(center: Point2, radius: f64) -> Result<Self> {
        if !center.is_finite() {
            return Err(Error::shape("center", "non-finite coordinate"));
        }
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::shape(
                "radius",
                format!("must be positive, got {radius}"),
            ));
        }
        Ok(Self {
            pieces: vec![BoundaryPiece::CircularArc {
                center,
                radius,
                start_angle: -PI / 2.0,
                end_angle: 1.5 * PI,
            }],
            anchor: center,
        })
    }

    /// Ellipse with semi-axes `a` (along `angle`) and `b`.
    pub fn ellipse(center: Point2, a: f64, b: f64, angle: f64) -> Result<Self> {
        if !center.is_finite() {
            return Err(Error::shape("center", "non-finite coordinate"));
        }
        for (name, v) in [("a", a), ("b", b)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::shape(
                    name,
                    format!("semi-axis must be positive, got {v}"),
                ));
            }
        }
        if !angle.is_finite() {
            return Err(Error::shape("angle", "non-finite"));
        }
        // start the parametrization at the lowest point
        let nl = pt(0.0, -1.0).rotate(-angle);
        let start = (b * nl.y).atan2(a * nl.x);
        Ok(Self {
            pieces: vec![BoundaryPiece::EllipticArc {
                center,
                a,
                b,
                rotation: angle,
                start,
                end: start + TAU,
            }],
            anchor: center,
        })
    }

    /// Polygon from its vertices in cyclic order; clockwise input is reversed.
    pub fn polygon(vertices: &[Point2]) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::shape("vertices", "need at least 3 vertices"));
        }
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(Error::shape("vertices", "non-finite coordinate"));
        }
        let n = vertices.len();
        let area2: f64 = (0..n)
            .map(|i| vertices[i].cross(vertices[(i + 1) % n]))
            .sum();
        if area2.abs() <= TIE_TOL * TIE_TOL {
            return Err(Error::shape("vertices", "vertices are collinear"));
        }
        let mut vs = vertices.to_vec();
        if area2 < 0.0 {
            vs.reverse();
        }
        let pieces = (0..n)
            .map(|i| BoundaryPiece::Segment {
                a: vs[i],
                b: vs[(i + 1) % n],
            })
            .collect();
        let body = Self {
            pieces,
            anchor: vs[0],
        };
        let violations = body.validate();
        if violations.is_empty() {
            Ok(body)
        } else {
            Err(Error::shape(
                "vertices",
                violations
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join("; "),
            ))
        }
    }

    /// Regular `n`-gon with the first vertex at polar angle `phase`.
    pub fn regular_polygon(
        center: Point2,
        n: usize,
        circumradius: f64,
        phase: f64,
    ) -> Result<Self> {
        if n < 3 {
            return Err(Error::shape("n", "need at least 3 sides"));
        }
        if !(circumradius > 0.0 && circumradius.is_finite()) {
            return Err(Error::shape("circumradius", "must be positive"));
        }
        let vs: Vec<Point2> = (0..n)
            .map(|k| center + Point2::polar(phase + TAU * k as f64 / n as f64) * circumradius)
            .collect();
        Self::polygon(&vs)
    }

    /// Body from an explicit counterclockwise chain, validated.
    pub fn from_pieces(pieces: Vec<BoundaryPiece>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::shape("pieces", "empty piece list"));
        }
        let body = Self::from_pieces_unchecked(pieces);
        let violations = body.validate();
        if violations.is_empty() {
            Ok(body)
        } else {
            Err(Error::InvalidBody(violations))
        }
    }

    /// Body from a chain without validation (for diagnostics).
    pub fn from_pieces_unchecked(pieces: Vec<BoundaryPiece>) -> Self {
        let anchor = pieces.first().map(|p| p.start()).unwrap_or_default();
        Self { pieces, anchor }
    }

    /// Smallest convex set containing the points; every vertex is an input point.
    pub fn convex_hull(points: &[Point2]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyInput);
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(Error::shape("points", "non-finite coordinate"));
        }
        let mut ps = points.to_vec();
        ps.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
        ps.dedup();
        if ps.len() == 1 {
            return Ok(Self::point(ps[0]));
        }
        let turn = |o: Point2, a: Point2, b: Point2| (a - o).cross(b - o);
        let mut hull: Vec<Point2> = Vec::with_capacity(2 * ps.len());
        for pass in 0..2 {
            let start = hull.len();
            let iter: Box<dyn Iterator<Item = &Point2>> = if pass == 0 {
                Box::new(ps.iter())
            } else {
                Box::new(ps.iter().rev())
            };
            for &p in iter {
                while hull.len() >= start + 2
                    && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0
                {
                    hull.pop();
                }
                hull.push(p);
            }
            hull.pop();
        }
        match hull.len() {
            0 | 1 => Ok(Self::point(ps[0])),
            2 => Self::segment(hull[0], hull[1]),
            _ => Self::polygon(&hull).or_else(|_| {
                // numerically flat triangle: fall back to its longest extent
                let (a, b) = farthest_pair(&hull);
                Self::segment(a, b)
            }),
        }
    }

    pub fn pieces(&self) -> &[BoundaryPiece] {
        &self.pieces
    }

    pub fn anchor(&self) -> Point2 {
        self.anchor
    }

    pub fn kind(&self) -> BodyKind {
        match self.pieces.as_slice() {
            [] => BodyKind::Point,
            [BoundaryPiece::Segment { a, b }, BoundaryPiece::Segment { a: c, b: d }]
                if a.dist(*d) <= CLOSURE_TOL && b.dist(*c) <= CLOSURE_TOL =>
            {
                BodyKind::Segment
            }
            _ => BodyKind::Region,
        }
    }

    /// Vertices if the body is a polygon (all pieces straight).
    pub fn polygon_vertices(&self) -> Option<Vec<Point2>> {
        if self.kind() == BodyKind::Region && self.pieces.iter().all(|p| !p.is_curved()) {
            Some(self.pieces.iter().map(|p| p.start()).collect())
        } else {
            None
        }
    }

    /// All broken invariants; empty for a valid body.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.pieces.is_empty() {
            if !self.anchor.is_finite() {
                out.push(Violation::NonFinite { piece: 0 });
            }
            return out;
        }
        for (i, p) in self.pieces.iter().enumerate() {
            if let Some(reason) = parameter_problem(p) {
                out.push(Violation::BadParameter { piece: i, reason });
                continue;
            }
            if [0.0, 0.5, 1.0].iter().any(|&t| !p.point_at(t).is_finite()) {
                out.push(Violation::NonFinite { piece: i });
                continue;
            }
            if p.length() <= MIN_PIECE_LENGTH {
                out.push(Violation::ZeroLength { piece: i });
            }
        }
        if !out.is_empty() {
            return out;
        }
        let n = self.pieces.len();
        let mut total = 0.0;
        for i in 0..n {
            let (cur, next) = (&self.pieces[i], &self.pieces[(i + 1) % n]);
            let gap = cur.end().dist(next.start());
            if gap > CLOSURE_TOL {
                out.push(Violation::ChainNotClosed {
                    after_piece: i,
                    gap,
                });
            }
            let (u, v) = (cur.tangent_at(1.0), next.tangent_at(0.0));
            let mut turn = u.cross(v).atan2(u.dot(v));
            if turn <= -PI + 1e-12 {
                turn = PI;
            }
            if turn < -TURN_TOL {
                out.push(Violation::TangentTurnNegative {
                    after_piece: i,
                    turn,
                });
            }
            total += cur.turn() + turn;
        }
        if (total - TAU).abs() > TOTAL_TURN_TOL && self.kind() != BodyKind::Segment {
            out.push(Violation::TotalTurn { turn: total });
        }
        out
    }

    /// `max <P, n(d)>` over the body.
    pub fn support_value(&self, d: Direction) -> f64 {
        let n = d.normal();
        if self.pieces.is_empty() {
            return self.anchor.dot(n);
        }
        self.pieces
            .iter()
            .map(|p| p.support(n).0)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn supporting_line(&self, d: Direction) -> DirectedLine {
        DirectedLine::new(d, self.support_value(d))
    }

    pub fn contact_set(&self, d: Direction) -> ContactSet {
        self.contact_set_tol(d, TIE_TOL)
    }

    /// Contact set where points within `tol` of the support value count as on the line.
    pub fn contact_set_tol(&self, d: Direction, tol: f64) -> ContactSet {
        let n = d.normal();
        let u = d.unit();
        let offset = self.support_value(d);
        if self.pieces.is_empty() {
            return ContactSet {
                dir: d,
                offset,
                first: self.anchor,
                last: self.anchor,
            };
        }
        let mut first: Option<(f64, Point2)> = None;
        let mut last: Option<(f64, Point2)> = None;
        for p in &self.pieces {
            let (_, t) = p.support(n);
            for q in [p.point_at(t), p.start(), p.end()] {
                if q.dot(n) < offset - tol {
                    continue;
                }
                let s = q.dot(u);
                if first.is_none_or(|(fs, _)| s < fs) {
                    first = Some((s, q));
                }
                if last.is_none_or(|(ls, _)| s > ls) {
                    last = Some((s, q));
                }
            }
        }
        ContactSet {
            dir: d,
            offset,
            first: first.expect("a maximizer always qualifies").1,
            last: last.expect("a maximizer always qualifies").1,
        }
    }

    /// Largest piece residual; `<= 0` exactly on the body, and positive
    /// values bound the distance to the body from below.
    pub fn max_residual(&self, p: Point2) -> f64 {
        match self.kind() {
            BodyKind::Point => p.dist(self.anchor),
            BodyKind::Segment => self.pieces[0].distance(p),
            BodyKind::Region => self
                .pieces
                .iter()
                .map(|q| q.residual(p))
                .fold(f64::NEG_INFINITY, f64::max),
        }
    }

    pub fn contains(&self, p: Point2) -> Membership {
        self.classify(p, TIE_TOL)
    }

    /// Membership with a boundary band of half-width `tol`.
    pub fn classify(&self, p: Point2, tol: f64) -> Membership {
        match self.kind() {
            BodyKind::Point | BodyKind::Segment => {
                return if self.max_residual(p) <= tol {
                    Membership::Boundary
                } else {
                    Membership::Outside
                };
            }
            BodyKind::Region => {}
        }
        let residuals: Vec<f64> = self.pieces.iter().map(|q| q.residual(p)).collect();
        let s = residuals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if s > tol {
            return Membership::Outside;
        }
        let near = self
            .pieces
            .iter()
            .zip(&residuals)
            .any(|(q, &r)| r >= -tol && q.distance(p) <= tol);
        if near {
            Membership::Boundary
        } else if s <= 0.0 {
            Membership::Interior
        } else {
            Membership::Outside
        }
    }

    /// Distance from `p` to the boundary chain.
    pub fn boundary_distance(&self, p: Point2) -> f64 {
        if self.pieces.is_empty() {
            return p.dist(self.anchor);
        }
        self.pieces
            .iter()
            .map(|q| q.distance(p))
            .fold(f64::INFINITY, f64::min)
    }

    /// Nearest chain position to `p`.
    pub fn locate(&self, p: Point2) -> ChainPos {
        let mut best = (f64::INFINITY, ChainPos::new(0, 0.0));
        for (i, q) in self.pieces.iter().enumerate() {
            let (t, d) = q.closest(p);
            if d < best.0 {
                best = (d, ChainPos::new(i, t));
            }
        }
        best.1
    }

    pub fn point_at(&self, pos: ChainPos) -> Point2 {
        if self.pieces.is_empty() {
            return self.anchor;
        }
        self.pieces[pos.piece].point_at(pos.t)
    }

    /// Point at chain scalar `s` (taken modulo the piece count).
    pub fn point_at_scalar(&self, s: f64) -> Point2 {
        self.point_at(self.pos_from_scalar(s))
    }

    pub fn pos_from_scalar(&self, s: f64) -> ChainPos {
        let n = self.pieces.len().max(1) as f64;
        let s = s.rem_euclid(n);
        let piece = (s.floor() as usize).min(self.pieces.len().saturating_sub(1));
        ChainPos::new(piece, (s - piece as f64).clamp(0.0, 1.0))
    }

    pub fn apply_motion(&self, m: &RigidMotion) -> Self {
        let mut pieces: Vec<BoundaryPiece> = self.pieces.iter().map(|p| p.transformed(m)).collect();
        if m.reflect {
            pieces.reverse();
        }
        Self {
            pieces,
            anchor: m.apply(self.anchor),
        }
    }

    /// Axis-aligned bounding box `(min, max)` from support values.
    pub fn bbox(&self) -> (Point2, Point2) {
        let h = |deg: f64| self.support_value(Direction::from_degrees(deg));
        (pt(-h(270.0), -h(0.0)), pt(h(90.0), h(180.0)))
    }

    /// A point of the relative interior.
    pub fn interior_point(&self) -> Point2 {
        match self.kind() {
            BodyKind::Point => self.anchor,
            BodyKind::Segment => self.pieces[0].point_at(0.5),
            BodyKind::Region => {
                let k = 16;
                let sum = (0..k).fold(Point2::ORIGIN, |acc, i| {
                    acc + self
                        .contact_set(Direction::new(TAU * i as f64 / k as f64))
                        .first
                });
                sum * (1.0 / k as f64)
            }
        }
    }

    /// Boundary samples: `per_piece` points on each curved piece, endpoints on segments.
    pub fn boundary_samples(&self, per_piece: usize) -> Vec<Point2> {
        if self.pieces.is_empty() {
            return vec![self.anchor];
        }
        let mut out = Vec::new();
        for p in &self.pieces {
            let mut pts = p.flatten(per_piece);
            pts.pop();
            out.extend(pts);
        }
        out
    }

    pub fn perimeter(&self) -> f64 {
        self.pieces.iter().map(|p| p.length()).sum()
    }
}

// negated comparisons also reject NaN
#[allow(clippy::neg_cmp_op_on_partial_ord)]
fn parameter_problem(p: &BoundaryPiece) -> Option<String> {
    match *p {
        BoundaryPiece::Segment { .. } => None,
        BoundaryPiece::CircularArc {
            radius,
            start_angle,
            end_angle,
            ..
        } => {
            if !(radius > 0.0) {
                Some(format!("radius must be positive, got {radius}"))
            } else if !(end_angle > start_angle && end_angle - start_angle <= TAU + 1e-12) {
                Some("arc sweep must lie in (0, 2π]".into())
            } else {
                None
            }
        }
        BoundaryPiece::EllipticArc {
            a, b, start, end, ..
        } => {
            if !(a > 0.0 && b > 0.0) {
                Some("semi-axes must be positive".into())
            } else if !(end > start && end - start <= TAU + 1e-12) {
                Some("arc sweep must lie in (0, 2π]".into())
            } else {
                None
            }
        }
        BoundaryPiece::GraphArc { frame, scale, .. } => {
            if !(scale > 0.0) {
                Some("graph arc scale must be positive".into())
            } else if frame.reflect {
                Some("graph arc frame must preserve orientation".into())
            } else {
                None
            }
        }
    }
}

fn farthest_pair(ps: &[Point2]) -> (Point2, Point2) {
    let mut best = (0.0, ps[0], ps[0]);
    for (i, &a) in ps.iter().enumerate() {
        for &b in &ps[i + 1..] {
            if a.dist(b) > best.0 {
                best = (a.dist(b), a, b);
            }
        }
    }
    (best.1, best.2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square() -> ConvexBody {
        ConvexBody::polygon(&[pt(0.0, 0.0), pt(1.0, 0.0), pt(1.0, 1.0), pt(0.0, 1.0)]).unwrap()
    }

    #[test]
    fn builders_validate() {
        let disk = ConvexBody::disk(Point2::ORIGIN, 1.0).unwrap();
        assert_eq!(disk.pieces().len(), 1);
        assert!(disk.validate().is_empty());
        let oct = ConvexBody::regular_polygon(Point2::ORIGIN, 8, 1.0, 0.0).unwrap();
        assert_eq!(oct.pieces().len(), 8);
        assert!(oct.validate().is_empty());
        let e = ConvexBody::ellipse(pt(1.0, 2.0), 2.0, 1.0, 0.3).unwrap();
        assert!(e.validate().is_empty());
        assert!(ConvexBody::segment(pt(0.0, 0.0), pt(1.0, 1.0))
            .unwrap()
            .validate()
            .is_empty());
        assert!(ConvexBody::point(pt(3.0, 3.0)).validate().is_empty());
    }

    #[test]
    fn malformed_specs_name_the_field() {
        let err = ConvexBody::disk(Point2::ORIGIN, -1.0).unwrap_err();
        assert!(matches!(err, Error::InvalidShape { ref field, .. } if field == "radius"));
        let err = ConvexBody::polygon(&[pt(0.0, 0.0), pt(1.0, 1.0), pt(2.0, 2.0)]).unwrap_err();
        assert!(matches!(err, Error::InvalidShape { ref field, .. } if field == "vertices"));
        let err = ConvexBody::ellipse(Point2::ORIGIN, 2.0, 0.0, 0.0).unwrap_err();
        assert!(matches!(err, Error::InvalidShape { ref field, .. } if field == "b"));
        // non-convex
        let dart = [pt(0.0, 0.0), pt(2.0, 0.0), pt(1.0, 0.3), pt(1.0, 2.0)];
        assert!(ConvexBody::polygon(&dart).is_err());
    }

    #[test]
    fn clockwise_chain_reports_negative_turn() {
        let vs = [pt(0.0, 0.0), pt(0.0, 1.0), pt(1.0, 1.0), pt(1.0, 0.0)];
        let pieces = (0..4)
            .map(|i| BoundaryPiece::Segment {
                a: vs[i],
                b: vs[(i + 1) % 4],
            })
            .collect();
        let v = ConvexBody::from_pieces_unchecked(pieces).validate();
        assert!(v
            .iter()
            .any(|x| matches!(x, Violation::TangentTurnNegative { .. })));
        assert!(v
            .iter()
            .any(|x| x.to_string().contains("tangent turn negative")));
    }

    #[test]
    fn open_chain_is_reported() {
        let mut pieces = unit_square().pieces().to_vec();
        if let BoundaryPiece::Segment { b, .. } = &mut pieces[3] {
            b.x += 1e-3;
        }
        let v = ConvexBody::from_pieces_unchecked(pieces).validate();
        assert!(v.iter().any(|x| x.to_string().contains("chain not closed")));
    }

    #[test]
    fn support_examples() {
        let disk = ConvexBody::disk(Point2::ORIGIN, 1.0).unwrap();
        for k in 0..32 {
            assert!((disk.support_value(Direction::new(k as f64 * 0.2)) - 1.0).abs() < 1e-15);
        }
        let up = ConvexBody::disk(pt(0.0, 2.0), 1.0).unwrap();
        assert!((up.support_value(Direction::new(0.0)) + 1.0).abs() < 1e-15);
        assert!(unit_square().support_value(Direction::new(0.0)).abs() < 1e-15);
    }

    #[test]
    fn ellipse_support_closed_form_and_sampling() {
        let e = ConvexBody::ellipse(Point2::ORIGIN, 2.0, 1.0, 0.0).unwrap();
        for k in 0..64 {
            let d = Direction::new(k as f64 * TAU / 64.0);
            let n = d.normal();
            let closed = (4.0 * n.x * n.x + n.y * n.y).sqrt();
            let sampled = (0..100_000)
                .map(|i| {
                    let phi = TAU * i as f64 / 100_000.0;
                    pt(2.0 * phi.cos(), phi.sin()).dot(n)
                })
                .fold(f64::NEG_INFINITY, f64::max);
            assert!((e.support_value(d) - closed).abs() < 1e-12);
            assert!((e.support_value(d) - sampled).abs() < 1e-8);
        }
    }

    #[test]
    fn contact_set_examples() {
        let disk = ConvexBody::disk(Point2::ORIGIN, 1.0).unwrap();
        let c = disk.contact_set(Direction::new(0.0));
        assert!(c.first.dist(pt(0.0, -1.0)) < 1e-15 && c.is_point(1e-12));
        let sq = unit_square();
        let c = sq.contact_set(Direction::new(0.0));
        assert_eq!((c.first, c.last), (pt(0.0, 0.0), pt(1.0, 0.0)));
        let c = sq.contact_set(Direction::new(PI / 4.0));
        assert_eq!((c.first, c.last), (pt(1.0, 0.0), pt(1.0, 0.0)));
    }

    #[test]
    fn contains_examples() {
        let disk = ConvexBody::disk(Point2::ORIGIN, 1.0).unwrap();
        assert_eq!(disk.contains(pt(0.0, 0.0)), Membership::Interior);
        assert_eq!(disk.contains(pt(1.0, 0.0)), Membership::Boundary);
        assert_eq!(disk.contains(pt(1.001, 0.0)), Membership::Outside);
        let seg = ConvexBody::segment(pt(0.0, 0.0), pt(1.0, 0.0)).unwrap();
        assert_eq!(seg.contains(pt(0.5, 0.0)), Membership::Boundary);
        assert_eq!(seg.contains(pt(1.5, 0.0)), Membership::Outside);
    }

    #[test]
    fn hull_examples() {
        let ps = [
            pt(0.0, 0.0),
            pt(1.0, 0.0),
            pt(1.0, 1.0),
            pt(0.0, 1.0),
            pt(0.5, 0.5),
        ];
        let h = ConvexBody::convex_hull(&ps).unwrap();
        assert_eq!(h.polygon_vertices().unwrap().len(), 4);
        assert_eq!(
            ConvexBody::convex_hull(&[pt(2.0, 1.0)]).unwrap().kind(),
            BodyKind::Point
        );
        assert_eq!(
            ConvexBody::convex_hull(&[pt(0.0, 0.0), pt(1.0, 1.0), pt(2.0, 2.0)])
                .unwrap()
                .kind(),
            BodyKind::Segment
        );
        assert!(matches!(
            ConvexBody::convex_hull(&[]),
            Err(Error::EmptyInput)
        ));
    }

    #[test]
    fn motion_examples() {
        let sq = unit_square();
        assert_eq!(sq.apply_motion(&RigidMotion::identity()), sq);
        let r = sq.apply_motion(&RigidMotion::rotation_about(pt(0.5, 0.5), PI / 2.0));
        let vs = r.polygon_vertices().unwrap();
        for v in sq.polygon_vertices().unwrap() {
            assert!(vs.iter().any(|w| w.dist(v) < 1e-12));
        }
        let disk = ConvexBody::disk(Point2::ORIGIN, 1.0).unwrap();
        let rd = disk.apply_motion(&RigidMotion::rotation(1.234));
        for k in 0..16 {
            let d = Direction::new(k as f64 * 0.4);
            assert!((rd.support_value(d) - disk.support_value(d)).abs() < 1e-12);
        }
        let m = RigidMotion::new(0.7, pt(1.0, -1.0), true);
        let e = ConvexBody::ellipse(Point2::ORIGIN, 2.0, 1.0, 0.2)
            .unwrap()
            .apply_motion(&m);
        assert!(e.validate().is_empty());
        assert!(sq.apply_motion(&m).validate().is_empty());
    }
}
