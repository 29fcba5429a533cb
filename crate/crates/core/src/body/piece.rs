use std::f64::consts::{FRAC_1_SQRT_2, PI, TAU};

use serde::{Deserialize, Serialize};

use crate::geom::{ccw_angle, pt, Point2, RigidMotion};
use crate::numeric::sampled_min;

/// Canonical concave profile spanning `x ∈ [-1, 1]`, zero with slope `∓1` at
/// `x = ±1`, so it meets 45° neighbour edges tangentially.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphKind {
    /// `f(x) = (1 - x²) / 2`
    Parabolic,
    /// `g(x) = (1 - x⁴) / 4`
    Quartic,
}

impl GraphKind {
    pub fn value(self, x: f64) -> f64 {
        match self {
            GraphKind::Parabolic => 0.5 * (1.0 - x * x),
            GraphKind::Quartic => 0.25 * (1.0 - x.powi(4)),
        }
    }

    pub fn slope(self, x: f64) -> f64 {
        match self {
            GraphKind::Parabolic => -x,
            GraphKind::Quartic => -x.powi(3),
        }
    }

    /// Abscissa where the graph has tangent slope `m`, clamped to the span.
    pub fn contact_abscissa(self, m: f64) -> f64 {
        let x = match self {
            GraphKind::Parabolic => -m,
            GraphKind::Quartic => -m.cbrt(),
        };
        x.clamp(-1.0, 1.0)
    }

    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Parabolic => "parabolic",
            GraphKind::Quartic => "quartic",
        }
    }
}

/// One piece of a counterclockwise boundary chain. Every piece is
/// parametrized by `t ∈ [0, 1]` in traversal order.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BoundaryPiece {
    Segment {
        a: Point2,
        b: Point2,
    },
    /// Points `center + radius·(cos φ, sin φ)` for `φ` from `start_angle`
    /// up to `end_angle` (`0 < end - start <= 2π`).
    CircularArc {
        center: Point2,
        radius: f64,
        start_angle: f64,
        end_angle: f64,
    },
    /// Points `center + R(rotation)·(a cos φ, b sin φ)`, `φ` from `start` to `end`.
    EllipticArc {
        center: Point2,
        a: f64,
        b: f64,
        rotation: f64,
        start: f64,
        end: f64,
    },
    /// `frame(scale · (x, kind(x)))` for `x` running from `1` down to `-1`;
    /// `frame` is orientation preserving.
    GraphArc {
        kind: GraphKind,
        frame: RigidMotion,
        scale: f64,
    },
}

use BoundaryPiece::*;

/// Outward-normal window of a circular arc in unit-circle coordinates:
/// the supremum of `<v, e(φ)>` over `φ ∈ [start, start + sweep]`.
fn arc_window_sup(v: Point2, start: f64, sweep: f64) -> f64 {
    let r = v.norm();
    if r == 0.0 {
        return 0.0;
    }
    if sweep >= TAU || ccw_angle(start, v.angle()) <= sweep {
        r
    } else {
        v.dot(Point2::polar(start))
            .max(v.dot(Point2::polar(start + sweep)))
    }
}

impl BoundaryPiece {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Segment { .. } => "segment",
            CircularArc { .. } => "circular_arc",
            EllipticArc { .. } => "elliptic_arc",
            GraphArc { kind, .. } => kind.name(),
        }
    }

    pub fn is_curved(&self) -> bool {
        !matches!(self, Segment { .. })
    }

    fn sweep(&self) -> f64 {
        match *self {
            CircularArc {
                start_angle,
                end_angle,
                ..
            } => end_angle - start_angle,
            EllipticArc { start, end, .. } => end - start,
            _ => 0.0,
        }
    }

    pub fn point_at(&self, t: f64) -> Point2 {
        match *self {
            Segment { a, b } => a.lerp(b, t),
            CircularArc {
                center,
                radius,
                start_angle,
                end_angle,
            } => center + Point2::polar(start_angle + t * (end_angle - start_angle)) * radius,
            EllipticArc {
                center,
                a,
                b,
                rotation,
                start,
                end,
            } => {
                let phi = start + t * (end - start);
                center + pt(a * phi.cos(), b * phi.sin()).rotate(rotation)
            }
            GraphArc { kind, frame, scale } => {
                let x = 1.0 - 2.0 * t;
                frame.apply(pt(x, kind.value(x)) * scale)
            }
        }
    }

    pub fn start(&self) -> Point2 {
        match *self {
            Segment { a, .. } => a,
            _ => self.point_at(0.0),
        }
    }

    pub fn end(&self) -> Point2 {
        match *self {
            Segment { b, .. } => b,
            _ => self.point_at(1.0),
        }
    }

    /// `dP/dt`.
    pub fn derivative_at(&self, t: f64) -> Point2 {
        match *self {
            Segment { a, b } => b - a,
            CircularArc {
                radius,
                start_angle,
                end_angle,
                ..
            } => {
                let sweep = end_angle - start_angle;
                Point2::polar(start_angle + t * sweep).perp() * (radius * sweep)
            }
            EllipticArc {
                a,
                b,
                rotation,
                start,
                end,
                ..
            } => {
                let phi = start + t * (end - start);
                pt(-a * phi.sin(), b * phi.cos()).rotate(rotation) * (end - start)
            }
            GraphArc { kind, frame, scale } => {
                let x = 1.0 - 2.0 * t;
                frame.apply_vector(pt(-2.0, -2.0 * kind.slope(x)) * scale)
            }
        }
    }

    /// Unit tangent in traversal direction.
    pub fn tangent_at(&self, t: f64) -> Point2 {
        let d = self.derivative_at(t);
        d * (1.0 / d.norm())
    }

    /// Total counterclockwise turn of the tangent along the piece.
    pub fn turn(&self) -> f64 {
        match *self {
            Segment { .. } => 0.0,
            CircularArc { .. } => self.sweep(),
            EllipticArc { .. } => {
                let sweep = self.sweep();
                if sweep >= TAU - 1e-12 {
                    TAU
                } else {
                    ccw_angle(self.tangent_at(0.0).angle(), self.tangent_at(1.0).angle())
                }
            }
            GraphArc { .. } => PI / 2.0,
        }
    }

    pub fn length(&self) -> f64 {
        match *self {
            Segment { a, b } => a.dist(b),
            CircularArc { radius, .. } => radius * self.sweep(),
            _ => crate::numeric::integrate(0.0, 1.0, 64, |t| self.derivative_at(t).norm()),
        }
    }

    /// Outward unit normal: the tangent rotated clockwise.
    pub fn outward_normal_at(&self, t: f64) -> Point2 {
        -self.tangent_at(t).perp()
    }

    /// `max <P, n>` over the piece with a maximizing parameter.
    pub fn support(&self, n: Point2) -> (f64, f64) {
        let endpoint_best = || {
            let (s, e) = (self.start().dot(n), self.end().dot(n));
            if s >= e {
                (s, 0.0)
            } else {
                (e, 1.0)
            }
        };
        match *self {
            Segment { .. } => endpoint_best(),
            CircularArc {
                center,
                radius,
                start_angle,
                ..
            } => {
                let sweep = self.sweep();
                let off = ccw_angle(start_angle, n.angle());
                if sweep >= TAU || off <= sweep {
                    (center.dot(n) + radius * n.norm(), off / sweep)
                } else {
                    endpoint_best()
                }
            }
            EllipticArc {
                center,
                a,
                b,
                rotation,
                start,
                ..
            } => {
                let sweep = self.sweep();
                let nl = n.rotate(-rotation);
                let phi = (b * nl.y).atan2(a * nl.x);
                let off = ccw_angle(start, phi);
                if sweep >= TAU || off <= sweep {
                    (center.dot(n) + (a * nl.x).hypot(b * nl.y), off / sweep)
                } else {
                    endpoint_best()
                }
            }
            GraphArc { kind, frame, scale } => {
                let nc = frame.inverse().apply_vector(n);
                let at = |x: f64| x * nc.x + kind.value(x) * nc.y;
                let mut best = (at(1.0), 1.0);
                let mut consider = |x: f64| {
                    let v = at(x);
                    if v > best.0 {
                        best = (v, x);
                    }
                };
                consider(-1.0);
                if nc.y > 0.0 {
                    consider(kind.contact_abscissa(-nc.x / nc.y));
                }
                let (v, x) = best;
                (scale * v + frame.translation.dot(n), 0.5 * (1.0 - x))
            }
        }
    }

    /// Convex, sign-exact constraint of the piece: non-positive exactly on the
    /// region below the piece's tangent envelope (the piece itself plus its
    /// extended end tangents). Positive values are lower bounds on the
    /// distance to that region.
    pub fn residual(&self, p: Point2) -> f64 {
        match *self {
            Segment { a, b } => {
                let d = b - a;
                let n = pt(d.y, -d.x) * (1.0 / d.norm());
                (p - a).dot(n)
            }
            CircularArc {
                center,
                radius,
                start_angle,
                ..
            } => arc_window_sup(p - center, start_angle, self.sweep()) - radius,
            EllipticArc {
                center,
                a,
                b,
                rotation,
                start,
                ..
            } => {
                let q = (p - center).rotate(-rotation);
                let w = pt(q.x / a, q.y / b);
                a.min(b) * (arc_window_sup(w, start, self.sweep()) - 1.0)
            }
            GraphArc { kind, frame, scale } => {
                let q = frame.inverse().apply(p) * (1.0 / scale);
                let v = if q.x > 1.0 {
                    q.y + q.x - 1.0
                } else if q.x < -1.0 {
                    q.y - q.x - 1.0
                } else {
                    q.y - kind.value(q.x)
                };
                scale * v * FRAC_1_SQRT_2
            }
        }
    }

    /// Parameter of the closest point of the piece to `p`, and the distance.
    pub fn closest(&self, p: Point2) -> (f64, f64) {
        match *self {
            Segment { a, b } => {
                let d = b - a;
                let t = ((p - a).dot(d) / d.norm_sq()).clamp(0.0, 1.0);
                (t, p.dist(a.lerp(b, t)))
            }
            CircularArc {
                center,
                radius,
                start_angle,
                ..
            } => {
                let v = p - center;
                let sweep = self.sweep();
                let off = ccw_angle(start_angle, v.angle());
                if v.norm() > 0.0 && (sweep >= TAU || off <= sweep) {
                    (off / sweep, (v.norm() - radius).abs())
                } else {
                    let (ds, de) = (p.dist(self.start()), p.dist(self.end()));
                    if ds <= de {
                        (0.0, ds)
                    } else {
                        (1.0, de)
                    }
                }
            }
            _ => {
                let (t, d2) =
                    sampled_min(0.0, 1.0, 65, 1e-13, |t| p.dist(self.point_at(t)).powi(2));
                (t, d2.max(0.0).sqrt())
            }
        }
    }

    pub fn distance(&self, p: Point2) -> f64 {
        self.closest(p).1
    }

    /// Image under a rigid motion, re-oriented so that the traversal stays
    /// counterclockwise around the image body.
    pub fn transformed(&self, m: &RigidMotion) -> BoundaryPiece {
        match *self {
            Segment { a, b } => {
                if m.reflect {
                    Segment {
                        a: m.apply(b),
                        b: m.apply(a),
                    }
                } else {
                    Segment {
                        a: m.apply(a),
                        b: m.apply(b),
                    }
                }
            }
            CircularArc {
                center,
                radius,
                start_angle,
                end_angle,
            } => {
                let sweep = end_angle - start_angle;
                let start = if m.reflect {
                    m.apply_angle(end_angle)
                } else {
                    m.apply_angle(start_angle)
                };
                CircularArc {
                    center: m.apply(center),
                    radius,
                    start_angle: start,
                    end_angle: start + sweep,
                }
            }
            EllipticArc {
                center,
                a,
                b,
                rotation,
                start,
                end,
            } => {
                if m.reflect {
                    EllipticArc {
                        center: m.apply(center),
                        a,
                        b,
                        rotation: m.rotation - rotation,
                        start: -end,
                        end: -start,
                    }
                } else {
                    EllipticArc {
                        center: m.apply(center),
                        a,
                        b,
                        rotation: m.rotation + rotation,
                        start,
                        end,
                    }
                }
            }
            GraphArc { kind, frame, scale } => {
                let frame = if m.reflect {
                    // mirror x ↦ -x of the canonical frame keeps the frame proper
                    let flip = RigidMotion::new(PI, Point2::ORIGIN, true);
                    m.compose(&frame).compose(&flip)
                } else {
                    m.compose(&frame)
                };
                GraphArc { kind, frame, scale }
            }
        }
    }

    /// Polyline approximation with at least `min_points` points for curved pieces.
    pub fn flatten(&self, min_points: usize) -> Vec<Point2> {
        if !self.is_curved() {
            return vec![self.start(), self.end()];
        }
        let n = min_points.max(2);
        (0..n)
            .map(|i| self.point_at(i as f64 / (n - 1) as f64))
            .collect()
    }
}
