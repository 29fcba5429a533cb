//! Planar primitives: points, directions, directed lines and rigid motions.
//!
//! Conventions used throughout the crate:
//! - a direction is an angle `alpha` reduced to `[0, 2π)`, with unit vector
//!   `u(alpha) = (cos alpha, sin alpha)`;
//! - the right normal of a direction is `n(alpha) = (sin alpha, -cos alpha)`;
//! - a directed line `{P : <P, n> = offset}` has its *left* closed half-plane
//!   at `{P : <P, n> <= offset}`. A body supported by the line sits there.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Global tie tolerance in shape units. All catalog shapes have diameter O(1).
pub const TIE_TOL: f64 = 1e-9;

/// A point (or free vector) of the plane.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

pub const fn pt(x: f64, y: f64) -> Point2 {
    Point2 { x, y }
}

impl Point2 {
    pub const ORIGIN: Point2 = pt(0.0, 0.0);

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Unit vector at angle `theta`.
    pub fn polar(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        pt(c, s)
    }

    pub fn dot(self, o: Point2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3-D cross product.
    pub fn cross(self, o: Point2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn dist(self, o: Point2) -> f64 {
        (self - o).norm()
    }

    /// Counterclockwise quarter turn.
    pub fn perp(self) -> Point2 {
        pt(-self.y, self.x)
    }

    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    pub fn rotate(self, theta: f64) -> Point2 {
        let (s, c) = theta.sin_cos();
        pt(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn lerp(self, o: Point2, t: f64) -> Point2 {
        pt(self.x + t * (o.x - self.x), self.y + t * (o.y - self.y))
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn to_array(self) -> [f64; 2] {
        [self.x, self.y]
    }
}

impl From<[f64; 2]> for Point2 {
    fn from(a: [f64; 2]) -> Self {
        pt(a[0], a[1])
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:.9}, {:.9})", self.x, self.y)
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, o: Point2) -> Point2 {
        pt(self.x + o.x, self.y + o.y)
    }
}

impl AddAssign for Point2 {
    fn add_assign(&mut self, o: Point2) {
        self.x += o.x;
        self.y += o.y;
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, o: Point2) -> Point2 {
        pt(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, k: f64) -> Point2 {
        pt(self.x * k, self.y * k)
    }
}

impl Mul<Point2> for f64 {
    type Output = Point2;
    fn mul(self, p: Point2) -> Point2 {
        p * self
    }
}

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        pt(-self.x, -self.y)
    }
}

/// Reduce an angle to `[0, 2π)`.
pub fn reduce_angle(alpha: f64) -> f64 {
    let r = alpha.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Counterclockwise angular distance from `from` to `to`, in `[0, 2π)`.
pub fn ccw_angle(from: f64, to: f64) -> f64 {
    reduce_angle(to - from)
}

/// Smallest absolute angular separation of two directions, in `[0, π]`.
pub fn angular_separation(a: f64, b: f64) -> f64 {
    let d = ccw_angle(a, b);
    d.min(TAU - d)
}

/// A direction on the unit circle, stored as its canonical angle.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Direction(f64);

impl Direction {
    pub fn new(alpha: f64) -> Self {
        Direction(reduce_angle(alpha))
    }

    pub fn from_degrees(deg: f64) -> Self {
        Self::new(deg.to_radians())
    }

    pub fn alpha(self) -> f64 {
        self.0
    }

    pub fn unit(self) -> Point2 {
        Point2::polar(self.0)
    }

    /// Right normal `(sin α, -cos α)`; the left half-plane of a line with this
    /// direction is where `<P, n>` is smallest.
    pub fn normal(self) -> Point2 {
        let (s, c) = self.0.sin_cos();
        pt(s, -c)
    }

    pub fn reversed(self) -> Self {
        Direction::new(self.0 + PI)
    }

    pub fn rotated(self, theta: f64) -> Self {
        Direction::new(self.0 + theta)
    }

    /// The direction whose right normal is the given (nonzero) vector.
    pub fn with_normal(n: Point2) -> Self {
        Direction::new(n.angle() + PI / 2.0)
    }
}

/// Right normal of a direction.
pub fn direction_normal(d: Direction) -> Point2 {
    d.normal()
}

/// Position of one collinear point relative to another along a directed line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlongOrder {
    Before,
    Equal,
    After,
}

/// Directed line `{P : <P, n(dir)> = offset}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DirectedLine {
    pub dir: Direction,
    pub offset: f64,
}

impl DirectedLine {
    pub fn new(dir: Direction, offset: f64) -> Self {
        Self { dir, offset }
    }

    /// The line through `p` with direction `dir`.
    pub fn through(p: Point2, dir: Direction) -> Self {
        Self::new(dir, p.dot(dir.normal()))
    }

    /// Signed residual: negative on the left (body) side.
    pub fn residual(&self, p: Point2) -> f64 {
        p.dot(self.dir.normal()) - self.offset
    }

    pub fn contains_point(&self, p: Point2, tol: f64) -> bool {
        self.residual(p).abs() <= tol
    }

    /// `-t`: same undirected line, opposite orientation, swapped half-planes.
    pub fn reversed(&self) -> Self {
        Self::new(self.dir.reversed(), -self.offset)
    }

    /// Coordinate of `p` along the line direction.
    pub fn coordinate(&self, p: Point2) -> f64 {
        p.dot(self.dir.unit())
    }

    /// Foot point of the origin, i.e. the point with coordinate zero.
    pub fn anchor(&self) -> Point2 {
        self.dir.normal() * self.offset
    }

    pub fn point_at(&self, s: f64) -> Point2 {
        self.anchor() + self.dir.unit() * s
    }

    /// Order of `p` relative to `q` along the line (`Before` means `p <_t q`).
    pub fn along_order(&self, p: Point2, q: Point2, tol: f64) -> Result<AlongOrder> {
        for x in [p, q] {
            if !self.contains_point(x, tol) {
                return Err(Error::PointNotOnLine {
                    point: x,
                    residual: self.residual(x),
                });
            }
        }
        let d = (q - p).dot(self.dir.unit());
        Ok(if d > tol {
            AlongOrder::Before
        } else if d < -tol {
            AlongOrder::After
        } else {
            AlongOrder::Equal
        })
    }
}

/// `x ↦ R(rotation) · F(x) + translation`, where `F` mirrors across the
/// x-axis when `reflect` is set.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RigidMotion {
    pub rotation: f64,
    pub translation: Point2,
    pub reflect: bool,
}

impl Default for RigidMotion {
    fn default() -> Self {
        Self::identity()
    }
}

impl RigidMotion {
    pub fn identity() -> Self {
        Self {
            rotation: 0.0,
            translation: Point2::ORIGIN,
            reflect: false,
        }
    }

    pub fn new(rotation: f64, translation: Point2, reflect: bool) -> Self {
        Self {
            rotation,
            translation,
            reflect,
        }
    }

    pub fn translation(v: Point2) -> Self {
        Self::new(0.0, v, false)
    }

    pub fn rotation(theta: f64) -> Self {
        Self::new(theta, Point2::ORIGIN, false)
    }

    pub fn rotation_about(center: Point2, theta: f64) -> Self {
        Self::new(theta, center - center.rotate(theta), false)
    }

    /// Mirror across the horizontal line through `center`.
    pub fn reflection_about(center: Point2) -> Self {
        // x ↦ F(x - c) + c = F(x) + (c - F(c))
        Self::new(0.0, pt(0.0, 2.0 * center.y), true)
    }

    pub fn apply(&self, p: Point2) -> Point2 {
        let q = if self.reflect { pt(p.x, -p.y) } else { p };
        q.rotate(self.rotation) + self.translation
    }

    /// Linear part only (for vectors).
    pub fn apply_vector(&self, v: Point2) -> Point2 {
        let q = if self.reflect { pt(v.x, -v.y) } else { v };
        q.rotate(self.rotation)
    }

    /// Image of an angle measured as a polar direction.
    pub fn apply_angle(&self, theta: f64) -> f64 {
        if self.reflect {
            self.rotation - theta
        } else {
            self.rotation + theta
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &RigidMotion) -> RigidMotion {
        let rot = if self.reflect {
            self.rotation - other.rotation
        } else {
            self.rotation + other.rotation
        };
        RigidMotion {
            rotation: rot,
            translation: self.apply_vector(other.translation) + self.translation,
            reflect: self.reflect ^ other.reflect,
        }
    }

    pub fn inverse(&self) -> RigidMotion {
        let rot = if self.reflect {
            self.rotation
        } else {
            -self.rotation
        };
        let inv = RigidMotion {
            rotation: rot,
            translation: Point2::ORIGIN,
            reflect: self.reflect,
        };
        RigidMotion {
            translation: -inv.apply_vector(self.translation),
            ..inv
        }
    }

    /// Largest displacement of the given points.
    pub fn displacement(&self, pts: &[Point2]) -> f64 {
        pts.iter()
            .map(|&p| self.apply(p).dist(p))
            .fold(0.0, f64::max)
    }
}
