use thiserror::Error;

use crate::body::Violation;
use crate::geom::Point2;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("point not on line: {point} has residual {residual:e}")]
    PointNotOnLine { point: Point2, residual: f64 },

    #[error("invalid shape field `{field}`: {reason}")]
    InvalidShape { field: String, reason: String },

    #[error("convex hull of an empty point set")]
    EmptyInput,

    #[error("not an eccentric ellipse: a = {a}, b = {b}")]
    NotEccentric { a: f64, b: f64 },

    #[error("invalid body: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidBody(Vec<Violation>),

    #[error("{0}")]
    Degenerate(&'static str),

    #[error("boundary event search did not converge on pieces ({piece_d}, {piece_l})")]
    NoConvergence { piece_d: usize, piece_l: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("interiors do not meet")]
    InteriorsDisjoint,

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("viewport too small: body extends to [{min}, {max}]")]
    ViewportTooSmall { min: Point2, max: Point2 },

    #[error("shape file {path}: {message}")]
    Schema { path: String, message: String },
}

impl Error {
    pub(crate) fn shape(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::InvalidShape {
            field: field.into(),
            reason: reason.into(),
        }
    }
}
