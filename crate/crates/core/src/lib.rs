//! Planar convex bodies, directed supporting lines and crossing relations
//! between pairs of bodies.

pub mod body;
pub mod constructions;
pub mod crossing;
pub mod error;
pub mod geom;
pub mod hierarchy;
pub mod numeric;
pub mod raster;
pub mod report;
pub mod shapefile;
pub mod svg;
pub mod tangency;

pub use body::{
    BodyKind, BoundaryPiece, ChainPos, ContactSet, ConvexBody, GraphKind, Membership, Violation,
};
pub use error::{Error, Result};
pub use geom::{pt, AlongOrder, DirectedLine, Direction, Point2, RigidMotion, TIE_TOL};
