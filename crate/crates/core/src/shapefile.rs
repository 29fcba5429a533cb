//! JSON shape files: versioned lists of shape records, angles in degrees.
//!
//! ```json
//! {"version": 1, "shapes": [
//!   {"kind": "disk", "center": [0, 0], "radius": 1},
//!   {"kind": "transform", "base": {"kind": "disk", "center": [0, 0], "radius": 1},
//!    "rotate_deg": 30, "about": [0, 0], "translate": [1, 0], "reflect": false}
//! ]}
//! ```
//!
//! A transform reflects across the horizontal line through `about`, then
//! rotates about `about`, then translates. A `named` record expands to both
//! bodies of the construction unless `member` picks one.

use serde::{Deserialize, Serialize};

use crate::body::{BoundaryPiece, ConvexBody, GraphKind};
use crate::constructions::{graph_arc_on_edge, NamedPair, PairName};
use crate::crossing::Predicates;
use crate::error::{Error, Result};
use crate::geom::{pt, Point2, RigidMotion};

pub const VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShapeFile {
    pub version: u32,
    pub shapes: Vec<Shape>,
    /// Predicates the first two bodies are expected to show (golden files).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Predicates>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Member {
    D,
    L,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Shape {
    Disk {
        center: [f64; 2],
        radius: f64,
    },
    Polygon {
        vertices: Vec<[f64; 2]>,
    },
    Ellipse {
        center: [f64; 2],
        a: f64,
        b: f64,
        #[serde(default)]
        angle: f64,
    },
    Pieces {
        pieces: Vec<PieceRecord>,
    },
    Named {
        name: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        member: Option<Member>,
    },
    Transform {
        base: Box<Shape>,
        #[serde(default)]
        rotate_deg: f64,
        #[serde(default)]
        about: [f64; 2],
        #[serde(default)]
        translate: [f64; 2],
        #[serde(default)]
        reflect: bool,
    },
}

/// Boundary piece records of a `pieces` shape, in counterclockwise order.
/// A graph arc is given by its chord: `from` is its start, `to` its end.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum PieceRecord {
    Segment {
        from: [f64; 2],
        to: [f64; 2],
    },
    CircularArc {
        center: [f64; 2],
        radius: f64,
        start_deg: f64,
        end_deg: f64,
    },
    EllipticArc {
        center: [f64; 2],
        a: f64,
        b: f64,
        #[serde(default)]
        rotation_deg: f64,
        start_deg: f64,
        end_deg: f64,
    },
    GraphArc {
        graph: GraphKind,
        from: [f64; 2],
        to: [f64; 2],
    },
}

fn p2(v: [f64; 2]) -> Point2 {
    pt(v[0], v[1])
}

fn arr(p: Point2) -> [f64; 2] {
    [p.x, p.y]
}

fn schema(path: &str, message: impl ToString) -> Error {
    Error::Schema {
        path: path.to_string(),
        message: message.to_string(),
    }
}

/// Re-label a construction error with the record path.
fn at<T>(path: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| schema(path, e))
}

fn finite(path: &str, vals: &[f64]) -> Result<()> {
    if vals.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(schema(path, "non-finite number"))
    }
}

impl ShapeFile {
    pub fn parse(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let file: ShapeFile = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            schema(if path == "." { "$" } else { &path }, e.into_inner())
        })?;
        if file.version != VERSION {
            return Err(schema(
                "version",
                format!("unsupported version {} (expected {VERSION})", file.version),
            ));
        }
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("shape files serialize")
    }

    /// All bodies in file order, named pairs expanded.
    pub fn bodies(&self) -> Result<Vec<ConvexBody>> {
        let mut out = Vec::new();
        for (i, s) in self.shapes.iter().enumerate() {
            out.extend(s.build(&format!("shapes[{i}]"))?);
        }
        Ok(out)
    }

    /// Replay file holding exactly the two given bodies.
    pub fn from_bodies(d: &ConvexBody, l: &ConvexBody) -> Self {
        Self {
            version: VERSION,
            shapes: vec![Shape::from_body(d), Shape::from_body(l)],
            expected: None,
        }
    }

    /// Explicit geometry of a construction, with its expected predicates.
    pub fn from_pair(pair: &NamedPair) -> Self {
        Self {
            expected: Some(pair.expected),
            ..Self::from_bodies(&pair.d, &pair.l)
        }
    }
}

impl Shape {
    pub fn build(&self, path: &str) -> Result<Vec<ConvexBody>> {
        let one = |b: Result<ConvexBody>| at(path, b).map(|b| vec![b]);
        match self {
            Shape::Disk { center, radius } => {
                finite(path, &[center[0], center[1], *radius])?;
                if *radius <= 0.0 {
                    return Err(schema(&format!("{path}.radius"), "must be positive"));
                }
                one(ConvexBody::disk(p2(*center), *radius))
            }
            Shape::Polygon { vertices } => {
                for (k, v) in vertices.iter().enumerate() {
                    finite(&format!("{path}.vertices[{k}]"), v)?;
                }
                if vertices.len() < 3 {
                    return Err(schema(
                        &format!("{path}.vertices"),
                        "need at least 3 vertices",
                    ));
                }
                let pts: Vec<Point2> = vertices.iter().copied().map(p2).collect();
                one(ConvexBody::polygon(&pts))
            }
            Shape::Ellipse {
                center,
                a,
                b,
                angle,
            } => {
                finite(path, &[center[0], center[1], *a, *b, *angle])?;
                for (name, v) in [("a", a), ("b", b)] {
                    if *v <= 0.0 {
                        return Err(schema(&format!("{path}.{name}"), "must be positive"));
                    }
                }
                one(ConvexBody::ellipse(p2(*center), *a, *b, angle.to_radians()))
            }
            Shape::Pieces { pieces } => {
                let mut out = Vec::with_capacity(pieces.len());
                for (k, p) in pieces.iter().enumerate() {
                    out.push(p.build(&format!("{path}.pieces[{k}]"))?);
                }
                one(ConvexBody::from_pieces(out))
            }
            Shape::Named { name, member } => {
                let pair = PairName::parse(name)
                    .ok_or_else(|| {
                        let known: Vec<&str> = PairName::ALL.iter().map(|p| p.as_str()).collect();
                        schema(
                            &format!("{path}.name"),
                            format!(
                                "unknown construction `{name}` (known: {})",
                                known.join(", ")
                            ),
                        )
                    })?
                    .build();
                Ok(match member {
                    None => vec![pair.d, pair.l],
                    Some(Member::D) => vec![pair.d],
                    Some(Member::L) => vec![pair.l],
                })
            }
            Shape::Transform {
                base,
                rotate_deg,
                about,
                translate,
                reflect,
            } => {
                finite(
                    path,
                    &[*rotate_deg, about[0], about[1], translate[0], translate[1]],
                )?;
                let m = transform_motion(*rotate_deg, p2(*about), p2(*translate), *reflect);
                Ok(base
                    .build(&format!("{path}.base"))?
                    .iter()
                    .map(|b| b.apply_motion(&m))
                    .collect())
            }
        }
    }

    /// Record reproducing `body`: polygon vertices when straight-sided, else pieces.
    pub fn from_body(body: &ConvexBody) -> Self {
        match body.polygon_vertices() {
            Some(v) if v.len() >= 3 => Shape::Polygon {
                vertices: v.into_iter().map(arr).collect(),
            },
            _ => Shape::Pieces {
                pieces: body.pieces().iter().map(PieceRecord::from_piece).collect(),
            },
        }
    }
}

/// Reflect across the horizontal line through `about`, rotate about it, translate.
pub fn transform_motion(
    rotate_deg: f64,
    about: Point2,
    translate: Point2,
    reflect: bool,
) -> RigidMotion {
    let mut m = RigidMotion::identity();
    if reflect {
        m = RigidMotion::reflection_about(about);
    }
    m = RigidMotion::rotation_about(about, rotate_deg.to_radians()).compose(&m);
    RigidMotion::translation(translate).compose(&m)
}

impl PieceRecord {
    pub fn build(&self, path: &str) -> Result<BoundaryPiece> {
        match *self {
            PieceRecord::Segment { from, to } => {
                finite(path, &[from[0], from[1], to[0], to[1]])?;
                Ok(BoundaryPiece::Segment {
                    a: p2(from),
                    b: p2(to),
                })
            }
            PieceRecord::CircularArc {
                center,
                radius,
                start_deg,
                end_deg,
            } => {
                finite(path, &[center[0], center[1], radius, start_deg, end_deg])?;
                if radius <= 0.0 {
                    return Err(schema(&format!("{path}.radius"), "must be positive"));
                }
                if !(end_deg > start_deg && end_deg - start_deg <= 360.0) {
                    return Err(schema(
                        &format!("{path}.end_deg"),
                        "need 0 < end_deg - start_deg <= 360",
                    ));
                }
                Ok(BoundaryPiece::CircularArc {
                    center: p2(center),
                    radius,
                    start_angle: start_deg.to_radians(),
                    end_angle: end_deg.to_radians(),
                })
            }
            PieceRecord::EllipticArc {
                center,
                a,
                b,
                rotation_deg,
                start_deg,
                end_deg,
            } => {
                finite(
                    path,
                    &[center[0], center[1], a, b, rotation_deg, start_deg, end_deg],
                )?;
                if a <= 0.0 || b <= 0.0 {
                    return Err(schema(path, "semi-axes must be positive"));
                }
                if !(end_deg > start_deg && end_deg - start_deg <= 360.0) {
                    return Err(schema(
                        &format!("{path}.end_deg"),
                        "need 0 < end_deg - start_deg <= 360",
                    ));
                }
                Ok(BoundaryPiece::EllipticArc {
                    center: p2(center),
                    a,
                    b,
                    rotation: rotation_deg.to_radians(),
                    start: start_deg.to_radians(),
                    end: end_deg.to_radians(),
                })
            }
            PieceRecord::GraphArc { graph, from, to } => {
                finite(path, &[from[0], from[1], to[0], to[1]])?;
                if p2(from).dist(p2(to)) <= 0.0 {
                    return Err(schema(path, "graph arc chord has zero length"));
                }
                Ok(graph_arc_on_edge(graph, p2(from), p2(to)))
            }
        }
    }

    pub fn from_piece(piece: &BoundaryPiece) -> Self {
        match *piece {
            BoundaryPiece::Segment { a, b } => PieceRecord::Segment {
                from: arr(a),
                to: arr(b),
            },
            BoundaryPiece::CircularArc {
                center,
                radius,
                start_angle,
                end_angle,
            } => PieceRecord::CircularArc {
                center: arr(center),
                radius,
                start_deg: start_angle.to_degrees(),
                end_deg: end_angle.to_degrees(),
            },
            BoundaryPiece::EllipticArc {
                center,
                a,
                b,
                rotation,
                start,
                end,
            } => PieceRecord::EllipticArc {
                center: arr(center),
                a,
                b,
                rotation_deg: rotation.to_degrees(),
                start_deg: start.to_degrees(),
                end_deg: end.to_degrees(),
            },
            BoundaryPiece::GraphArc { kind, .. } => PieceRecord::GraphArc {
                graph: kind,
                from: arr(piece.start()),
                to: arr(piece.end()),
            },
        }
    }
}
