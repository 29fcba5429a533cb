//! Deterministic SVG figures: bodies, common supporting lines with a
//! direction arrowhead and a half arrowhead on the left (body) side, and the
//! two set differences shaded dark (`D ∖ L`) and light (`L ∖ D`).
//!
//! The y axis is flipped by writing `-y`, so markers keep their orientation.

use std::fmt::Write as _;

use crate::body::{BoundaryPiece, ConvexBody};
use crate::geom::Point2;
use crate::raster::Viewport;
use crate::tangency::CommonSupportingLine;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SvgOptions {
    /// Rendered width and height in pixels.
    pub size_px: u32,
    /// Polyline points per curved piece.
    pub curve_points: usize,
    pub shade_differences: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        Self {
            size_px: 640,
            curve_points: 96,
            shade_differences: true,
        }
    }
}

const LABELS: [&str; 2] = ["D", "L"];
const STROKES: [&str; 2] = ["#1f3b73", "#8a2d1c"];
const DARK: &str = "#4a4a4a";
const LIGHT: &str = "#bdbdbd";

fn num(v: f64) -> String {
    // fixed precision keeps output byte-stable; avoid "-0.000000"
    let s = format!("{v:.6}");
    if s.trim_start_matches('-')
        .chars()
        .all(|c| c == '0' || c == '.')
    {
        "0.000000".to_string()
    } else {
        s
    }
}

fn xy(p: Point2) -> String {
    format!("{},{}", num(p.x), num(-p.y))
}

/// Full circle as `(center, radius)`, if the body is one.
fn as_circle(body: &ConvexBody) -> Option<(Point2, f64)> {
    match body.pieces() {
        [BoundaryPiece::CircularArc {
            center,
            radius,
            start_angle,
            end_angle,
        }] if (end_angle - start_angle - std::f64::consts::TAU).abs() < 1e-12 => {
            Some((*center, *radius))
        }
        _ => None,
    }
}

fn outline_path(body: &ConvexBody, opts: &SvgOptions) -> String {
    let mut d = String::new();
    for (k, piece) in body.pieces().iter().enumerate() {
        let pts = if piece.is_curved() {
            piece.flatten(opts.curve_points)
        } else {
            vec![piece.start(), piece.end()]
        };
        for (i, p) in pts.iter().enumerate() {
            if k == 0 && i == 0 {
                let _ = write!(d, "M{}", xy(*p));
            } else if i > 0 {
                let _ = write!(d, " L{}", xy(*p));
            }
        }
    }
    if body.pieces().is_empty() {
        let p = body.anchor();
        let _ = write!(d, "M{} L{}", xy(p), xy(p));
    }
    d.push_str(" Z");
    d
}

fn piece_kind(piece: &BoundaryPiece) -> String {
    match piece {
        BoundaryPiece::GraphArc { kind, .. } => format!("graph_arc data-graph=\"{}\"", kind.name()),
        p => p.kind_name().to_string(),
    }
}

fn write_body(out: &mut String, idx: usize, body: &ConvexBody, opts: &SvgOptions, stroke_w: f64) {
    let label = LABELS.get(idx).copied().unwrap_or("B");
    let stroke = STROKES[idx % 2];
    if let Some((c, r)) = as_circle(body) {
        let _ = writeln!(
            out,
            "  <circle data-body=\"{label}\" data-kind=\"circular_arc\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"{}\"/>",
            num(c.x),
            num(-c.y),
            num(r),
            num(stroke_w)
        );
        return;
    }
    let _ = writeln!(
        out,
        "  <g data-body=\"{label}\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"{}\">",
        num(stroke_w)
    );
    if body.pieces().is_empty() {
        let p = body.anchor();
        let _ = writeln!(
            out,
            "    <circle data-kind=\"point\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{stroke}\"/>",
            num(p.x),
            num(-p.y),
            num(2.0 * stroke_w)
        );
    }
    for (k, piece) in body.pieces().iter().enumerate() {
        let pts = if piece.is_curved() {
            piece.flatten(opts.curve_points)
        } else {
            vec![piece.start(), piece.end()]
        };
        let d: Vec<String> = pts.iter().map(|p| xy(*p)).collect();
        let _ = writeln!(
            out,
            "    <path data-piece=\"{k}\" data-kind=\"{}\" d=\"M{}\"/>",
            piece_kind(piece),
            d.join(" L")
        );
    }
    out.push_str("  </g>\n");
}

/// Endpoints of the line clipped to the window.
fn clip_line(line: &CommonSupportingLine, vp: &Viewport) -> (Point2, Point2) {
    let u = line.line.dir.unit();
    let a = line.line.anchor();
    let hi = vp.max();
    let corners = [
        vp.min,
        Point2 {
            x: hi.x,
            y: vp.min.y,
        },
        hi,
        Point2 {
            x: vp.min.x,
            y: hi.y,
        },
    ];
    let ts: Vec<f64> = corners.iter().map(|c| (*c - a).dot(u)).collect();
    let t0 = ts.iter().copied().fold(f64::INFINITY, f64::min);
    let t1 = ts.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    (a + u * t0, a + u * t1)
}

/// SVG figure of up to two bodies and the given common supporting lines.
pub fn render(bodies: &[&ConvexBody], lines: &[CommonSupportingLine], opts: &SvgOptions) -> String {
    let vp = Viewport::covering(bodies);
    let s = vp.size;
    let stroke_w = s / 400.0;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"{1} {2} {3} {3}\">",
        opts.size_px,
        num(vp.min.x),
        num(-vp.max().y),
        num(s)
    );
    let with_lines = !lines.is_empty();
    let shade = opts.shade_differences && bodies.len() == 2;
    if with_lines || shade {
        out.push_str("  <defs>\n");
    }
    if with_lines {
        out.push_str(
            "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 Z\" fill=\"#202020\"/></marker>\n",
        );
        // single barb on the left of the travel direction (screen y points down)
        out.push_str(
            "    <marker id=\"half-arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,5 Z\" fill=\"#202020\"/></marker>\n",
        );
    }
    if shade {
        for (i, other) in bodies.iter().rev().enumerate() {
            let _ = writeln!(
                out,
                "    <mask id=\"minus-{}\"><rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"white\"/><path d=\"{}\" fill=\"black\"/></mask>",
                LABELS[1 - i],
                num(vp.min.x),
                num(-vp.max().y),
                num(s),
                num(s),
                outline_path(other, opts)
            );
        }
    }
    if with_lines || shade {
        out.push_str("  </defs>\n");
    }
    if shade {
        for (i, (body, tone)) in bodies.iter().zip([DARK, LIGHT]).enumerate() {
            let _ = writeln!(
                out,
                "  <path class=\"difference\" data-region=\"{0}\\{1}\" d=\"{2}\" fill=\"{tone}\" mask=\"url(#minus-{0})\"/>",
                LABELS[i],
                LABELS[1 - i],
                outline_path(body, opts)
            );
        }
    }
    for (i, b) in bodies.iter().enumerate() {
        write_body(&mut out, i, b, opts, stroke_w);
    }
    for line in lines {
        let (p, q) = clip_line(line, &vp);
        let mid = (p + q) * 0.5;
        let _ = writeln!(
            out,
            "  <g class=\"support\" data-alpha=\"{}\"><line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#202020\" stroke-width=\"{}\" marker-end=\"url(#arrow)\"/><line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#202020\" stroke-width=\"{}\" marker-end=\"url(#half-arrow)\"/></g>",
            num(line.alpha().to_degrees()),
            num(p.x),
            num(-p.y),
            num(q.x),
            num(-q.y),
            num(stroke_w * 0.6),
            num(p.x),
            num(-p.y),
            num(mid.x),
            num(-mid.y),
            num(stroke_w * 0.6)
        );
    }
    out.push_str("</svg>\n");
    out
}
