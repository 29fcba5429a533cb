//! Exact component count of `A \ B` for convex polygons by half-plane clipping.
//!
//! `A \ B` is the disjoint union of the convex pieces
//! `P_k = A ∩ out(e_k) ∩ in(e_0) ∩ … ∩ in(e_{k-1})` over the edges `e_k` of `B`.
//! Two pieces lie in one component when they share a boundary segment of
//! positive length; that can only happen along the line of an edge of `B`.

use crosskit_core::Point2;

const EPS: f64 = 1e-12;

fn side(a: Point2, b: Point2, p: Point2) -> f64 {
    (b - a).cross(p - a) / (b - a).norm()
}

/// Part of `poly` with `sign * side(a, b, p) >= 0`.
fn clip(poly: &[Point2], a: Point2, b: Point2, sign: f64) -> Vec<Point2> {
    let mut out = Vec::new();
    let n = poly.len();
    for i in 0..n {
        let (p, q) = (poly[i], poly[(i + 1) % n]);
        let (sp, sq) = (sign * side(a, b, p), sign * side(a, b, q));
        if sp >= 0.0 {
            out.push(p);
        }
        if (sp > 0.0 && sq < 0.0) || (sp < 0.0 && sq > 0.0) {
            out.push(p + (q - p) * (sp / (sp - sq)));
        }
    }
    out
}

fn area(poly: &[Point2]) -> f64 {
    let n = poly.len();
    0.5 * (0..n)
        .map(|i| poly[i].cross(poly[(i + 1) % n]))
        .sum::<f64>()
}

/// Coordinate intervals, along `a → b`, of the edges of `poly` lying on that line.
fn on_line(poly: &[Point2], a: Point2, b: Point2) -> Vec<(f64, f64)> {
    let u = (b - a) * (1.0 / (b - a).norm());
    let n = poly.len();
    (0..n)
        .filter_map(|i| {
            let (p, q) = (poly[i], poly[(i + 1) % n]);
            (side(a, b, p).abs() <= EPS && side(a, b, q).abs() <= EPS).then(|| {
                let (s, t) = ((p - a).dot(u), (q - a).dot(u));
                (s.min(t), s.max(t))
            })
        })
        .collect()
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    parent[i] = r;
    r
}

/// Areas of the components of `a \ b`, built from pieces of at least `min_area`.
pub fn difference_components(a: &[Point2], b: &[Point2], min_area: f64) -> Vec<f64> {
    let m = b.len();
    let mut pieces: Vec<(usize, Vec<Point2>)> = Vec::new();
    for k in 0..m {
        let (p, q) = (b[k], b[(k + 1) % m]);
        let mut poly = clip(a, p, q, -1.0);
        for j in 0..k {
            if poly.len() < 3 {
                break;
            }
            poly = clip(&poly, b[j], b[(j + 1) % m], 1.0);
        }
        if poly.len() >= 3 && area(&poly) >= min_area {
            pieces.push((k, poly));
        }
    }
    let mut parent: Vec<usize> = (0..pieces.len()).collect();
    for x in 0..pieces.len() {
        for y in x + 1..pieces.len() {
            let j = pieces[x].0.min(pieces[y].0);
            let (p, q) = (b[j], b[(j + 1) % m]);
            let touching = on_line(&pieces[x].1, p, q).iter().any(|&(s0, s1)| {
                on_line(&pieces[y].1, p, q)
                    .iter()
                    .any(|&(t0, t1)| s1.min(t1) - s0.max(t0) > EPS)
            });
            if touching {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                parent[rx] = ry;
            }
        }
    }
    let mut areas = vec![0.0; pieces.len()];
    for (i, (_, poly)) in pieces.iter().enumerate() {
        let r = find(&mut parent, i);
        areas[r] += area(poly);
    }
    areas.into_iter().filter(|&x| x > 0.0).collect()
}
