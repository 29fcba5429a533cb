//! Brute-force connectivity referee on a square pixel grid.
//!
//! A cell is marked for a body when its center classifies as interior or
//! boundary. Two paths produce the same marking: [`rasterize`] classifies
//! every cell, while [`row_spans`] exploits convexity (the marked cells of a
//! row are contiguous) and only classifies cells near the span ends.
//!
//! Components use 4-connectivity. Where two boundaries cross at a shallow
//! angle the tip of the difference wedge is thinner than a cell and breaks
//! into diagonal-only fragments at every resolution. The resolved count
//! therefore keeps only components holding a `CORE × CORE` block of set
//! cells: a strip at angle φ splits under 4-connectivity only when narrower
//! than h(|cos φ| + |sin φ|), which is the width a 2×2 block needs. The raw
//! count is available alongside.

use std::collections::HashSet;
use std::io::Write;

use crate::body::{BodyKind, ConvexBody};
use crate::error::{Error, Result};
use crate::geom::{pt, Point2, TIE_TOL};
use crate::numeric::golden_min;

pub const DEFAULT_RESOLUTION: usize = 2048;
pub const MIN_RESOLUTION: usize = 64;
pub const MARGIN: f64 = 0.05;
/// Side of the cell block that certifies a resolved component.
pub const CORE: usize = 2;

/// Axis-aligned square window `[min, min + size]²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Viewport {
    pub min: Point2,
    pub size: f64,
}

impl Viewport {
    /// Smallest square holding every body's bounding box, grown by the margin
    /// fraction of its side on each side.
    pub fn covering(bodies: &[&ConvexBody]) -> Self {
        let (mut lo, mut hi) = (
            pt(f64::INFINITY, f64::INFINITY),
            pt(f64::NEG_INFINITY, f64::NEG_INFINITY),
        );
        for b in bodies {
            let (a, c) = b.bbox();
            lo = pt(lo.x.min(a.x), lo.y.min(a.y));
            hi = pt(hi.x.max(c.x), hi.y.max(c.y));
        }
        let side = (hi.x - lo.x).max(hi.y - lo.y);
        let side = if side > 0.0 { side } else { 1.0 };
        let size = side * (1.0 + 2.0 * MARGIN);
        let center = (lo + hi) * 0.5;
        Self {
            min: center - pt(size, size) * 0.5,
            size,
        }
    }

    pub fn cell_size(&self, n: usize) -> f64 {
        self.size / n as f64
    }

    /// Center of cell `(i, j)`; `i` counts columns from the left, `j` rows from the bottom.
    pub fn cell_center(&self, n: usize, i: usize, j: usize) -> Point2 {
        let h = self.cell_size(n);
        pt(
            self.min.x + (i as f64 + 0.5) * h,
            self.min.y + (j as f64 + 0.5) * h,
        )
    }

    pub fn max(&self) -> Point2 {
        self.min + pt(self.size, self.size)
    }

    /// Errors unless the body's bounding box lies inside the window.
    pub fn check(&self, body: &ConvexBody) -> Result<()> {
        let (a, b) = body.bbox();
        let hi = self.max();
        if a.x < self.min.x || a.y < self.min.y || b.x > hi.x || b.y > hi.y {
            return Err(Error::ViewportTooSmall { min: a, max: b });
        }
        Ok(())
    }
}

/// Row-major bit grid; row `j` is the `j`-th row from the bottom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bitmap {
    n: usize,
    bits: Vec<bool>,
}

impl Bitmap {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            bits: vec![false; n * n],
        }
    }

    pub fn from_spans(n: usize, spans: &[Option<(usize, usize)>]) -> Self {
        let mut bm = Self::new(n);
        for (j, s) in spans.iter().enumerate() {
            if let Some((a, b)) = *s {
                for i in a..=b {
                    bm.set(i, j, true);
                }
            }
        }
        bm
    }

    pub fn resolution(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[j * self.n + i]
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        self.bits[j * self.n + i] = v;
    }

    pub fn count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Cells set here and clear in `other`.
    pub fn minus(&self, other: &Bitmap) -> Bitmap {
        assert_eq!(self.n, other.n, "bitmap resolutions differ");
        Bitmap {
            n: self.n,
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(&a, &b)| a && !b)
                .collect(),
        }
    }

    /// 4-connected components by iterative flood fill.
    pub fn components(&self) -> usize {
        self.count_components(false)
    }

    /// 4-connected components containing at least one core cell.
    pub fn resolved_components(&self) -> usize {
        self.count_components(true)
    }

    /// Cell `(i, j)` is the lower-left corner of a set `CORE × CORE` block.
    fn is_core(&self, i: usize, j: usize) -> bool {
        let n = self.n;
        i + CORE <= n
            && j + CORE <= n
            && (j..j + CORE).all(|r| (i..i + CORE).all(|c| self.get(c, r)))
    }

    fn count_components(&self, require_core: bool) -> usize {
        let n = self.n;
        let mut seen = vec![false; n * n];
        let mut stack = Vec::new();
        let mut count = 0;
        for start in 0..n * n {
            if !self.bits[start] || seen[start] {
                continue;
            }
            seen[start] = true;
            stack.push(start);
            let mut core = false;
            while let Some(k) = stack.pop() {
                let (i, j) = (k % n, k / n);
                core = core || (require_core && self.is_core(i, j));
                let mut visit = |q: usize| {
                    if self.bits[q] && !seen[q] {
                        seen[q] = true;
                        stack.push(q);
                    }
                };
                if i > 0 {
                    visit(k - 1);
                }
                if i + 1 < n {
                    visit(k + 1);
                }
                if j > 0 {
                    visit(k - n);
                }
                if j + 1 < n {
                    visit(k + n);
                }
            }
            if core || !require_core {
                count += 1;
            }
        }
        count
    }
}

/// Both bodies' markings on a shared window.
#[derive(Debug, Clone)]
pub struct RasterGrid {
    pub viewport: Viewport,
    pub n: usize,
    pub d: Bitmap,
    pub l: Bitmap,
}

impl RasterGrid {
    pub fn new(d: &ConvexBody, l: &ConvexBody, n: usize) -> Result<Self> {
        let viewport = Viewport::covering(&[d, l]);
        let sd = row_spans(d, &viewport, n)?;
        let sl = row_spans(l, &viewport, n)?;
        Ok(Self {
            viewport,
            n,
            d: Bitmap::from_spans(n, &sd),
            l: Bitmap::from_spans(n, &sl),
        })
    }

    /// Binary greyscale image, top row first: black outside both, white on
    /// D only, mid-grey on L only, light grey on both.
    pub fn write_pgm(&self, mut out: impl Write) -> std::io::Result<()> {
        write!(out, "P5\n{} {}\n255\n", self.n, self.n)?;
        let mut row = vec![0u8; self.n];
        for j in (0..self.n).rev() {
            for (i, px) in row.iter_mut().enumerate() {
                *px = match (self.d.get(i, j), self.l.get(i, j)) {
                    (false, false) => 0,
                    (true, false) => 255,
                    (false, true) => 96,
                    (true, true) => 176,
                };
            }
            out.write_all(&row)?;
        }
        Ok(())
    }
}

fn check_resolution(n: usize) -> Result<()> {
    if n < MIN_RESOLUTION {
        return Err(Error::Precondition(format!(
            "raster resolution {n} is below {MIN_RESOLUTION}"
        )));
    }
    Ok(())
}

/// Classify every cell center of the window.
pub fn rasterize(body: &ConvexBody, viewport: &Viewport, n: usize) -> Result<Bitmap> {
    check_resolution(n)?;
    viewport.check(body)?;
    let mut bm = Bitmap::new(n);
    for j in 0..n {
        for i in 0..n {
            if body.contains(viewport.cell_center(n, i, j)).is_inside() {
                bm.set(i, j, true);
            }
        }
    }
    Ok(bm)
}

/// Marked column range `(first, last)` of every row, or `None` for an empty row.
pub fn row_spans(
    body: &ConvexBody,
    viewport: &Viewport,
    n: usize,
) -> Result<Vec<Option<(usize, usize)>>> {
    check_resolution(n)?;
    viewport.check(body)?;
    let h = viewport.cell_size(n);
    let (bmin, bmax) = body.bbox();
    let mut spans = Vec::with_capacity(n);
    let mut prev: Option<(usize, usize)> = None;
    for j in 0..n {
        let y = viewport.min.y + (j as f64 + 0.5) * h;
        // a marked center lies within TIE_TOL of the body
        if y < bmin.y - 2.0 * TIE_TOL || y > bmax.y + 2.0 * TIE_TOL {
            prev = None;
            spans.push(None);
            continue;
        }
        let inside = |i: usize| {
            body.contains(pt(viewport.min.x + (i as f64 + 0.5) * h, y))
                .is_inside()
        };
        let seed = prev
            .map(|(a, b)| (a + b) / 2)
            .filter(|&c| inside(c))
            .or_else(|| seed_from_minimum(body, viewport, n, y, &inside));
        let span = seed.map(|c| (gallop(c, 0, &inside), gallop(c, n - 1, &inside)));
        prev = span;
        spans.push(span);
    }
    Ok(spans)
}

/// A marked cell of the row, located through the minimizer of the (convex)
/// max-residual along the row.
fn seed_from_minimum(
    body: &ConvexBody,
    viewport: &Viewport,
    n: usize,
    y: f64,
    inside: &impl Fn(usize) -> bool,
) -> Option<usize> {
    let h = viewport.cell_size(n);
    let (x, g) = golden_min(
        viewport.min.x,
        viewport.max().x,
        1e-12 * viewport.size,
        |x| body.max_residual(pt(x, y)),
    );
    let thr = match body.kind() {
        BodyKind::Region => TIE_TOL,
        _ => 2.0 * TIE_TOL,
    };
    if g > thr.max(h) {
        return None;
    }
    let c = (((x - viewport.min.x) / h - 0.5).round().max(0.0) as usize).min(n - 1);
    [c, c.saturating_sub(1), (c + 1).min(n - 1)]
        .into_iter()
        .find(|&i| inside(i))
}

/// Last marked index walking from the marked index `from` towards `to`,
/// assuming marked cells are contiguous.
fn gallop(from: usize, to: usize, inside: &impl Fn(usize) -> bool) -> usize {
    let dist = from.abs_diff(to);
    let at = |k: usize| if to < from { from - k } else { from + k };
    // exponential probe, then binary search on [good, bad)
    let mut good = 0;
    let mut step = 1;
    let bad = loop {
        let k = (good + step).min(dist);
        if k == good {
            return at(good);
        }
        if inside(at(k)) {
            good = k;
            if k == dist {
                return at(k);
            }
            step *= 2;
        } else {
            break k;
        }
    };
    let (mut lo, mut hi) = (good, bad);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if inside(at(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    at(lo)
}

/// Runs of `a` minus `b` within a row (at most two).
fn row_difference(a: Option<(usize, usize)>, b: Option<(usize, usize)>) -> Vec<(usize, usize)> {
    let Some((a0, a1)) = a else { return Vec::new() };
    let Some((b0, b1)) = b else {
        return vec![(a0, a1)];
    };
    let mut out = Vec::with_capacity(2);
    if a0 < b0 {
        out.push((a0, a1.min(b0 - 1)));
    }
    if a1 > b1 {
        out.push((a0.max(b1 + 1), a1));
    }
    out
}

/// Union-find over the difference runs of each row.
struct Runs {
    rows: Vec<Vec<(usize, usize, usize)>>,
    parent: Vec<usize>,
}

impl Runs {
    fn new(a: &[Option<(usize, usize)>], b: &[Option<(usize, usize)>]) -> Self {
        let mut runs = Runs {
            rows: Vec::with_capacity(a.len()),
            parent: Vec::new(),
        };
        for (sa, sb) in a.iter().zip(b) {
            let mut cur = Vec::new();
            for (lo, hi) in row_difference(*sa, *sb) {
                let id = runs.parent.len();
                runs.parent.push(id);
                let touching: Vec<usize> = runs
                    .rows
                    .last()
                    .map(|prev| {
                        prev.iter()
                            .filter(|p| p.0 <= hi && lo <= p.1)
                            .map(|p| p.2)
                            .collect()
                    })
                    .unwrap_or_default();
                for pid in touching {
                    let (ra, rb) = (runs.find(id), runs.find(pid));
                    runs.parent[ra] = rb;
                }
                cur.push((lo, hi, id));
            }
            runs.rows.push(cur);
        }
        runs
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Does run `(lo, hi)` of row `j` start a `CORE × CORE` block of set cells?
    fn has_core(&self, j: usize, lo: usize, hi: usize) -> bool {
        if j + CORE > self.rows.len() {
            return false;
        }
        let mut cur = vec![(lo, hi)];
        for row in &self.rows[j + 1..j + CORE] {
            cur = cur
                .iter()
                .flat_map(|&(a, b)| row.iter().map(move |r| (a.max(r.0), b.min(r.1))))
                .filter(|&(a, b)| b + 1 >= a + CORE)
                .collect();
        }
        cur.iter().any(|&(a, b)| b + 1 >= a + CORE)
    }

    fn count(&mut self, require_core: bool) -> usize {
        let mut roots = HashSet::new();
        for j in 0..self.rows.len() {
            for k in 0..self.rows[j].len() {
                let (lo, hi, id) = self.rows[j][k];
                if !require_core || self.has_core(j, lo, hi) {
                    let r = self.find(id);
                    roots.insert(r);
                }
            }
        }
        roots.len()
    }
}

/// Resolved 4-connected component count of `a ∖ b` from row spans.
pub fn span_difference_components(
    a: &[Option<(usize, usize)>],
    b: &[Option<(usize, usize)>],
) -> usize {
    Runs::new(a, b).count(true)
}

/// Raw 4-connected component count of `a ∖ b`, fragments included.
pub fn span_difference_components_raw(
    a: &[Option<(usize, usize)>],
    b: &[Option<(usize, usize)>],
) -> usize {
    Runs::new(a, b).count(false)
}

/// Raw and resolved component counts of both differences on a shared window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct OracleCounts {
    pub raw: (usize, usize),
    pub resolved: (usize, usize),
}

impl OracleCounts {
    pub fn ft_crossing(&self) -> bool {
        self.resolved.0 >= 2 && self.resolved.1 >= 2
    }
}

pub fn oracle_report(d: &ConvexBody, l: &ConvexBody, n: usize) -> Result<OracleCounts> {
    let vp = Viewport::covering(&[d, l]);
    let sd = row_spans(d, &vp, n)?;
    let sl = row_spans(l, &vp, n)?;
    let (mut dl, mut ld) = (Runs::new(&sd, &sl), Runs::new(&sl, &sd));
    Ok(OracleCounts {
        raw: (dl.count(false), ld.count(false)),
        resolved: (dl.count(true), ld.count(true)),
    })
}

/// Resolved component counts of `D ∖ L` and `L ∖ D`.
pub fn oracle_counts(d: &ConvexBody, l: &ConvexBody, n: usize) -> Result<(usize, usize)> {
    Ok(oracle_report(d, l, n)?.resolved)
}

pub fn oracle_component_count(d: &ConvexBody, l: &ConvexBody, n: usize) -> Result<usize> {
    Ok(oracle_counts(d, l, n)?.0)
}

pub fn oracle_ft_crossing(d: &ConvexBody, l: &ConvexBody, n: usize) -> Result<bool> {
    Ok(oracle_report(d, l, n)?.ft_crossing())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{random_polygon_pair, PairName};
    use std::f64::consts::PI;

    fn full_counts(d: &ConvexBody, l: &ConvexBody, n: usize) -> (usize, usize) {
        let vp = Viewport::covering(&[d, l]);
        let bd = rasterize(d, &vp, n).unwrap();
        let bl = rasterize(l, &vp, n).unwrap();
        let (a, b) = (bd.minus(&bl), bl.minus(&bd));
        (a.resolved_components(), b.resolved_components())
    }

    #[test]
    fn spans_match_full_classification() {
        let mut pairs: Vec<(ConvexBody, ConvexBody)> = PairName::ALL
            .iter()
            .map(|p| {
                let np = p.build();
                (np.d, np.l)
            })
            .collect();
        for i in 0..20 {
            let (d, l, _) = random_polygon_pair(7, i);
            pairs.push((d, l));
        }
        for (d, l) in &pairs {
            let vp = Viewport::covering(&[d, l]);
            for body in [d, l] {
                let full = rasterize(body, &vp, 200).unwrap();
                let fast = Bitmap::from_spans(200, &row_spans(body, &vp, 200).unwrap());
                assert_eq!(full, fast);
            }
            assert_eq!(full_counts(d, l, 200), oracle_counts(d, l, 200).unwrap());
            let rep = oracle_report(d, l, 200).unwrap();
            let bd = Bitmap::from_spans(200, &row_spans(d, &vp, 200).unwrap());
            let bl = Bitmap::from_spans(200, &row_spans(l, &vp, 200).unwrap());
            assert_eq!(
                rep.raw,
                (bd.minus(&bl).components(), bl.minus(&bd).components())
            );
        }
    }

    #[test]
    fn fragments_need_a_core_cell() {
        // two solid blocks plus a diagonal staircase of single cells
        let mut bm = Bitmap::new(64);
        for j in 10..20 {
            for i in 10..20 {
                bm.set(i, j, true);
                bm.set(i + 30, j + 30, true);
            }
        }
        for k in 0..5 {
            bm.set(25 + k, 25 + k, true);
        }
        assert_eq!(bm.components(), 7);
        assert_eq!(bm.resolved_components(), 2);
    }

    #[test]
    fn disk_area_fraction() {
        let disk = ConvexBody::disk(Point2::ORIGIN, 1.0).unwrap();
        let vp = Viewport::covering(&[&disk]);
        let bm = rasterize(&disk, &vp, 512).unwrap();
        let frac = bm.count() as f64 / (512.0 * 512.0);
        let expected = PI / (vp.size * vp.size);
        assert!((frac / expected - 1.0).abs() < 0.01, "{frac} vs {expected}");
    }

    #[test]
    fn point_marks_at_most_one_cell() {
        let p = ConvexBody::point(pt(0.3, 0.2));
        let vp = Viewport {
            min: pt(-1.0, -1.0),
            size: 2.0,
        };
        assert!(rasterize(&p, &vp, 128).unwrap().count() <= 1);
        let fast = Bitmap::from_spans(128, &row_spans(&p, &vp, 128).unwrap());
        assert!(fast.count() <= 1);
    }

    #[test]
    fn aligned_square_is_a_cell_rectangle() {
        // cell edges at integers; square covers columns/rows 2..=5
        let sq =
            ConvexBody::polygon(&[pt(2.0, 2.0), pt(6.0, 2.0), pt(6.0, 6.0), pt(2.0, 6.0)]).unwrap();
        let vp = Viewport {
            min: Point2::ORIGIN,
            size: 64.0,
        };
        let bm = rasterize(&sq, &vp, 64).unwrap();
        assert_eq!(bm.count(), 16);
        for j in 0..64 {
            for i in 0..64 {
                assert_eq!(bm.get(i, j), (2..6).contains(&i) && (2..6).contains(&j));
            }
        }
    }

    #[test]
    fn viewport_too_small_and_low_resolution() {
        let disk = ConvexBody::disk(Point2::ORIGIN, 1.0).unwrap();
        let vp = Viewport {
            min: Point2::ORIGIN,
            size: 1.0,
        };
        assert!(matches!(
            rasterize(&disk, &vp, 64),
            Err(Error::ViewportTooSmall { .. })
        ));
        let vp = Viewport::covering(&[&disk]);
        assert!(matches!(
            rasterize(&disk, &vp, 32),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn reference_counts() {
        let big = ConvexBody::disk(Point2::ORIGIN, 2.0).unwrap();
        let small = ConvexBody::disk(Point2::ORIGIN, 1.0).unwrap();
        assert_eq!(oracle_component_count(&big, &small, 512).unwrap(), 1);
        let far = ConvexBody::disk(pt(4.0, 0.0), 1.0).unwrap();
        assert_eq!(oracle_component_count(&small, &far, 512).unwrap(), 1);
        assert_eq!(oracle_component_count(&small, &big, 512).unwrap(), 0);
    }

    #[test]
    fn catalog_crossings() {
        for name in PairName::ALL {
            let np = name.build();
            let crossing = oracle_ft_crossing(&np.d, &np.l, 1024).unwrap();
            assert_eq!(crossing, np.expected.tau, "{}", np.name);
        }
    }

    #[test]
    fn pgm_header_and_size() {
        let np = PairName::DiskPair.build();
        let grid = RasterGrid::new(&np.d, &np.l, 64).unwrap();
        let mut buf = Vec::new();
        grid.write_pgm(&mut buf).unwrap();
        assert!(buf.starts_with(b"P5\n64 64\n255\n"));
        assert_eq!(buf.len(), "P5\n64 64\n255\n".len() + 64 * 64);
    }
}
