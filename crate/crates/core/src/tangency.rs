//! Common supporting lines of two bodies and the slide-turn trace of one.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::body::{BodyKind, ChainPos, ContactSet, ConvexBody};
use crate::error::{Error, Result};
use crate::geom::{
    angular_separation, ccw_angle, reduce_angle, DirectedLine, Direction, Point2, TIE_TOL,
};
use crate::numeric::{bisect_predicate, bisect_root, golden_min};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Uniform samples of the support gap over `[0, 2π)`.
    pub grid_n: usize,
    /// `|Δ| <= zero_tol` counts as a zero.
    pub zero_tol: f64,
    /// Roots closer than this (radians) are merged.
    pub dedup_angle: f64,
    /// Tie tolerance for contact sets and extreme ordering.
    pub tie_tol: f64,
    /// Extremes separated by less than this (but more than `tie_tol`) are ambiguous.
    pub ambiguity_band: f64,
    /// Zero runs shorter than this many grid steps are treated as one root.
    pub min_interval_steps: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            grid_n: 4096,
            zero_tol: 1e-9,
            dedup_angle: 1e-6,
            tie_tol: TIE_TOL,
            ambiguity_band: 1e-6,
            min_interval_steps: 8,
        }
    }
}

impl SearchConfig {
    pub fn with_grid(grid_n: usize) -> Self {
        Self {
            grid_n,
            ..Self::default()
        }
    }
}

/// Which bodies an extreme point of `(D ∪ L) ∩ t` belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Owner {
    /// In `D \ L`.
    DOnly,
    /// In `L \ D`.
    LOnly,
    Both,
    Ambiguous,
}

impl Owner {
    pub fn swapped(self) -> Owner {
        match self {
            Owner::DOnly => Owner::LOnly,
            Owner::LOnly => Owner::DOnly,
            o => o,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Extreme {
    pub point: Point2,
    pub owner: Owner,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CommonSupportingLine {
    pub line: DirectedLine,
    pub contact_d: ContactSet,
    pub contact_l: ContactSet,
    pub first: Extreme,
    pub last: Extreme,
    /// `Δ` at the reported direction.
    pub gap: f64,
}

impl CommonSupportingLine {
    pub fn alpha(&self) -> f64 {
        self.line.dir.alpha()
    }

    /// First in `D \ L` and last in `L \ D`.
    pub fn slides(&self) -> bool {
        self.first.owner == Owner::DOnly && self.last.owner == Owner::LOnly
    }

    pub fn is_ambiguous(&self) -> bool {
        self.first.owner == Owner::Ambiguous || self.last.owner == Owner::Ambiguous
    }
}

/// Directions `[start, start + width]` (counterclockwise) on which `Δ ≡ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroInterval {
    pub start: f64,
    pub width: f64,
}

impl ZeroInterval {
    pub fn is_full_circle(&self) -> bool {
        self.width >= TAU
    }

    pub fn contains(&self, alpha: f64, slack: f64) -> bool {
        self.is_full_circle() || ccw_angle(self.start - slack, alpha) <= self.width + 2.0 * slack
    }

    /// Probe directions: both ends and the midpoint (three spread directions
    /// for the full circle).
    pub fn candidates(&self) -> [Direction; 3] {
        if self.is_full_circle() {
            [0.0, TAU / 3.0, 2.0 * TAU / 3.0].map(|a| Direction::new(self.start + a))
        } else {
            [0.0, 0.5, 1.0].map(|f| Direction::new(self.start + f * self.width))
        }
    }
}

/// Sampled support gap with its located zeros.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SupportGapProfile {
    pub alphas: Vec<f64>,
    pub gaps: Vec<f64>,
    pub zeros: Vec<f64>,
    pub intervals: Vec<ZeroInterval>,
}

/// Result of the common-line search.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CommonLines {
    /// Isolated common supporting lines in increasing direction.
    pub lines: Vec<CommonSupportingLine>,
    pub intervals: Vec<ZeroInterval>,
}

impl CommonLines {
    /// Lines probed from the zero intervals.
    pub fn interval_candidates(
        &self,
        d: &ConvexBody,
        l: &ConvexBody,
        cfg: &SearchConfig,
    ) -> Vec<CommonSupportingLine> {
        self.intervals
            .iter()
            .flat_map(|iv| iv.candidates())
            .map(|dir| classify_line(d, l, dir, cfg))
            .collect()
    }
}

/// `Δ(α) = h_D(α) - h_L(α)`.
pub fn support_gap(d: &ConvexBody, l: &ConvexBody, dir: Direction) -> f64 {
    d.support_value(dir) - l.support_value(dir)
}

fn gap_at(d: &ConvexBody, l: &ConvexBody, alpha: f64) -> f64 {
    support_gap(d, l, Direction::new(alpha))
}

/// Zeros of `Δ`: isolated roots and intervals where it vanishes identically.
pub fn support_gap_profile(
    d: &ConvexBody,
    l: &ConvexBody,
    cfg: &SearchConfig,
) -> SupportGapProfile {
    let n = cfg.grid_n.max(8);
    let step = TAU / n as f64;
    let alphas: Vec<f64> = (0..n).map(|i| step * i as f64).collect();
    let gaps: Vec<f64> = alphas.iter().map(|&a| gap_at(d, l, a)).collect();
    let f = |a: f64| gap_at(d, l, a);
    let zero = |g: f64| g.abs() <= cfg.zero_tol;
    let hits: Vec<bool> = gaps.iter().map(|&g| zero(g)).collect();

    let mut roots = Vec::new();
    let mut intervals = Vec::new();

    if hits.iter().all(|&h| h) {
        intervals.push(ZeroInterval {
            start: 0.0,
            width: TAU,
        });
        return SupportGapProfile {
            alphas,
            gaps,
            zeros: roots,
            intervals,
        };
    }

    // scan cyclically from a non-zero sample so runs never wrap the scan start
    let origin = hits
        .iter()
        .position(|&h| !h)
        .expect("some sample is nonzero");
    let at = |k: usize| (origin + k) % n;
    let angle = |k: usize| alphas[origin] + step * k as f64;

    let mut k = 0;
    while k < n {
        let i = at(k);
        let j = at(k + 1);
        if !hits[j] {
            // plain interval between two nonzero samples
            if gaps[i].signum() != gaps[j].signum() {
                roots.push(bisect_root(angle(k), angle(k + 1), 1e-12, |a| {
                    f(a) * gaps[i].signum()
                }));
            }
            k += 1;
            continue;
        }
        // run of zero hits starting at k + 1
        let mut e = k + 1;
        while hits[at(e + 1)] {
            e += 1;
        }
        let (lo, hi) = (angle(k), angle(e + 1));
        let span = e - k - 1;
        if span >= cfg.min_interval_steps && dense_zero(&f, angle(k + 1), angle(e), step, &zero) {
            let (_, s) = bisect_predicate(lo, angle(k + 1), 1e-12, |a| zero(f(a)));
            let (t, _) = bisect_predicate(angle(e), hi, 1e-12, |a| zero(f(a)));
            intervals.push(ZeroInterval {
                start: reduce_angle(s),
                width: t - s,
            });
        } else {
            let (gl, gh) = (gaps[i], gaps[at(e + 1)]);
            let root = if gl.signum() != gh.signum() {
                bisect_root(lo, hi, 1e-12, |a| f(a) * gl.signum())
            } else {
                golden_min(lo, hi, 1e-12, |a| f(a).abs()).0
            };
            roots.push(root);
        }
        k = e + 1;
    }

    // grazing zeros that fall between grid samples
    for i in 0..n {
        let (p, q) = ((i + n - 1) % n, (i + 1) % n);
        if hits[i] || hits[p] || hits[q] {
            continue;
        }
        let same_sign =
            gaps[p].signum() == gaps[i].signum() && gaps[q].signum() == gaps[i].signum();
        if same_sign && gaps[i].abs() <= gaps[p].abs() && gaps[i].abs() <= gaps[q].abs() {
            let (a, v) = golden_min(alphas[i] - step, alphas[i] + step, 1e-12, |a| f(a).abs());
            if v <= cfg.zero_tol {
                roots.push(a);
            }
        }
    }

    // bisection may land just below 2π for a root at 0
    let mut zeros: Vec<f64> = roots
        .into_iter()
        .map(|a| {
            let r = reduce_angle(a);
            if TAU - r < 1e-11 {
                0.0
            } else {
                r
            }
        })
        .collect();
    let edges: Vec<f64> = d
        .pieces()
        .iter()
        .chain(l.pieces())
        .filter(|p| !p.is_curved())
        .map(|p| {
            let e = reduce_angle(p.tangent_at(0.0).angle());
            if TAU - e < 1e-11 {
                0.0
            } else {
                e
            }
        })
        .collect();
    for a in zeros.iter_mut() {
        *a = snap_to_edge(*a, &edges, &f, cfg);
    }
    zeros.retain(|&a| !intervals.iter().any(|iv| iv.contains(a, cfg.dedup_angle)));
    zeros.sort_by(f64::total_cmp);
    let mut merged: Vec<f64> = Vec::with_capacity(zeros.len());
    for a in zeros {
        if merged.last().is_none_or(|&b| a - b > cfg.dedup_angle) {
            merged.push(a);
        }
    }
    if merged.len() > 1 && TAU - merged[merged.len() - 1] + merged[0] <= cfg.dedup_angle {
        merged.pop();
    }
    SupportGapProfile {
        alphas,
        gaps,
        zeros: merged,
        intervals,
    }
}

/// Where `Δ` vanishes to second order (an edge of one body against a smooth
/// stretch of the other) bisection stops anywhere in a flat window around
/// the root. Prefer a nearby edge direction at which `Δ` also vanishes:
/// there the contact set is the full edge.
fn snap_to_edge(alpha: f64, edges: &[f64], f: &impl Fn(f64) -> f64, cfg: &SearchConfig) -> f64 {
    edges
        .iter()
        .map(|&e| (angular_separation(alpha, e), e))
        .filter(|&(sep, e)| sep <= cfg.dedup_angle && f(e).abs() <= cfg.zero_tol)
        .min_by(|a, b| a.0.total_cmp(&b.0))
        .map_or(alpha, |(_, e)| e)
}

/// Check the midpoints of a run of zero samples as well.
fn dense_zero(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    step: f64,
    zero: &impl Fn(f64) -> bool,
) -> bool {
    let mut x = a + 0.5 * step;
    while x < b {
        if !zero(f(x)) {
            return false;
        }
        x += step;
    }
    true
}

/// Build the common line of direction `dir` with its extremes classified.
pub fn classify_line(
    d: &ConvexBody,
    l: &ConvexBody,
    dir: Direction,
    cfg: &SearchConfig,
) -> CommonSupportingLine {
    let contact_d = d.contact_set_tol(dir, cfg.tie_tol);
    let contact_l = l.contact_set_tol(dir, cfg.tie_tol);
    let (first, last) = classify_extremes(&contact_d, &contact_l, cfg);
    CommonSupportingLine {
        line: DirectedLine::new(dir, 0.5 * (contact_d.offset + contact_l.offset)),
        contact_d,
        contact_l,
        first,
        last,
        gap: contact_d.offset - contact_l.offset,
    }
}

/// Extremes of `contact_D ∪ contact_L` along the line and their owners.
///
/// On a common supporting line `t`, `D ∩ t` and `L ∩ t` are exactly the two
/// contact intervals, so an extreme of the union lies in the other body iff
/// it lies in that body's contact interval.
pub fn classify_extremes(
    cd: &ContactSet,
    cl: &ContactSet,
    cfg: &SearchConfig,
) -> (Extreme, Extreme) {
    let (d0, d1) = cd.interval();
    let (l0, l1) = cl.interval();
    let owner = |delta: f64, d_side: bool| {
        if delta.abs() <= cfg.tie_tol {
            Owner::Both
        } else if delta.abs() <= cfg.ambiguity_band {
            Owner::Ambiguous
        } else if d_side {
            Owner::DOnly
        } else {
            Owner::LOnly
        }
    };
    let first = if d0 <= l0 {
        Extreme {
            point: cd.first,
            owner: owner(l0 - d0, true),
        }
    } else {
        Extreme {
            point: cl.first,
            owner: owner(d0 - l0, false),
        }
    };
    let last = if d1 >= l1 {
        Extreme {
            point: cd.last,
            owner: owner(d1 - l1, true),
        }
    } else {
        Extreme {
            point: cl.last,
            owner: owner(l1 - d1, false),
        }
    };
    (first, last)
}

/// All common supporting lines of `D` and `L`.
pub fn common_supporting_lines(d: &ConvexBody, l: &ConvexBody, cfg: &SearchConfig) -> CommonLines {
    let profile = support_gap_profile(d, l, cfg);
    let lines = profile
        .zeros
        .iter()
        .map(|&a| classify_line(d, l, Direction::new(a), cfg))
        .collect();
    CommonLines {
        lines,
        intervals: profile.intervals,
    }
}

/// A pointed supporting line: boundary point and direction, plus the
/// direction accumulated since the start of the trace.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SlideTurnSample {
    pub point: Point2,
    pub dir: Direction,
    pub turn: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SlideTurnTrace {
    pub samples: Vec<SlideTurnSample>,
    /// The end of the traversal, evaluated independently of the first sample.
    pub closing: SlideTurnSample,
    pub closed: bool,
}

impl SlideTurnTrace {
    /// Polyline length on the cylinder `ℝ² × S¹`.
    pub fn length(&self) -> f64 {
        let step = |a: &SlideTurnSample, b: &SlideTurnSample| {
            let dp = a.point.dist(b.point);
            dp.hypot(b.turn - a.turn)
        };
        let mut total: f64 = self.samples.windows(2).map(|w| step(&w[0], &w[1])).sum();
        if let Some(last) = self.samples.last() {
            total += step(last, &self.closing);
        }
        total
    }
}

#[derive(Clone, Copy, Debug)]
enum Element {
    /// Slide along piece `piece` from `t0` to `t1`.
    Slide { piece: usize, t0: f64, t1: f64 },
    /// Turn about a fixed corner point.
    Turn { point: Point2, sweep: f64 },
}

/// Counterclockwise traversal of the pointed supporting lines of a body,
/// starting at the first contact point of direction 0.
pub fn slide_turn_trace(body: &ConvexBody, n: usize) -> Result<SlideTurnTrace> {
    if body.kind() == BodyKind::Point {
        return Err(Error::Degenerate("trace undefined for singleton"));
    }
    if n < 8 && n != 4 {
        return Err(Error::Precondition(format!(
            "need at least 8 samples, got {n}"
        )));
    }
    let pieces = body.pieces();
    let m = pieces.len();
    let start = body.contact_set(Direction::new(0.0)).first;
    let mut pos = body.locate(start);
    if pos.t >= 1.0 - 1e-12 {
        pos = ChainPos::new((pos.piece + 1) % m, 0.0);
    }

    let mut elements = Vec::new();
    let corner_into = |k: usize| {
        let prev = &pieces[(k + m - 1) % m];
        let u = prev.tangent_at(1.0).angle();
        let v = pieces[k].tangent_at(0.0).angle();
        let sweep = ccw_angle(u, v);
        // junction turns lie in [0, π]; values near 2π are rounding below zero
        (
            u,
            if !(1e-12..=1.5 * std::f64::consts::PI).contains(&sweep) {
                0.0
            } else {
                sweep
            },
        )
    };
    let mut turn_to_start = 0.0;
    if pos.t <= 1e-12 {
        // starting at a junction: finish the corner rotation up to its end
        let (from, sweep) = corner_into(pos.piece);
        let done = ccw_angle(from, 0.0).min(sweep);
        if sweep - done > 1e-12 {
            elements.push(Element::Turn {
                point: pieces[pos.piece].start(),
                sweep: sweep - done,
            });
        }
        turn_to_start = done;
        pos.t = 0.0;
    }
    for j in 0..=m {
        let k = (pos.piece + j) % m;
        let (t0, t1) = if j == 0 {
            (pos.t, 1.0)
        } else if j == m {
            (0.0, pos.t)
        } else {
            (0.0, 1.0)
        };
        if t1 > t0 {
            elements.push(Element::Slide { piece: k, t0, t1 });
        }
        if j < m {
            let next = (k + 1) % m;
            let (_, sweep) = corner_into(next);
            let sweep = if j == m - 1 && pos.t == 0.0 {
                // the corner at the start is split at direction 0
                turn_to_start
            } else {
                sweep
            };
            if sweep > 0.0 {
                elements.push(Element::Turn {
                    point: pieces[next].start(),
                    sweep,
                });
            }
        }
    }

    // weights approximate cylinder length
    let weight = |e: &Element| match *e {
        Element::Slide { piece, t0, t1 } => {
            let p = &pieces[piece];
            (p.length() * (t1 - t0)).hypot(p.turn() * (t1 - t0))
        }
        Element::Turn { sweep, .. } => sweep,
    };
    let weights: Vec<f64> = elements.iter().map(weight).collect();
    let total_w: f64 = weights.iter().sum();

    // per-element accumulated direction at entry
    let mut entry_turn = Vec::with_capacity(elements.len());
    let mut acc = 0.0;
    for e in &elements {
        entry_turn.push(acc);
        acc += match *e {
            Element::Slide { piece, t0, t1 } => slide_turn(&pieces[piece], t0, t1),
            Element::Turn { sweep, .. } => sweep,
        };
    }

    let eval = |idx: usize, s: f64| -> SlideTurnSample {
        let turn0 = entry_turn[idx];
        match elements[idx] {
            Element::Slide { piece, t0, t1 } => {
                let p = &pieces[piece];
                let t = t0 + s * (t1 - t0);
                let turn = turn0 + slide_turn(p, t0, t);
                SlideTurnSample {
                    point: p.point_at(t),
                    dir: Direction::new(turn),
                    turn,
                }
            }
            Element::Turn { point, sweep, .. } => {
                let turn = turn0 + s * sweep;
                SlideTurnSample {
                    point,
                    dir: Direction::new(turn),
                    turn,
                }
            }
        }
    };

    // integer sample counts per element (largest remainder), so every
    // element with samples starts on one and chords never cut corners
    let quotas: Vec<f64> = weights.iter().map(|w| n as f64 * w / total_w).collect();
    let mut counts: Vec<usize> = quotas.iter().map(|q| q.floor() as usize).collect();
    let mut order: Vec<usize> = (0..elements.len()).collect();
    order.sort_by(|&a, &b| {
        (quotas[b] - quotas[b].floor())
            .total_cmp(&(quotas[a] - quotas[a].floor()))
            .then(a.cmp(&b))
    });
    let missing = n - counts.iter().sum::<usize>();
    for &i in order.iter().take(missing) {
        counts[i] += 1;
    }
    if counts[0] == 0 {
        // the trace must start at its starting point
        let big = (0..counts.len()).max_by_key(|&i| counts[i]).unwrap_or(0);
        counts[big] -= 1;
        counts[0] = 1;
    }
    let mut samples = Vec::with_capacity(n);
    for (idx, &c) in counts.iter().enumerate() {
        for j in 0..c {
            samples.push(eval(idx, j as f64 / c as f64));
        }
    }
    let closing = eval(elements.len() - 1, 1.0);
    let first = samples[0];
    let closed = closing.point.dist(first.point) <= 1e-9 && (closing.turn - TAU).abs() <= 1e-9;
    Ok(SlideTurnTrace {
        samples,
        closing,
        closed,
    })
}

/// Tangent turn along a piece between two parameters.
fn slide_turn(p: &crate::body::BoundaryPiece, t0: f64, t1: f64) -> f64 {
    if t1 <= t0 || !p.is_curved() {
        return 0.0;
    }
    if t0 == 0.0 && t1 == 1.0 {
        return p.turn();
    }
    let (a, b) = (p.tangent_at(t0).angle(), p.tangent_at(t1).angle());
    let d = ccw_angle(a, b);
    // a full circle traversed from t0 back to t1 ~ t0 turns by 2π
    if d < 1e-12 && t1 - t0 > 0.5 {
        TAU
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::geom::pt;

    fn disk(x: f64, y: f64) -> ConvexBody {
        ConvexBody::disk(pt(x, y), 1.0).unwrap()
    }

    #[test]
    fn gap_examples() {
        let (a, b) = (disk(0.0, 0.0), disk(4.0, 0.0));
        assert_eq!(support_gap(&a, &a, Direction::new(1.0)), 0.0);
        assert!(support_gap(&a, &b, Direction::new(0.0)).abs() < 1e-15);
        assert!((support_gap(&a, &b, Direction::new(PI / 2.0)) + 4.0).abs() < 1e-12);
    }

    #[test]
    fn disjoint_disks_have_two_lines() {
        let (a, b) = (disk(0.0, 0.0), disk(4.0, 0.0));
        let cfg = SearchConfig::default();
        let cl = common_supporting_lines(&a, &b, &cfg);
        assert!(cl.intervals.is_empty());
        assert_eq!(cl.lines.len(), 2);
        assert!(cl.lines[0].alpha().abs() < 1e-9);
        assert!((cl.lines[1].alpha() - PI).abs() < 1e-9);
        let t = &cl.lines[0];
        assert_eq!(t.first.owner, Owner::DOnly);
        assert!(t.first.point.dist(pt(0.0, -1.0)) < 1e-9);
        assert_eq!(t.last.owner, Owner::LOnly);
        assert!(t.last.point.dist(pt(4.0, -1.0)) < 1e-9);
        let r = &cl.lines[1];
        assert_eq!(r.first.owner, Owner::LOnly);
        assert!(r.first.point.dist(pt(4.0, 1.0)) < 1e-9);
        assert_eq!(r.last.owner, Owner::DOnly);
        assert!(r.last.point.dist(pt(0.0, 1.0)) < 1e-9);
    }

    #[test]
    fn identical_bodies_give_full_interval() {
        let a = disk(0.3, 0.1);
        let cl = common_supporting_lines(&a, &a, &SearchConfig::default());
        assert!(cl.lines.is_empty());
        assert_eq!(cl.intervals.len(), 1);
        assert!(cl.intervals[0].is_full_circle());
    }

    #[test]
    fn overlapping_squares_share_an_interval() {
        let a =
            ConvexBody::polygon(&[pt(0.0, 0.0), pt(2.0, 0.0), pt(2.0, 1.0), pt(0.0, 1.0)]).unwrap();
        let b =
            ConvexBody::polygon(&[pt(0.0, 0.0), pt(2.0, 0.0), pt(2.0, 3.0), pt(0.0, 3.0)]).unwrap();
        let cl = common_supporting_lines(&a, &b, &SearchConfig::default());
        // directions from 3π/2 to 2π (lower right corner) and 0 to π/2 are shared
        assert_eq!(cl.intervals.len(), 1);
        assert!(
            (cl.intervals[0].width - PI).abs() < 1e-9,
            "{:?}",
            cl.intervals
        );
    }

    #[test]
    fn trace_of_disk_matches_contact_points() {
        let t = slide_turn_trace(&disk(0.0, 0.0), 4).unwrap();
        let want = [
            (pt(0.0, -1.0), 0.0),
            (pt(1.0, 0.0), PI / 2.0),
            (pt(0.0, 1.0), PI),
            (pt(-1.0, 0.0), 1.5 * PI),
        ];
        for (s, (p, a)) in t.samples.iter().zip(want) {
            assert!(s.point.dist(p) < 1e-12);
            assert!((s.dir.alpha() - a).abs() < 1e-12);
        }
        assert!(t.closed);
    }

    #[test]
    fn trace_of_square_alternates_runs() {
        let sq =
            ConvexBody::polygon(&[pt(0.0, 0.0), pt(1.0, 0.0), pt(1.0, 1.0), pt(0.0, 1.0)]).unwrap();
        let t = slide_turn_trace(&sq, 64).unwrap();
        assert!(t.closed);
        assert!((t.closing.turn - TAU).abs() < 1e-12);
        let corners = sq.polygon_vertices().unwrap();
        for w in t.samples.windows(2) {
            assert!(w[1].turn >= w[0].turn);
        }
        for s in &t.samples {
            let at_corner = corners.iter().any(|c| c.dist(s.point) < 1e-12);
            let on_edge = (s.turn / (PI / 2.0)).fract() < 1e-12;
            assert!(at_corner || on_edge, "{s:?}");
        }
        // cylinder length: perimeter plus the four quarter turns
        assert!((t.length() - (4.0 + TAU)).abs() < 1e-9);
    }

    #[test]
    fn trace_rejects_point() {
        let p = ConvexBody::point(pt(1.0, 1.0));
        assert!(matches!(
            slide_turn_trace(&p, 16),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn trace_of_tilted_polygon_and_segment() {
        let tri = ConvexBody::polygon(&[pt(0.0, 0.0), pt(2.0, 0.5), pt(0.3, 1.7)]).unwrap();
        let t = slide_turn_trace(&tri, 100).unwrap();
        assert!(t.closed, "{:?} {:?}", t.samples[0], t.closing);
        let seg = ConvexBody::segment(pt(0.0, 0.0), pt(1.0, 1.0)).unwrap();
        let t = slide_turn_trace(&seg, 32).unwrap();
        assert!(t.closed, "{:?} {:?}", t.samples[0], t.closing);
        assert!((t.length() - (2.0 * 2f64.sqrt() + TAU)).abs() < 1e-9);
    }
}
