//! Crossing predicates, boundary arc classification and ears.
//!
//! Component count of `D \ L` for convex `D`, `L`:
//!
//! * every point `P` of `D \ L` reaches `∂D` inside `D \ L`: take a line
//!   through `P` separating `P` from `L` (exists since `L` is convex and
//!   closed) and walk from `P` away from `L` until `∂D`; the walk stays in
//!   `D` by convexity and off `L` by separation. So each component of
//!   `D \ L` meets `∂D \ L`, and each arc of `∂D \ L` lies in one component.
//! * two distinct maximal arcs of `∂D \ L` are separated along `∂D` by
//!   two points `X`, `Y` of `L`. The chord `XY` lies in `D ∩ L` and cuts
//!   `D` into two parts, each containing one of the arcs, so the arcs lie in
//!   different components.
//!
//! Hence the count is 0 if `∂D ⊆ L` (then `D ⊆ L`), 1 if `∂D` misses `L`
//! (`D \ L` is `D` minus a convex set inside its interior, or all of `D`),
//! and otherwise the number of maximal arcs of `∂D` outside `L`.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::body::{BodyKind, BoundaryPiece, ChainPos, ConvexBody};
use crate::error::{Error, Result};
use crate::geom::{angular_separation, DirectedLine, Point2};
use crate::numeric::{bisect_predicate, golden_min};
use crate::tangency::{
    common_supporting_lines, CommonLines, CommonSupportingLine, Owner, SearchConfig, ZeroInterval,
};

/// Samples per curved piece when walking a boundary.
const ARC_SAMPLES: usize = 128;
/// Parameter resolution of located boundary events.
const EVENT_WIDTH: f64 = 1e-13;
/// Located events must lie this close to the other boundary.
const EVENT_CHECK: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArcClass {
    Outside,
    Inside,
}

/// A maximal sub-arc of a boundary chain of one class relative to another body.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundaryArc {
    pub class: ArcClass,
    pub start: ChainPos,
    pub end: ChainPos,
    pub start_point: Point2,
    pub end_point: Point2,
}

/// Parameter intervals of `piece` lying in the closed `tol`-neighbourhood of `other`.
fn inside_intervals(piece: &BoundaryPiece, other: &ConvexBody, tol: f64) -> Vec<(f64, f64)> {
    let inside = |t: f64| other.classify(piece.point_at(t), tol).is_inside();
    let s = |t: f64| other.max_residual(piece.point_at(t));
    let dist = |t: f64| {
        let p = piece.point_at(t);
        if other.max_residual(p) <= 0.0 {
            0.0
        } else if other.kind() == BodyKind::Region {
            other.boundary_distance(p)
        } else {
            other.max_residual(p)
        }
    };
    if !piece.is_curved() {
        // both the residual and the distance are convex along a segment
        let (tm, sm) = golden_min(0.0, 1.0, EVENT_WIDTH, s);
        if sm > tol {
            return Vec::new();
        }
        let seed = if inside(tm) {
            Some(tm)
        } else {
            let (td, dm) = golden_min(0.0, 1.0, EVENT_WIDTH, dist);
            (dm <= tol && inside(td)).then_some(td)
        };
        let Some(seed) = seed else {
            return Vec::new();
        };
        let a = if inside(0.0) {
            0.0
        } else {
            bisect_predicate(0.0, seed, EVENT_WIDTH, inside).1
        };
        let b = if inside(1.0) {
            1.0
        } else {
            bisect_predicate(seed, 1.0, EVENT_WIDTH, inside).0
        };
        return vec![(a, b)];
    }

    let m = ARC_SAMPLES;
    let mut marks: Vec<(f64, bool)> = (0..=m)
        .map(|i| {
            let t = i as f64 / m as f64;
            (t, inside(t))
        })
        .collect();
    // inside stretches shorter than the sample spacing show up as residual minima
    let res: Vec<f64> = marks.iter().map(|&(t, _)| s(t)).collect();
    let mut extra = Vec::new();
    for i in 0..=m {
        if marks[i].1 {
            continue;
        }
        let lo = i.saturating_sub(1);
        let hi = (i + 1).min(m);
        if res[i] <= res[lo] && res[i] <= res[hi] && res[i] <= 0.5 {
            let (t, v) = golden_min(marks[lo].0, marks[hi].0, EVENT_WIDTH, s);
            let hit = if v <= 0.0 {
                Some(t)
            } else if v <= tol {
                let (td, dm) = golden_min(marks[lo].0, marks[hi].0, EVENT_WIDTH, dist);
                (dm <= tol).then_some(td)
            } else {
                None
            };
            if let Some(t) = hit.filter(|&t| inside(t)) {
                extra.push((t, true));
            }
        }
    }
    marks.extend(extra);
    marks.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut out = Vec::new();
    let mut open: Option<f64> = marks[0].1.then_some(0.0);
    for w in marks.windows(2) {
        let ((ta, fa), (tb, fb)) = (w[0], w[1]);
        if fa == fb {
            continue;
        }
        let (x, y) = bisect_predicate(ta, tb, EVENT_WIDTH, inside);
        if fa {
            out.push((open.take().unwrap_or(0.0), x));
        } else {
            open = Some(y);
        }
    }
    if let Some(a) = open {
        out.push((a, 1.0));
    }
    out
}

/// Classify the boundary of `d` against `l` into maximal arcs, in chain order.
///
/// An empty result means `d` is a point. A single arc spanning the whole
/// chain has `start == end`.
pub fn boundary_arcs(d: &ConvexBody, l: &ConvexBody, tol: f64) -> Result<Vec<BoundaryArc>> {
    let pieces = d.pieces();
    if pieces.is_empty() {
        return Ok(Vec::new());
    }
    let mut subs: Vec<(ArcClass, ChainPos, ChainPos)> = Vec::new();
    let mut push = |class, a: ChainPos, b: ChainPos| {
        if let Some(last) = subs.last_mut() {
            if last.0 == class {
                last.2 = b;
                return;
            }
        }
        subs.push((class, a, b));
    };
    for (k, piece) in pieces.iter().enumerate() {
        let ivs = inside_intervals(piece, l, tol);
        let mut t = 0.0;
        for &(a, b) in &ivs {
            if a > t {
                push(ArcClass::Outside, ChainPos::new(k, t), ChainPos::new(k, a));
            }
            push(ArcClass::Inside, ChainPos::new(k, a), ChainPos::new(k, b));
            t = b;
        }
        if t < 1.0 || ivs.is_empty() {
            push(
                ArcClass::Outside,
                ChainPos::new(k, t),
                ChainPos::new(k, 1.0),
            );
        }
    }
    if subs.len() > 1 && subs[0].0 == subs[subs.len() - 1].0 {
        let last = subs.pop().expect("nonempty");
        subs[0].1 = last.1;
    }
    let arcs: Vec<BoundaryArc> = subs
        .into_iter()
        .map(|(class, start, end)| BoundaryArc {
            class,
            start,
            end,
            start_point: d.point_at(start),
            end_point: d.point_at(end),
        })
        .collect();
    if arcs.len() > 1 && l.kind() == BodyKind::Region {
        for arc in &arcs {
            for (p, pos) in [(arc.start_point, arc.start), (arc.end_point, arc.end)] {
                if l.boundary_distance(p) > EVENT_CHECK {
                    return Err(Error::NoConvergence {
                        piece_d: pos.piece,
                        piece_l: l.locate(p).piece,
                    });
                }
            }
        }
    }
    Ok(arcs)
}

/// Maximal arcs of `∂D` outside `L`.
pub fn boundary_outside_arcs(d: &ConvexBody, l: &ConvexBody, tol: f64) -> Result<Vec<BoundaryArc>> {
    Ok(boundary_arcs(d, l, tol)?
        .into_iter()
        .filter(|a| a.class == ArcClass::Outside)
        .collect())
}

/// Number of connected components of `D \ L` (see the module docs).
pub fn difference_component_count(d: &ConvexBody, l: &ConvexBody, tol: f64) -> Result<usize> {
    if d.kind() == BodyKind::Point {
        return Ok(usize::from(!l.classify(d.anchor(), tol).is_inside()));
    }
    let arcs = boundary_arcs(d, l, tol)?;
    Ok(arcs.iter().filter(|a| a.class == ArcClass::Outside).count())
}

/// Fejes Tóth crossing: neither difference is connected.
pub fn ft_crossing(d: &ConvexBody, l: &ConvexBody, tol: f64) -> Result<bool> {
    Ok(difference_component_count(d, l, tol)? >= 2 && difference_component_count(l, d, tol)? >= 2)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Predicates {
    pub beta: bool,
    pub lambda: bool,
    pub rho: bool,
    pub epsilon: bool,
    pub tau: bool,
}

impl Predicates {
    pub fn as_array(&self) -> [bool; 5] {
        [self.beta, self.lambda, self.rho, self.epsilon, self.tau]
    }

    pub fn from_array(v: [bool; 5]) -> Self {
        Self {
            beta: v[0],
            lambda: v[1],
            rho: v[2],
            epsilon: v[3],
            tau: v[4],
        }
    }

    /// Failed implications among `β ⟹ λ, β ⟹ ρ, λ ⟹ ε, ρ ⟹ ε, ε ⟹ τ`.
    pub fn violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        for (name, a, b) in [
            ("beta => lambda", self.beta, self.lambda),
            ("beta => rho", self.beta, self.rho),
            ("lambda => epsilon", self.lambda, self.epsilon),
            ("rho => epsilon", self.rho, self.epsilon),
            ("epsilon => tau", self.epsilon, self.tau),
        ] {
            if a && !b {
                out.push(name);
            }
        }
        out
    }
}

impl std::fmt::Display for Predicates {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let c = |b: bool| if b { 'T' } else { 'F' };
        write!(
            f,
            "(β,λ,ρ,ε,τ) = ({},{},{},{},{})",
            c(self.beta),
            c(self.lambda),
            c(self.rho),
            c(self.epsilon),
            c(self.tau)
        )
    }
}

/// Two distinct common supporting lines both satisfying the slide condition.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub t: DirectedLine,
    pub t_prime: DirectedLine,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Flag {
    /// A candidate line had an extreme in the tolerance band; it was excluded.
    AmbiguousExtreme { alpha: f64 },
    /// The witness pair consists of `t` and `-t`.
    OppositeWitness { alpha: f64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SlideResult {
    pub holds: bool,
    pub witness: Option<Witness>,
    pub flags: Vec<Flag>,
}

/// Candidate lines for the slide test: isolated lines plus interval probes.
pub fn candidate_lines(
    d: &ConvexBody,
    l: &ConvexBody,
    lines: &CommonLines,
    cfg: &SearchConfig,
) -> Vec<CommonSupportingLine> {
    let mut out = lines.lines.clone();
    out.extend(lines.interval_candidates(d, l, cfg));
    out
}

/// Slide test on classified candidate lines; `swap` evaluates `L` across `D`.
pub fn slides_from_candidates(
    cands: &[CommonSupportingLine],
    swap: bool,
    cfg: &SearchConfig,
) -> SlideResult {
    let mut flags = Vec::new();
    let mut good: Vec<&CommonSupportingLine> = Vec::new();
    for c in cands {
        if c.is_ambiguous() {
            flags.push(Flag::AmbiguousExtreme { alpha: c.alpha() });
            continue;
        }
        let (first, last) = if swap {
            (c.first.owner.swapped(), c.last.owner.swapped())
        } else {
            (c.first.owner, c.last.owner)
        };
        if first == Owner::DOnly && last == Owner::LOnly {
            good.push(c);
        }
    }
    let distinct = |a: &CommonSupportingLine, b: &CommonSupportingLine| {
        angular_separation(a.alpha(), b.alpha()) > cfg.dedup_angle
    };
    let opposite = |a: &CommonSupportingLine, b: &CommonSupportingLine| {
        (angular_separation(a.alpha(), b.alpha()) - std::f64::consts::PI).abs() <= cfg.dedup_angle
            && (a.line.offset + b.line.offset).abs() <= cfg.tie_tol.max(1e-9)
    };
    let mut pair = None;
    let mut fallback = None;
    'outer: for (i, a) in good.iter().enumerate() {
        for b in &good[i + 1..] {
            if !distinct(a, b) {
                continue;
            }
            if opposite(a, b) {
                fallback.get_or_insert((*a, *b));
            } else {
                pair = Some((*a, *b));
                break 'outer;
            }
        }
    }
    let chosen = pair.or(fallback);
    if let (None, Some((a, _))) = (pair, fallback) {
        flags.push(Flag::OppositeWitness { alpha: a.alpha() });
    }
    SlideResult {
        holds: chosen.is_some(),
        witness: chosen.map(|(a, b)| Witness {
            t: a.line,
            t_prime: b.line,
        }),
        flags,
    }
}

/// `D` slides across `L`.
pub fn slides_across(d: &ConvexBody, l: &ConvexBody, cfg: &SearchConfig) -> SlideResult {
    let lines = common_supporting_lines(d, l, cfg);
    slides_from_candidates(&candidate_lines(d, l, &lines, cfg), false, cfg)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossingReport {
    pub predicates: Predicates,
    pub lambda_witness: Option<Witness>,
    pub rho_witness: Option<Witness>,
    /// Components of `D \ L` and `L \ D`.
    pub counts: (usize, usize),
    pub lines: Vec<CommonSupportingLine>,
    pub intervals: Vec<ZeroInterval>,
    pub flags: Vec<Flag>,
}

impl CrossingReport {
    pub fn is_ambiguous(&self) -> bool {
        self.flags
            .iter()
            .any(|f| matches!(f, Flag::AmbiguousExtreme { .. }))
    }
}

/// All five predicates without the `ε ⟹ τ` consistency check.
pub fn evaluate_pair(d: &ConvexBody, l: &ConvexBody, cfg: &SearchConfig) -> Result<CrossingReport> {
    let lines = common_supporting_lines(d, l, cfg);
    let cands = candidate_lines(d, l, &lines, cfg);
    let lam = slides_from_candidates(&cands, false, cfg);
    let rho = slides_from_candidates(&cands, true, cfg);
    let counts = (
        difference_component_count(d, l, cfg.tie_tol)?,
        difference_component_count(l, d, cfg.tie_tol)?,
    );
    let mut flags = lam.flags.clone();
    for f in rho.flags {
        if !flags.contains(&f) {
            flags.push(f);
        }
    }
    let predicates = Predicates {
        beta: lam.holds && rho.holds,
        lambda: lam.holds,
        rho: rho.holds,
        epsilon: lam.holds || rho.holds,
        tau: counts.0 >= 2 && counts.1 >= 2,
    };
    Ok(CrossingReport {
        predicates,
        lambda_witness: lam.witness,
        rho_witness: rho.witness,
        counts,
        lines: lines.lines,
        intervals: lines.intervals,
        flags,
    })
}

/// Full report; a weak crossing without Fejes Tóth crossing is a numerical defect.
pub fn crossing_report(
    d: &ConvexBody,
    l: &ConvexBody,
    cfg: &SearchConfig,
) -> Result<CrossingReport> {
    let report = evaluate_pair(d, l, cfg)?;
    let p = report.predicates;
    if p.epsilon && !p.tau {
        return Err(Error::Inconsistent(format!(
            "weak crossing without Fejes Tóth crossing (counts {:?})",
            report.counts
        )));
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EarOwner {
    D,
    L,
}

/// Region between consecutive boundary crossings lying in one difference.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Ear {
    pub owner: EarOwner,
    pub start: Point2,
    pub terminus: Point2,
    /// Owner boundary from `start` to `terminus`, outside the other body.
    pub dark: (ChainPos, ChainPos),
    /// Other boundary from `start` to `terminus`, inside the owner.
    pub light: (ChainPos, ChainPos),
}

impl Ear {
    /// Midpoint of the light arc on the other body's chain.
    pub fn light_midpoint(&self, other: &ConvexBody) -> Point2 {
        let n = other.pieces().len() as f64;
        let (a, b) = (self.light.0.scalar(), self.light.1.scalar());
        let span = (b - a).rem_euclid(n);
        other.point_at_scalar(a + 0.5 * span)
    }
}

fn ear_at(
    owner: EarOwner,
    body: &ConvexBody,
    other: &ConvexBody,
    u: Point2,
    tol: f64,
) -> Result<Ear> {
    let arcs = boundary_arcs(body, other, tol)?;
    if arcs.iter().all(|a| a.class == ArcClass::Outside) {
        return Err(Error::InteriorsDisjoint);
    }
    let pos = body.locate(u).scalar();
    let n = body.pieces().len() as f64;
    let arc = arcs
        .iter()
        .filter(|a| a.class == ArcClass::Outside)
        .find(|a| {
            let (s, e) = (a.start.scalar(), a.end.scalar());
            let span = (e - s).rem_euclid(n);
            (pos - s).rem_euclid(n) <= span
        })
        .ok_or_else(|| Error::Precondition("extreme point is not on an outside arc".into()))?;
    let (s, t) = (arc.start_point, arc.end_point);
    if u.dist(s) <= tol || u.dist(t) <= tol {
        return Err(Error::Inconsistent(
            "extreme point coincides with an ear end".into(),
        ));
    }
    Ok(Ear {
        owner,
        start: s,
        terminus: t,
        dark: (arc.start, arc.end),
        light: (other.locate(s), other.locate(t)),
    })
}

/// Ears of `D` and `L` at the extremes of a line whose first point is in
/// `D \ L` and last point in `L \ D`.
pub fn extract_ears(
    d: &ConvexBody,
    l: &ConvexBody,
    t: &CommonSupportingLine,
    tol: f64,
) -> Result<(Ear, Ear)> {
    if t.first.owner != Owner::DOnly || t.last.owner != Owner::LOnly {
        return Err(Error::Precondition(
            "line does not have its first point in D\\L and last point in L\\D".into(),
        ));
    }
    let ed = ear_at(EarOwner::D, d, l, t.first.point, tol)?;
    let el = ear_at(EarOwner::L, l, d, t.last.point, tol)?;
    Ok((ed, el))
}

/// A point inside `D ∩ L`: the mean of boundary samples of the intersection.
pub fn intersection_point(d: &ConvexBody, l: &ConvexBody, tol: f64) -> Option<Point2> {
    let mut sum = Point2::ORIGIN;
    let mut count = 0usize;
    for (a, b) in [(d, l), (l, d)] {
        for p in a.boundary_samples(64) {
            if b.classify(p, tol).is_inside() {
                sum += p;
                count += 1;
            }
        }
    }
    (count > 0).then(|| sum * (1.0 / count as f64))
}

/// Whether ears met along `∂(D ∩ L)` alternate in owner.
pub fn ears_alternate(d: &ConvexBody, l: &ConvexBody, ears: &[Ear], tol: f64) -> bool {
    let Some(c) = intersection_point(d, l, tol) else {
        return false;
    };
    let mut tagged: Vec<(f64, EarOwner)> = ears
        .iter()
        .map(|e| {
            let other = if e.owner == EarOwner::D { l } else { d };
            let m = e.light_midpoint(other);
            ((m - c).angle().rem_euclid(TAU), e.owner)
        })
        .collect();
    tagged.sort_by(|a, b| a.0.total_cmp(&b.0));
    let k = tagged.len();
    k >= 2 && (0..k).all(|i| tagged[i].1 != tagged[(i + 1) % k].1)
}
