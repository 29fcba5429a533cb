//! Bracketing root refinement and unimodal minimization on an interval.

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Bisect a predicate transition on `[lo, hi]`.
///
/// `pred(lo)` and `pred(hi)` must differ; returns the bracket `(a, b)` with
/// `pred(a) == pred(lo)`, `pred(b) == pred(hi)` and `b - a <= width`.
pub fn bisect_predicate(
    mut lo: f64,
    mut hi: f64,
    width: f64,
    mut pred: impl FnMut(f64) -> bool,
) -> (f64, f64) {
    let at_lo = pred(lo);
    for _ in 0..200 {
        if (hi - lo).abs() <= width {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if pred(mid) == at_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Sign-change bisection of `f` on `[lo, hi]` down to `width`.
pub fn bisect_root(lo: f64, hi: f64, width: f64, mut f: impl FnMut(f64) -> f64) -> f64 {
    let (a, b) = bisect_predicate(lo, hi, width, |x| f(x) > 0.0);
    0.5 * (a + b)
}

/// Golden-section minimization of `f` on `[lo, hi]`; returns `(argmin, min)`.
pub fn golden_min(
    mut lo: f64,
    mut hi: f64,
    width: f64,
    mut f: impl FnMut(f64) -> f64,
) -> (f64, f64) {
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..200 {
        if hi - lo <= width {
            break;
        }
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    let mut best = if f1 <= f2 { (x1, f1) } else { (x2, f2) };
    for x in [lo, hi] {
        let fx = f(x);
        if fx < best.1 {
            best = (x, fx);
        }
    }
    best
}

/// Minimize `f` over `[lo, hi]` by coarse sampling then golden refinement
/// around the best sample. Suitable for functions with few local minima.
pub fn sampled_min(
    lo: f64,
    hi: f64,
    samples: usize,
    width: f64,
    mut f: impl FnMut(f64) -> f64,
) -> (f64, f64) {
    let n = samples.max(2);
    let step = (hi - lo) / (n - 1) as f64;
    let mut best_i = 0;
    let mut best = f64::INFINITY;
    for i in 0..n {
        let v = f(lo + step * i as f64);
        if v < best {
            best = v;
            best_i = i;
        }
    }
    let a = lo + step * best_i.saturating_sub(1) as f64;
    let b = (lo + step * (best_i + 1) as f64).min(hi);
    let (x, v) = golden_min(a, b, width, &mut f);
    if v <= best {
        (x, v)
    } else {
        (lo + step * best_i as f64, best)
    }
}

/// Composite Gauss–Legendre (5-point) quadrature on `panels` equal panels.
pub fn integrate(lo: f64, hi: f64, panels: usize, mut f: impl FnMut(f64) -> f64) -> f64 {
    const NODES: [f64; 5] = [
        0.0,
        -0.538_469_310_105_683_1,
        0.538_469_310_105_683_1,
        -0.906_179_845_938_664,
        0.906_179_845_938_664,
    ];
    const WEIGHTS: [f64; 5] = [
        0.568_888_888_888_888_9,
        0.478_628_670_499_366_5,
        0.478_628_670_499_366_5,
        0.236_926_885_056_189_1,
        0.236_926_885_056_189_1,
    ];
    let panels = panels.max(1);
    let h = (hi - lo) / panels as f64;
    let mut total = 0.0;
    for k in 0..panels {
        let mid = lo + h * (k as f64 + 0.5);
        for (x, w) in NODES.iter().zip(WEIGHTS) {
            total += w * f(mid + 0.5 * h * x);
        }
    }
    0.5 * h * total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisect_finds_sqrt2() {
        let r = bisect_root(0.0, 2.0, 1e-14, |x| x * x - 2.0);
        assert!((r - 2f64.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn golden_finds_parabola_minimum() {
        let (x, v) = golden_min(-3.0, 5.0, 1e-12, |x| (x - 1.25).powi(2) + 0.5);
        assert!((x - 1.25).abs() < 1e-6);
        assert!((v - 0.5).abs() < 1e-12);
    }

    #[test]
    fn golden_handles_boundary_minimum() {
        let (x, _) = golden_min(0.0, 1.0, 1e-12, |x| x);
        assert_eq!(x, 0.0);
    }

    #[test]
    fn sampled_min_picks_global_of_two_wells() {
        let f = |x: f64| ((x - 0.2).powi(2) * (x - 0.8).powi(2)) + 0.01 * x;
        let (x, _) = sampled_min(0.0, 1.0, 64, 1e-12, f);
        assert!((x - 0.2).abs() < 0.02);
    }

    #[test]
    fn quadrature_is_exact_for_low_degree() {
        let v = integrate(0.0, 2.0, 1, |x| x.powi(9));
        assert!((v - 2f64.powi(10) / 10.0).abs() < 1e-9);
        let c = integrate(0.0, std::f64::consts::PI, 8, f64::sin);
        assert!((c - 2.0).abs() < 1e-12);
    }
}
