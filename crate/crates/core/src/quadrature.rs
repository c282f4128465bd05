//! Deterministic adaptive Gauss–Legendre quadrature.
//!
//! Each panel is integrated with an `n`-point Gauss–Legendre rule and an
//! `n/2`-point rule; their difference is the panel error estimate. The panel
//! with the largest estimate is bisected until the summed estimate meets the
//! tolerance or the panel budget is spent. Panel values are finally reduced
//! left to right with compensated summation.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::ops::{Add, Mul, Sub};
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::sum::{Compensated, Magnitude};

/// Tolerances and budget for one integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_panels: usize,
    /// Nodes per panel of the high-order rule.
    pub rule_order: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-13,
            rel_tol: 1e-12,
            max_panels: 4000,
            rule_order: 16,
        }
    }
}

impl QuadratureConfig {
    pub fn with_tolerance(abs_tol: f64, rel_tol: f64) -> Self {
        Self {
            abs_tol,
            rel_tol,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let in_unit = |v: f64| v > 0.0 && v < 1.0;
        if !in_unit(self.abs_tol) || !in_unit(self.rel_tol) {
            return Err(Error::Config(format!(
                "tolerances must lie in (0, 1), got abs {} rel {}",
                self.abs_tol, self.rel_tol
            )));
        }
        if self.max_panels < 1 {
            return Err(Error::Config("max_panels must be at least 1".into()));
        }
        if self.rule_order < 2 {
            return Err(Error::Config("rule_order must be at least 2".into()));
        }
        Ok(())
    }

    /// Both tolerances scaled by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            abs_tol: self.abs_tol * factor,
            rel_tol: self.rel_tol * factor,
            ..*self
        }
    }

    fn target(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult<V> {
    pub value: V,
    pub error_estimate: f64,
    pub panels_used: usize,
    pub converged: bool,
}

impl<V> QuadratureResult<V> {
    /// The value, or an error if the tolerance was not met.
    pub fn into_value(self) -> Result<V> {
        if self.converged {
            Ok(self.value)
        } else {
            Err(Error::Quadrature {
                error_estimate: self.error_estimate,
                panels: self.panels_used,
            })
        }
    }
}

/// Values the integrator can accumulate: reals and complex numbers.
pub trait QuadValue:
    Copy + Default + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> + Magnitude
{
    fn is_finite_value(&self) -> bool;
}

impl QuadValue for f64 {
    fn is_finite_value(&self) -> bool {
        self.is_finite()
    }
}

impl QuadValue for Complex64 {
    fn is_finite_value(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

/// Gauss–Legendre nodes and weights on [-1, 1].
#[derive(Debug, Clone)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussRule {
    /// Nodes from Newton iteration on the Legendre polynomial.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        let nf = n as f64;
        for i in 0..m {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 1.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            dp = if d != 0.0 { d } else { dp };
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[m - 1] = 0.0;
        }
        // Nudge the central weights so that constants integrate exactly.
        for _ in 0..2 {
            let excess = crate::sum::compensated_sum(weights.iter().copied()) - 2.0;
            if n % 2 == 1 {
                weights[m - 1] -= excess;
            } else {
                weights[m - 1] -= 0.5 * excess;
                weights[m] -= 0.5 * excess;
            }
        }
        Self { nodes, weights }
    }

    fn apply<V: QuadValue>(&self, f: &mut impl FnMut(f64) -> V, a: f64, b: f64) -> V {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut acc = Compensated::new();
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc.add(f(mid + half * x) * *w);
        }
        acc.value() * half
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

struct RulePair {
    high: GaussRule,
    low: GaussRule,
}

impl RulePair {
    fn new(order: usize) -> Self {
        Self {
            high: GaussRule::new(order),
            low: GaussRule::new((order / 2).max(1)),
        }
    }
}

fn default_rules() -> &'static RulePair {
    static RULES: OnceLock<RulePair> = OnceLock::new();
    RULES.get_or_init(|| RulePair::new(QuadratureConfig::default().rule_order))
}

struct Panel<V> {
    a: f64,
    b: f64,
    value: V,
    error: f64,
    seq: usize,
}

// Max-heap on error; ties broken by creation order so the refinement
// sequence never depends on anything but the inputs.
impl<V> PartialEq for Panel<V> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl<V> Eq for Panel<V> {}
impl<V> PartialOrd for Panel<V> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<V> Ord for Panel<V> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.seq.cmp(&self.seq))
    }
}

/// Integrates `f` over `[a, b]`.
pub fn integrate<V: QuadValue>(
    f: impl FnMut(f64) -> V,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
) -> QuadratureResult<V> {
    integrate_panels(f, &[a, b], 1, cfg)
}

/// Integrates `f` over `[breaks[0], breaks[last]]`, starting from every
/// interval between consecutive breakpoints split into `initial` equal
/// panels. Breakpoints must be non-decreasing.
pub fn integrate_panels<V: QuadValue>(
    mut f: impl FnMut(f64) -> V,
    breaks: &[f64],
    initial: usize,
    cfg: &QuadratureConfig,
) -> QuadratureResult<V> {
    let owned;
    let rules = if cfg.rule_order == QuadratureConfig::default().rule_order {
        default_rules()
    } else {
        owned = RulePair::new(cfg.rule_order.max(2));
        &owned
    };

    let mut seq = 0usize;
    let mut eval = |a: f64, b: f64, seq: &mut usize| -> Panel<V> {
        let high = rules.high.apply(&mut f, a, b);
        let low = rules.low.apply(&mut f, a, b);
        let mut error = (high - low).magnitude();
        if !high.is_finite_value() || error.is_nan() {
            error = f64::INFINITY;
        }
        *seq += 1;
        Panel {
            a,
            b,
            value: high,
            error,
            seq: *seq,
        }
    };

    let mut heap = BinaryHeap::new();
    let initial = initial.max(1);
    for w in breaks.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        if hi <= lo {
            continue;
        }
        let h = (hi - lo) / initial as f64;
        for k in 0..initial {
            let pa = lo + h * k as f64;
            let pb = if k + 1 == initial { hi } else { lo + h * (k + 1) as f64 };
            heap.push(eval(pa, pb, &mut seq));
        }
    }
    if heap.is_empty() {
        return QuadratureResult {
            value: V::default(),
            error_estimate: 0.0,
            panels_used: 0,
            converged: true,
        };
    }

    let totals = |heap: &BinaryHeap<Panel<V>>| -> (V, f64) {
        let mut v = Compensated::new();
        let mut e = Compensated::new();
        for p in heap.iter() {
            v.add(p.value);
            e.add(p.error);
        }
        (v.value(), e.value())
    };

    let (mut total, mut err) = totals(&heap);
    loop {
        if err <= cfg.target(total.magnitude()) || heap.len() >= cfg.max_panels {
            break;
        }
        let worst = heap.pop().expect("heap is non-empty");
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b) {
            // Panel cannot be split further in floating point.
            heap.push(worst);
            break;
        }
        let left = eval(worst.a, mid, &mut seq);
        let right = eval(mid, worst.b, &mut seq);
        total = total - worst.value + left.value + right.value;
        err = err - worst.error + left.error + right.error;
        heap.push(left);
        heap.push(right);
        // Refresh running sums periodically so cancellation drift cannot
        // stall termination.
        if seq.is_multiple_of(64) {
            (total, err) = totals(&heap);
        }
    }

    let mut panels = heap.into_vec();
    panels.sort_by(|p, q| p.a.total_cmp(&q.a));
    let mut value = Compensated::new();
    let mut error = Compensated::new();
    for p in &panels {
        value.add(p.value);
        error.add(p.error);
    }
    let value = value.value();
    let error_estimate = error.value();
    QuadratureResult {
        value,
        error_estimate,
        panels_used: panels.len(),
        converged: value.is_finite_value() && error_estimate <= cfg.target(value.magnitude()),
    }
}

/// Integrates `f` over `[a, ∞)` via the map `t = a + (1 - s)/s`, `s ∈ (0, 1]`.
///
/// Suitable for integrands decaying at least like `t^-2`.
pub fn integrate_half_line<V: QuadValue>(
    mut f: impl FnMut(f64) -> V,
    a: f64,
    cfg: &QuadratureConfig,
) -> QuadratureResult<V> {
    integrate_panels(
        |s: f64| {
            let t = a + (1.0 - s) / s;
            f(t) * (1.0 / (s * s))
        },
        &[0.0, 1.0],
        4,
        cfg,
    )
}

/// Integrates `f` over ℝ where `|f(t)| ≤ M e^{-λ|t|}` for large `|t|`.
///
/// The line is cut at `±L` with `M e^{-λL}/λ < abs_tol/10`; `M` is taken
/// as `max(1, |f(0)|)`.
pub fn integrate_line_decaying<V: QuadValue>(
    mut f: impl FnMut(f64) -> V,
    decay_rate: f64,
    cfg: &QuadratureConfig,
) -> Result<QuadratureResult<V>> {
    if !(decay_rate > 0.0 && decay_rate.is_finite()) {
        return Err(Error::Config(format!(
            "decay rate must be positive, got {decay_rate}"
        )));
    }
    let m = f(0.0).magnitude().max(1.0);
    let cut = ((10.0 * m / (decay_rate * cfg.abs_tol)).ln() / decay_rate).max(1.0);
    // Panels of width about one decay length keep the first pass informative.
    let initial = ((2.0 * cut * decay_rate).ceil() as usize).clamp(2, cfg.max_panels / 2 + 1);
    Ok(integrate_panels(f, &[-cut, cut], initial, cfg))
}

/// Integrates `f` over ℝ where `f` decays algebraically (at least `|t|^-2`)
/// away from `[lo, hi]`. Tails are mapped to finite intervals.
pub fn integrate_line_algebraic<V: QuadValue>(
    mut f: impl FnMut(f64) -> V,
    lo: f64,
    hi: f64,
    breaks: &[f64],
    cfg: &QuadratureConfig,
) -> QuadratureResult<V> {
    let mut pts = Vec::with_capacity(breaks.len() + 2);
    pts.push(lo);
    pts.extend(breaks.iter().copied().filter(|&t| t > lo && t < hi));
    pts.push(hi);
    let inner = integrate_panels(&mut f, &pts, 2, cfg);
    let right = integrate_half_line(&mut f, hi, cfg);
    let left = integrate_half_line(|t: f64| f(-t), -lo, cfg);
    let value = compensate3(left.value, inner.value, right.value);
    let error_estimate = left.error_estimate + inner.error_estimate + right.error_estimate;
    QuadratureResult {
        value,
        error_estimate,
        panels_used: left.panels_used + inner.panels_used + right.panels_used,
        converged: left.converged && inner.converged && right.converged,
    }
}

fn compensate3<V: QuadValue>(a: V, b: V, c: V) -> V {
    let mut acc = Compensated::new();
    acc.add(a);
    acc.add(b);
    acc.add(c);
    acc.value()
}

/// Root of `g` in `[lo, hi]` by the Illinois variant of regula falsi,
/// falling back to bisection when the secant step stalls. Returns once the
/// bracket is narrower than `tol` or `g` vanishes exactly.
pub fn find_root(mut g: impl FnMut(f64) -> f64, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let (mut a, mut b) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut fa = g(a);
    let mut fb = g(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if !(fa.is_finite() && fb.is_finite()) || fa.signum() == fb.signum() {
        return Err(Error::NoSignChange { lo: a, hi: b });
    }
    let mut side = 0i8;
    for _ in 0..200 {
        if (b - a).abs() <= tol {
            break;
        }
        let mut c = (a * fb - b * fa) / (fb - fa);
        let width = b - a;
        // Keep the secant point well inside the bracket, otherwise bisect.
        if !(c > a + 0.01 * width && c < b - 0.01 * width) {
            c = 0.5 * (a + b);
        }
        let fc = g(c);
        if fc == 0.0 {
            return Ok(c);
        }
        if fc.signum() == fb.signum() {
            b = c;
            fb = fc;
            if side == -1 {
                fa *= 0.5;
            }
            side = -1;
        } else {
            a = c;
            fa = fc;
            if side == 1 {
                fb *= 0.5;
            }
            side = 1;
        }
    }
    Ok(if fa.abs() < fb.abs() { a } else { b })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn gauss_rule_weights_sum_to_two() {
        for n in [2, 3, 8, 16, 31] {
            let r = GaussRule::new(n);
            let s: f64 = r.weights.iter().sum();
            assert!((s - 2.0).abs() < 1e-14, "n={n} sum={s}");
            assert!(r.nodes.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn polynomial_exactness() {
        let cfg = QuadratureConfig::default();
        // 16 nodes integrate degree 31 exactly; check degree 30 on [0, 1].
        let r = integrate(|x: f64| 31.0 * x.powi(30), 0.0, 1.0, &cfg);
        assert!((r.value - 1.0).abs() < 1e-14);
        // Degree 7 is exact for the embedded 8-point rule too, so no split.
        let r = integrate(|x: f64| 8.0 * x.powi(7), 0.0, 1.0, &cfg);
        assert!((r.value - 1.0).abs() < 1e-15);
        assert_eq!(r.panels_used, 1);
    }

    #[test]
    fn constant_and_parabola() {
        let cfg = QuadratureConfig::default();
        let r = integrate(|_| 1.0, 0.0, 1.0, &cfg);
        assert_eq!(r.value, 1.0);
        let r = integrate(|a: f64| a * (1.0 - a), 0.0, 1.0, &cfg);
        assert!((r.value - 1.0 / 6.0).abs() < 1e-12);
    }

    #[test]
    fn sech_over_symmetric_interval() {
        let cfg = QuadratureConfig::default();
        let r = integrate(|t: f64| 1.0 / (2.0 * PI * t).cosh(), -10.0, 10.0, &cfg);
        assert!(r.converged);
        assert!((r.value - 0.5).abs() < 1e-10);
    }

    #[test]
    fn empty_interval_is_zero() {
        let r = integrate(|x: f64| x, 2.0, 2.0, &QuadratureConfig::default());
        assert_eq!(r.value, 0.0);
        assert!(r.converged);
    }

    #[test]
    fn non_convergence_is_reported() {
        let cfg = QuadratureConfig {
            max_panels: 3,
            ..QuadratureConfig::default()
        };
        let r = integrate(|x: f64| (200.0 * x).sin().abs(), 0.0, 10.0, &cfg);
        assert!(!r.converged);
        assert!(r.into_value().is_err());
    }

    #[test]
    fn complex_integrand() {
        let cfg = QuadratureConfig::default();
        let r = integrate(|x: f64| Complex64::new(0.0, x).exp(), 0.0, PI, &cfg);
        assert!((r.value - Complex64::new(0.0, 2.0)).norm() < 1e-13);
    }

    #[test]
    fn line_decaying() {
        let cfg = QuadratureConfig::default();
        let r = integrate_line_decaying(|t: f64| 1.0 / (2.0 * PI * t).cosh(), 2.0 * PI, &cfg)
            .unwrap();
        assert!((r.value - 0.5).abs() < 1e-10);
        let r = integrate_line_decaying(|_| 0.0, 1.0, &cfg).unwrap();
        assert_eq!(r.value, 0.0);
        assert!(integrate_line_decaying(|_| 0.0, 0.0, &cfg).is_err());
        assert!(integrate_line_decaying(|_| 0.0, -1.0, &cfg).is_err());
    }

    #[test]
    fn line_algebraic_lorentzian() {
        let cfg = QuadratureConfig::with_tolerance(1e-8, 1e-10);
        let r = integrate_line_algebraic(|t: f64| 1.0 / (1.0 + t * t), -1.0, 1.0, &[], &cfg);
        assert!((r.value - PI).abs() < 1e-6);
    }

    #[test]
    fn roots() {
        let x = find_root(|x| x - 1.0, 0.0, 2.0, 1e-12).unwrap();
        assert!((x - 1.0).abs() < 1e-12);
        let x = find_root(f64::cos, 1.0, 2.0, 1e-12).unwrap();
        assert!((x - PI / 2.0).abs() < 1e-12);
        assert!(matches!(
            find_root(|x| x * x + 1.0, -1.0, 1.0, 1e-9),
            Err(Error::NoSignChange { .. })
        ));
    }

    #[test]
    fn deterministic() {
        let cfg = QuadratureConfig::default();
        let f = |x: f64| (x * 37.0).sin() * (-x).exp();
        let a = integrate(f, 0.0, 5.0, &cfg);
        let b = integrate(f, 0.0, 5.0, &cfg);
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        assert_eq!(a.panels_used, b.panels_used);
    }

    #[test]
    fn halving_tolerance_stays_within_estimate() {
        let cfg = QuadratureConfig::with_tolerance(1e-8, 1e-8);
        let f = |x: f64| (x * 11.0).cos() / (1.0 + x * x);
        let coarse = integrate(f, -3.0, 4.0, &cfg);
        let fine = integrate(f, -3.0, 4.0, &cfg.scaled(0.5));
        assert!(coarse.converged && fine.converged);
        assert!((coarse.value - fine.value).abs() < coarse.error_estimate);
    }
}
