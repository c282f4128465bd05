//! Ordinates of zeta zeros on the critical line, located as sign changes of
//! Hardy's `Z(t)`, together with the zero-counting main term.
//!
//! `Z(t)` comes from the Euler–Maclaurin sum for `ζ(1/2 + it)` below
//! [`RS_CUTOFF`] and from the Riemann–Siegel formula with corrections
//! `C_0 … C_4` above it.

mod rs_coeffs;

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::quadrature::find_root;
use crate::sum::Compensated;

/// Heights below this use Euler–Maclaurin; Riemann–Siegel above.
pub const RS_CUTOFF: f64 = 200.0;

/// Largest height accepted by [`compute_zeros`].
pub const MAX_HEIGHT: f64 = 1e6;

/// Default sample density of the sign-change scan, in points per mean gap.
pub const POINTS_PER_GAP: f64 = 6.0;

/// A nontrivial zero `β + iγ` with multiplicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Zero {
    pub beta: f64,
    pub gamma: f64,
    pub multiplicity: u32,
}

impl Zero {
    pub fn on_line(gamma: f64) -> Self {
        Self {
            beta: 0.5,
            gamma,
            multiplicity: 1,
        }
    }

    pub fn new(beta: f64, gamma: f64, multiplicity: u32) -> Self {
        Self {
            beta,
            gamma,
            multiplicity,
        }
    }

    pub fn rho(&self) -> Complex64 {
        Complex64::new(self.beta, self.gamma)
    }

    pub fn is_on_line(&self) -> bool {
        self.beta == 0.5
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroSource {
    Computed,
    File,
    Synthetic,
}

impl ZeroSource {
    pub fn as_str(self) -> &'static str {
        match self {
            ZeroSource::Computed => "computed",
            ZeroSource::File => "file",
            ZeroSource::Synthetic => "synthetic",
        }
    }
}

/// Zeros over a height window, ordered by ordinate.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroDataset {
    zeros: Vec<Zero>,
    t_min: f64,
    t_max: f64,
    source: ZeroSource,
    on_line: bool,
}

impl ZeroDataset {
    /// Simple zeros on the critical line at the given ordinates.
    pub fn from_ordinates(
        ordinates: &[f64],
        t_min: f64,
        t_max: f64,
        source: ZeroSource,
    ) -> Result<Self> {
        Self::new(
            ordinates.iter().map(|&g| Zero::on_line(g)).collect(),
            t_min,
            t_max,
            source,
        )
    }

    /// Validates ordering, the window and, for zeros off the line, that each
    /// comes with its partner `1 - β + iγ` of equal multiplicity.
    pub fn new(zeros: Vec<Zero>, t_min: f64, t_max: f64, source: ZeroSource) -> Result<Self> {
        if !(t_min.is_finite() && t_max.is_finite() && t_min <= t_max) {
            return Err(domain(format!("invalid window [{t_min}, {t_max}]")));
        }
        for (i, z) in zeros.iter().enumerate() {
            if !(z.beta > 0.0 && z.beta < 1.0) {
                return Err(domain(format!("zero {i}: beta {} not in (0, 1)", z.beta)));
            }
            if !(z.gamma > 0.0 && z.gamma.is_finite()) {
                return Err(domain(format!("zero {i}: gamma {} must be positive", z.gamma)));
            }
            if z.multiplicity == 0 {
                return Err(domain(format!("zero {i}: multiplicity must be >= 1")));
            }
            if z.gamma < t_min || z.gamma > t_max {
                return Err(domain(format!(
                    "zero {i}: gamma {} outside [{t_min}, {t_max}]",
                    z.gamma
                )));
            }
        }
        for (i, w) in zeros.windows(2).enumerate() {
            let (a, b) = (w[0], w[1]);
            let ordered = a.gamma < b.gamma || (a.gamma == b.gamma && a.beta < b.beta);
            if !ordered {
                return Err(domain(format!(
                    "zeros {i} and {} out of order (gamma {} then {})",
                    i + 1,
                    a.gamma,
                    b.gamma
                )));
            }
        }
        for z in zeros.iter().filter(|z| !z.is_on_line()) {
            let partner = zeros.iter().any(|p| {
                p.gamma == z.gamma
                    && (p.beta - (1.0 - z.beta)).abs() < 1e-12
                    && p.multiplicity == z.multiplicity
            });
            if !partner {
                return Err(domain(format!(
                    "zero {}+{}i has no symmetric partner at beta {}",
                    z.beta,
                    z.gamma,
                    1.0 - z.beta
                )));
            }
        }
        let on_line = zeros.iter().all(Zero::is_on_line);
        Ok(Self {
            zeros,
            t_min,
            t_max,
            source,
            on_line,
        })
    }

    pub fn empty(t_min: f64, t_max: f64, source: ZeroSource) -> Self {
        Self {
            zeros: Vec::new(),
            t_min,
            t_max,
            source,
            on_line: true,
        }
    }

    pub fn zeros(&self) -> &[Zero] {
        &self.zeros
    }

    pub fn ordinates(&self) -> Vec<f64> {
        self.zeros.iter().map(|z| z.gamma).collect()
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    pub fn t_min(&self) -> f64 {
        self.t_min
    }

    pub fn t_max(&self) -> f64 {
        self.t_max
    }

    pub fn source(&self) -> ZeroSource {
        self.source
    }

    pub fn on_line(&self) -> bool {
        self.on_line
    }

    /// Zeros with `lo < γ ≤ hi`.
    pub fn window(&self, lo: f64, hi: f64) -> &[Zero] {
        let start = self.zeros.partition_point(|z| z.gamma <= lo);
        let end = self.zeros.partition_point(|z| z.gamma <= hi);
        &self.zeros[start..end.max(start)]
    }

    /// Number of zeros counted with multiplicity.
    pub fn count_with_multiplicity(&self) -> u64 {
        self.zeros.iter().map(|z| z.multiplicity as u64).sum()
    }
}

fn check_height(t: f64) -> Result<()> {
    if !(t >= 10.0 && t.is_finite()) {
        return Err(domain(format!("t must be >= 10, got {t}")));
    }
    Ok(())
}

/// Riemann–Siegel theta function from its Stirling expansion.
pub fn rs_theta(t: f64) -> Result<f64> {
    check_height(t)?;
    Ok(theta_unchecked(t))
}

fn theta_unchecked(t: f64) -> f64 {
    let r = 1.0 / t;
    let r2 = r * r;
    0.5 * t * (t / (2.0 * PI)).ln() - 0.5 * t - PI / 8.0
        + r * (1.0 / 48.0 + r2 * (7.0 / 5760.0 + r2 * (31.0 / 80640.0 + r2 * 127.0 / 430080.0)))
}

/// `B_{2k}/(2k)!` for `k = 1..=20`.
const BERNOULLI_OVER_FACTORIAL: [f64; 20] = [
    0.08333333333333333,
    -0.001388888888888889,
    3.306878306878307e-05,
    -8.267195767195768e-07,
    2.08767569878681e-08,
    -5.284190138687493e-10,
    1.3382536530684679e-11,
    -3.3896802963225827e-13,
    8.586062056277845e-15,
    -2.174868698558062e-16,
    5.5090028283602295e-18,
    -1.3954464685812522e-19,
    3.534707039629467e-21,
    -8.953517427037546e-23,
    2.267952452337683e-24,
    -5.744790668872202e-26,
    1.455172475614865e-27,
    -3.6859949406653103e-29,
    9.336734257095045e-31,
    -2.36502241570063e-32,
];

/// `ζ(1/2 + it)` by Euler–Maclaurin summation.
///
/// Uses `N ≈ t/π + 10` direct terms so the tail series converges
/// geometrically with ratio about 1/2.
pub fn zeta_critical_line(t: f64) -> Complex64 {
    let s = Complex64::new(0.5, t);
    let n = (t.abs() / PI).ceil() as u64 + 10;
    let mut acc = Compensated::new();
    for k in 1..n {
        let lk = (k as f64).ln();
        acc.add(Complex64::from_polar((-0.5 * lk).exp(), -t * lk));
    }
    let nf = n as f64;
    let ln_n = nf.ln();
    let n_pow_s = Complex64::from_polar((-0.5 * ln_n).exp(), -t * ln_n); // N^{-s}
    acc.add(n_pow_s * nf / (s - 1.0));
    acc.add(n_pow_s * 0.5);
    // Σ B_{2k}/(2k)! · s(s+1)…(s+2k-2) · N^{-s-2k+1}
    let mut rising = s; // s(s+1)…(s+2k-2)
    let mut npow = n_pow_s / nf; // N^{-s-2k+1}
    for (k, coef) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        let term = rising * npow * *coef;
        acc.add(term);
        if term.norm() < 1e-17 {
            break;
        }
        let j = 2.0 * k as f64;
        rising = rising * (s + j + 1.0) * (s + j + 2.0);
        npow /= nf * nf;
    }
    acc.value()
}

fn poly(coeffs: &[f64], u: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * u + c)
}

fn riemann_siegel(t: f64) -> f64 {
    let theta = theta_unchecked(t);
    let tau = (t / (2.0 * PI)).sqrt();
    let n = tau.floor() as u64;
    let p = tau - n as f64;
    let mut acc = Compensated::new();
    for k in 1..=n {
        let kf = k as f64;
        acc.add((theta - t * kf.ln()).cos() / kf.sqrt());
    }
    let main = 2.0 * acc.value();
    let u = p - 0.5;
    let inv = 1.0 / tau;
    let rem = poly(&rs_coeffs::C0, u)
        + inv
            * (poly(&rs_coeffs::C1, u)
                + inv
                    * (poly(&rs_coeffs::C2, u)
                        + inv * (poly(&rs_coeffs::C3, u) + inv * poly(&rs_coeffs::C4, u))));
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    main + sign * rem / tau.sqrt()
}

/// Hardy's `Z(t) = e^{iθ(t)} ζ(1/2 + it)`, real for real `t`.
pub fn hardy_z(t: f64) -> Result<f64> {
    check_height(t)?;
    Ok(hardy_z_unchecked(t))
}

fn hardy_z_unchecked(t: f64) -> f64 {
    if t < RS_CUTOFF {
        (Complex64::from_polar(1.0, theta_unchecked(t)) * zeta_critical_line(t)).re
    } else {
        riemann_siegel(t)
    }
}

/// Main term of the zero-counting function,
/// `(T/2π) log(T/2π) - T/2π + 7/8`.
pub fn n_of_t(t: f64) -> f64 {
    let x = t / (2.0 * PI);
    x * x.ln() - x + 0.875
}

/// `Σ_γ m_γ / (1 + (t - γ)²)` over the dataset.
pub fn density_check(ds: &ZeroDataset, t: f64) -> f64 {
    ds.zeros()
        .iter()
        .map(|z| z.multiplicity as f64 / (1.0 + (t - z.gamma).powi(2)))
        .collect::<Compensated<f64>>()
        .value()
}

/// Outcome of a zero scan with its count cross-check.
#[derive(Debug, Clone)]
pub struct ZeroScan {
    pub dataset: ZeroDataset,
    /// `n_of_t(t_max) - n_of_t(t_min)`.
    pub expected: f64,
    pub tolerance: f64,
    /// Sample density used by the final pass, in points per mean gap.
    pub points_per_gap: f64,
    /// Set when the count still disagrees with `expected` after all
    /// densification passes.
    pub warning: Option<String>,
}

impl ZeroScan {
    pub fn discrepancy(&self) -> f64 {
        self.dataset.len() as f64 - self.expected
    }
}

/// Scan settings for [`compute_zeros_with`].
#[derive(Debug, Clone, Copy)]
pub struct ScanConfig {
    pub points_per_gap: f64,
    /// Densification passes (each doubling the density) on count mismatch.
    pub retries: u32,
    /// Bracket width at which refinement stops.
    pub root_tol: f64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            points_per_gap: POINTS_PER_GAP,
            retries: 3,
            root_tol: 1e-10,
        }
    }
}

/// Zeros with `t_min < γ ≤ t_max` on the critical line.
pub fn compute_zeros(t_min: f64, t_max: f64) -> Result<ZeroScan> {
    compute_zeros_with(t_min, t_max, &ScanConfig::default())
}

pub fn compute_zeros_with(t_min: f64, t_max: f64, cfg: &ScanConfig) -> Result<ZeroScan> {
    check_height(t_min)?;
    if !(t_max >= t_min && t_max <= MAX_HEIGHT) {
        return Err(domain(format!(
            "need 10 <= t_min <= t_max <= {MAX_HEIGHT}, got [{t_min}, {t_max}]"
        )));
    }
    if !(cfg.points_per_gap > 0.0) {
        return Err(Error::Config("points_per_gap must be positive".into()));
    }
    let expected = n_of_t(t_max) - n_of_t(t_min);
    let tolerance = 2.0 + t_max.ln();
    if t_max == t_min {
        return Ok(ZeroScan {
            dataset: ZeroDataset::empty(t_min, t_max, ZeroSource::Computed),
            expected: 0.0,
            tolerance,
            points_per_gap: cfg.points_per_gap,
            warning: None,
        });
    }

    let mut density = cfg.points_per_gap;
    let mut pass = 0;
    loop {
        let ordinates = scan(t_min, t_max, density, cfg.root_tol)?;
        let diff = ordinates.len() as f64 - expected;
        let ok = diff.abs() <= tolerance;
        if ok || pass >= cfg.retries {
            let warning = (!ok).then(|| {
                format!(
                    "found {} zeros in ({t_min}, {t_max}] but the counting main term gives {:.2}; \
                     discrepancy {:.2} exceeds {:.2}",
                    ordinates.len(),
                    expected,
                    diff,
                    tolerance
                )
            });
            let dataset =
                ZeroDataset::from_ordinates(&ordinates, t_min, t_max, ZeroSource::Computed)?;
            return Ok(ZeroScan {
                dataset,
                expected,
                tolerance,
                points_per_gap: density,
                warning,
            });
        }
        density *= 2.0;
        pass += 1;
    }
}

fn sample_points(t_min: f64, t_max: f64, points_per_gap: f64) -> Vec<f64> {
    let mut ts = vec![t_min];
    let mut t = t_min;
    while t < t_max {
        let gap = 2.0 * PI / (t / (2.0 * PI)).ln().max(0.25);
        t = (t + gap / points_per_gap).min(t_max);
        ts.push(t);
    }
    ts
}

fn evaluate_z(ts: &[f64]) -> Vec<f64> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        ts.par_iter().map(|&t| hardy_z_unchecked(t)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        ts.iter().map(|&t| hardy_z_unchecked(t)).collect()
    }
}

/// Brackets `(lo, hi)` each holding one sign change of `Z`.
fn brackets(ts: &[f64], zs: &[f64]) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for i in 0..ts.len() - 1 {
        let (a, b) = (zs[i], zs[i + 1]);
        if a.signum() != b.signum() && a != 0.0 {
            out.push((ts[i], ts[i + 1]));
            continue;
        }
        // Two close zeros can hide between samples: look for a dip of |Z|
        // that fails to reach zero at the samples.
        if i >= 1 && a != 0.0 {
            let prev = zs[i - 1];
            if prev.signum() == a.signum()
                && b.signum() == a.signum()
                && a.abs() < prev.abs()
                && a.abs() < b.abs()
            {
                let s = a.signum();
                let (tm, zm) = golden_min(|t| s * hardy_z_unchecked(t), ts[i - 1], ts[i + 1]);
                if zm < 0.0 {
                    out.push((ts[i - 1], tm));
                    out.push((tm, ts[i + 1]));
                }
            }
        }
    }
    // A dip bracket may overlap a plain sign-change bracket of the next
    // sample pair; keep intervals disjoint by dropping later duplicates.
    out.sort_by(|p, q| p.0.total_cmp(&q.0));
    let mut disjoint: Vec<(f64, f64)> = Vec::with_capacity(out.len());
    for (lo, hi) in out {
        if let Some(last) = disjoint.last() {
            if lo < last.1 {
                continue;
            }
        }
        disjoint.push((lo, hi));
    }
    disjoint
}

fn golden_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    let r = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - r * (b - a);
    let mut d = a + r * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..60 {
        if (b - a).abs() < 1e-9 || fc < 0.0 || fd < 0.0 {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d);
        }
    }
    if fc < fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

fn scan(t_min: f64, t_max: f64, points_per_gap: f64, root_tol: f64) -> Result<Vec<f64>> {
    let ts = sample_points(t_min, t_max, points_per_gap);
    let zs = evaluate_z(&ts);
    let mut roots = Vec::new();
    for (lo, hi) in brackets(&ts, &zs) {
        let g = find_root(hardy_z_unchecked, lo, hi, root_tol)?;
        if g > t_min && g <= t_max {
            roots.push(g);
        }
    }
    // A root landing exactly on a sample makes the next bracket start there.
    if let Some(i) = zs.iter().position(|&z| z == 0.0) {
        if ts[i] > t_min && !roots.contains(&ts[i]) {
            roots.push(ts[i]);
        }
    }
    roots.sort_by(f64::total_cmp);
    roots.dedup();
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_domain() {
        assert!(rs_theta(9.9).is_err());
        assert!(hardy_z(5.0).is_err());
        assert!(rs_theta(10.0).is_ok());
    }

    #[test]
    fn theta_monotone() {
        let mut prev = rs_theta(10.0).unwrap();
        let mut t = 10.0;
        while t < 1e4 {
            t += 0.5;
            let v = rs_theta(t).unwrap();
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn both_z_routes_agree_near_cutoff() {
        for t in [180.0, 199.0, 250.0, 400.0] {
            let em = (Complex64::from_polar(1.0, theta_unchecked(t)) * zeta_critical_line(t)).re;
            let rs = riemann_siegel(t);
            assert!((em - rs).abs() < 1e-8, "t={t} em={em} rs={rs}");
        }
    }

    #[test]
    fn z_is_real() {
        for t in [20.0, 77.7, 150.0] {
            let v = Complex64::from_polar(1.0, theta_unchecked(t)) * zeta_critical_line(t);
            assert!(v.im.abs() < 1e-10, "t={t} im={}", v.im);
        }
    }

    #[test]
    fn counting_main_term() {
        assert!((n_of_t(100.0) - 29.0).abs() < 0.01);
        assert!((n_of_t(2.0 * PI) + 0.125).abs() < 1e-12);
    }

    #[test]
    fn density_trivia() {
        let ds = ZeroDataset::empty(10.0, 20.0, ZeroSource::Synthetic);
        assert_eq!(density_check(&ds, 15.0), 0.0);
        let ds = ZeroDataset::from_ordinates(&[15.0], 10.0, 20.0, ZeroSource::Synthetic).unwrap();
        assert_eq!(density_check(&ds, 15.0), 1.0);
    }

    #[test]
    fn degenerate_window() {
        let scan = compute_zeros(50.0, 50.0).unwrap();
        assert!(scan.dataset.is_empty());
        assert!(scan.warning.is_none());
        assert!(compute_zeros(5.0, 100.0).is_err());
        assert!(compute_zeros(100.0, 50.0).is_err());
    }

    #[test]
    fn dataset_validation() {
        assert!(ZeroDataset::from_ordinates(&[20.0, 15.0], 10.0, 30.0, ZeroSource::File).is_err());
        assert!(ZeroDataset::from_ordinates(&[20.0, 20.0], 10.0, 30.0, ZeroSource::File).is_err());
        assert!(ZeroDataset::from_ordinates(&[40.0], 10.0, 30.0, ZeroSource::File).is_err());
        let lonely = vec![Zero::new(0.6, 20.0, 1)];
        assert!(ZeroDataset::new(lonely, 10.0, 30.0, ZeroSource::Synthetic).is_err());
        let pair = vec![Zero::new(0.4, 20.0, 1), Zero::new(0.6, 20.0, 1)];
        let ds = ZeroDataset::new(pair, 10.0, 30.0, ZeroSource::Synthetic).unwrap();
        assert!(!ds.on_line());
        assert_eq!(ds.window(19.0, 20.0).len(), 2);
        assert_eq!(ds.window(20.0, 30.0).len(), 0);
    }

    #[test]
    fn lehmer_pair_is_resolved() {
        // Two zeros about 0.04 apart near t = 7005, well inside one default
        // scan step.
        let scan = compute_zeros(7004.0, 7006.0).unwrap();
        let g = scan.dataset.ordinates();
        let close: Vec<_> = g.windows(2).filter(|w| w[1] - w[0] < 0.1).collect();
        assert_eq!(close.len(), 1, "{g:?}");
    }
}
