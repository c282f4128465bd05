//! Empirical pair correlation over a set of zeros.
//!
//! ```text
//! F(x)  = Σ_{γ,γ'} x^{i(γ-γ')} w(γ-γ'),   w(u) = 4/(4+u²)
//! 𝓕(x) = Σ_{ρ,ρ'} x^{ρ-ρ'}  W(ρ-ρ'),    W(u) = 4/(4-u²)
//! ```
//!
//! Sums run over ordered pairs in a height window; a zero of multiplicity
//! `m` counts as `m` coincident zeros. Accumulation is by increasing `γ`
//! then `γ'`, per row with compensation, rows reduced in order.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::bounds::kernel_moments;
use crate::error::{Error, Result};
use crate::kernels::{tsang_k, ComplexValue, TsangParams};
use crate::par::map_indices;
use crate::quadrature::{integrate_line_algebraic, integrate_panels, QuadratureConfig, QuadratureResult};
use crate::sum::{compensated_sum, Compensated};
use crate::zeta::{Zero, ZeroDataset};

/// Largest dataset accepted by the integral-representation oracles.
pub const ORACLE_MAX_ZEROS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weight {
    /// `w(u) = 4/(4+u²)` on ordinate differences.
    Montgomery,
    /// `W(u) = 4/(4-u²)` on full complex differences.
    Complex,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairSumSpec {
    pub x: f64,
    /// Pairs are drawn from zeros with `lo < γ ≤ hi`.
    pub window: (f64, f64),
    pub weight: Weight,
    /// Skip pairs with `|γ - γ'|` above this gap.
    pub truncation_gap: Option<f64>,
}

impl PairSumSpec {
    pub fn new(x: f64, window: (f64, f64), weight: Weight) -> Result<Self> {
        let spec = Self {
            x,
            window,
            weight,
            truncation_gap: None,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// `x = T^α` over the window `(T, 2T]`.
    pub fn dyadic(alpha: f64, t: f64, weight: Weight) -> Result<Self> {
        if !(t > 1.0 && t.is_finite() && alpha.is_finite()) {
            return Err(Error::Config(format!("invalid alpha {alpha} or T {t}")));
        }
        Self::new(t.powf(alpha), (t, 2.0 * t), weight)
    }

    pub fn with_truncation(mut self, gap: f64) -> Result<Self> {
        self.truncation_gap = Some(gap);
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.x > 0.0 && self.x.is_finite()) {
            return Err(Error::Config(format!("x must be positive, got {}", self.x)));
        }
        let (lo, hi) = self.window;
        if !(lo < hi && lo.is_finite() && hi.is_finite()) {
            return Err(Error::Config(format!("invalid window ({lo}, {hi}]")));
        }
        if let Some(gap) = self.truncation_gap {
            if !(gap >= 10.0) {
                return Err(Error::Config(format!("truncation gap must be >= 10, got {gap}")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairSumResult {
    pub value: ComplexValue,
    /// Zeros in the window, counted with multiplicity.
    pub n_zeros: u64,
    /// Ordered pairs of dataset entries whose terms were summed.
    pub n_pairs_evaluated: u64,
    /// Bound on the total size of skipped terms; 0 without truncation.
    pub truncation_error_bound: f64,
}

pub fn w(u: f64) -> f64 {
    4.0 / (4.0 + u * u)
}

#[allow(non_snake_case)]
pub fn W(u: Complex64) -> Complex64 {
    let den = 4.0 - u * u;
    debug_assert!(den.norm() > 0.0, "W pole at u = {u}");
    4.0 / den
}

fn window_zeros(ds: &ZeroDataset, window: (f64, f64)) -> Result<&[Zero]> {
    let zs = ds.window(window.0, window.1);
    if zs.is_empty() {
        return Err(Error::EmptyWindow {
            lo: window.0,
            hi: window.1,
        });
    }
    Ok(zs)
}

fn multiplicity_total(zs: &[Zero]) -> u64 {
    zs.iter().map(|z| z.multiplicity as u64).sum()
}

/// Index one past the last `j > i` with `γ_j - γ_i ≤ gap`.
fn row_end(zs: &[Zero], i: usize, gap: Option<f64>) -> usize {
    match gap {
        None => zs.len(),
        Some(g) => {
            let limit = zs[i].gamma + g;
            i + 1 + zs[i + 1..].partition_point(|z| z.gamma <= limit)
        }
    }
}

/// Conservative bound on the skipped tail: for each zero, the partners
/// beyond the gap sit at distances at least `Δ + k/d` (`d` the mean
/// density at the top of the window), each contributing at most `4/u²`.
fn truncation_bound(zs: &[Zero], gap: f64, hi: f64, ln_x: f64) -> f64 {
    let density = ((hi / (2.0 * PI)).ln() / (2.0 * PI)).max(1e-3);
    let per_zero = 4.0 / (gap * gap) + 4.0 * density / gap;
    let spread = zs.iter().map(|z| (z.beta - 0.5).abs()).fold(0.0, f64::max);
    let growth = (2.0 * spread * ln_x.abs()).exp();
    let mmax = zs.iter().map(|z| z.multiplicity).max().unwrap_or(1) as f64;
    2.0 * multiplicity_total(zs) as f64 * mmax * per_zero * growth
}

/// Pair sum `F(x)` over ordinates.
pub fn f_pair_sum(ds: &ZeroDataset, spec: &PairSumSpec) -> Result<PairSumResult> {
    spec.validate()?;
    if spec.weight != Weight::Montgomery {
        return Err(Error::Config("F(x, T) uses the weight w".into()));
    }
    let zs = window_zeros(ds, spec.window)?;
    let ln_x = spec.x.ln();
    let rows = map_indices(zs.len(), |i| {
        let end = row_end(zs, i, spec.truncation_gap);
        let gi = zs[i].gamma;
        let row = compensated_sum(zs[i + 1..end].iter().map(|z| {
            let d = z.gamma - gi;
            z.multiplicity as f64 * (d * ln_x).cos() * w(d)
        }));
        (row, (end - i - 1) as u64)
    });
    let mut acc = Compensated::new();
    for z in zs {
        acc.add((z.multiplicity as f64).powi(2));
    }
    let mut off = Compensated::new();
    let mut pairs = zs.len() as u64;
    for (z, (row, n)) in zs.iter().zip(&rows) {
        off.add(z.multiplicity as f64 * row);
        pairs += 2 * n;
    }
    acc.add(2.0 * off.value());
    Ok(PairSumResult {
        value: Complex64::new(acc.value(), 0.0),
        n_zeros: multiplicity_total(zs),
        n_pairs_evaluated: pairs,
        truncation_error_bound: spec
            .truncation_gap
            .map_or(0.0, |g| truncation_bound(zs, g, spec.window.1, ln_x)),
    })
}

/// `x^{ρ-ρ'} W(ρ-ρ') + x^{ρ'-ρ} W(ρ'-ρ)` for one unordered pair.
fn calf_pair_terms(a: &Zero, b: &Zero, ln_x: f64) -> Complex64 {
    let d = a.rho() - b.rho();
    let wd = W(d);
    let fwd = (d * ln_x).exp();
    let bwd = (-d * ln_x).exp();
    (fwd + bwd) * wd
}

fn calf_rows(zs: &[Zero], ln_x: f64, gap: Option<f64>) -> (Complex64, u64) {
    let rows = map_indices(zs.len(), |i| {
        let end = row_end(zs, i, gap);
        let a = &zs[i];
        let row = compensated_sum(
            zs[i + 1..end]
                .iter()
                .map(|b| calf_pair_terms(a, b, ln_x) * b.multiplicity as f64),
        );
        (row * a.multiplicity as f64, (end - i - 1) as u64)
    });
    let mut acc = Compensated::new();
    for z in zs {
        acc.add(Complex64::new((z.multiplicity as f64).powi(2), 0.0));
    }
    let mut pairs = zs.len() as u64;
    for (row, n) in rows {
        acc.add(row);
        pairs += 2 * n;
    }
    (acc.value(), pairs)
}

/// Pair sum `𝓕(x)` over full zeros `ρ = β + iγ`.
pub fn calf_pair_sum(ds: &ZeroDataset, spec: &PairSumSpec) -> Result<PairSumResult> {
    spec.validate()?;
    if spec.weight != Weight::Complex {
        return Err(Error::Config("𝓕(x, T) uses the weight W".into()));
    }
    let zs = window_zeros(ds, spec.window)?;
    let ln_x = spec.x.ln();
    let (value, pairs) = calf_rows(zs, ln_x, spec.truncation_gap);
    Ok(PairSumResult {
        value,
        n_zeros: multiplicity_total(zs),
        n_pairs_evaluated: pairs,
        truncation_error_bound: spec
            .truncation_gap
            .map_or(0.0, |g| truncation_bound(zs, g, spec.window.1, ln_x)),
    })
}

fn check_oracle_size(ds: &ZeroDataset) -> Result<()> {
    if ds.len() > ORACLE_MAX_ZEROS {
        return Err(Error::Config(format!(
            "integral oracle limited to {ORACLE_MAX_ZEROS} zeros, got {}",
            ds.len()
        )));
    }
    Ok(())
}

fn oracle_integral(
    ds: &ZeroDataset,
    cfg: &QuadratureConfig,
    summand: impl Fn(&Zero, f64) -> Complex64,
) -> Result<f64> {
    check_oracle_size(ds)?;
    cfg.validate()?;
    let zs = ds.zeros();
    if zs.is_empty() {
        return Ok(0.0);
    }
    let breaks: Vec<f64> = zs.iter().map(|z| z.gamma).collect();
    let lo = breaks[0] - 2.0;
    let hi = breaks[breaks.len() - 1] + 2.0;
    let r = integrate_line_algebraic(
        |t: f64| {
            let s = compensated_sum(zs.iter().map(|z| summand(z, t) * z.multiplicity as f64));
            s.norm_sqr()
        },
        lo,
        hi,
        &breaks,
        cfg,
    );
    Ok(2.0 / PI * r.into_value()?)
}

/// `(2/π) ∫ |Σ_γ x^{iγ}/(1+(t-γ)²)|² dt`, which equals `F(x)` over the
/// whole dataset. For small datasets only.
pub fn f_integral_oracle(ds: &ZeroDataset, x: f64, cfg: &QuadratureConfig) -> Result<f64> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Config(format!("x must be positive, got {x}")));
    }
    let ln_x = x.ln();
    oracle_integral(ds, cfg, |z, t| {
        Complex64::from_polar(1.0, z.gamma * ln_x) / (1.0 + (t - z.gamma).powi(2))
    })
}

/// `(2/π) ∫ |Σ_ρ x^{ρ-1/2}/(1-(ρ-(1/2+it))²)|² dt`, which equals `𝓕(x)`
/// over the whole dataset. For small datasets only.
pub fn calf_integral_oracle(ds: &ZeroDataset, x: f64, cfg: &QuadratureConfig) -> Result<f64> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Config(format!("x must be positive, got {x}")));
    }
    let ln_x = x.ln();
    oracle_integral(ds, cfg, |z, t| {
        let shift = Complex64::new(z.beta - 0.5, z.gamma - t);
        let num = Complex64::from_polar(((z.beta - 0.5) * ln_x).exp(), z.gamma * ln_x);
        num / (1.0 - shift * shift)
    })
}

/// `K_b(-i(ρ-ρ') log T)`.
fn kernel_at(
    params: TsangParams,
    a: &Zero,
    b: &Zero,
    log_t: f64,
    cfg: &QuadratureConfig,
) -> Result<Complex64> {
    let z = -Complex64::i() * (a.rho() - b.rho()) * log_t;
    tsang_k(params, z, cfg)
}

fn check_t(t: f64) -> Result<()> {
    if !(t > 1.0 && t.is_finite()) {
        return Err(Error::Config(format!("T must be > 1, got {t}")));
    }
    Ok(())
}

/// Runs `term` over every unordered pair `i < j` and returns
/// `(Σ_i m_i² · diag, Σ_{i<j} m_i m_j · term)`; `K_b` and both weights are
/// even, so each unordered pair stands for two equal ordered terms.
fn kernel_pairs(
    zs: &[Zero],
    term: impl Fn(&Zero, &Zero) -> Result<Complex64> + Sync,
) -> Result<Complex64> {
    let rows = map_indices(zs.len(), |i| -> Result<Complex64> {
        let a = &zs[i];
        let mut acc = Compensated::new();
        for b in &zs[i + 1..] {
            acc.add(term(a, b)? * b.multiplicity as f64);
        }
        Ok(acc.value() * a.multiplicity as f64)
    });
    let mut acc = Compensated::new();
    for r in rows {
        acc.add(r?);
    }
    Ok(acc.value())
}

/// `Σ_{ρ,ρ'} K_b(-i(ρ-ρ') log T) W(ρ-ρ')` over zeros with `T < γ ≤ 2T`.
///
/// Costs one kernel quadrature per unordered pair.
pub fn kernel_weighted_sum(
    ds: &ZeroDataset,
    params: TsangParams,
    t: f64,
    cfg: &QuadratureConfig,
) -> Result<ComplexValue> {
    check_t(t)?;
    let zs = window_zeros(ds, (t, 2.0 * t))?;
    let log_t = t.ln();
    let k0 = tsang_k(params, Complex64::new(0.0, 0.0), cfg)?;
    let diag: f64 = zs.iter().map(|z| (z.multiplicity as f64).powi(2)).sum();
    let off = kernel_pairs(zs, |a, b| {
        Ok(kernel_at(params, a, b, log_t, cfg)? * W(a.rho() - b.rho()))
    })?;
    Ok(k0 * diag + off * 2.0)
}

/// The same sum computed as `(1/2π) ∫_{-1}^{1} J_b(α) 𝓕(T^α) dα` with
/// `𝓕` evaluated pointwise from the zeros.
pub fn kernel_weighted_sum_by_alpha(
    ds: &ZeroDataset,
    params: TsangParams,
    t: f64,
    cfg: &QuadratureConfig,
) -> Result<QuadratureResult<ComplexValue>> {
    check_t(t)?;
    cfg.validate()?;
    let zs = window_zeros(ds, (t, 2.0 * t))?;
    let log_t = t.ln();
    let spread = zs[zs.len() - 1].gamma - zs[0].gamma;
    let panels = ((spread * log_t / PI).ceil() as usize).max(1);
    let r = integrate_panels(
        |alpha: f64| {
            let (calf, _) = calf_rows(zs, alpha * log_t, None);
            calf * params.weight(alpha)
        },
        &[-1.0, 0.0, 1.0],
        panels,
        cfg,
    );
    let scale = 1.0 / (2.0 * PI);
    Ok(QuadratureResult {
        value: r.value * scale,
        error_estimate: r.error_estimate * scale,
        ..r
    })
}

/// Split of `Σ_{ρ,ρ'} K_b(-i(ρ-ρ') log T)` over the window `(T, 2T]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decomposition {
    pub total: ComplexValue,
    /// Terms with `ρ = ρ'`: `Σ_ρ m_ρ Re K_b(0)` with `ρ` counted `m_ρ` times.
    pub diagonal: f64,
    /// Terms with `ρ' = 1 - ρ̄`, `β ≠ 1/2`.
    pub symmetric_diagonal: f64,
    pub off_diagonal: ComplexValue,
}

fn is_symmetric_partner(a: &Zero, b: &Zero) -> bool {
    a.gamma == b.gamma && !a.is_on_line() && (a.beta + b.beta - 1.0).abs() < 1e-12
}

pub fn diagonal_decomposition(
    ds: &ZeroDataset,
    params: TsangParams,
    t: f64,
    cfg: &QuadratureConfig,
) -> Result<Decomposition> {
    check_t(t)?;
    let zs = window_zeros(ds, (t, 2.0 * t))?;
    let log_t = t.ln();
    let k0 = tsang_k(params, Complex64::new(0.0, 0.0), cfg)?;
    let diag_weight: f64 = zs.iter().map(|z| (z.multiplicity as f64).powi(2)).sum();
    let diagonal = diag_weight * k0.re;

    let mut sym = Compensated::new();
    for (i, a) in zs.iter().enumerate() {
        for b in &zs[i + 1..] {
            if b.gamma > a.gamma {
                break;
            }
            if is_symmetric_partner(a, b) {
                let m = (a.multiplicity * b.multiplicity) as f64;
                sym.add(2.0 * m * kernel_at(params, a, b, log_t, cfg)?.re);
            }
        }
    }
    let symmetric_diagonal = sym.value();

    let off = kernel_pairs(zs, |a, b| kernel_at(params, a, b, log_t, cfg))?;
    let total = k0 * diag_weight + off * 2.0;
    let off_diagonal = total - Complex64::new(diagonal + symmetric_diagonal, 0.0);
    Ok(Decomposition {
        total,
        diagonal,
        symmetric_diagonal,
        off_diagonal,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FormFactorPoint {
    pub alpha: f64,
    /// `𝓕(T^α, T) / ((T/2π) log T)`.
    pub empirical: f64,
    /// `T^{-2α} log T + α`.
    pub theory: f64,
}

/// Minimum zeros in `(T, 2T]` for [`form_factor_curve`].
pub const FORM_FACTOR_MIN_ZEROS: usize = 500;

/// Normalised `𝓕(T^α, T)` against its asymptotic form. The asymptotic is
/// only established for `α ≤ 1`; larger `α` are evaluated but carry no
/// claim.
pub fn form_factor_curve(
    ds: &ZeroDataset,
    t: f64,
    alpha_grid: &[f64],
) -> Result<Vec<FormFactorPoint>> {
    check_t(t)?;
    if let Some(a) = alpha_grid.iter().find(|a| !(**a > 0.0 && a.is_finite())) {
        return Err(Error::Config(format!("alpha must be positive, got {a}")));
    }
    let zs = ds.window(t, 2.0 * t);
    if zs.len() < FORM_FACTOR_MIN_ZEROS {
        return Err(Error::TooFewZeros {
            needed: FORM_FACTOR_MIN_ZEROS,
            found: zs.len(),
        });
    }
    let log_t = t.ln();
    let norm = t / (2.0 * PI) * log_t;
    Ok(alpha_grid
        .iter()
        .map(|&alpha| {
            let (v, _) = calf_rows(zs, alpha * log_t, None);
            FormFactorPoint {
                alpha,
                empirical: v.re / norm,
                theory: (-2.0 * alpha * log_t).exp() * log_t + alpha,
            }
        })
        .collect())
}

/// Every quantity in the chain from the kernel sum to the simple-zero
/// bound, for one dataset and one `(b, j)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub params: TsangParams,
    pub t: f64,
    /// Entries in `(T, 2T]`.
    pub n_entries: usize,
    /// `N`, zeros counted with multiplicity.
    pub n_zeros: u64,
    /// `Σ_ρ m_ρ` with `ρ` counted with multiplicity.
    pub multiplicity_weighted: u64,
    /// `(T/2π) log T`.
    pub main_term: f64,
    /// `Re K_b(0) = (1/π) ∫₀¹ J_b`.
    pub k0: f64,
    pub c_b: f64,
    /// `(1/2π)(j(0) + 2∫₀¹ αJ_b) · (T/2π) log T`.
    pub asymptotic_rhs: f64,
    /// `Σ_{ρ,ρ'} Re K_b(-i(ρ-ρ') log T)` over the window.
    pub kernel_sum: f64,
    pub diagonal: f64,
    pub symmetric_diagonal: f64,
    /// `kernel_sum / Re K_b(0)`: bounds `Σ m_ρ + Σ_{β≠1/2} m_ρ` when every
    /// term is positive.
    pub multiplicity_bound: f64,
    /// `2 - multiplicity_bound / N`.
    pub empirical_simple_bound: f64,
    /// `2N - Σ m_ρ`, a lower bound for the number of simple zeros.
    pub implied_simple_count: f64,
    pub implied_simple_proportion: f64,
    /// `2 - 𝒞_b(j)`: the bound when the kernel sum takes its asymptotic
    /// value and `N` equals the main term.
    pub asymptotic_simple_proportion: f64,
}

pub fn empirical_bound_pipeline(
    ds: &ZeroDataset,
    params: TsangParams,
    t: f64,
    cfg: &QuadratureConfig,
) -> Result<BoundReport> {
    check_t(t)?;
    let zs = window_zeros(ds, (t, 2.0 * t))?;
    let (m0, m1) = kernel_moments(params.kernel, params.b, cfg)?;
    let j0 = params.kernel.eval(0.0);
    let k0 = m0 / PI;
    let main_term = t / (2.0 * PI) * t.ln();
    let c_b = (j0 + 2.0 * m1) / (2.0 * m0);
    let dec = diagonal_decomposition(ds, params, t, cfg)?;
    let n_zeros = multiplicity_total(zs);
    let multiplicity_weighted: u64 = zs.iter().map(|z| (z.multiplicity as u64).pow(2)).sum();
    let n = n_zeros as f64;
    let multiplicity_bound = dec.total.re / k0;
    let implied = 2.0 * n - multiplicity_weighted as f64;
    Ok(BoundReport {
        params,
        t,
        n_entries: zs.len(),
        n_zeros,
        multiplicity_weighted,
        main_term,
        k0,
        c_b,
        asymptotic_rhs: (j0 + 2.0 * m1) / (2.0 * PI) * main_term,
        kernel_sum: dec.total.re,
        diagonal: dec.diagonal,
        symmetric_diagonal: dec.symmetric_diagonal,
        multiplicity_bound,
        empirical_simple_bound: 2.0 - multiplicity_bound / n,
        implied_simple_count: implied,
        implied_simple_proportion: implied / n,
        asymptotic_simple_proportion: 2.0 - c_b,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::KernelId;
    use crate::zeta::ZeroSource;

    fn on_line(gs: &[f64]) -> ZeroDataset {
        ZeroDataset::from_ordinates(gs, 10.0, 1000.0, ZeroSource::Synthetic).unwrap()
    }

    fn spec(x: f64) -> PairSumSpec {
        PairSumSpec::new(x, (10.0, 1000.0), Weight::Montgomery).unwrap()
    }

    #[test]
    fn single_zero() {
        let ds = on_line(&[42.0]);
        for x in [0.3, 1.0, 7.0] {
            let r = f_pair_sum(&ds, &spec(x)).unwrap();
            assert_eq!(r.value, Complex64::new(1.0, 0.0));
            assert_eq!(r.n_pairs_evaluated, 1);
        }
    }

    #[test]
    fn two_zeros_expand() {
        let (g1, g2, x) = (20.0, 23.5, 3.0f64);
        let ds = on_line(&[g1, g2]);
        let r = f_pair_sum(&ds, &spec(x)).unwrap();
        let d = g1 - g2;
        let expect = 2.0 + 2.0 * (d * x.ln()).cos() * w(d);
        assert!((r.value.re - expect).abs() < 1e-14);
        assert_eq!(r.n_pairs_evaluated, 4);
    }

    #[test]
    fn empty_window_errors() {
        let ds = on_line(&[42.0]);
        let s = PairSumSpec::new(2.0, (100.0, 200.0), Weight::Montgomery).unwrap();
        assert!(matches!(f_pair_sum(&ds, &s), Err(Error::EmptyWindow { .. })));
    }

    #[test]
    fn spec_validation() {
        assert!(PairSumSpec::new(0.0, (1.0, 2.0), Weight::Montgomery).is_err());
        assert!(PairSumSpec::new(1.0, (2.0, 2.0), Weight::Montgomery).is_err());
        let s = PairSumSpec::new(1.0, (1.0, 2.0), Weight::Montgomery).unwrap();
        assert!(s.with_truncation(5.0).is_err());
        assert!(s.with_truncation(10.0).is_ok());
    }

    #[test]
    fn symmetric_pair_calf() {
        let zs = vec![Zero::new(0.4, 30.0, 1), Zero::new(0.6, 30.0, 1)];
        let ds = ZeroDataset::new(zs, 10.0, 1000.0, ZeroSource::Synthetic).unwrap();
        let s = PairSumSpec::new(std::f64::consts::E, (10.0, 1000.0), Weight::Complex).unwrap();
        let r = calf_pair_sum(&ds, &s).unwrap();
        let e = 0.2f64.exp() + (-0.2f64).exp();
        let expect = 2.0 + e * 4.0 / (4.0 - 0.04);
        assert!((r.value.re - expect).abs() < 1e-14);
        assert!(r.value.im.abs() < 1e-15);
    }

    #[test]
    fn multiplicity_counts_as_coincident_zeros() {
        let single = ZeroDataset::new(vec![Zero::new(0.5, 50.0, 2)], 10.0, 100.0, ZeroSource::Synthetic)
            .unwrap();
        let r = f_pair_sum(&single, &PairSumSpec::new(2.0, (10.0, 100.0), Weight::Montgomery).unwrap())
            .unwrap();
        assert_eq!(r.value.re, 4.0);
        assert_eq!(r.n_zeros, 2);
    }

    #[test]
    fn oracle_single_zero_and_empty() {
        let cfg = QuadratureConfig::default();
        let ds = on_line(&[42.0]);
        let v = f_integral_oracle(&ds, 5.0, &cfg).unwrap();
        assert!((v - 1.0).abs() < 1e-10);
        let empty = ZeroDataset::empty(10.0, 20.0, ZeroSource::Synthetic);
        assert_eq!(calf_integral_oracle(&empty, 2.0, &cfg).unwrap(), 0.0);
    }

    #[test]
    fn decomposition_on_line() {
        let cfg = QuadratureConfig::default();
        let p = TsangParams::new(0.5, KernelId::Fejer).unwrap();
        let ds = on_line(&[101.0, 104.0, 110.0]);
        let d = diagonal_decomposition(&ds, p, 100.0, &cfg).unwrap();
        let k0 = tsang_k(p, Complex64::new(0.0, 0.0), &cfg).unwrap().re;
        assert!((d.diagonal - 3.0 * k0).abs() < 1e-14);
        assert_eq!(d.symmetric_diagonal, 0.0);
    }

    #[test]
    fn decomposition_multiplicity_two() {
        let cfg = QuadratureConfig::default();
        let p = TsangParams::new(0.5, KernelId::Fejer).unwrap();
        let ds = ZeroDataset::new(vec![Zero::new(0.5, 150.0, 2)], 10.0, 1000.0, ZeroSource::Synthetic)
            .unwrap();
        let d = diagonal_decomposition(&ds, p, 100.0, &cfg).unwrap();
        let k0 = tsang_k(p, Complex64::new(0.0, 0.0), &cfg).unwrap().re;
        // ρ = ρ' occurs in four ways.
        assert!((d.diagonal - 4.0 * k0).abs() < 1e-14);
        assert!(d.off_diagonal.norm() < 1e-13);
    }

    #[test]
    fn pipeline_all_simple() {
        let cfg = QuadratureConfig::default();
        let p = TsangParams::new(0.5, KernelId::MontgomeryTaylor).unwrap();
        let ds = on_line(&[101.0, 104.0, 110.0, 150.0]);
        let r = empirical_bound_pipeline(&ds, p, 100.0, &cfg).unwrap();
        assert_eq!(r.implied_simple_proportion, 1.0);
        assert_eq!(r.n_zeros, 4);
        assert!((r.asymptotic_simple_proportion - (2.0 - r.c_b)).abs() < 1e-15);
    }
}
