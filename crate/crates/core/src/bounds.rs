//! The bound functional `𝒞_b(j)` and the zero-proportion coefficients it
//! implies for zeros in the box of width `b/log T` around the critical line.
//!
//! ```text
//! 𝒞_b(j) = (j(0) + 2∫₀¹ αj(α)/cosh(bα) dα) / (2∫₀¹ j(α)/cosh(bα) dα)
//! ```
//!
//! Simple zeros and critical zeros are each at least `2 - 𝒞_b(j)` of the
//! total; zeros both simple and critical at least `3 - 2𝒞_b(j)`.

use crate::error::{domain, Error, Result};
use crate::kernels::{KernelId, TsangParams};
use crate::quadrature::{find_root, integrate, QuadratureConfig};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundRow {
    pub kernel: KernelId,
    pub b: f64,
    pub c_b: f64,
    /// Coefficient of `(T/2π) log T` bounding simple zeros from below.
    pub simple_coeff: f64,
    /// Same bound for zeros on the critical line.
    pub critical_coeff: f64,
    /// Bound for zeros that are simple and on the critical line.
    pub simple_critical_coeff: f64,
}

impl BoundRow {
    pub fn from_c_b(kernel: KernelId, b: f64, c_b: f64) -> Self {
        let simple = 2.0 - c_b;
        Self {
            kernel,
            b,
            c_b,
            simple_coeff: simple,
            critical_coeff: simple,
            simple_critical_coeff: 3.0 - 2.0 * c_b,
        }
    }
}

/// Which coefficient [`failure_threshold`] drives to zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// `2 - 𝒞_b(j)`, shared by simple and critical zeros.
    Simple,
    /// `3 - 2𝒞_b(j)`.
    SimpleCritical,
}

/// The two integrals entering `𝒞_b(j)`:
/// `(∫₀¹ J_b, ∫₀¹ α J_b)` with `J_b = j/cosh(b·)`.
pub fn kernel_moments(kernel: KernelId, b: f64, cfg: &QuadratureConfig) -> Result<(f64, f64)> {
    let p = TsangParams::new(b, kernel)?;
    let m0 = integrate(|a: f64| p.weight(a), 0.0, 1.0, cfg).into_value()?;
    let m1 = integrate(|a: f64| a * p.weight(a), 0.0, 1.0, cfg).into_value()?;
    Ok((m0, m1))
}

pub fn c_b(kernel: KernelId, b: f64, cfg: &QuadratureConfig) -> Result<f64> {
    cfg.validate()?;
    let (m0, m1) = kernel_moments(kernel, b, cfg)?;
    Ok((kernel.eval(0.0) + 2.0 * m1) / (2.0 * m0))
}

/// Bound coefficients at `b`. Negative coefficients are returned as they
/// are; clamping is left to display code.
pub fn proportions(kernel: KernelId, b: f64, cfg: &QuadratureConfig) -> Result<BoundRow> {
    Ok(BoundRow::from_c_b(kernel, b, c_b(kernel, b, cfg)?))
}

pub fn table(kernel: KernelId, b_values: &[f64], cfg: &QuadratureConfig) -> Result<Vec<BoundRow>> {
    if let Some(&bad) = b_values.iter().find(|b| !(**b >= 0.0 && b.is_finite())) {
        return Err(domain(format!("b must be finite and >= 0, got {bad}")));
    }
    b_values.iter().map(|&b| proportions(kernel, b, cfg)).collect()
}

/// Smallest `b > 0` at which the chosen coefficient vanishes.
///
/// Starts from the bracket `[0, 1]` and doubles the right end until the
/// coefficient changes sign, giving up beyond `b = 16`.
pub fn failure_threshold(kernel: KernelId, which: BoundKind, cfg: &QuadratureConfig) -> Result<f64> {
    const LIMIT: f64 = 16.0;
    let coeff = |b: f64| -> Result<f64> {
        let row = proportions(kernel, b, cfg)?;
        Ok(match which {
            BoundKind::Simple => row.simple_coeff,
            BoundKind::SimpleCritical => row.simple_critical_coeff,
        })
    };
    let mut lo = 0.0;
    let mut hi = 1.0;
    let f_lo = coeff(lo)?;
    if f_lo <= 0.0 {
        return Err(Error::NoSignChange { lo: 0.0, hi: 0.0 });
    }
    loop {
        if coeff(hi)? < 0.0 {
            break;
        }
        lo = hi;
        hi *= 2.0;
        if hi > LIMIT {
            return Err(Error::NoSignChange { lo: 0.0, hi: LIMIT });
        }
    }
    // Quadrature errors cannot surface through the closure; they were
    // ruled out at the bracket ends and the integrand is smooth in b.
    find_root(|b| coeff(b).unwrap_or(f64::NAN), lo, hi, 1e-9)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn fejer_at_zero_is_four_thirds() {
        let c = c_b(KernelId::Fejer, 0.0, &cfg()).unwrap();
        assert!((c - 4.0 / 3.0).abs() < 1e-12);
        let row = proportions(KernelId::Fejer, 0.0, &cfg()).unwrap();
        assert!((row.simple_coeff - 2.0 / 3.0).abs() < 1e-12);
        assert!((row.critical_coeff - 2.0 / 3.0).abs() < 1e-12);
        assert!((row.simple_critical_coeff - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn montgomery_taylor_constants() {
        let r = proportions(KernelId::MontgomeryTaylor, 0.001, &cfg()).unwrap();
        assert!((r.simple_coeff - 0.672_500_64).abs() < 1e-7);
        assert!((r.simple_critical_coeff - 0.345_001_29).abs() < 1e-7);
        let r = proportions(KernelId::MontgomeryTaylor, 0.3185, &cfg()).unwrap();
        assert!((r.simple_coeff - 0.666_669_08).abs() < 1e-7);
        let r = proportions(KernelId::MontgomeryTaylor, 1.0, &cfg()).unwrap();
        assert!((r.simple_coeff - 0.617_48).abs() < 2e-5);
    }

    #[test]
    fn row_identities_exact() {
        for b in [0.0, 0.7, 2.5] {
            let r = proportions(KernelId::MontgomeryTaylor, b, &cfg()).unwrap();
            assert_eq!(r.simple_coeff, r.critical_coeff);
            assert_eq!(r.simple_critical_coeff, 3.0 - 2.0 * r.c_b);
            assert!(r.c_b >= 1.0);
        }
    }

    #[test]
    fn table_shapes() {
        assert!(table(KernelId::Fejer, &[], &cfg()).unwrap().is_empty());
        let rows = table(KernelId::Fejer, &[2.0, 0.5], &cfg()).unwrap();
        assert_eq!(rows[0].b, 2.0);
        assert_eq!(rows[1].b, 0.5);
        assert!((rows[0].simple_coeff - 0.458_87).abs() < 2e-5);
        assert!(table(KernelId::Fejer, &[1.0, -1.0], &cfg()).is_err());
    }

    #[test]
    fn thresholds() {
        let b = failure_threshold(KernelId::MontgomeryTaylor, BoundKind::Simple, &cfg()).unwrap();
        assert!(b > 4.187 && b < 4.20, "{b}");
        let b = failure_threshold(KernelId::MontgomeryTaylor, BoundKind::SimpleCritical, &cfg())
            .unwrap();
        assert!(b > 1.8 && b < 2.0, "{b}");
        let b = failure_threshold(KernelId::Fejer, BoundKind::Simple, &cfg()).unwrap();
        assert!(b > 4.0508 && b < 4.187, "{b}");
    }

    #[test]
    fn small_b_limit() {
        for k in KernelId::ALL {
            let c0 = c_b(k, 0.0, &cfg()).unwrap();
            let c = c_b(k, 1e-6, &cfg()).unwrap();
            assert!((c - c0).abs() < 1e-5);
        }
    }
}
