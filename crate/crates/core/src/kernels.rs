//! Fourier-positive kernels, the cosh-ratio transform pair and the Tsang
//! kernel `K_b(z)`.
//!
//! Both kernels `j` are even, supported on `[-1, 1]`, and have nonnegative
//! Fourier transforms. The Tsang kernel is
//!
//! ```text
//! K_b(z) = (1/π) ∫₀¹ j(α)/cosh(bα) · cos(zα) dα
//! ```
//!
//! an even entire function whose real part is positive in the strip
//! `|Im z| < b`.

use std::f64::consts::{PI, SQRT_2};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::quadrature::{integrate_panels, QuadratureConfig};

pub type ComplexValue = Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelId {
    /// `j_F(α) = max(1 - |α|, 0)`.
    Fejer,
    /// The Montgomery–Taylor kernel `j_M`.
    MontgomeryTaylor,
}

impl KernelId {
    pub const ALL: [KernelId; 2] = [KernelId::Fejer, KernelId::MontgomeryTaylor];

    /// `j(α)`.
    pub fn eval(self, alpha: f64) -> f64 {
        match self {
            KernelId::Fejer => fejer(alpha),
            KernelId::MontgomeryTaylor => mt(alpha),
        }
    }

    /// Fourier transform `ĵ(t) = ∫ j(α) e(-tα) dα`.
    pub fn eval_hat(self, t: f64) -> f64 {
        match self {
            KernelId::Fejer => fejer_hat(t),
            KernelId::MontgomeryTaylor => mt_hat(t),
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            KernelId::Fejer => "fejer",
            KernelId::MontgomeryTaylor => "mt",
        }
    }
}

impl fmt::Display for KernelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for KernelId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "fejer" | "f" | "j_f" => Ok(KernelId::Fejer),
            "mt" | "m" | "j_m" | "montgomery-taylor" | "montgomerytaylor" => {
                Ok(KernelId::MontgomeryTaylor)
            }
            other => Err(Error::Config(format!(
                "unknown kernel '{other}' (expected 'fejer' or 'mt')"
            ))),
        }
    }
}

/// Box half-width parameter `b` (in units of `1/log T`) and the kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TsangParams {
    pub b: f64,
    pub kernel: KernelId,
}

impl TsangParams {
    pub fn new(b: f64, kernel: KernelId) -> Result<Self> {
        if !(b >= 0.0 && b.is_finite()) {
            return Err(domain(format!("b must be finite and >= 0, got {b}")));
        }
        Ok(Self { b, kernel })
    }

    /// `J_b(α) = j(α)/cosh(bα)`.
    pub fn weight(&self, alpha: f64) -> f64 {
        self.kernel.eval(alpha) / (self.b * alpha).cosh()
    }
}

pub fn fejer(alpha: f64) -> f64 {
    (1.0 - alpha.abs()).max(0.0)
}

pub fn fejer_hat(t: f64) -> f64 {
    if t.abs() < 1e-8 {
        return 1.0;
    }
    let x = PI * t;
    let s = x.sin() / x;
    s * s
}

fn mt_norm() -> f64 {
    1.0 / (1.0 - SQRT_2.cos())
}

pub fn mt(alpha: f64) -> f64 {
    let jf = fejer(alpha);
    if jf == 0.0 {
        return 0.0;
    }
    mt_norm() * ((SQRT_2 * jf).sin() / (2.0 * SQRT_2) + 0.5 * jf * (SQRT_2 * alpha).cos())
}

/// `sin(u/2)/u`, with the series near the removable singularity.
fn half_sinc(u: f64) -> f64 {
    if u.abs() < 1e-4 {
        let u2 = u * u;
        0.5 - u2 / 48.0 + u2 * u2 / 3840.0
    } else {
        (0.5 * u).sin() / u
    }
}

pub fn mt_hat(w: f64) -> f64 {
    let s = half_sinc(SQRT_2 - 2.0 * PI * w) + half_sinc(SQRT_2 + 2.0 * PI * w);
    mt_norm() * s * s
}

fn check_strip(y: f64, b: f64) -> Result<()> {
    if !(b > 0.0 && b.is_finite() && y.is_finite()) || y.abs() >= b {
        return Err(domain(format!("need |y| < b with b > 0, got y = {y}, b = {b}")));
    }
    Ok(())
}

/// `cosh(u)/cosh(v)` without overflow for large arguments.
fn cosh_quotient(u: f64, v: f64) -> f64 {
    let (u, v) = (u.abs(), v.abs());
    (u - v).exp() * (1.0 + (-2.0 * u).exp()) / (1.0 + (-2.0 * v).exp())
}

/// `h_{y,b}(t) = cosh(2πyt)/cosh(2πbt)`.
pub fn cosh_ratio(y: f64, b: f64, t: f64) -> Result<f64> {
    check_strip(y, b)?;
    Ok(cosh_quotient(2.0 * PI * y * t, 2.0 * PI * b * t))
}

/// Closed-form Fourier transform of [`cosh_ratio`]:
///
/// ```text
/// ĥ_{y,b}(x) = (1/b) · cos(πy/2b) cosh(πx/2b) / (cos(πy/b) + cosh(πx/b))
/// ```
pub fn cosh_ratio_hat(y: f64, b: f64, x: f64) -> Result<f64> {
    check_strip(y, b)?;
    let u = PI * x.abs() / (2.0 * b);
    let c = (PI * y / b).cos();
    let e2 = (-2.0 * u).exp();
    // cosh(u)/(c + cosh(2u)) rewritten in e^{-u} so it never overflows.
    let ratio = (-u).exp() * (1.0 + e2) / (1.0 + 2.0 * c * e2 + e2 * e2);
    Ok((PI * y / (2.0 * b)).cos() * ratio / b)
}

/// Initial panel count giving at least one panel per half period of
/// `cos(ωα)` on `[0, 1]`.
fn oscillation_panels(omega: f64) -> usize {
    ((omega.abs() / PI).ceil() as usize).max(1)
}

/// `K_b(z)` by quadrature of the cosine form over `[0, 1]`.
pub fn tsang_k(params: TsangParams, z: ComplexValue, quad: &QuadratureConfig) -> Result<ComplexValue> {
    quad.validate()?;
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(domain("K_b argument must be finite"));
    }
    let r = integrate_panels(
        |a: f64| (z * a).cos() * params.weight(a),
        &[0.0, 1.0],
        oscillation_panels(z.norm()),
        quad,
    );
    let v = r.into_value()? / PI;
    if !(v.re.is_finite() && v.im.is_finite()) {
        return Err(Error::NonFinite("tsang_k"));
    }
    Ok(v)
}

/// `Re K_b(x + iy)` from the real integrand `j(α) cosh(yα)/cosh(bα) cos(xα)`.
///
/// Only defined for `|y| < b`, the strip where the real part is positive.
pub fn tsang_k_re_positive(
    params: TsangParams,
    x: f64,
    y: f64,
    quad: &QuadratureConfig,
) -> Result<f64> {
    check_strip(y, params.b)?;
    quad.validate()?;
    let r = integrate_panels(
        |a: f64| params.kernel.eval(a) * cosh_quotient(y * a, params.b * a) * (x * a).cos(),
        &[0.0, 1.0],
        oscillation_panels(x),
        quad,
    );
    Ok(r.into_value()? / PI)
}
