//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export returns a flat `Float64Array` of fixed-width records so the
//! page can plot without parsing.

use num_complex::Complex64;
use wasm_bindgen::prelude::*;

use paircorr_core::bounds::{failure_threshold, proportions, BoundKind};
use paircorr_core::kernels::tsang_k_re_positive;
use paircorr_core::paircorr::form_factor_curve;
use paircorr_core::zeta::compute_zeros;
use paircorr_core::{KernelId, QuadratureConfig, TsangParams};

fn js_err(e: paircorr_core::Error) -> JsError {
    JsError::new(&e.to_string())
}

fn kernel(name: &str) -> Result<KernelId, JsError> {
    name.parse().map_err(js_err)
}

fn steps_grid(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    let n = steps.max(2);
    (0..n).map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64).collect()
}

/// Records `[b, 2 - C_b, 3 - 2C_b]` for `b` in `[0, b_max]`.
#[wasm_bindgen]
pub fn bounds_curve(kernel_name: &str, b_max: f64, steps: usize) -> Result<Vec<f64>, JsError> {
    let k = kernel(kernel_name)?;
    let cfg = QuadratureConfig::default();
    let mut out = Vec::with_capacity(3 * steps);
    for b in steps_grid(0.0, b_max, steps) {
        let r = proportions(k, b, &cfg).map_err(js_err)?;
        out.extend([b, r.simple_coeff, r.simple_critical_coeff]);
    }
    Ok(out)
}

/// `[simple, simple-critical]` failure thresholds.
#[wasm_bindgen]
pub fn thresholds(kernel_name: &str) -> Result<Vec<f64>, JsError> {
    let k = kernel(kernel_name)?;
    let cfg = QuadratureConfig::default();
    Ok(vec![
        failure_threshold(k, BoundKind::Simple, &cfg).map_err(js_err)?,
        failure_threshold(k, BoundKind::SimpleCritical, &cfg).map_err(js_err)?,
    ])
}

/// Records `[x, Re K_b(x + iy)]` for `x` in `[-x_max, x_max]`, `|y| < b`.
#[wasm_bindgen]
pub fn tsang_profile(kernel_name: &str, b: f64, y: f64, x_max: f64, steps: usize) -> Result<Vec<f64>, JsError> {
    let p = TsangParams::new(b, kernel(kernel_name)?).map_err(js_err)?;
    let cfg = QuadratureConfig::with_tolerance(1e-10, 1e-9);
    let mut out = Vec::with_capacity(2 * steps);
    for x in steps_grid(-x_max, x_max, steps) {
        let v = if y.abs() < b {
            tsang_k_re_positive(p, x, y, &cfg)
        } else {
            paircorr_core::kernels::tsang_k(p, Complex64::new(x, y), &cfg).map(|z| z.re)
        }
        .map_err(js_err)?;
        out.extend([x, v]);
    }
    Ok(out)
}

/// Computes zeros in `(t, 2t]` (at least 500 are needed, so `t ≳ 750`) and returns records `[α, empirical, theory]`
/// of the normalised form factor for `α` in `(0, alpha_max]`.
#[wasm_bindgen]
pub fn form_factor(t: f64, alpha_max: f64, steps: usize) -> Result<Vec<f64>, JsError> {
    let zeros = compute_zeros(t, 2.0 * t).map_err(js_err)?;
    let alphas: Vec<f64> = steps_grid(0.0, alpha_max, steps + 1).into_iter().skip(1).collect();
    let pts = form_factor_curve(&zeros.dataset, t, &alphas).map_err(js_err)?;
    Ok(pts.iter().flat_map(|p| [p.alpha, p.empirical, p.theory]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_layout() {
        let v = bounds_curve("mt", 1.0, 6).unwrap();
        assert_eq!(v.len(), 18);
        assert_eq!(v[15], 1.0);
        assert!((v[16] - 0.617_48).abs() < 2e-5);
    }

    #[test]
    fn profile_positive_in_strip() {
        let v = tsang_profile("fejer", 1.0, 0.5, 40.0, 41).unwrap();
        assert!(v.chunks(2).all(|r| r[1] > 0.0));
    }

    #[test]
    fn form_factor_layout() {
        let v = form_factor(1000.0, 1.0, 4).unwrap();
        assert_eq!(v.len(), 12);
        assert_eq!(v[9], 1.0);
    }
}
