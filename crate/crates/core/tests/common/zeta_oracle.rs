//! Reference evaluation of `ζ(1/2 + it)`, `θ(t)` and `Z(t)` by
//! Euler–Maclaurin summation and Stirling's series, independent of the
//! library's routines.

use num_complex::Complex64;
use std::f64::consts::PI;

/// `B_{2k}/(2k)!` for `k = 1..=n`, from `ζ(2k)`.
fn bernoulli_ratios(n: usize) -> Vec<f64> {
    (1..=n)
        .map(|k| {
            let two_k = 2 * k as i32;
            let zeta: f64 = if k == 1 {
                PI * PI / 6.0
            } else {
                (1..200).map(|m| (m as f64).powi(-two_k)).sum()
            };
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            sign * 2.0 * zeta / (2.0 * PI).powi(two_k)
        })
        .collect()
}

pub fn zeta(s: Complex64) -> Complex64 {
    let n = (s.im.abs() / 2.0).ceil() as usize + 20;
    let nf = n as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for m in 1..n {
        acc += (-s * (m as f64).ln()).exp();
    }
    let n_pow = (-s * nf.ln()).exp();
    acc += n_pow * nf / (s - 1.0) + n_pow * 0.5;
    let mut rising = s;
    let mut power = n_pow / nf;
    for (k, r) in bernoulli_ratios(30).into_iter().enumerate() {
        let term = rising * power * r;
        acc += term;
        if term.norm() < 1e-17 * acc.norm() {
            break;
        }
        let j = 2.0 * k as f64 + 1.0;
        rising *= (s + j) * (s + j + 1.0);
        power /= nf * nf;
    }
    acc
}

/// Continuous branch of `log Γ(z)` for `Re z > 0`.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    let shift = 12;
    let mut w = z;
    let mut logs = Complex64::new(0.0, 0.0);
    for _ in 0..shift {
        logs += w.ln();
        w += 1.0;
    }
    let ratios = bernoulli_ratios(12);
    let mut series = Complex64::new(0.0, 0.0);
    let mut fact = 2.0;
    for (k, r) in ratios.into_iter().enumerate() {
        let k = k as f64 + 1.0;
        // B_{2k}/(2k(2k-1)) = (B_{2k}/(2k)!)·(2k-2)!
        if k > 1.0 {
            fact *= (2.0 * k - 3.0) * (2.0 * k - 2.0);
        } else {
            fact = 1.0;
        }
        series += r * fact / w.powf(2.0 * k - 1.0);
    }
    (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln() + series - logs
}

pub fn theta(t: f64) -> f64 {
    ln_gamma(Complex64::new(0.25, t / 2.0)).im - t / 2.0 * PI.ln()
}

pub fn hardy_z(t: f64) -> f64 {
    (Complex64::from_polar(1.0, theta(t)) * zeta(Complex64::new(0.5, t))).re
}

/// Sign-change roots of the reference `Z` on `(lo, hi]`, bisected to
/// `1e-12`.
pub fn zeros(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let mut out = Vec::new();
    let mut a = lo;
    let mut za = hardy_z(a);
    while a < hi {
        let b = (a + step).min(hi);
        let zb = hardy_z(b);
        if za * zb < 0.0 {
            let (mut l, mut r, mut zl) = (a, b, za);
            while r - l > 1e-12 {
                let m = 0.5 * (l + r);
                let zm = hardy_z(m);
                if zl * zm <= 0.0 {
                    r = m;
                } else {
                    l = m;
                    zl = zm;
                }
            }
            out.push(0.5 * (l + r));
        }
        a = b;
        za = zb;
    }
    out
}
