mod common;

use common::zeta_oracle;
use paircorr_core::zeta::{compute_zeros, hardy_z, rs_theta, RS_CUTOFF};

#[test]
fn oracle_self_consistency() {
    // Frozen 40-digit references.
    assert!((zeta_oracle::theta(100.0) - 87.972_165_231_787_22).abs() < 1e-11);
    assert!((zeta_oracle::hardy_z(20.0).abs() - 1.147_842_412_185_197_3).abs() < 1e-11);
    assert!((zeta_oracle::hardy_z(50.0) + 0.340_735_005_955_025).abs() < 1e-11);
}

#[test]
fn theta_matches_oracle() {
    let mut t = 10.0;
    while t < 3000.0 {
        let d = (rs_theta(t).unwrap() - zeta_oracle::theta(t)).abs();
        assert!(d < 1e-10 * t.max(1.0), "t={t}: {d}");
        t *= 1.13;
    }
}

#[test]
fn hardy_z_matches_oracle_on_both_routes() {
    let mut t = 10.0;
    while t < 2000.0 {
        let d = (hardy_z(t).unwrap() - zeta_oracle::hardy_z(t)).abs();
        let tol = if t < RS_CUTOFF { 1e-10 } else { 1e-7 };
        assert!(d < tol, "t={t}: {d}");
        t += 7.31;
    }
}

#[test]
fn zeros_below_100_match_oracle() {
    let lib = compute_zeros(10.0, 100.0).unwrap().dataset.ordinates();
    let reference = zeta_oracle::zeros(10.0, 100.0, 0.1);
    assert_eq!(lib.len(), 29);
    assert_eq!(reference.len(), 29);
    for (a, b) in lib.iter().zip(&reference) {
        assert!((a - b).abs() < 1e-9, "{a} vs {b}");
    }
}

#[test]
fn zeros_near_1000_match_oracle() {
    let lib = compute_zeros(900.0, 1000.0).unwrap().dataset.ordinates();
    let reference = zeta_oracle::zeros(900.0, 1000.0, 0.05);
    assert_eq!(lib.len(), reference.len());
    for (a, b) in lib.iter().zip(&reference) {
        assert!((a - b).abs() < 1e-7, "{a} vs {b}");
    }
}
