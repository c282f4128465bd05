mod common;

use num_complex::Complex64;
use paircorr_core::kernels::tsang_k;
use paircorr_core::paircorr::*;
use paircorr_core::zeta::compute_zeros;
use paircorr_core::{KernelId, QuadratureConfig, TsangParams, Zero, ZeroDataset, ZeroSource};
use proptest::prelude::*;

fn whole(ds: &ZeroDataset, x: f64, weight: Weight) -> PairSumSpec {
    PairSumSpec::new(x, (ds.t_min(), ds.t_max()), weight).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn pair_sum_equals_integral(seed in any::<u64>(), n in 1usize..=50, x in prop_oneof![Just(1.0), Just(2.0), Just(10.0)]) {
        let mut rng = common::rng(seed);
        let gs = common::random_ordinates(&mut rng, n, 20.0);
        let ds = common::on_line(&gs, 20.0, gs[n - 1] + 1.0);
        let cfg = QuadratureConfig::default();
        let sum = f_pair_sum(&ds, &whole(&ds, x, Weight::Montgomery)).unwrap().value.re;
        let oracle = f_integral_oracle(&ds, x, &cfg).unwrap();
        prop_assert!((sum - oracle).abs() < 1e-6, "{sum} vs {oracle}");
    }

    #[test]
    fn full_pair_sum_equals_integral(seed in any::<u64>(), n in 2usize..=40, x in 0.5f64..12.0) {
        let mut rng = common::rng(seed);
        let ds = common::random_mixed(&mut rng, n, 20.0, 0.3);
        let sum = calf_pair_sum(&ds, &whole(&ds, x, Weight::Complex)).unwrap().value;
        let oracle = calf_integral_oracle(&ds, x, &QuadratureConfig::default()).unwrap();
        prop_assert!((sum.re - oracle).abs() < 1e-6 && sum.im.abs() < 1e-9);
    }

    #[test]
    fn reduction_on_line(seed in any::<u64>(), n in 1usize..=60, x in 0.01f64..100.0) {
        let mut rng = common::rng(seed);
        let gs = common::random_ordinates(&mut rng, n, 20.0);
        let ds = common::on_line(&gs, 20.0, gs[n - 1] + 1.0);
        let f = f_pair_sum(&ds, &whole(&ds, x, Weight::Montgomery)).unwrap().value;
        let c = calf_pair_sum(&ds, &whole(&ds, x, Weight::Complex)).unwrap().value;
        prop_assert!((f - c).norm() < 1e-10);
    }

    #[test]
    fn inversion_symmetry_and_nonnegativity(seed in any::<u64>(), n in 1usize..=60, x in 1.0f64..500.0) {
        let mut rng = common::rng(seed);
        let ds = common::random_mixed(&mut rng, n, 20.0, 0.3);
        let a = calf_pair_sum(&ds, &whole(&ds, x, Weight::Complex)).unwrap();
        let b = calf_pair_sum(&ds, &whole(&ds, 1.0 / x, Weight::Complex)).unwrap();
        prop_assert!((a.value - b.value).norm() < 1e-9 * a.value.norm().max(1.0));
        let nz = a.n_zeros as f64;
        prop_assert!(a.value.re >= -1e-9 * nz);
        prop_assert!(a.value.im.abs() <= 1e-9 * nz);
    }

    #[test]
    fn in_box_terms_positive(seed in any::<u64>(), b in 0.1f64..4.0, kernel in prop_oneof![Just(KernelId::Fejer), Just(KernelId::MontgomeryTaylor)]) {
        let t: f64 = 500.0;
        let log_t = t.ln();
        let mut rng = common::rng(seed);
        let ds = common::random_mixed(&mut rng, 12, t, 0.49 * b / log_t);
        let p = TsangParams::new(b, kernel).unwrap();
        let cfg = QuadratureConfig::default();
        for a in ds.zeros() {
            for c in ds.zeros() {
                let z = -Complex64::i() * (a.rho() - c.rho()) * log_t;
                prop_assert!(tsang_k(p, z, &cfg).unwrap().re > 0.0);
            }
        }
    }
}

#[test]
fn truncation_bound_holds_on_computed_zeros() {
    let ds = compute_zeros(10.0, 5000.0).unwrap().dataset;
    for (lo, hi) in [(10.0, 5000.0), (2500.0, 5000.0)] {
        for x in [1.0, 10.0, 1000.0] {
            let full = f_pair_sum(&ds, &PairSumSpec::new(x, (lo, hi), Weight::Montgomery).unwrap()).unwrap();
            for gap in [10.0, 40.0] {
                let spec = PairSumSpec::new(x, (lo, hi), Weight::Montgomery)
                    .unwrap()
                    .with_truncation(gap)
                    .unwrap();
                let cut = f_pair_sum(&ds, &spec).unwrap();
                let d = (full.value - cut.value).norm();
                assert!(d <= cut.truncation_error_bound, "x={x} gap={gap}: {d} > {}", cut.truncation_error_bound);
                assert!(cut.n_pairs_evaluated < full.n_pairs_evaluated);
            }
        }
    }
}

#[test]
fn kernel_sum_reduces_to_transform_for_fejer_at_zero_width() {
    // With b = 0 and zeros on the line, K_0(x) is the closed form
    // (1 - cos x)/(π x²), so the sum can be written down directly.
    let t: f64 = 100.0;
    let log_t = t.ln();
    let gs = [101.5, 103.0, 108.25, 120.0, 150.5];
    let ds = ZeroDataset::from_ordinates(&gs, t, 2.0 * t, ZeroSource::Synthetic).unwrap();
    let p = TsangParams::new(0.0, KernelId::Fejer).unwrap();
    let got = kernel_weighted_sum(&ds, p, t, &QuadratureConfig::default()).unwrap();
    let mut want = 0.0;
    for a in gs {
        for c in gs {
            let d = a - c;
            let x = d * log_t;
            let k = if x == 0.0 { 0.5 / std::f64::consts::PI } else { (1.0 - x.cos()) / (std::f64::consts::PI * x * x) };
            want += k * w(d);
        }
    }
    assert!((got.re - want).abs() < 1e-12 && got.im.abs() < 1e-14, "{got} vs {want}");
}

#[test]
fn symmetric_pair_in_decomposition() {
    let t: f64 = 100.0;
    let log_t = t.ln();
    let d = 0.1 / log_t;
    let zs = vec![Zero::new(0.5 - d, 140.0, 1), Zero::new(0.5 + d, 140.0, 1), Zero::on_line(160.0)];
    let ds = ZeroDataset::new(zs, t, 2.0 * t, ZeroSource::Synthetic).unwrap();
    let p = TsangParams::new(1.0, KernelId::MontgomeryTaylor).unwrap();
    let cfg = QuadratureConfig::default();
    let dec = diagonal_decomposition(&ds, p, t, &cfg).unwrap();
    let k = tsang_k(p, Complex64::new(0.0, -0.2), &cfg).unwrap().re;
    assert!((dec.symmetric_diagonal - 2.0 * k).abs() < 1e-14);
    assert!(dec.symmetric_diagonal > 0.0);
    let k0 = tsang_k(p, Complex64::new(0.0, 0.0), &cfg).unwrap().re;
    assert!((dec.diagonal - 3.0 * k0).abs() < 1e-14);
    let sum = dec.diagonal + dec.symmetric_diagonal + dec.off_diagonal.re;
    assert!((sum - dec.total.re).abs() < 1e-14);
}

#[test]
fn asymptotic_pipeline_constants() {
    let ds = ZeroDataset::from_ordinates(&[120.0, 130.0], 100.0, 200.0, ZeroSource::Synthetic).unwrap();
    let cfg = QuadratureConfig::default();
    let r = empirical_bound_pipeline(&ds, TsangParams::new(0.001, KernelId::MontgomeryTaylor).unwrap(), 100.0, &cfg).unwrap();
    assert!((r.asymptotic_simple_proportion - 0.672_500_64).abs() < 1e-7);
    let r = empirical_bound_pipeline(&ds, TsangParams::new(0.0, KernelId::Fejer).unwrap(), 100.0, &cfg).unwrap();
    assert!((r.asymptotic_simple_proportion - 2.0 / 3.0).abs() < 1e-12);
    assert_eq!(r.implied_simple_proportion, 1.0);
}

#[test]
fn form_factor_needs_enough_zeros() {
    let ds = ZeroDataset::from_ordinates(&[120.0, 130.0], 100.0, 200.0, ZeroSource::Synthetic).unwrap();
    assert!(matches!(
        form_factor_curve(&ds, 100.0, &[0.5]),
        Err(paircorr_core::Error::TooFewZeros { .. })
    ));
}

#[test]
fn form_factor_single_point_at_one() {
    let ds = compute_zeros(1000.0, 2000.0).unwrap().dataset;
    let t: f64 = 1000.0;
    let p = form_factor_curve(&ds, t, &[1.0]).unwrap();
    assert!((p[0].theory - (1.0 + t.ln() / (t * t))).abs() < 1e-15);
}
