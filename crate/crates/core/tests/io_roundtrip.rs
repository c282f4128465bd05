use paircorr_core::io::*;
use paircorr_core::zeta::ScanConfig;
use paircorr_core::{ZeroDataset, ZeroSource};
use proptest::prelude::*;

proptest! {
    #[test]
    fn write_parse_round_trip(mut gs in prop::collection::vec(10.0f64..1e6, 1..100)) {
        gs.sort_by(f64::total_cmp);
        gs.dedup_by(|a, b| (*a - *b).abs() < 1e-3);
        let ds = ZeroDataset::from_ordinates(&gs, 0.0, 1e6, ZeroSource::Synthetic).unwrap();
        let text = format_zero_file(&ds, &[("t_min".into(), "0".into()), ("t_max".into(), "1000000".into())]);
        let (_, back) = parse_zero_text(&text).unwrap();
        prop_assert_eq!(back.len(), ds.len());
        for (a, b) in back.ordinates().iter().zip(ds.ordinates()) {
            prop_assert!((a - b).abs() <= 1e-11 * b);
        }
        // A second pass is bit-exact.
        prop_assert_eq!(format_zero_file(&back, &[("t_min".into(), "0".into()), ("t_max".into(), "1000000".into())]), text);
    }

    #[test]
    fn grids_are_increasing(lo in -10.0f64..10.0, span in 0.0f64..20.0, step in 0.01f64..3.0) {
        let g = parse_grid(&format!("{lo}:{}:{step}", lo + span)).unwrap();
        prop_assert!(!g.is_empty());
        prop_assert!(g.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(*g.last().unwrap() <= lo + span + 1e-9);
    }
}

#[test]
fn cache_round_trip_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = ScanConfig::default();
    let first = load_or_compute_zeros(dir.path(), 10.0, 80.0, &cfg).unwrap();
    assert!(!first.from_cache);
    let bytes = std::fs::read(&first.path).unwrap();
    let second = load_or_compute_zeros(dir.path(), 10.0, 80.0, &cfg).unwrap();
    assert!(second.from_cache);
    assert_eq!(std::fs::read(&second.path).unwrap(), bytes);
    assert_eq!(second.scan.dataset.ordinates(), parse_zero_file(&first.path).unwrap().ordinates());
    assert_eq!(second.scan.dataset.len(), 21);
}

#[test]
fn cache_dir_override() {
    // Only this test touches the variable within this binary.
    std::env::set_var(CACHE_DIR_ENV, "/tmp/somewhere");
    assert_eq!(cache_dir(), std::path::PathBuf::from("/tmp/somewhere"));
    std::env::remove_var(CACHE_DIR_ENV);
}
