//! Zero files, the zero cache, grids and CSV/JSON emitters.
//!
//! Zero file format: lines starting with `#` are headers (`# key: value`),
//! then one ordinate per line with 12 significant digits, strictly
//! increasing. CSV uses `.` decimals and LF endings; JSON numbers carry 17
//! significant digits.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::bounds::BoundRow;
use crate::error::{Error, Result};
use crate::paircorr::{FormFactorPoint, PairSumResult};
use crate::zeta::{compute_zeros_with, n_of_t, ScanConfig, ZeroDataset, ZeroScan, ZeroSource};

/// Environment variable overriding the zero cache directory.
pub const CACHE_DIR_ENV: &str = "PAIRCORR_CACHE_DIR";

/// Significant digits of ordinates in zero files.
pub const ORDINATE_DIGITS: usize = 12;

/// `v` in plain decimal notation with `digits` significant digits.
pub fn format_significant(v: f64, digits: usize) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let magnitude = v.abs().log10().floor() as i64 + 1;
    let decimals = (digits as i64 - magnitude).max(0) as usize;
    format!("{v:.decimals$}")
}

/// Header lines of a zero file, in order.
pub type Headers = Vec<(String, String)>;

pub fn format_zero_file(ds: &ZeroDataset, headers: &[(String, String)]) -> String {
    let mut out = String::new();
    for (k, v) in headers {
        let _ = writeln!(out, "# {k}: {v}");
    }
    for g in ds.ordinates() {
        out.push_str(&format_significant(g, ORDINATE_DIGITS));
        out.push('\n');
    }
    out
}

pub fn write_zero_file(path: &Path, ds: &ZeroDataset, headers: &[(String, String)]) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    // Write-then-rename so an interrupted run never leaves a truncated file.
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, format_zero_file(ds, headers))?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Parses zero-file text into headers and an on-line dataset.
///
/// The window is taken from `t_min`/`t_max` headers when present, else
/// `[0, last ordinate]`.
pub fn parse_zero_text(text: &str) -> Result<(Headers, ZeroDataset)> {
    let mut headers = Vec::new();
    let mut gammas: Vec<f64> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(h) = line.strip_prefix('#') {
            if let Some((k, v)) = h.split_once(':') {
                headers.push((k.trim().to_string(), v.trim().to_string()));
            }
            continue;
        }
        let g: f64 = line.parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("not a number: {line:?}"),
        })?;
        if !(g.is_finite() && g > 0.0) {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("ordinate must be positive and finite, got {g}"),
            });
        }
        if let Some(&prev) = gammas.last() {
            if g <= prev {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("ordinate {g} does not exceed previous {prev}"),
                });
            }
        }
        gammas.push(g);
    }
    if gammas.is_empty() {
        return Err(Error::Parse {
            line: text.lines().count(),
            msg: "no ordinates in zero file".into(),
        });
    }
    let header_f64 = |key: &str| -> Result<Option<f64>> {
        match headers.iter().find(|(k, _)| k == key) {
            None => Ok(None),
            Some((_, v)) => v
                .parse()
                .map(Some)
                .map_err(|_| Error::Config(format!("bad {key} header: {v:?}"))),
        }
    };
    let t_min = header_f64("t_min")?.unwrap_or(0.0);
    let t_max = header_f64("t_max")?.unwrap_or(gammas[gammas.len() - 1]);
    let source = match headers.iter().find(|(k, _)| k == "source") {
        Some((_, v)) if v == "computed" => ZeroSource::Computed,
        Some((_, v)) if v == "synthetic" => ZeroSource::Synthetic,
        _ => ZeroSource::File,
    };
    let ds = ZeroDataset::from_ordinates(&gammas, t_min, t_max, source)?;
    Ok((headers, ds))
}

pub fn parse_zero_file(path: &Path) -> Result<ZeroDataset> {
    let text = fs::read_to_string(path)?;
    Ok(parse_zero_text(&text)?.1)
}

/// Cache directory: `$PAIRCORR_CACHE_DIR`, else the user cache directory,
/// else `.paircorr-cache` in the working directory.
pub fn cache_dir() -> PathBuf {
    if let Some(dir) = std::env::var_os(CACHE_DIR_ENV).filter(|d| !d.is_empty()) {
        return PathBuf::from(dir);
    }
    if let Some(dir) = std::env::var_os("XDG_CACHE_HOME").filter(|d| !d.is_empty()) {
        return PathBuf::from(dir).join("paircorr");
    }
    if let Some(home) = std::env::var_os("HOME").filter(|d| !d.is_empty()) {
        return PathBuf::from(home).join(".cache").join("paircorr");
    }
    PathBuf::from(".paircorr-cache")
}

/// File name keyed by everything that affects the cached contents.
pub fn cache_file_name(t_min: f64, t_max: f64, points_per_gap: f64, version: &str) -> String {
    format!("zeros_{t_min}_{t_max}_d{points_per_gap}_v{version}.txt")
}

fn cache_headers(scan: &ZeroScan, t_min: f64, t_max: f64, cfg: &ScanConfig) -> Headers {
    let mut h = vec![
        ("source".to_string(), "computed".to_string()),
        ("t_min".to_string(), format!("{t_min}")),
        ("t_max".to_string(), format!("{t_max}")),
        ("points_per_gap".to_string(), format!("{}", cfg.points_per_gap)),
        ("version".to_string(), crate::VERSION.to_string()),
        ("count".to_string(), scan.dataset.len().to_string()),
    ];
    if let Some(w) = &scan.warning {
        h.push(("warning".to_string(), w.clone()));
    }
    h
}

/// Zeros in `(t_min, t_max]` plus where they came from.
#[derive(Debug, Clone)]
pub struct CachedZeros {
    pub scan: ZeroScan,
    pub path: PathBuf,
    pub from_cache: bool,
}

/// Loads zeros from the cache in `dir`, computing and storing them on a
/// miss. A cache file whose headers disagree with its key, or whose
/// contents do not parse, is reported as corrupt rather than recomputed.
pub fn load_or_compute_zeros(dir: &Path, t_min: f64, t_max: f64, cfg: &ScanConfig) -> Result<CachedZeros> {
    let path = dir.join(cache_file_name(t_min, t_max, cfg.points_per_gap, crate::VERSION));
    if path.exists() {
        let text = fs::read_to_string(&path)?;
        let corrupt = |why: String| Error::Config(format!("corrupt cache file {}: {why}", path.display()));
        let (headers, ds) = parse_zero_text(&text).map_err(|e| corrupt(e.to_string()))?;
        let get = |k: &str| headers.iter().find(|(key, _)| key == k).map(|(_, v)| v.as_str());
        if get("version") != Some(crate::VERSION)
            || get("t_min") != Some(format!("{t_min}").as_str())
            || get("t_max") != Some(format!("{t_max}").as_str())
            || get("count") != Some(ds.len().to_string().as_str())
        {
            return Err(corrupt("headers do not match the cache key".into()));
        }
        let warning = get("warning").map(str::to_string);
        let expected = n_of_t(t_max) - n_of_t(t_min);
        let scan = ZeroScan {
            dataset: ds,
            expected,
            tolerance: 2.0 + t_max.ln(),
            points_per_gap: cfg.points_per_gap,
            warning,
        };
        return Ok(CachedZeros {
            scan,
            path,
            from_cache: true,
        });
    }
    let scan = compute_zeros_with(t_min, t_max, cfg)?;
    fs::create_dir_all(dir)?;
    write_zero_file(&path, &scan.dataset, &cache_headers(&scan, t_min, t_max, cfg))?;
    Ok(CachedZeros {
        scan,
        path,
        from_cache: false,
    })
}

/// `lo:hi:step`, inclusive of `hi` when it lies on the grid.
pub fn parse_grid(s: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = s.split(':').collect();
    let bad = || Error::Config(format!("grid must be lo:hi:step, got {s:?}"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let nums: Vec<f64> = parts
        .iter()
        .map(|p| p.trim().parse::<f64>().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    let (lo, hi, step) = (nums[0], nums[1], nums[2]);
    if !(lo.is_finite() && hi.is_finite() && step.is_finite() && step > 0.0 && hi >= lo) {
        return Err(Error::Config(format!(
            "grid needs finite lo <= hi and step > 0, got {s:?}"
        )));
    }
    let n = ((hi - lo) / step + 1e-9).floor() as usize;
    if n > 1_000_000 {
        return Err(Error::Config(format!("grid {s:?} has too many points")));
    }
    // Round away accumulated binary noise so 0.2·3 prints as 0.6.
    Ok((0..=n)
        .map(|k| {
            let v = lo + k as f64 * step;
            format!("{v:.12e}").parse().unwrap_or(v)
        })
        .collect())
}

/// `lo:hi` with `lo < hi`.
pub fn parse_range(s: &str) -> Result<(f64, f64)> {
    let bad = || Error::Config(format!("range must be lo:hi with lo < hi, got {s:?}"));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    let lo: f64 = a.trim().parse().map_err(|_| bad())?;
    let hi: f64 = b.trim().parse().map_err(|_| bad())?;
    if !(lo < hi && lo.is_finite() && hi.is_finite()) {
        return Err(bad());
    }
    Ok((lo, hi))
}

/// A JSON number with 17 significant digits; non-finite values become
/// `null`.
pub fn json_number(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        "null".into()
    }
}

fn json_object(fields: &[(&str, String)]) -> String {
    let body: Vec<String> = fields.iter().map(|(k, v)| format!("  \"{k}\": {v}")).collect();
    format!("{{\n{}\n}}\n", body.join(",\n"))
}

pub fn pair_sum_json(x: f64, t: f64, r: &PairSumResult) -> String {
    json_object(&[
        ("x", json_number(x)),
        ("T", json_number(t)),
        ("value_re", json_number(r.value.re)),
        ("value_im", json_number(r.value.im)),
        ("n_zeros", r.n_zeros.to_string()),
        ("n_pairs", r.n_pairs_evaluated.to_string()),
        ("trunc_bound", json_number(r.truncation_error_bound)),
    ])
}

pub fn form_factor_csv(points: &[FormFactorPoint]) -> String {
    let mut out = String::from("alpha,empirical,theory\n");
    for p in points {
        let _ = writeln!(out, "{},{},{}", p.alpha, p.empirical, p.theory);
    }
    out
}

/// Coefficients as displayed: negative values are shown as 0.
fn clamp_display(v: f64) -> f64 {
    v.max(0.0)
}

pub fn bounds_csv(rows: &[BoundRow]) -> String {
    let mut out = String::from("kernel,b,c_b,simple,critical,simple_critical\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{:.10},{:.10},{:.10},{:.10}",
            r.kernel.short_name(),
            r.b,
            r.c_b,
            clamp_display(r.simple_coeff),
            clamp_display(r.critical_coeff),
            clamp_display(r.simple_critical_coeff)
        );
    }
    out
}

pub fn bounds_json(rows: &[BoundRow]) -> String {
    let items: Vec<String> = rows
        .iter()
        .map(|r| {
            format!(
                "  {{\"kernel\": \"{}\", \"b\": {}, \"c_b\": {}, \"simple\": {}, \"critical\": {}, \"simple_critical\": {}}}",
                r.kernel.short_name(),
                json_number(r.b),
                json_number(r.c_b),
                json_number(clamp_display(r.simple_coeff)),
                json_number(clamp_display(r.critical_coeff)),
                json_number(clamp_display(r.simple_critical_coeff))
            )
        })
        .collect();
    format!("[\n{}\n]\n", items.join(",\n"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn parses_two_zeros() {
        let (_, ds) = parse_zero_text("14.134725\n21.022040\n").unwrap();
        assert_eq!(ds.ordinates(), vec![14.134725, 21.02204]);
        assert!(ds.on_line());
        assert_eq!(ds.source(), ZeroSource::File);
    }

    #[test]
    fn decreasing_line_named() {
        let err = parse_zero_text("# h\n21.0\n14.0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
    }

    #[test]
    fn malformed_and_empty() {
        assert!(matches!(parse_zero_text("14.1\nabc\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_zero_text("# only\n# comments\n"), Err(Error::Parse { .. })));
        assert!(parse_zero_text("").is_err());
    }

    #[test]
    fn headers_set_window() {
        let (h, ds) = parse_zero_text("# t_min: 10\n# t_max: 30\n14.1\n21.0\n").unwrap();
        assert_eq!(h.len(), 2);
        assert_eq!((ds.t_min(), ds.t_max()), (10.0, 30.0));
    }

    #[test]
    fn significant_digits() {
        assert_eq!(format_significant(14.134725141734693, 12), "14.1347251417");
        assert_eq!(format_significant(4999.123456789123, 12), "4999.12345679");
        assert_eq!(format_significant(0.5, 3), "0.500");
    }

    #[test]
    fn grids() {
        assert_eq!(parse_grid("0:4:0.2").unwrap().len(), 21);
        let g = parse_grid("0.05:1:0.05").unwrap();
        assert_eq!(g.len(), 20);
        assert_eq!(g[19], 1.0);
        assert_eq!(parse_grid("0:1:0.3").unwrap(), vec![0.0, 0.3, 0.6, 0.9]);
        assert!(parse_grid("1:0:0.1").is_err());
        assert!(parse_grid("0:1:0").is_err());
        assert!(parse_grid("0:1").is_err());
        assert_eq!(parse_range("2500:5000").unwrap(), (2500.0, 5000.0));
        assert!(parse_range("5:5").is_err());
    }

    #[test]
    fn json_fields() {
        let r = PairSumResult {
            value: Complex64::new(1.5, 0.0),
            n_zeros: 3,
            n_pairs_evaluated: 9,
            truncation_error_bound: 0.0,
        };
        let s = pair_sum_json(10.0, 2500.0, &r);
        for k in ["\"x\"", "\"T\"", "\"value_re\"", "\"value_im\"", "\"n_zeros\": 3", "\"n_pairs\": 9", "\"trunc_bound\""] {
            assert!(s.contains(k), "{s}");
        }
        assert!(s.contains("1.5000000000000000e0"));
    }

    #[test]
    fn cache_name_is_keyed() {
        let a = cache_file_name(10.0, 100.0, 6.0, "0.1.0");
        assert_ne!(a, cache_file_name(10.0, 100.0, 12.0, "0.1.0"));
        assert_ne!(a, cache_file_name(10.0, 100.0, 6.0, "0.2.0"));
        assert_ne!(a, cache_file_name(10.0, 101.0, 6.0, "0.1.0"));
    }
}
