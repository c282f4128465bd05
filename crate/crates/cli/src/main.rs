//! `paircorr` command-line tool.
//!
//! Exit codes: 0 success, 1 runtime error or failed verification, 2 usage
//! error, 3 zero count disagrees with the counting function.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use paircorr_core::bounds::{failure_threshold, table, BoundKind};
use paircorr_core::io::{
    bounds_csv, bounds_json, cache_dir, form_factor_csv, json_number, load_or_compute_zeros,
    pair_sum_json, parse_grid, parse_range, parse_zero_file, CACHE_DIR_ENV,
};
use paircorr_core::kernels::tsang_k;
use paircorr_core::paircorr::{
    calf_pair_sum, empirical_bound_pipeline, f_pair_sum, form_factor_curve, PairSumSpec, Weight,
};
use paircorr_core::verify::{self, Group, VerifyOptions};
use paircorr_core::zeta::{ScanConfig, POINTS_PER_GAP};
use paircorr_core::{KernelId, QuadratureConfig, TsangParams, ZeroDataset};

const EXIT_COUNT_MISMATCH: u8 = 3;

#[derive(Parser)]
#[command(name = "paircorr", version, about = "Zero-proportion bounds and pair correlation of zeta zeros")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Proportion coefficients 2 - C_b(j) and 3 - 2C_b(j).
    Bounds(BoundsArgs),
    /// Evaluate a kernel, its transform or the Tsang kernel.
    KernelEval(KernelEvalArgs),
    /// Compute (or load cached) zeros on the critical line.
    Zeros(ZerosArgs),
    /// Pair sums, form-factor curves and the kernel-sum bound report.
    Paircorr(PaircorrArgs),
    /// Run the property suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kernel {
    Fejer,
    Mt,
}

impl From<Kernel> for KernelId {
    fn from(k: Kernel) -> Self {
        match k {
            Kernel::Fejer => KernelId::Fejer,
            Kernel::Mt => KernelId::MontgomeryTaylor,
        }
    }
}

fn nonnegative(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("not a number: {s}"))?;
    if v >= 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("must be finite and >= 0, got {v}"))
    }
}

fn positive(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("not a number: {s}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("must be finite and > 0, got {v}"))
    }
}

#[derive(Args)]
struct Tolerances {
    /// Absolute quadrature tolerance.
    #[arg(long, default_value_t = 1e-13)]
    abs_tol: f64,
    /// Relative quadrature tolerance.
    #[arg(long, default_value_t = 1e-12)]
    rel_tol: f64,
}

impl Tolerances {
    fn config(&self) -> Result<QuadratureConfig> {
        let cfg = QuadratureConfig::with_tolerance(self.abs_tol, self.rel_tol);
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long, value_enum)]
    kernel: Kernel,
    /// Single box width.
    #[arg(long, allow_negative_numbers = true, value_parser = nonnegative, conflicts_with = "grid", required_unless_present_any = ["grid", "thresholds"])]
    b: Option<f64>,
    /// Box widths as lo:hi:step.
    #[arg(long)]
    grid: Option<String>,
    /// Also print where each coefficient reaches zero.
    #[arg(long)]
    thresholds: bool,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[command(flatten)]
    tol: Tolerances,
}

#[derive(Clone, Copy, ValueEnum)]
enum KernelFn {
    /// j(α)
    J,
    /// Fourier transform of j
    Hat,
    /// Tsang kernel K_b(x + iy)
    K,
}

#[derive(Args)]
struct KernelEvalArgs {
    #[arg(long, value_enum)]
    kernel: Kernel,
    #[arg(long = "fn", value_enum, default_value = "k")]
    function: KernelFn,
    /// Box width (only for K).
    #[arg(long, allow_negative_numbers = true, value_parser = nonnegative, default_value_t = 0.0)]
    b: f64,
    /// Real parts, comma separated or lo:hi:step.
    #[arg(long, allow_negative_numbers = true)]
    x: String,
    /// Imaginary part (only for K).
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    y: f64,
    #[command(flatten)]
    tol: Tolerances,
}

#[derive(Args)]
struct CacheArgs {
    /// Cache directory for computed zeros.
    #[arg(long, env = CACHE_DIR_ENV)]
    cache_dir: Option<PathBuf>,
    /// Sampling density of the zero scan, in points per mean gap.
    #[arg(long, value_parser = positive, default_value_t = POINTS_PER_GAP)]
    points_per_gap: f64,
}

impl CacheArgs {
    fn dir(&self) -> PathBuf {
        self.cache_dir.clone().unwrap_or_else(cache_dir)
    }

    fn scan(&self) -> ScanConfig {
        ScanConfig {
            points_per_gap: self.points_per_gap,
            ..ScanConfig::default()
        }
    }
}

#[derive(Args)]
struct ZerosArgs {
    #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
    t_min: f64,
    #[arg(long, allow_negative_numbers = true)]
    t_max: f64,
    /// Also write the zero file here.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    cache: CacheArgs,
}

#[derive(Args)]
struct PaircorrArgs {
    /// Zero file; without it zeros are computed or taken from the cache.
    #[arg(long)]
    zeros: Option<PathBuf>,
    /// Evaluation point x of a single pair sum.
    #[arg(long, allow_negative_numbers = true, value_parser = positive, requires = "window", conflicts_with = "alpha_grid")]
    x: Option<f64>,
    /// Height window lo:hi of a single pair sum.
    #[arg(long)]
    window: Option<String>,
    /// `w` for F(x, T) over ordinates, `big-w` for the full-zero sum.
    #[arg(long, value_enum, default_value = "w")]
    weight: WeightArg,
    /// Skip pairs farther apart than this gap (>= 10).
    #[arg(long)]
    truncate: Option<f64>,
    /// Height T: the window is (T, 2T].
    #[arg(long = "T", value_parser = positive)]
    t: Option<f64>,
    /// Form-factor exponents as lo:hi:step, with x = T^alpha.
    #[arg(long, requires = "t")]
    alpha_grid: Option<String>,
    /// Kernel for the bound report (with --T and --b).
    #[arg(long, value_enum, requires = "t", conflicts_with_all = ["alpha_grid", "x"])]
    kernel: Option<Kernel>,
    #[arg(long, value_parser = nonnegative, requires = "kernel")]
    b: Option<f64>,
    #[command(flatten)]
    cache: CacheArgs,
    #[command(flatten)]
    tol: Tolerances,
}

#[derive(Clone, Copy, ValueEnum)]
enum WeightArg {
    W,
    BigW,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run a single group.
    #[arg(long, value_parser = ["kernels", "quadrature", "bounds", "zeros", "paircorr"])]
    only: Option<String>,
    /// Replace every property's tolerance.
    #[arg(long, value_parser = positive)]
    tolerance: Option<f64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Bounds(a) => cmd_bounds(a),
        Command::KernelEval(a) => cmd_kernel_eval(a),
        Command::Zeros(a) => cmd_zeros(a),
        Command::Paircorr(a) => cmd_paircorr(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn emit(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn cmd_bounds(a: BoundsArgs) -> Result<ExitCode> {
    let cfg = a.tol.config()?;
    let kernel: KernelId = a.kernel.into();
    let bs = match (&a.grid, a.b) {
        (Some(g), _) => parse_grid(g)?,
        (None, Some(b)) => vec![b],
        (None, None) => Vec::new(),
    };
    if !bs.is_empty() {
        let rows = table(kernel, &bs, &cfg)?;
        emit(&match a.format {
            Format::Csv => bounds_csv(&rows),
            Format::Json => bounds_json(&rows),
        })?;
    }
    if a.thresholds {
        let simple = failure_threshold(kernel, BoundKind::Simple, &cfg)?;
        let sc = failure_threshold(kernel, BoundKind::SimpleCritical, &cfg)?;
        emit(&match a.format {
            Format::Csv => format!(
                "kernel,simple_threshold,simple_critical_threshold\n{},{simple:.9},{sc:.9}\n",
                kernel.short_name()
            ),
            Format::Json => format!(
                "{{\"kernel\": \"{}\", \"simple_threshold\": {}, \"simple_critical_threshold\": {}}}\n",
                kernel.short_name(),
                json_number(simple),
                json_number(sc)
            ),
        })?;
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_points(s: &str) -> Result<Vec<f64>> {
    if s.matches(':').count() == 2 {
        return Ok(parse_grid(s)?);
    }
    s.split(',')
        .map(|p| p.trim().parse::<f64>().with_context(|| format!("bad number {p:?}")))
        .collect()
}

fn cmd_kernel_eval(a: KernelEvalArgs) -> Result<ExitCode> {
    let cfg = a.tol.config()?;
    let kernel: KernelId = a.kernel.into();
    let xs = parse_points(&a.x)?;
    let mut out = String::from("kernel,b,x,y,re,im\n");
    for x in xs {
        let v = match a.function {
            KernelFn::J => Complex64::new(kernel.eval(x), 0.0),
            KernelFn::Hat => Complex64::new(kernel.eval_hat(x), 0.0),
            KernelFn::K => tsang_k(TsangParams::new(a.b, kernel)?, Complex64::new(x, a.y), &cfg)?,
        };
        out.push_str(&format!("{},{},{x},{},{},{}\n", kernel.short_name(), a.b, a.y, v.re, v.im));
    }
    emit(&out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_zeros(a: ZerosArgs) -> Result<ExitCode> {
    let dir = a.cache.dir();
    let got = load_or_compute_zeros(&dir, a.t_min, a.t_max, &a.cache.scan())?;
    let scan = &got.scan;
    if let Some(out) = &a.out {
        std::fs::copy(&got.path, out)
            .with_context(|| format!("copying zero file to {}", out.display()))?;
    }
    let report = format!(
        "zeros: {} in ({}, {}]\nexpected (counting main term): {:.3}\ndiscrepancy: {:.3} (tolerance {:.3})\nfile: {}\nsource: {}\n",
        scan.dataset.len(),
        a.t_min,
        a.t_max,
        scan.expected,
        scan.discrepancy(),
        scan.tolerance,
        got.path.display(),
        if got.from_cache { "cache" } else { "computed" }
    );
    emit(&report)?;
    if let Some(w) = &scan.warning {
        eprintln!("warning: {w}");
        return Ok(ExitCode::from(EXIT_COUNT_MISMATCH));
    }
    Ok(ExitCode::SUCCESS)
}

/// Zeros from the given file, or computed/cached over `[10, hi]`.
fn load_zeros(a: &PaircorrArgs, hi: f64) -> Result<ZeroDataset> {
    if let Some(path) = &a.zeros {
        return parse_zero_file(path).with_context(|| format!("reading {}", path.display()));
    }
    let got = load_or_compute_zeros(&a.cache.dir(), 10.0, hi, &a.cache.scan())?;
    if let Some(w) = &got.scan.warning {
        eprintln!("warning: {w}");
    }
    Ok(got.scan.dataset)
}

fn cmd_paircorr(a: PaircorrArgs) -> Result<ExitCode> {
    let cfg = a.tol.config()?;
    if let (Some(x), Some(window)) = (a.x, &a.window) {
        let window = parse_range(window)?;
        let weight = match a.weight {
            WeightArg::W => Weight::Montgomery,
            WeightArg::BigW => Weight::Complex,
        };
        let mut spec = PairSumSpec::new(x, window, weight)?;
        if let Some(gap) = a.truncate {
            spec = spec.with_truncation(gap)?;
        }
        let ds = load_zeros(&a, window.1)?;
        let r = match weight {
            Weight::Montgomery => f_pair_sum(&ds, &spec)?,
            Weight::Complex => calf_pair_sum(&ds, &spec)?,
        };
        emit(&pair_sum_json(x, window.0, &r))?;
        return Ok(ExitCode::SUCCESS);
    }
    let Some(t) = a.t else {
        bail!("give --x with --window, --T with --alpha-grid, or --T with --kernel and --b");
    };
    if let Some(grid) = &a.alpha_grid {
        let alphas = parse_grid(grid)?;
        let alphas: Vec<f64> = alphas.into_iter().filter(|&v| v > 0.0).collect();
        if alphas.iter().any(|&v| v > 1.0) {
            eprintln!("note: the asymptotic comparison is only established for alpha <= 1");
        }
        let ds = load_zeros(&a, 2.0 * t)?;
        emit(&form_factor_csv(&form_factor_curve(&ds, t, &alphas)?))?;
        return Ok(ExitCode::SUCCESS);
    }
    if let Some(kernel) = a.kernel {
        let b = a.b.context("--kernel needs --b")?;
        let ds = load_zeros(&a, 2.0 * t)?;
        let r = empirical_bound_pipeline(&ds, TsangParams::new(b, kernel.into())?, t, &cfg)?;
        let fields = [
            ("kernel", format!("\"{}\"", r.params.kernel.short_name())),
            ("b", json_number(r.params.b)),
            ("T", json_number(r.t)),
            ("n_entries", r.n_entries.to_string()),
            ("n_zeros", r.n_zeros.to_string()),
            ("multiplicity_weighted", r.multiplicity_weighted.to_string()),
            ("main_term", json_number(r.main_term)),
            ("k0", json_number(r.k0)),
            ("c_b", json_number(r.c_b)),
            ("asymptotic_rhs", json_number(r.asymptotic_rhs)),
            ("kernel_sum", json_number(r.kernel_sum)),
            ("diagonal", json_number(r.diagonal)),
            ("symmetric_diagonal", json_number(r.symmetric_diagonal)),
            ("multiplicity_bound", json_number(r.multiplicity_bound)),
            ("empirical_simple_bound", json_number(r.empirical_simple_bound)),
            ("implied_simple_count", json_number(r.implied_simple_count)),
            ("implied_simple_proportion", json_number(r.implied_simple_proportion)),
            ("asymptotic_simple_proportion", json_number(r.asymptotic_simple_proportion)),
        ];
        let body: Vec<String> = fields.iter().map(|(k, v)| format!("  \"{k}\": {v}")).collect();
        emit(&format!("{{\n{}\n}}\n", body.join(",\n")))?;
        return Ok(ExitCode::SUCCESS);
    }
    bail!("--T needs --alpha-grid, or --kernel with --b");
}

fn cmd_verify(a: VerifyArgs) -> Result<ExitCode> {
    let only = a.only.as_deref().map(str::parse::<Group>).transpose()?;
    let outcomes = verify::run(&VerifyOptions {
        only,
        tolerance: a.tolerance,
    });
    let mut failed = Vec::new();
    for o in &outcomes {
        println!("{o}");
        if !o.passed {
            failed.push(format!("{}/{}", o.group, o.name));
        }
    }
    if failed.is_empty() {
        println!("all {} properties passed", outcomes.len());
        Ok(ExitCode::SUCCESS)
    } else {
        println!("{} of {} properties failed: {}", failed.len(), outcomes.len(), failed.join(", "));
        Ok(ExitCode::FAILURE)
    }
}
