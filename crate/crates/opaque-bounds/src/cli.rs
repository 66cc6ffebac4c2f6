//! Command-line front end: runs the bound pipelines, serializes
//! certificates, validates barrier files, and reproduces the summary table.

use crate::barrier::{
    jones_length_lower_check, jones_square_barrier, jones_square_barrier_length, total_length,
    validate, Barrier, ValidationBody,
};
use crate::disc::{self, DiscCertificate};
use crate::square::{self, SquareCertificate, SquareParams};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::f64::consts::PI;
use std::io::Write;
use std::path::PathBuf;

/// Exit codes: 0 success, 1 invalid certificate / failed validation,
/// 2 bad configuration or malformed input.
pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_BAD_CONFIG: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Debug, Args)]
pub struct CommonOpts {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: OutputFormat,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Cap worker parallelism (falls back to OPAQUE_THREADS).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Debug, Parser)]
#[command(
    name = "opaque-bounds",
    about = "Certified numeric lower bounds for shortest opaque sets of the unit disc and unit square"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: CommonOpts,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the disc pipeline (full parameter search unless --at is given).
    DiscBound {
        /// Evaluate at fixed parameters "r,t" instead of searching.
        #[arg(long, value_parser = parse_pair)]
        at: Option<(f64, f64)>,
        /// Search grid as "n_r x n_t".
        #[arg(long, default_value = "200x200", value_parser = parse_grid)]
        grid: (usize, usize),
        /// Shrinking-box refinement iterations.
        #[arg(long, default_value_t = 40)]
        refine: usize,
    },
    /// Run the square pipeline at the published (or overridden) parameters.
    SquareBound {
        #[arg(long)]
        zeta: Option<f64>,
        #[arg(long)]
        t: Option<f64>,
        #[arg(long)]
        bout_threshold: Option<f64>,
        /// Containment sampling budget.
        #[arg(long, default_value_t = square::CONTAINMENT_SAMPLES)]
        samples: usize,
    },
    /// Run both pipelines and emit a combined certificate.
    Certify {
        #[arg(long, value_parser = parse_pair)]
        at: Option<(f64, f64)>,
        #[arg(long, default_value_t = square::CONTAINMENT_SAMPLES)]
        samples: usize,
    },
    /// Validate a barrier file against a body by line sampling.
    ValidateBarrier {
        /// Path to the barrier JSON file.
        file: PathBuf,
        #[arg(long, value_enum, default_value = "disc")]
        body: BodyArg,
        #[arg(long, default_value_t = 1000)]
        n_alpha: usize,
        #[arg(long, default_value_t = 1000)]
        n_offset: usize,
    },
    /// Print the summary table (perimeter, lower bound, upper bound).
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BodyArg {
    Disc,
    Square,
}

impl From<BodyArg> for ValidationBody {
    fn from(b: BodyArg) -> Self {
        match b {
            BodyArg::Disc => ValidationBody::Disc,
            BodyArg::Square => ValidationBody::UnitSquare,
        }
    }
}

fn parse_pair(s: &str) -> Result<(f64, f64), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err("expected \"r,t\"".into());
    }
    let r = parts[0].trim().parse::<f64>().map_err(|e| e.to_string())?;
    let t = parts[1].trim().parse::<f64>().map_err(|e| e.to_string())?;
    Ok((r, t))
}

fn parse_grid(s: &str) -> Result<(usize, usize), String> {
    let parts: Vec<&str> = s.split(['x', 'X']).collect();
    if parts.len() != 2 {
        return Err("expected \"n_r x n_t\"".into());
    }
    let a = parts[0]
        .trim()
        .parse::<usize>()
        .map_err(|e| e.to_string())?;
    let b = parts[1]
        .trim()
        .parse::<usize>()
        .map_err(|e| e.to_string())?;
    Ok((a, b))
}

fn configure_threads(opts: &CommonOpts) {
    let n = opts.threads.or_else(|| {
        std::env::var("OPAQUE_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(n) = n {
        // ignore failure: the global pool can only be built once
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

fn emit(opts: &CommonOpts, text: String) -> i32 {
    match &opts.output {
        Some(path) => {
            match std::fs::File::create(path).and_then(|mut f| f.write_all(text.as_bytes())) {
                Ok(()) => EXIT_OK,
                Err(e) => {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    EXIT_BAD_CONFIG
                }
            }
        }
        None => {
            println!("{text}");
            EXIT_OK
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("certificates serialize")
}

/// Fixed 12-significant-digit formatting for deterministic text output.
fn fmt(v: f64) -> String {
    format!("{v:.11e}")
}

fn disc_text(cert: &DiscCertificate) -> String {
    let mut s = String::new();
    s += "disc lower bound certificate\n";
    s += &format!("  r             = {}\n", fmt(cert.params.r));
    s += &format!("  t             = {}\n", fmt(cert.params.t));
    s += &format!("  w             = {}\n", fmt(cert.w));
    s += &format!("  delta(r,t)    = {}\n", fmt(cert.delta));
    s += &format!("  eta'          = {}\n", fmt(cert.eta_prime));
    s += &format!("  h'            = {}\n", fmt(cert.h_prime));
    s += &format!("  gamma*        = {}\n", fmt(cert.gamma_star));
    s += &format!("  alpha+        = {}\n", fmt(cert.alpha_plus));
    s += &format!("  opposing gain = {}\n", fmt(cert.opposing_gain));
    s += &format!(
        "  neighbor gain = {} (separation lhs {}, D {})\n",
        fmt(cert.neighboring.gain),
        fmt(cert.neighboring.separation_lhs),
        fmt(cert.neighboring.diameter)
    );
    s += &format!("  final bound   = pi + {}\n", fmt(cert.final_bound));
    s += &format!(
        "  checks: outside {} strips {} neighbor {} valid {}\n",
        cert.outside_regime_ok, cert.strip_witness_ok, cert.neighboring.ok, cert.valid
    );
    s += &format!("  meets target (>= 1.076e-6): {}", cert.meets_target);
    s
}

fn square_text(cert: &SquareCertificate) -> String {
    let mut s = String::new();
    s += "square lower bound certificate\n";
    s += &format!("  zeta          = {}\n", fmt(cert.params.zeta));
    s += &format!("  t             = {}\n", fmt(cert.params.t));
    s += &format!("  eta           = {}\n", fmt(cert.eta));
    s += &format!("  gain outside  = {}\n", fmt(cert.gain_outside));
    s += &format!("  gain neighbor = {}\n", fmt(cert.gain_neighbor));
    s += &format!("  gain opposing = {}\n", fmt(cert.gain_opposing));
    s += &format!(
        "  enclosing disc: center (0, {}), radius {}\n",
        fmt(cert.containment.neighbor_center_y),
        fmt(cert.containment.neighbor_radius)
    );
    s += &format!(
        "  Q_zeta max norm = {}\n",
        fmt(cert.containment.qzeta_max_norm)
    );
    s += &format!("  final bound   = 2 + {}\n", fmt(cert.final_bound));
    s += &format!(
        "  checks: containment {}/{} witnesses {}/{} valid {}\n",
        cert.containment.neighbor_ok,
        cert.containment.opposing_ok,
        cert.witness_neighbor,
        cert.witness_opposing,
        cert.valid
    );
    s += &format!("  meets target (> 2.3e-5): {}", cert.meets_target);
    s
}

/// Runs the disc pipeline and reports.
pub fn cmd_disc_bound(
    opts: &CommonOpts,
    at: Option<(f64, f64)>,
    grid: (usize, usize),
    refine: usize,
) -> i32 {
    configure_threads(opts);
    let point = match at {
        Some(p) => Some(p),
        None => {
            let (r_range, t_range) = disc::default_ranges();
            match disc::optimize(r_range, t_range, grid, refine) {
                Ok(opt) => Some((opt.r, opt.t)),
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_BAD_CONFIG;
                }
            }
        }
    };
    match disc::disc_lower_bound(point) {
        Ok(cert) => {
            let text = match opts.format {
                OutputFormat::Json => to_json(&cert),
                _ => disc_text(&cert),
            };
            let code = emit(opts, text);
            if code != EXIT_OK {
                code
            } else if cert.valid && cert.meets_target {
                EXIT_OK
            } else {
                EXIT_INVALID
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_BAD_CONFIG
        }
    }
}

/// Runs the square pipeline and reports.
pub fn cmd_square_bound(
    opts: &CommonOpts,
    zeta: Option<f64>,
    t: Option<f64>,
    bout_threshold: Option<f64>,
    samples: usize,
) -> i32 {
    configure_threads(opts);
    let mut params = SquareParams::default();
    if let Some(z) = zeta {
        params.zeta = z;
    }
    if let Some(t) = t {
        params.t = t;
    }
    if let Some(b) = bout_threshold {
        params.bout_threshold = b;
    }
    if let Err(e) = params.validate() {
        eprintln!("error: {e}");
        return EXIT_BAD_CONFIG;
    }
    match square::square_case_split_with_samples(&params, samples) {
        Ok(cert) => {
            let text = match opts.format {
                OutputFormat::Json => to_json(&cert),
                _ => square_text(&cert),
            };
            let code = emit(opts, text);
            if code != EXIT_OK {
                code
            } else if cert.valid && cert.meets_target {
                EXIT_OK
            } else {
                EXIT_INVALID
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_BAD_CONFIG
        }
    }
}

#[derive(Serialize)]
struct CombinedCertificate {
    disc: DiscCertificate,
    square: SquareCertificate,
}

/// Runs both pipelines and emits a combined certificate.
pub fn cmd_certify(opts: &CommonOpts, at: Option<(f64, f64)>, samples: usize) -> i32 {
    configure_threads(opts);
    let disc_cert = match disc::disc_lower_bound(at) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_BAD_CONFIG;
        }
    };
    let square_cert =
        match square::square_case_split_with_samples(&SquareParams::default(), samples) {
            Ok(c) => c,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_BAD_CONFIG;
            }
        };
    let ok =
        disc_cert.valid && disc_cert.meets_target && square_cert.valid && square_cert.meets_target;
    let text = match opts.format {
        OutputFormat::Json => to_json(&CombinedCertificate {
            disc: disc_cert,
            square: square_cert,
        }),
        _ => format!("{}\n\n{}", disc_text(&disc_cert), square_text(&square_cert)),
    };
    let code = emit(opts, text);
    if code != EXIT_OK {
        code
    } else if ok {
        EXIT_OK
    } else {
        EXIT_INVALID
    }
}

/// Validates a barrier file and checks the half-perimeter bound.
pub fn cmd_validate_barrier(
    opts: &CommonOpts,
    file: &PathBuf,
    body: ValidationBody,
    n_alpha: usize,
    n_offset: usize,
) -> i32 {
    configure_threads(opts);
    let contents = match std::fs::read_to_string(file) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", file.display());
            return EXIT_BAD_CONFIG;
        }
    };
    let barrier: Barrier = match serde_json::from_str(&contents) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: malformed barrier file: {e}");
            return EXIT_BAD_CONFIG;
        }
    };
    let report = validate(&barrier, body, n_alpha, n_offset);
    let length = total_length(&barrier);
    let jones_ok = !report.passed || jones_length_lower_check(&barrier, body);
    let text = match opts.format {
        OutputFormat::Json => to_json(&report),
        _ => {
            let mut s = format!(
                "barrier '{}': length {}, {} samples, {} missed -> {}\n",
                barrier.label,
                fmt(length),
                report.samples,
                report.missed,
                if report.passed { "passed" } else { "FAILED" }
            );
            for m in &report.missed_examples {
                s += &format!(
                    "  missed line alpha {} offset {}\n",
                    fmt(m.alpha),
                    fmt(m.offset)
                );
            }
            s += &format!("  half-perimeter bound satisfied: {jones_ok}");
            s
        }
    };
    let code = emit(opts, text);
    if code != EXIT_OK {
        code
    } else if report.passed && jones_ok {
        EXIT_OK
    } else {
        EXIT_INVALID
    }
}

#[derive(Serialize)]
struct TableRow {
    shape: &'static str,
    perimeter: f64,
    lower_bound: f64,
    upper_bound: Option<f64>,
    upper_bound_note: &'static str,
}

/// Recomputes and prints the summary table.
pub fn cmd_table(opts: &CommonOpts) -> i32 {
    configure_threads(opts);
    let disc_cert = match disc::disc_lower_bound(None) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_BAD_CONFIG;
        }
    };
    let square_cert = match square::square_case_split(&SquareParams::default()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_BAD_CONFIG;
        }
    };
    let jones_len = total_length(&jones_square_barrier());
    debug_assert!((jones_len - jones_square_barrier_length()).abs() < 1e-9);
    let rows = [
        TableRow {
            shape: "unit square",
            perimeter: 4.0,
            lower_bound: 2.0 + square_cert.final_bound,
            upper_bound: Some(jones_len),
            upper_bound_note: "steiner tree + half diagonal",
        },
        TableRow {
            shape: "unit disc",
            perimeter: 2.0 * PI,
            lower_bound: PI + disc_cert.final_bound,
            upper_bound: Some(2.0 * PI),
            upper_bound_note: "boundary circle (best known ~4.799 not constructed here)",
        },
    ];
    let text = match opts.format {
        OutputFormat::Json => to_json(&rows),
        OutputFormat::Csv => {
            let mut s = String::from("shape,perimeter,lower_bound,upper_bound,upper_bound_note\n");
            for row in &rows {
                s += &format!(
                    "{},{},{},{},{}\n",
                    row.shape,
                    fmt(row.perimeter),
                    fmt(row.lower_bound),
                    row.upper_bound.map(fmt).unwrap_or_default(),
                    row.upper_bound_note
                );
            }
            s.pop();
            s
        }
        OutputFormat::Text => {
            let mut s =
                String::from("shape        perimeter        lower bound           upper bound\n");
            for row in &rows {
                s += &format!(
                    "{:<12} {:<16} {:<21} {} ({})\n",
                    row.shape,
                    fmt(row.perimeter),
                    fmt(row.lower_bound),
                    row.upper_bound.map(fmt).unwrap_or_default(),
                    row.upper_bound_note
                );
            }
            s.pop();
            s
        }
    };
    emit(opts, text)
}

/// Dispatches a parsed command line; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::DiscBound { at, grid, refine } => cmd_disc_bound(&cli.opts, at, grid, refine),
        Command::SquareBound {
            zeta,
            t,
            bout_threshold,
            samples,
        } => cmd_square_bound(&cli.opts, zeta, t, bout_threshold, samples),
        Command::Certify { at, samples } => cmd_certify(&cli.opts, at, samples),
        Command::ValidateBarrier {
            file,
            body,
            n_alpha,
            n_offset,
        } => cmd_validate_barrier(&cli.opts, &file, body.into(), n_alpha, n_offset),
        Command::Table => cmd_table(&cli.opts),
    }
}

/// Parses the given argument list and runs it (tests use this directly).
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                EXIT_BAD_CONFIG
            } else {
                EXIT_OK
            }
        }
    }
}
