use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use littlewood::contour::RectRegion;
use littlewood::zeros::{
    complex_zeros_in_rect, digamma_zeros, gamma_level_zeros, polygamma_zeros, targets,
    ZeroPoleRecord, ZeroScan,
};
use littlewood::Complex64;
use littlewood_harness::params::parse_complex;
use littlewood_harness::{
    emit_report, list_checks, render_report, run_all_with, HarnessError, HarnessResult,
    ReportFormat, RunConfig,
};

#[derive(Parser)]
#[command(
    name = "littlewood",
    version,
    about = "Verify the Littlewood identity catalog"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run checks and report the results.
    Verify(VerifyArgs),
    /// Locate zeros of a catalog function.
    Zeros {
        #[command(subcommand)]
        which: ZerosCommand,
    },
    /// List registered checks.
    List,
}

#[derive(Args)]
struct VerifyArgs {
    /// Glob over check names.
    #[arg(long)]
    filter: Option<String>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
    /// Flat key = value configuration file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Zeta ordinate file for the zero-sum check.
    #[arg(long)]
    zeros: Option<PathBuf>,
    #[arg(long)]
    parallel: bool,
    /// Extra `<check>.<param>=value` overrides.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum IncompleteFunction {
    /// `z^-s gamma(s, z)` in z.
    GammaZ,
    /// `s z^-s gamma(s, z)` in s.
    GammaS,
    /// `(s-1) z^(1-s) Q(s, z)` in z.
    ZetaZ,
    /// `-2 z^-s s Q(s, z)` in s.
    ZetaS,
}

#[derive(Args)]
struct Window {
    #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
    half_width: f64,
}

#[derive(Subcommand)]
enum ZerosCommand {
    /// Real zeros of psi.
    Digamma {
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
    /// Zeros of psi^(n): real ladder plus non-real zeros in a square.
    Polygamma {
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[arg(long, default_value_t = 20)]
        real_count: usize,
        #[command(flatten)]
        window: Window,
    },
    /// Solutions of Gamma(z) = a in a square.
    GammaLevel {
        #[arg(
            long,
            default_value = "-1.1544313298030657",
            allow_hyphen_values = true
        )]
        a: String,
        #[command(flatten)]
        window: Window,
    },
    /// Zeros of an incomplete gamma or incomplete zeta function.
    Incomplete {
        #[arg(long, value_enum, default_value_t = IncompleteFunction::GammaZ)]
        function: IncompleteFunction,
        /// The fixed argument (s for the z-functions, z for the s-functions).
        #[arg(long, default_value = "0.4", allow_hyphen_values = true)]
        param: String,
        #[command(flatten)]
        window: Window,
    },
}

fn complex_arg(raw: &str) -> HarnessResult<Complex64> {
    parse_complex(raw).ok_or_else(|| HarnessError::Config {
        line: 0,
        msg: format!("`{raw}` is not a complex number"),
    })
}

fn verify(args: VerifyArgs) -> HarnessResult<bool> {
    let mut cfg = match &args.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    if let Some(f) = args.filter {
        cfg.filter = f;
    }
    cfg.parallel |= args.parallel;
    if let Some(z) = &args.zeros {
        cfg.set_zeros(&z.to_string_lossy());
    }
    for kv in &args.set {
        let bad = || HarnessError::Config {
            line: 0,
            msg: format!("`{kv}` is not <check>.<param>=value"),
        };
        let (key, value) = kv.split_once('=').ok_or_else(bad)?;
        let (check, param) = key.rsplit_once('.').ok_or_else(bad)?;
        cfg.set(check, param, value);
    }
    let reports = run_all_with(&cfg)?;
    match &args.report {
        Some(path) => {
            emit_report(&reports, args.format, path)?;
            if args.format != ReportFormat::Text {
                emit(&render_report(&reports, ReportFormat::Text)?);
            }
        }
        None => emit(&render_report(&reports, args.format)?),
    }
    Ok(reports.iter().all(|r| r.pass))
}

/// Writes to standard output, treating a closed pipe as success.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
        }
    }
}

fn print_records(records: &[ZeroPoleRecord]) {
    let lines: String = records
        .iter()
        .map(|r| {
            format!(
                "{:+.15e} {:+.15e} {}\n",
                r.location.re, r.location.im, r.multiplicity
            )
        })
        .collect();
    emit(&lines);
}

fn print_scan(scan: &ZeroScan) {
    print_records(&scan.zeros);
    for (cell, count) in &scan.unresolved {
        let c = cell.center();
        eprintln!(
            "unresolved cell at {c} (diameter {:.2e}) holding {count}",
            cell.diameter()
        );
    }
}

fn square(half: f64) -> HarnessResult<RectRegion> {
    Ok(RectRegion::new(-half, half, -half, half)?)
}

fn zeros(which: ZerosCommand) -> HarnessResult<bool> {
    match which {
        ZerosCommand::Digamma { count } => {
            let lines: String = digamma_zeros(count)?
                .iter()
                .map(|x| format!("{x:+.15e}\n"))
                .collect();
            emit(&lines);
        }
        ZerosCommand::Polygamma {
            n,
            real_count,
            window,
        } => {
            print_records(&polygamma_zeros(
                n,
                real_count,
                &square(window.half_width)?,
            )?);
        }
        ZerosCommand::GammaLevel { a, window } => {
            print_scan(&gamma_level_zeros(
                complex_arg(&a)?,
                &square(window.half_width)?,
            )?);
        }
        ZerosCommand::Incomplete {
            function,
            param,
            window,
        } => {
            let p = complex_arg(&param)?;
            let handle = match function {
                IncompleteFunction::GammaZ => targets::incomplete_gamma_in_z(p),
                IncompleteFunction::GammaS => targets::incomplete_gamma_in_s(p),
                IncompleteFunction::ZetaZ => targets::incomplete_zeta_in_z(p),
                IncompleteFunction::ZetaS => targets::incomplete_zeta_in_s(p),
            };
            let rect = square(window.half_width)?;
            print_scan(&complex_zeros_in_rect(&handle, &rect, 1e-12)?);
        }
    }
    Ok(true)
}

fn list() -> bool {
    let checks = list_checks();
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut text = String::new();
    for c in checks {
        let params: BTreeMap<&str, &str> = c.params.iter().map(|p| (p.key, p.default)).collect();
        let params: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let line = format!(
            "{:<width$}  {:<10}  tol {:<7.1e}  {}",
            c.name,
            format!("{:?}", c.route),
            c.tolerance,
            params.join(" ")
        );
        text += line.trim_end();
        text.push('\n');
    }
    emit(&text);
    true
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify(args) => verify(args),
        Command::Zeros { which } => zeros(which),
        Command::List => Ok(list()),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
