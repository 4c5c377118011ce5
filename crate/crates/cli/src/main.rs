//! `casimir`: command-line driver for casimir-core.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain or guard error, 3 accuracy
//! failure. `validate` exits 0 iff every check passes, 1 otherwise.
//! `CASIMIR_THREADS` sets the worker thread count.

mod commands;
mod report;
mod sweep;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use casimir_core::validation::{run_all, Check, Group};
use casimir_core::{Calibration, Error};
use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde::Serialize;

use commands::{BoxMode, SlabMode};
use report::{Format, Metadata, Report};
use sweep::{Base, Kind, Param, Scale, SweepSpec};

const EXIT_USAGE: u8 = 1;
const EXIT_DOMAIN: u8 = 2;
const EXIT_ACCURACY: u8 = 3;

#[derive(Parser)]
#[command(name = "casimir", version, about = "Zeta-regularized Casimir energies for slabs and rectangular boxes")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Flat key = value file overriding calibration constants and tolerances.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Energy per unit area between two parallel plates.
    Slab(SlabArgs),
    /// Energy of a rectangular cavity.
    Box(BoxArgs),
    /// Riemann zeta function.
    Zeta(SArgs),
    /// Epstein zeta function of the form a m^2 + b n^2 + c m n.
    Epstein(EpsteinArgs),
    /// Hardy-Littlewood approximation of zeta next to the full continuation.
    Afe(AfeArgs),
    /// Evaluate over a one-parameter grid.
    Sweep(SweepArgs),
    /// Run the numerical self-checks.
    Validate(ValidateArgs),
}

#[derive(Args)]
struct SlabArgs {
    /// Spatial dimension.
    #[arg(long, default_value_t = 3)]
    d: u32,
    /// Plate separation.
    #[arg(long = "L")]
    l: f64,
    /// Plasma wavelength; 0 means ideal conductor.
    #[arg(long = "lambda-p", default_value_t = 0.0)]
    lambda_p: f64,
    #[arg(long, value_enum, default_value_t = SlabMode::Ideal)]
    mode: SlabMode,
}

#[derive(Args)]
struct BoxArgs {
    #[arg(long = "L1")]
    l1: f64,
    #[arg(long = "L2")]
    l2: f64,
    #[arg(long = "lambda-p", default_value_t = 0.0)]
    lambda_p: f64,
    #[arg(long, value_enum, default_value_t = BoxMode::Ideal)]
    mode: BoxMode,
}

#[derive(Args)]
struct SArgs {
    #[arg(long = "s-re", allow_negative_numbers = true)]
    s_re: f64,
    #[arg(long = "s-im", allow_negative_numbers = true, default_value_t = 0.0)]
    s_im: f64,
}

#[derive(Args)]
struct EpsteinArgs {
    #[arg(long, allow_negative_numbers = true)]
    a: f64,
    #[arg(long, allow_negative_numbers = true)]
    b: f64,
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    c: f64,
    #[command(flatten)]
    s: SArgs,
}

#[derive(Args)]
struct AfeArgs {
    #[command(flatten)]
    s: SArgs,
    /// Length of the first sum; defaults to the symmetric split sqrt(t / 2 pi).
    #[arg(long)]
    x: Option<f64>,
}

#[derive(Args)]
struct SweepArgs {
    /// Quantity to evaluate.
    #[arg(long, value_enum, default_value_t = Kind::Slab)]
    kind: Kind,
    /// Mode for the chosen kind (slab: ideal|fc_hurwitz|fc_asymptotic|afe, box: ideal|fc).
    #[arg(long, default_value = "ideal")]
    mode: String,
    #[arg(long, value_enum)]
    param: Param,
    #[arg(long, allow_negative_numbers = true)]
    start: f64,
    #[arg(long, allow_negative_numbers = true)]
    stop: f64,
    #[arg(long)]
    points: usize,
    #[arg(long, value_enum, default_value_t = Scale::Linear)]
    scale: Scale,
    /// Output file; standard output if omitted.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, default_value_t = 3)]
    d: u32,
    #[arg(long = "L", default_value_t = 1.0)]
    l: f64,
    #[arg(long = "L1", default_value_t = 1.0)]
    l1: f64,
    #[arg(long = "L2", default_value_t = 1.0)]
    l2: f64,
    #[arg(long = "lambda-p", default_value_t = 0.0)]
    lambda_p: f64,
    #[arg(long = "s-re", allow_negative_numbers = true, default_value_t = 0.5)]
    s_re: f64,
    #[arg(long = "s-im", allow_negative_numbers = true, default_value_t = 0.0)]
    s_im: f64,
}

#[derive(Args)]
struct ValidateArgs {
    /// Run a single group: specfun, afe, slab, epstein, box or spectral.
    #[arg(long, value_parser = parse_group)]
    only: Option<Group>,
}

fn parse_group(s: &str) -> Result<Group, String> {
    s.parse::<Group>().map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Eval(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Eval(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn init_threads() -> Result<(), Failure> {
    let Ok(v) = std::env::var("CASIMIR_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::Usage(format!("CASIMIR_THREADS must be a positive integer, got '{v}'")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Usage(format!("cannot configure {n} threads: {e}")))
}

fn load_config(path: Option<&PathBuf>) -> Result<Calibration, Failure> {
    match path {
        None => Ok(Calibration::builtin()),
        Some(p) => Calibration::from_file(p).map_err(|e| Failure::Usage(e.to_string())),
    }
}

fn emit(rep: &Report, format: Format) -> Result<ExitCode, Failure> {
    let mut out = io::stdout().lock();
    rep.render(format, &mut out)?;
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn run_sweep(args: SweepArgs, format: Format, cal: &Calibration) -> Result<ExitCode, Failure> {
    use clap::ValueEnum;
    let spec = SweepSpec { param: args.param, start: args.start, stop: args.stop, points: args.points, scale: args.scale };
    spec.validate(args.kind).map_err(Failure::Usage)?;
    let (slab_mode, box_mode) = match args.kind {
        Kind::Slab => (SlabMode::from_str(&args.mode, false).map_err(|_| bad_mode(&args.mode, args.kind))?, BoxMode::Ideal),
        Kind::Box => (SlabMode::Ideal, BoxMode::from_str(&args.mode, false).map_err(|_| bad_mode(&args.mode, args.kind))?),
        Kind::Zeta | Kind::Afe => (SlabMode::Ideal, BoxMode::Ideal),
    };
    let base = Base {
        kind: args.kind,
        slab_mode,
        box_mode,
        d: args.d,
        l: args.l,
        l1: args.l1,
        l2: args.l2,
        lambda_p: args.lambda_p,
        s_re: args.s_re,
        s_im: args.s_im,
    };
    let rows = sweep::run(&base, &spec, cal);
    let mut w: Box<dyn Write> = match &args.output {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    };
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                rows: &'a [sweep::Row],
                metadata: Metadata,
            }
            serde_json::to_writer_pretty(&mut w, &Out { rows: &rows, metadata: Metadata::new(cal) })
                .map_err(io::Error::from)?;
            writeln!(w)?;
        }
        Format::Text | Format::Csv => sweep::write_csv(&rows, &mut w)?,
    }
    w.flush()?;
    drop(w);
    let ok = rows.iter().filter(|r| r.succeeded()).count();
    if let Some(p) = &args.output {
        eprintln!("wrote {} rows ({ok} succeeded) to {}", rows.len(), p.display());
    }
    Ok(if ok > 0 { ExitCode::SUCCESS } else { ExitCode::from(EXIT_DOMAIN) })
}

fn bad_mode(mode: &str, kind: Kind) -> Failure {
    Failure::Usage(format!("mode '{mode}' is not valid for sweep kind {kind:?}"))
}

fn run_validate(args: ValidateArgs, format: Format, cal: &Calibration) -> Result<ExitCode, Failure> {
    let checks = run_all(cal, args.only);
    let passed = checks.iter().filter(|c| c.passed).count();
    let all = passed == checks.len() && !checks.is_empty();
    let mut out = io::stdout().lock();
    match format {
        Format::Text => {
            for c in &checks {
                writeln!(
                    out,
                    "{} {:<8} {:>2}  {:<40} {:>8.3}s  {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.group.name(),
                    c.criterion,
                    c.name,
                    c.seconds,
                    c.detail
                )?;
            }
            writeln!(out, "{passed}/{} checks passed", checks.len())?;
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                group: Group,
                criterion: u32,
                name: &'a str,
                passed: bool,
                detail: &'a str,
            }
            #[derive(Serialize)]
            struct Timing<'a> {
                name: &'a str,
                seconds: f64,
            }
            #[derive(Serialize)]
            struct Meta<'a> {
                #[serde(flatten)]
                base: Metadata,
                timings: Vec<Timing<'a>>,
            }
            #[derive(Serialize)]
            struct Out<'a> {
                checks: Vec<Row<'a>>,
                passed: usize,
                total: usize,
                all_passed: bool,
                metadata: Meta<'a>,
            }
            fn row(c: &Check) -> Row<'_> {
                Row { group: c.group, criterion: c.criterion, name: &c.name, passed: c.passed, detail: &c.detail }
            }
            let o = Out {
                checks: checks.iter().map(row).collect(),
                passed,
                total: checks.len(),
                all_passed: all,
                metadata: Meta {
                    base: Metadata::new(cal),
                    timings: checks.iter().map(|c| Timing { name: &c.name, seconds: c.seconds }).collect(),
                },
            };
            serde_json::to_writer_pretty(&mut out, &o).map_err(io::Error::from)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut wr = csv::Writer::from_writer(&mut out);
            wr.write_record(["group", "criterion", "name", "passed", "seconds", "detail"])?;
            for c in &checks {
                wr.write_record([
                    c.group.name().to_string(),
                    c.criterion.to_string(),
                    c.name.clone(),
                    c.passed.to_string(),
                    c.seconds.to_string(),
                    c.detail.clone(),
                ])?;
            }
            wr.flush()?;
        }
    }
    out.flush()?;
    Ok(if all { ExitCode::SUCCESS } else { ExitCode::from(EXIT_USAGE) })
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    init_threads()?;
    let cal = load_config(cli.config.as_ref())?;
    let f = cli.format;
    match cli.command {
        Command::Slab(a) => emit(&commands::slab(a.d, a.l, a.lambda_p, a.mode, &cal)?, f),
        Command::Box(a) => emit(&commands::boxed(a.l1, a.l2, a.lambda_p, a.mode, &cal)?, f),
        Command::Zeta(a) => emit(&commands::zeta(Complex64::new(a.s_re, a.s_im), &cal)?, f),
        Command::Epstein(a) => emit(&commands::epstein(a.a, a.b, a.c, Complex64::new(a.s.s_re, a.s.s_im), &cal)?, f),
        Command::Afe(a) => emit(&commands::afe(Complex64::new(a.s.s_re, a.s.s_im), a.x, &cal)?, f),
        Command::Sweep(a) => run_sweep(a, f, &cal),
        Command::Validate(a) => run_validate(a, f, &cal),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Eval(e)) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Accuracy(_) | Error::InsufficientCutoff(_) => EXIT_ACCURACY,
                Error::Config(_) => EXIT_USAGE,
                _ => EXIT_DOMAIN,
            };
            ExitCode::from(code)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("i/o error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
