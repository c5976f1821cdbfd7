//! Command-line front end.
//!
//! Exit codes: 0 pass, 1 verification failed, 2 input error, 3 monomial cap
//! exceeded. Every design argument accepts a file path, `catalog:NAME`, or a
//! bare catalog name.

mod file;
mod table1;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use file::{
    design_from_json, design_to_json, load_design, read_design, write_design, DesignFile, Meta,
    SCHEMA_VERSION,
};
pub use table1::{hopf_row, hopf_table, HopfRow, HopfTable, HOPF_ROWS};

use crate::algebra::Algebra;
use crate::construct::{
    collapse, lift, projective_line_to_sphere, random_basepoints, sphere_to_projective_line,
    LiftSpec,
};
use crate::designs::{
    catalog, catalog_listing, verify, Method, VerificationReport, WeightedDesign, DEFAULT_TOL,
};
use crate::error::DesignError;
use crate::geometry::{Fibration, Space};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "hopf-designs", version, about = "Weighted spherical and projective t-designs via Hopf and projective maps")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the strength of a design and print per-degree deviations.
    Verify(VerifyArgs),
    /// Place a fiber design on every fiber above a base design.
    Lift(LiftArgs),
    /// Group a sphere design by fiber and sum the weights.
    Collapse(CollapseArgs),
    /// Move a design between FP^1 and S^{k+1} through the Hopf chart.
    Convert(ConvertArgs),
    /// List or write catalog designs.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Build and verify the Hopf lifts V_{t+1} over small designs on S^2.
    Table1(JsonFlag),
}

#[derive(Debug, Args)]
pub struct JsonFlag {
    /// Print machine-readable JSON.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub design: String,
    /// Strength to test; defaults to the file's claimed strength.
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long, value_parser = parse_method)]
    pub method: Option<Method>,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct LiftArgs {
    /// Base design on FP^n, or on S^m with m in {1, 2, 4, 8} for a Hopf lift.
    pub base: String,
    /// Fiber design on S^k.
    #[arg(long)]
    pub fiber: String,
    /// Strength of the lifted design, used to verify the output.
    #[arg(long)]
    pub t: usize,
    /// `default`, `random` or `random:SEED`.
    #[arg(long, default_value = "default")]
    pub basepoints: String,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Skip verifying the lifted design.
    #[arg(long)]
    pub no_verify: bool,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    HopfBase,
    Projective,
}

#[derive(Debug, Args)]
pub struct CollapseArgs {
    pub design: String,
    #[arg(long, value_enum, default_value_t = Target::HopfBase)]
    pub target: Target,
    /// Algebra for a projective target; required there.
    #[arg(long, value_parser = parse_algebra)]
    pub algebra: Option<Algebra>,
    /// Strength of the input design; the result claims `t / 2`.
    #[arg(long)]
    pub t: usize,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConvertTo {
    Sphere,
    Projective,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    pub design: String,
    #[arg(long, value_enum)]
    pub to: ConvertTo,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    List(JsonFlag),
    Emit {
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: DesignError| e.to_string())
}

fn parse_algebra(s: &str) -> Result<Algebra, String> {
    s.parse().map_err(|e: DesignError| e.to_string())
}

/// A failed command: exit code and message.
struct Failure(i32, String);

impl From<DesignError> for Failure {
    fn from(e: DesignError) -> Self {
        let code = match e {
            DesignError::CapExceeded { .. } => EXIT_CAP,
            _ => EXIT_INPUT,
        };
        Failure(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure(EXIT_INPUT, e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

#[derive(Serialize)]
struct ReportJson<'a> {
    #[serde(flatten)]
    report: &'a VerificationReport,
    verdicts: Vec<bool>,
    pass: bool,
}

fn print_report(out: &mut dyn Write, report: &VerificationReport, json: bool) -> std::io::Result<()> {
    if json {
        let body = ReportJson {
            report,
            verdicts: report.verdicts(),
            pass: report.passes(),
        };
        writeln!(out, "{}", serde_json::to_string_pretty(&body).expect("reports serialize"))
    } else {
        writeln!(out, "{report}")
    }
}

fn verdict_code(report: &VerificationReport) -> i32 {
    if report.passes() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

/// Writes to `path`, or to `out` as JSON when no path is given.
fn emit(out: &mut dyn Write, path: Option<&PathBuf>, design: &WeightedDesign) -> Result<(), Failure> {
    match path {
        Some(p) => write_design(p, design)?,
        None => writeln!(out, "{}", design_to_json(design))?,
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let design = load_design(&args.design)?;
    let t = args.t.or(design.claimed_strength()).ok_or_else(|| {
        Failure(EXIT_INPUT, "no --t given and the design claims no strength".into())
    })?;
    let report = verify(&design, t, args.tol, args.method)?;
    print_report(out, &report, args.json)?;
    Ok(verdict_code(&report))
}

fn infer_fibration(base: Space) -> Result<Fibration, Failure> {
    match base {
        Space::Projective { algebra, n } => Ok(Fibration::projective(algebra, n)?),
        Space::Sphere { m } => Fibration::hopf_over(m).ok_or_else(|| {
            Failure(EXIT_INPUT, format!("S^{m} is not the base of a Hopf fibration"))
        }),
    }
}

fn cmd_lift(args: &LiftArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let base = load_design(&args.base)?;
    let fiber = load_design(&args.fiber)?;
    let fibration = infer_fibration(base.space())?;
    let mut spec = LiftSpec::new(fibration, base.clone(), fiber.clone());
    match args.basepoints.as_str() {
        "default" => {}
        other => {
            let seed = match other.strip_prefix("random") {
                Some("") => 0,
                Some(rest) => rest
                    .strip_prefix(':')
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| Failure(EXIT_INPUT, format!("bad --basepoints `{other}`")))?,
                None => return Err(Failure(EXIT_INPUT, format!("bad --basepoints `{other}`"))),
            };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            spec = spec.with_basepoints(random_basepoints(&fibration, &base, &mut rng)?);
        }
    }
    let lifted = lift(&spec)?.with_claimed_strength(Some(args.t));
    let lifted = match (base.name(), fiber.name()) {
        (Some(b), Some(f)) => lifted.with_name(format!("lift({b}, {f})")),
        _ => lifted,
    };
    // Without -o the design goes to stdout, so the summary moves to stderr.
    let info: &mut dyn Write = if args.output.is_some() { out } else { err };
    writeln!(info, "|Y| = {}, |Z| = {}, |X| = {}", base.len(), fiber.len(), lifted.len())?;
    let code = if args.no_verify {
        EXIT_PASS
    } else {
        let report = verify(&lifted, args.t, args.tol, None)?;
        print_report(info, &report, args.json)?;
        verdict_code(&report)
    };
    emit(out, args.output.as_ref(), &lifted)?;
    Ok(code)
}

fn cmd_collapse(args: &CollapseArgs, out: &mut dyn Write) -> CmdResult {
    let design = load_design(&args.design)?;
    let Space::Sphere { m: d } = design.space() else {
        return Err(Failure(EXIT_INPUT, "collapse needs a design on a sphere".into()));
    };
    let fibration = match args.target {
        Target::HopfBase => {
            let algebra = Algebra::from_dim(d.div_ceil(2))
                .filter(|a| 2 * a.dim() == d + 1)
                .ok_or_else(|| Failure(EXIT_INPUT, format!("S^{d} is not a Hopf total space")))?;
            Fibration::hopf(algebra)
        }
        Target::Projective => {
            let algebra = args.algebra.ok_or_else(|| {
                Failure(EXIT_INPUT, "--target projective needs --algebra".into())
            })?;
            let dim = algebra.dim();
            if (d + 1) % dim != 0 || (d + 1) / dim < 2 {
                return Err(Failure(EXIT_INPUT, format!("S^{d} does not fiber over a {algebra}P^n")));
            }
            Fibration::projective(algebra, (d + 1) / dim - 1)?
        }
    };
    let base = collapse(&design, fibration, args.t)?;
    emit(out, args.output.as_ref(), &base)?;
    Ok(EXIT_PASS)
}

fn cmd_convert(args: &ConvertArgs, out: &mut dyn Write) -> CmdResult {
    let design = load_design(&args.design)?;
    let converted = match (args.to, design.space()) {
        (ConvertTo::Sphere, _) => projective_line_to_sphere(&design)?,
        (ConvertTo::Projective, Space::Sphere { m }) => {
            let algebra = Algebra::from_dim(m)
                .ok_or_else(|| Failure(EXIT_INPUT, format!("S^{m} is not a projective line")))?;
            sphere_to_projective_line(&design, algebra)?
        }
        (ConvertTo::Projective, space) => {
            return Err(Failure(EXIT_INPUT, format!("{space} is already projective")))
        }
    };
    emit(out, args.output.as_ref(), &converted)?;
    Ok(EXIT_PASS)
}

fn cmd_catalog(command: &CatalogCommand, out: &mut dyn Write) -> CmdResult {
    match command {
        CatalogCommand::List(flag) => {
            let rows = catalog_listing();
            if flag.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&rows).expect("rows serialize"))?;
            } else {
                writeln!(out, "{:<18} {:<6} {:<8} strength", "name", "space", "size")?;
                for r in rows {
                    writeln!(out, "{:<18} {:<6} {:<8} {}", r.name, r.space, r.size, r.strength)?;
                }
            }
        }
        CatalogCommand::Emit { name, output } => emit(out, output.as_ref(), &catalog(name)?)?,
    }
    Ok(EXIT_PASS)
}

fn cmd_table1(flag: &JsonFlag, out: &mut dyn Write) -> CmdResult {
    let rows = hopf_table()?;
    if flag.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&rows).expect("rows serialize"))?;
    } else {
        writeln!(out, "{}", HopfTable(&rows))?;
    }
    let ok = rows.iter().all(|r| r.verified && r.matches_reference());
    Ok(if ok { EXIT_PASS } else { EXIT_FAIL })
}

/// Runs a parsed command, writing results to `out` and diagnostics to `err`.
pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Verify(a) => cmd_verify(a, out),
        Command::Lift(a) => cmd_lift(a, out, err),
        Command::Collapse(a) => cmd_collapse(a, out),
        Command::Convert(a) => cmd_convert(a, out),
        Command::Catalog(c) => cmd_catalog(c, out),
        Command::Table1(f) => cmd_table1(f, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure(code, message)) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

/// Parses `args` (program name first) and runs the command. Usage errors exit 2.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli, out, err),
        Err(e) if e.use_stderr() => {
            let _ = write!(err, "{}", e.render());
            EXIT_INPUT
        }
        Err(e) => {
            let _ = write!(out, "{}", e.render());
            EXIT_PASS
        }
    }
}
