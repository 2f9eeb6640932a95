//! Command implementations behind the `jk` binary. Each command returns its
//! standard output and exit code so tests can drive it in-process.

pub mod config;
pub mod sweep;

use std::path::Path;

use jk_core::check::{pencil_checks, Check};
use jk_core::oracle::{predict, OracleError};
use jk_core::pencil::{jk_invariants, CharPoly, Pencil, PencilError, DEFAULT_MINOR_CAP};
use jk_core::rep::{Point, RepError, RepSpec};
use serde::{Deserialize, Serialize};

pub use config::{FamilyRange, PairSource, SweepConfig};
pub use sweep::{run_sweep, run_task, Source, Summary, Task, TaskReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Environment variable overriding the minor-oracle cap.
pub const MINOR_CAP_VAR: &str = "JK_MINOR_CAP";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Unreadable, malformed or out-of-range input.
    #[error("input error: {0}")]
    Input(String),
    /// A computation that should not fail did.
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Internal(_) => EXIT_MISMATCH,
        }
    }
}

impl From<RepError> for CliError {
    fn from(e: RepError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Spec(e) => e.into(),
            e => CliError::Internal(e.to_string()),
        }
    }
}

impl From<PencilError> for CliError {
    fn from(e: PencilError) -> Self {
        CliError::Internal(e.to_string())
    }
}

/// Output of a command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("report types serialize")
}

/// The minor-oracle cap from `JK_MINOR_CAP`, or the default.
pub fn minor_cap_from_env() -> Result<u128, CliError> {
    match std::env::var(MINOR_CAP_VAR) {
        Ok(v) => {
            v.trim().parse().map_err(|_| CliError::Input(format!("{MINOR_CAP_VAR}: not a nonnegative integer: {v:?}")))
        }
        Err(_) => Ok(DEFAULT_MINOR_CAP),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str, origin: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Input(format!("{origin}: {e}")))
}

/// A spec given inline as JSON or as the path of a JSON file.
pub fn load_spec(arg: &str) -> Result<RepSpec, CliError> {
    let spec: RepSpec =
        if arg.trim_start().starts_with('{') { parse(arg, "spec")? } else { parse(&read(Path::new(arg))?, arg)? };
    spec.validate()?;
    Ok(spec)
}

/// Second line of `analyze`: the law checks and the characteristic polynomial
/// assembled from the invariant factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeChecks {
    pub charpoly: CharPoly,
    pub checks: Vec<Check>,
}

/// `analyze`: invariants of the pencil in `path` on the first line, checks on
/// the second.
pub fn cmd_analyze(path: &Path, minor_cap: u128) -> Result<Outcome, CliError> {
    let pencil: Pencil = parse(&read(path)?, &path.display().to_string())?;
    let inv = jk_invariants(&pencil)?;
    let checks = pencil_checks(&pencil, &inv, minor_cap);
    let code = if checks.iter().any(Check::failed) { EXIT_MISMATCH } else { EXIT_OK };
    let extra = AnalyzeChecks { charpoly: inv.charpoly(), checks };
    Ok(Outcome { stdout: format!("{}\n{}\n", json(&inv), json(&extra)), code })
}

/// How `rep` obtains its pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairArg {
    Canonical,
    Random {
        seed: u64,
        bound: u64,
    },
    /// JSON file `{"x": point, "a": point}`.
    Points(std::path::PathBuf),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PointsFile {
    x: Point,
    a: Point,
}

/// `rep`: one task report for the spec and pair.
pub fn cmd_rep(spec_arg: &str, pair: &PairArg, minor_cap: u128) -> Result<Outcome, CliError> {
    let spec = load_spec(spec_arg)?;
    let source = match pair {
        PairArg::Canonical => Source::Canonical,
        PairArg::Random { bound: 0, .. } => return Err(CliError::Input("--bound must be at least 1".into())),
        PairArg::Random { seed, bound } => Source::Random { seed: *seed, bound: *bound },
        PairArg::Points(path) => {
            let p: PointsFile = parse(&read(path)?, &path.display().to_string())?;
            p.x.validate(&spec)?;
            p.a.validate(&spec)?;
            Source::Explicit { x: p.x, a: p.a }
        }
    };
    let report = run_task(&Task { spec, source }, minor_cap)?;
    let code = if report.failed() { EXIT_MISMATCH } else { EXIT_OK };
    Ok(Outcome { stdout: format!("{}\n", json(&report)), code })
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a Summary,
}

/// Overrides from the command line for `verify`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    pub jobs: Option<usize>,
    pub fail_fast: bool,
    pub table: bool,
}

/// `verify`: one report per task in key order, then the summary.
pub fn cmd_verify(path: &Path, opts: &VerifyOptions, minor_cap: u128) -> Result<Outcome, CliError> {
    let mut cfg = SweepConfig::load(path)?;
    cfg.fail_fast |= opts.fail_fast;
    let jobs = opts.jobs.unwrap_or(cfg.parallelism);
    let reports = run_sweep(&cfg, jobs, minor_cap)?;
    let summary = Summary::of(&reports);
    let mut stdout = String::new();
    if opts.table {
        stdout.push_str(&sweep::table(&reports));
    } else {
        for r in &reports {
            stdout.push_str(&json(r));
            stdout.push('\n');
        }
    }
    stdout.push_str(&json(&SummaryLine { summary: &summary }));
    stdout.push('\n');
    let code = if summary.success() { EXIT_OK } else { EXIT_MISMATCH };
    Ok(Outcome { stdout, code })
}

/// `oracle`: the closed-form invariants of the spec.
pub fn cmd_oracle(spec_arg: &str) -> Result<Outcome, CliError> {
    let spec = load_spec(spec_arg)?;
    let pred = predict(&spec)?;
    Ok(Outcome { stdout: format!("{}\n", json(&pred)), code: EXIT_OK })
}
