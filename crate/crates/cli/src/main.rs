use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use jk_cli::{
    cmd_analyze, cmd_oracle, cmd_rep, cmd_verify, minor_cap_from_env, CliError, Outcome, PairArg, VerifyOptions,
    EXIT_INPUT,
};

/// Jordan-Kronecker invariants of matrix pencils and Lie algebra representations.
#[derive(Parser)]
#[command(name = "jk", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of a pencil given as {"A": matrix, "B": matrix}.
    Analyze { pencil: PathBuf },
    /// Invariants of a representation pencil, checked against the closed form.
    Rep {
        /// Spec as inline JSON or a JSON file.
        spec: String,
        #[command(flatten)]
        pair: PairFlags,
    },
    /// Sweep the families of a configuration file.
    Verify {
        config: PathBuf,
        /// Worker threads, overriding the configuration.
        #[arg(long)]
        jobs: Option<usize>,
        /// Stop at the first failing task.
        #[arg(long)]
        fail_fast: bool,
        /// Print a text table instead of JSON lines.
        #[arg(long)]
        table: bool,
    },
    /// Closed-form invariants of a spec.
    Oracle {
        /// Spec as inline JSON or a JSON file.
        spec: String,
    },
}

#[derive(Args)]
struct PairFlags {
    /// Use the canonical pair (default).
    #[arg(long, conflicts_with_all = ["seed", "points"])]
    canonical: bool,
    /// Use a random pair from this seed.
    #[arg(long, conflicts_with = "points")]
    seed: Option<u64>,
    /// Entry bound for random pairs.
    #[arg(long, default_value_t = 10, requires = "seed")]
    bound: u64,
    /// JSON file with {"x": point, "a": point}.
    #[arg(long)]
    points: Option<PathBuf>,
}

impl PairFlags {
    fn pair(&self) -> PairArg {
        match (&self.points, self.seed) {
            (Some(p), _) => PairArg::Points(p.clone()),
            (None, Some(seed)) => PairArg::Random { seed, bound: self.bound },
            (None, None) => PairArg::Canonical,
        }
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let cap = minor_cap_from_env()?;
    match cli.command {
        Command::Analyze { pencil } => cmd_analyze(&pencil, cap),
        Command::Rep { spec, pair } => cmd_rep(&spec, &pair.pair(), cap),
        Command::Verify { config, jobs, fail_fast, table } => {
            cmd_verify(&config, &VerifyOptions { jobs, fail_fast, table }, cap)
        }
        Command::Oracle { spec } => cmd_oracle(&spec),
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.stdout.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("jk: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
