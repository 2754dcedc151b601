//! `pathfactor`: generate, solve and verify path factors of (3,4)-biregular
//! bipartite graphs.
//!
//! Exit codes: 0 success, 1 invalid input / invalid factor / generation
//! failure, 2 bad arguments, 3 internal defect, 4 instance too large for the
//! oracle.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};

use pathfactor::{
    brute_force_factor, fixture, generate, parse_graph, parse_paths, run_experiment,
    serialize_graph, solve_with, validate_path_factor, validate_paths, Error, ExperimentConfig,
    GenConfig, SolveOptions, TieBreakPolicy,
};

#[derive(Parser)]
#[command(name = "pathfactor", version, about = "Path factors of (3,4)-biregular bigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a random simple (3,4)-biregular graph, or a named fixture.
    Generate(GenerateArgs),
    /// Find a path factor whose paths all end in Y.
    Solve(SolveArgs),
    /// Check a factor against a graph, or search for one exhaustively.
    Verify(VerifyArgs),
    /// Solve many seeded instances and summarize the path lengths.
    Experiment(ExperimentArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// Instance size: 4k y-vertices, 3k x-vertices.
    #[arg(long, required_unless_present = "fixture", value_parser = clap::value_parser!(u64).range(1..))]
    k: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Emit a named instance instead (k34, counterexample).
    #[arg(long, conflicts_with_all = ["k", "seed"])]
    fixture: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    /// `lex` or `random:<seed>`.
    #[arg(long, default_value = "lex")]
    policy: TieBreakPolicy,
    /// Print one line per construction step and augmentation to stderr.
    #[arg(long)]
    trace: bool,
    /// Re-check every invariant after every step.
    #[arg(long)]
    checked: bool,
    /// Accept repeated edge lines when parsing (the solver still rejects them).
    #[arg(long)]
    allow_multi: bool,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["factor", "oracle"]))]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    factor: Option<PathBuf>,
    /// Exhaustive search; only for k <= 2.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct ExperimentArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    k: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,
    #[arg(long, default_value = "lex")]
    policy: TieBreakPolicy,
    /// Leave out the timing lines so output is reproducible byte for byte.
    #[arg(long)]
    no_timing: bool,
}

/// A failure carrying its exit code.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl Failure {
    fn new(code: u8, error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code,
            error: error.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Defect(_) => 3,
            Error::TooLarge { .. } => 4,
            _ => 1,
        };
        Failure::new(code, e)
    }
}

type CmdResult = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate(args) => cmd_generate(args),
        Command::Solve(args) => cmd_solve(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Experiment(args) => cmd_experiment(args),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

fn read(path: &Path, code: u8) -> Result<String, Failure> {
    fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(|e| Failure::new(code, e))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    let written = match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .context("writing to stdout"),
    };
    written.map_err(|e| Failure::new(1, e))
}

fn cmd_generate(args: GenerateArgs) -> CmdResult {
    let g = match (&args.fixture, args.k) {
        (Some(name), _) => fixture(name).map_err(|e| Failure::new(2, e))?,
        (None, Some(k)) => generate(&GenConfig::new(k as usize, args.seed))?,
        (None, None) => unreachable!("clap requires --k or --fixture"),
    };
    emit(args.out.as_deref(), &serialize_graph(&g))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_solve(args: SolveArgs) -> CmdResult {
    let text = read(&args.input, 1)?;
    let g = parse_graph(&text, args.allow_multi)?;
    let opts = SolveOptions {
        checked: args.checked,
        trace: args.trace,
    };
    let outcome = solve_with(&g, args.policy, opts)?;
    for line in &outcome.trace {
        eprintln!("{line}");
    }
    let report = validate_path_factor(&g, &outcome.factor);
    if !report.is_valid() {
        return Err(Failure::new(
            3,
            anyhow!("solver produced an invalid factor:\n{report}"),
        ));
    }
    emit(args.out.as_deref(), &outcome.factor.to_text())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    let text = read(&args.graph, 2)?;
    let g = parse_graph(&text, true).map_err(|e| Failure::new(2, e))?;

    if args.oracle {
        return match brute_force_factor(&g)? {
            Some(factor) => {
                print!("FACTOR EXISTS\n{}", factor.to_text());
                Ok(ExitCode::SUCCESS)
            }
            None => {
                println!("NO FACTOR EXISTS");
                Ok(ExitCode::SUCCESS)
            }
        };
    }

    let factor_path = args.factor.expect("clap requires --factor or --oracle");
    let paths = match parse_paths(&read(&factor_path, 2)?) {
        Ok(paths) => paths,
        Err(e) => {
            println!("FAIL parse {e}");
            return Ok(ExitCode::FAILURE);
        }
    };
    let report = validate_paths(&g, &paths);
    print!("{}", report.render());
    Ok(if report.is_valid() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_experiment(args: ExperimentArgs) -> CmdResult {
    let cfg = ExperimentConfig {
        jobs: args.jobs as usize,
        policy: args.policy,
        ..ExperimentConfig::new(args.k as usize, args.trials as usize, args.seed)
    };
    let summary = run_experiment(&cfg)?;
    print!("{}", summary.render(!args.no_timing));
    Ok(ExitCode::SUCCESS)
}
