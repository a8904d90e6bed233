//! Batch verification driver: every identity check is a subcommand that
//! writes a deterministic TSV (or JSON) report and exits nonzero when any
//! row fails. Randomized suites take a mandatory seed; identical
//! configurations produce byte-identical reports.

mod report;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};

use pfint::theorem::Tolerance;
use suites::ScalarMode;

#[derive(Parser)]
#[command(name = "pfint", version, about = "Pfaffian integration identity checker")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputOpts {
    /// Write the report to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Emit the report rows as JSON instead of TSV
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TolOpts {
    /// Relative tolerance for float comparisons
    #[arg(long, default_value_t = 1e-8)]
    tol_rel: f64,
    /// Absolute tolerance floor for near-zero float comparisons
    #[arg(long, default_value_t = 1e-10)]
    tol_abs: f64,
}

impl TolOpts {
    fn tolerance(&self) -> Tolerance {
        Tolerance {
            rel: self.tol_rel,
            abs: self.tol_abs,
        }
    }
}

fn parse_scalar_mode(s: &str) -> Result<ScalarMode, String> {
    match s {
        "rational" => Ok(ScalarMode::Rational),
        "complex-float" => Ok(ScalarMode::ComplexFloat),
        other => Err(format!(
            "unknown scalar mode {other:?}; use \"rational\" or \"complex-float\""
        )),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the Pfaffian of an antisymmetric matrix from a JSON document
    Pf {
        /// Matrix file: {"scalar": "rational"|"complex", "rows": [[...]]}
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Elementary symmetric functions: partition sum vs recursion vs series
    Symfun {
        #[arg(long, default_value_t = 10)]
        lmax: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Minor summation formulas on random rational instances
    VerifyLemmas {
        /// Matrix dimension (even)
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// The determinant-integral formula against the moment-matrix Pfaffian
    DeBruijn {
        #[arg(long, default_value_t = 3)]
        points: usize,
        #[arg(long, default_value_t = 3)]
        lmax: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Tuple-sum moments against the trace formula, per degree
    VerifyTheorem1 {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        points: usize,
        #[arg(long, default_value_t = 2)]
        lmax: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        /// "rational" (exact) or "complex-float" (tolerance-checked)
        #[arg(long, default_value = "rational", value_parser = parse_scalar_mode)]
        scalar: ScalarMode,
        #[command(flatten)]
        tol: TolOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// The tau-polynomial identity and the three-route equivalence
    VerifyTheorem2 {
        /// Coupling dimension (even; the coupling is drawn invertible)
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        points: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Fredholm series identities: squared series vs determinant, scalar case
    Fredholm {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        points: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Complex-plane run: monic monomials against a Gaussian tensor grid
    GinibreDemo {
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Gauss-Hermite nodes per axis
        #[arg(long, default_value_t = 24)]
        nodes: usize,
        #[arg(long, default_value_t = 2)]
        lmax: usize,
        /// Optional measure document replacing the Gaussian grid
        #[arg(long)]
        space: Option<PathBuf>,
        #[command(flatten)]
        tol: TolOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
}

fn emit(
    name: &str,
    rows: Vec<report::Row>,
    output: &OutputOpts,
    seed: Option<u64>,
) -> anyhow::Result<bool> {
    let rendered = if output.json {
        report::to_json(&rows)
    } else {
        report::to_tsv(&rows)
    };
    let summary = report::summary(name, &rows, seed);
    match &output.out {
        Some(path) => {
            std::fs::write(path, rendered)
                .with_context(|| format!("writing report to {}", path.display()))?;
            println!("{summary}");
        }
        None => {
            print!("{rendered}");
            eprintln!("{summary}");
        }
    }
    Ok(rows.iter().all(|r| r.pass))
}

fn check_positive(value: usize, name: &str) -> anyhow::Result<()> {
    if value == 0 {
        anyhow::bail!("--{name} must be positive");
    }
    Ok(())
}

fn run() -> anyhow::Result<bool> {
    let cli = Cli::parse();
    match cli.command {
        Command::Pf { matrix } => {
            println!("{}", suites::pf_of_file(&matrix)?);
            Ok(true)
        }
        Command::Symfun {
            lmax,
            trials,
            seed,
            output,
        } => {
            check_positive(trials, "trials")?;
            let rows = suites::symfun(lmax, trials, seed)?;
            emit("symfun", rows, &output, Some(seed))
        }
        Command::VerifyLemmas {
            n,
            trials,
            seed,
            output,
        } => {
            check_positive(n, "n")?;
            check_positive(trials, "trials")?;
            let rows = suites::verify_lemmas(n, trials, seed)?;
            emit("verify-lemmas", rows, &output, Some(seed))
        }
        Command::DeBruijn {
            points,
            lmax,
            trials,
            seed,
            output,
        } => {
            check_positive(points, "points")?;
            check_positive(lmax, "lmax")?;
            check_positive(trials, "trials")?;
            let rows = suites::de_bruijn(points, lmax, trials, seed)?;
            emit("de-bruijn", rows, &output, Some(seed))
        }
        Command::VerifyTheorem1 {
            n,
            points,
            lmax,
            trials,
            seed,
            scalar,
            tol,
            output,
        } => {
            check_positive(n, "n")?;
            check_positive(points, "points")?;
            check_positive(trials, "trials")?;
            let rows = suites::theorem1(n, points, lmax, trials, seed, scalar, tol.tolerance())?;
            emit("verify-theorem1", rows, &output, Some(seed))
        }
        Command::VerifyTheorem2 {
            n,
            points,
            trials,
            seed,
            output,
        } => {
            check_positive(points, "points")?;
            check_positive(trials, "trials")?;
            let rows = suites::theorem2(n, points, trials, seed)?;
            emit("verify-theorem2", rows, &output, Some(seed))
        }
        Command::Fredholm {
            n,
            points,
            trials,
            seed,
            output,
        } => {
            check_positive(n, "n")?;
            check_positive(points, "points")?;
            check_positive(trials, "trials")?;
            let rows = suites::fredholm(n, points, trials, seed)?;
            emit("fredholm", rows, &output, Some(seed))
        }
        Command::GinibreDemo {
            n,
            nodes,
            lmax,
            space,
            tol,
            output,
        } => {
            check_positive(nodes, "nodes")?;
            let custom = match space {
                None => None,
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    Some(
                        pfint::json::space_from_str(&text)
                            .with_context(|| format!("parsing {}", path.display()))?,
                    )
                }
            };
            let rows = suites::ginibre_demo(n, nodes, lmax, custom, tol.tolerance())?;
            emit("ginibre-demo", rows, &output, None)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
