//! `incmax`: batch driver for incremental maximization experiments.
//!
//! Exit codes: 0 success, 1 bound violated or expectation mismatch, 2 input
//! error, 3 enumeration budget exceeded.

mod generate;
mod lowerbound;
mod output;
mod run;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};
use incmax::oracle::{BUDGET_ENV, DEFAULT_BUDGET};
use incmax::properties::Property;

use generate::{Generated, GENERATORS};
use lowerbound::{LowerBoundMode, LowerBoundOptions};
use run::RunOptions;
use verify::{ModeArg, VerifyOptions};

#[derive(Parser)]
#[command(name = "incmax", version, about = "Incremental maximization: algorithms, checkers and lower bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the phase algorithm and/or greedy and report per-cardinality ratios.
    Run {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Algorithm::Both)]
        alg: Algorithm,
        /// Largest cardinality to report (default: the ground set size).
        #[arg(long)]
        kmax: Option<usize>,
        /// Assume the objective is alpha-augmentable and check greedy against its bound.
        #[arg(long)]
        alpha: Option<f64>,
        #[command(flatten)]
        out: Output,
        #[arg(long, env = BUDGET_ENV, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Check objective properties, optionally against expected verdicts.
    Verify {
        #[command(flatten)]
        source: Source,
        /// Property to check; repeatable. Default: all five, or those in the expectation file.
        #[arg(long = "property", value_parser = parse_property)]
        properties: Vec<Property>,
        /// Expectation file (JSON list of {property, verdict, witness?}) or `builtin`.
        #[arg(long)]
        expect: Option<String>,
        #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
        mode: ModeArg,
        /// Seed for sampled checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100_000)]
        trials: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Lower-bound computations for Region Choosing and the G_k family.
    Lowerbound {
        #[arg(long, value_enum)]
        mode: LowerBoundMode,
        #[arg(long, default_value_t = 2.18)]
        rho: f64,
        #[arg(long, default_value_t = 0.86)]
        beta: f64,
        /// Region counts for region-search; repeatable.
        #[arg(long = "regions", default_values_t = [5, 10, 20, 40])]
        regions: Vec<usize>,
        #[arg(long, default_value_t = 2)]
        kmin: usize,
        #[arg(long, default_value_t = 8)]
        kmax: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Write a generated instance as an instance file.
    Gen {
        #[arg(help = GENERATORS)]
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Named generator, e.g. `region:N=8,beta=0.86` or `gk:k=2`.
    #[arg(long = "gen")]
    generator: Option<String>,
    /// Instance file (JSON).
    #[arg(long)]
    instance: Option<PathBuf>,
}

impl Source {
    fn load(&self) -> Result<Generated> {
        match (&self.generator, &self.instance) {
            (Some(spec), _) => generate::generate(spec),
            (_, Some(path)) => generate::load(path),
            _ => unreachable!("clap enforces exactly one source"),
        }
    }
}

#[derive(Args)]
struct Output {
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

impl Output {
    fn emit(&self, text: &str) -> Result<()> {
        match &self.out {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| incmax::Error::input(format!("cannot write {}: {e}", path.display())).into()),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Phase,
    Greedy,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Violated,
}

fn parse_property(s: &str) -> Result<Property, String> {
    s.parse().map_err(|e: incmax::Error| e.to_string())
}

fn execute(cli: Cli) -> Result<Status> {
    match cli.command {
        Command::Run {
            source,
            alg,
            kmax,
            alpha,
            out,
            budget,
        } => {
            let g = source.load()?;
            let opts = RunOptions {
                alg,
                k_max: kmax,
                budget,
                alpha,
            };
            let (text, status) = run::cmd_run(&g.file, &g.label, &opts, out.format)?;
            out.emit(&text)?;
            Ok(status)
        }
        Command::Verify {
            source,
            properties,
            expect,
            mode,
            seed,
            trials,
            out,
        } => {
            let g = source.load()?;
            let expected = expect.map(|e| verify::load_expectations(&e, g.fixture)).transpose()?;
            let properties = match (&expected, properties.is_empty()) {
                (_, false) => properties,
                (Some(list), true) => list.iter().map(|e| e.property.clone()).collect(),
                (None, true) => verify::default_properties(),
            };
            let opts = VerifyOptions {
                properties,
                mode,
                seed,
                trials,
            };
            let (text, status) = verify::cmd_verify(&g.file, &g.label, &opts, expected.as_deref(), out.format)?;
            out.emit(&text)?;
            Ok(status)
        }
        Command::Lowerbound {
            mode,
            rho,
            beta,
            regions,
            kmin,
            kmax,
            out,
        } => {
            let opts = LowerBoundOptions {
                mode,
                rho,
                beta,
                regions,
                k_min: kmin,
                k_max: kmax,
            };
            let (text, status) = lowerbound::cmd_lowerbound(&opts, out.format)?;
            out.emit(&text)?;
            Ok(status)
        }
        Command::Gen { spec, out } => {
            let text = generate::generate(&spec)?.file.to_json() + "\n";
            Output { out, format: Format::Json }.emit(&text)?;
            Ok(Status::Ok)
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.chain().find_map(|e| e.downcast_ref::<incmax::Error>()) {
        Some(e) if e.is_resource() => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Violated) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
