use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use densityseek::{
    run_bench_command, run_find, run_gen, AlgorithmChoice, AmbiguousPolicy, CliError,
    FindRequest, Format,
};
use densityseek_bench::BenchConfig;
use densityseek_core::{Algorithm, Problem, Ratio};

/// Find the longest substring of a bitstream with a given density of ones.
#[derive(Parser)]
#[command(name = "densityseek", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report the longest substring with density exactly (fixed) or at
    /// least (bounded) theta.
    Find {
        #[arg(long)]
        problem: Problem,
        /// Target density, e.g. 3/5.
        #[arg(long)]
        theta: String,
        #[arg(long)]
        input: PathBuf,
        /// ascii, packed or fasta.
        #[arg(long)]
        format: Format,
        /// brute, skip-mismatch, dist-map, dist-sort, dist-matrix,
        /// position-sweep or auto.
        #[arg(long, default_value = "auto")]
        algorithm: AlgorithmChoice,
        /// Print a JSON object instead of the text line.
        #[arg(long)]
        json: bool,
        /// How FASTA bases other than ACGT are read: zero, one or error.
        #[arg(long, default_value = "zero")]
        ambiguous: AmbiguousPolicy,
    },
    /// Write a pseudo-random stream.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        length: usize,
        /// Probability of a one, e.g. 1/2.
        #[arg(long)]
        density: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        format: Format,
    },
    /// Time solvers on generated streams and report CSV.
    Bench {
        /// Comma-separated stream lengths.
        #[arg(long, value_delimiter = ',', required = true)]
        lengths: Vec<usize>,
        /// Comma-separated target densities.
        #[arg(long, value_delimiter = ',', required = true)]
        thetas: Vec<Ratio>,
        /// Comma-separated solver names.
        #[arg(long, value_delimiter = ',', required = true)]
        algorithms: Vec<Algorithm>,
        #[arg(long, default_value_t = 1)]
        repeats: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Density of ones in the generated streams.
        #[arg(long, default_value = "1/2")]
        density: Ratio,
        #[arg(long, default_value = "fixed")]
        problem: Problem,
        /// Output file; the CSV goes to standard output when omitted.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Find {
            problem,
            theta,
            input,
            format,
            algorithm,
            json,
            ambiguous,
        } => {
            let req = FindRequest {
                problem,
                theta,
                input,
                format,
                algorithm,
                ambiguous,
            };
            let outcome = run_find(&req)?;
            for w in &outcome.warnings {
                eprintln!("warning: {w}");
            }
            if json {
                println!("{}", outcome.json());
            } else {
                println!("{}", outcome.line());
            }
        }
        Command::Gen {
            seed,
            length,
            density,
            out,
            format,
        } => run_gen(seed, length, &density, &out, format)?,
        Command::Bench {
            lengths,
            thetas,
            algorithms,
            repeats,
            seed,
            density,
            problem,
            csv,
        } => {
            let cfg = BenchConfig {
                lengths,
                thetas,
                algorithms,
                repeats,
                seed,
                rho: density,
                problem,
            };
            let (report, text) = run_bench_command(&cfg, csv.as_deref())?;
            for a in &report.skipped {
                eprintln!("warning: skipped {a}, which does not solve the {problem} problem");
            }
            if csv.is_none() {
                print!("{text}");
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("densityseek: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
