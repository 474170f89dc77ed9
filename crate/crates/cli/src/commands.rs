//! The `find`, `gen` and `bench` commands, independent of argument parsing.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use densityseek_bench::{random_bitstream, run_bench, BenchConfig, BenchReport};
use densityseek_core::{parse_ratio, solve, Algorithm, Problem, Ratio, SpanResult};
use serde::Serialize;

use crate::error::CliError;
use crate::ingest::{encode, ingest, AmbiguousPolicy, Format};

/// Name reported when theta is 0 or 1 and no search is needed.
pub const TRIVIAL_NAME: &str = "trivial";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgorithmChoice {
    /// The matrix solver for fixed density, the position sweep for bounded.
    Auto,
    Named(Algorithm),
}

impl AlgorithmChoice {
    pub fn resolve(self, problem: Problem) -> Algorithm {
        match self {
            AlgorithmChoice::Auto => Algorithm::preferred(problem),
            AlgorithmChoice::Named(a) => a,
        }
    }
}

impl FromStr for AlgorithmChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "auto" {
            Ok(AlgorithmChoice::Auto)
        } else {
            s.parse().map(AlgorithmChoice::Named)
        }
    }
}

impl fmt::Display for AlgorithmChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgorithmChoice::Auto => f.write_str("auto"),
            AlgorithmChoice::Named(a) => a.fmt(f),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FindRequest {
    pub problem: Problem,
    /// Ratio text such as `3/5`.
    pub theta: String,
    pub input: PathBuf,
    pub format: Format,
    pub algorithm: AlgorithmChoice,
    pub ambiguous: AmbiguousPolicy,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FindOutcome {
    pub span: SpanResult,
    pub theta: Ratio,
    /// Solver that produced the answer, or [`TRIVIAL_NAME`].
    pub algorithm: &'static str,
    pub n: usize,
    pub warnings: Vec<String>,
}

#[derive(Serialize)]
struct FindJson<'a> {
    start: Option<usize>,
    end: Option<usize>,
    length: usize,
    theta: String,
    algorithm: &'a str,
    n: usize,
}

impl FindOutcome {
    /// `start end length alpha/beta`, or `none`.
    pub fn line(&self) -> String {
        match self.span {
            Some(s) => format!("{} {} {} {}", s.start, s.end, s.len(), self.theta),
            None => "none".to_owned(),
        }
    }

    pub fn json(&self) -> String {
        serde_json::to_string(&FindJson {
            start: self.span.map(|s| s.start),
            end: self.span.map(|s| s.end),
            length: self.span.map_or(0, |s| s.len()),
            theta: self.theta.to_string(),
            algorithm: self.algorithm,
            n: self.n,
        })
        .expect("plain data serialises")
    }
}

pub fn run_find(req: &FindRequest) -> Result<FindOutcome, CliError> {
    let theta = parse_ratio(&req.theta)?;
    let algorithm = req.algorithm.resolve(req.problem);
    if !algorithm.supports(req.problem) {
        return Err(CliError::Usage(format!(
            "{algorithm} does not solve the {} problem",
            req.problem
        )));
    }
    let input = ingest(&req.input, req.format, req.ambiguous)?;
    let report = solve(&input.stream, theta, req.problem, algorithm)?;
    Ok(FindOutcome {
        span: report.span,
        theta,
        algorithm: if theta.is_trivial() { TRIVIAL_NAME } else { algorithm.name() },
        n: input.stream.len(),
        warnings: input.warnings,
    })
}

/// Writes `n` pseudo-random bits of density `density` to `out`.
pub fn run_gen(seed: u64, n: usize, density: &str, out: &Path, format: Format) -> Result<(), CliError> {
    let rho = parse_ratio(density)?;
    let stream = random_bitstream(seed, n, rho);
    let label = format!("densityseek seed={seed} length={n} density={rho}");
    std::fs::write(out, encode(&stream, format, &label)).map_err(|source| CliError::Io {
        path: out.to_owned(),
        source,
    })
}

/// Runs the benchmark and writes its CSV to `csv`, or returns it for
/// printing when `csv` is `None`.
pub fn run_bench_command(cfg: &BenchConfig, csv: Option<&Path>) -> Result<(BenchReport, String), CliError> {
    let report = run_bench(cfg)?;
    let text = report.to_csv_string()?;
    if let Some(path) = csv {
        std::fs::write(path, &text).map_err(|source| CliError::Io {
            path: path.to_owned(),
            source,
        })?;
    }
    Ok((report, text))
}

/// Parses a comma-separated list.
pub fn parse_list<T: FromStr>(text: &str) -> Result<Vec<T>, String>
where
    T::Err: fmt::Display,
{
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<T>().map_err(|e| format!("{s:?}: {e}")))
        .collect()
}
