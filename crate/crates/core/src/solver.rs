//! Uniform entry point over every solver.

use std::fmt;
use std::str::FromStr;

use crate::bits::Bitstream;
use crate::counters::SolverCounters;
use crate::error::{DensityError, Result};
use crate::loglinear::{dist_map_counted, dist_sort_counted, skip_mismatch_counted};
use crate::matrix::{dist_matrix_with_stats, MatrixStats};
use crate::oracle::brute_counted;
use crate::ratio::Ratio;
use crate::span::{trivial_extremes, Problem, SpanResult};
use crate::sweep::position_sweep_counted;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Brute,
    SkipMismatch,
    DistMap,
    DistSort,
    DistMatrix,
    PositionSweep,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Brute,
        Algorithm::SkipMismatch,
        Algorithm::DistMap,
        Algorithm::DistSort,
        Algorithm::DistMatrix,
        Algorithm::PositionSweep,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Brute => "brute",
            Algorithm::SkipMismatch => "skip-mismatch",
            Algorithm::DistMap => "dist-map",
            Algorithm::DistSort => "dist-sort",
            Algorithm::DistMatrix => "dist-matrix",
            Algorithm::PositionSweep => "position-sweep",
        }
    }

    pub fn supports(self, problem: Problem) -> bool {
        match self {
            Algorithm::Brute | Algorithm::DistSort => true,
            Algorithm::SkipMismatch | Algorithm::DistMap | Algorithm::DistMatrix => {
                problem == Problem::Fixed
            }
            Algorithm::PositionSweep => problem == Problem::Bounded,
        }
    }

    /// The fastest solver for `problem`.
    pub fn preferred(problem: Problem) -> Self {
        match problem {
            Problem::Fixed => Algorithm::DistMatrix,
            Problem::Bounded => Algorithm::PositionSweep,
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Algorithm::ALL.iter().map(|a| a.name()).collect();
                format!("unknown algorithm {s:?} (expected one of {})", names.join(", "))
            })
    }
}

/// Outcome of one solver run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Report {
    pub span: SpanResult,
    /// The solver's characteristic operation count.
    pub ops: u64,
    /// Bytes held by the solver's working structures at their largest.
    pub alloc_bytes: u64,
    pub counters: SolverCounters,
    /// Present for the matrix solver only.
    pub matrix: Option<MatrixStats>,
}

/// Runs `algorithm` on `stream`. Ratios 0 and 1 are answered directly,
/// whatever the algorithm.
pub fn solve(stream: &Bitstream, ratio: Ratio, problem: Problem, algorithm: Algorithm) -> Result<Report> {
    if !algorithm.supports(problem) {
        return Err(DensityError::Unsupported {
            algorithm: algorithm.name(),
            problem: problem.name(),
        });
    }
    let mut counters = SolverCounters::default();
    if ratio.is_trivial() {
        return Ok(Report {
            span: trivial_extremes(stream, ratio, problem)?,
            ops: stream.len() as u64,
            alloc_bytes: 0,
            counters,
            matrix: None,
        });
    }
    let mut matrix = None;
    let span = match algorithm {
        Algorithm::Brute => brute_counted(stream, ratio, problem, &mut counters)?,
        Algorithm::SkipMismatch => skip_mismatch_counted(stream, ratio, &mut counters)?,
        Algorithm::DistMap => dist_map_counted(stream, ratio, &mut counters)?,
        Algorithm::DistSort => dist_sort_counted(stream, ratio, problem, &mut counters)?,
        Algorithm::DistMatrix => {
            let (span, stats) = dist_matrix_with_stats(stream, ratio)?;
            matrix = Some(stats);
            counters.peak_bytes = stats.peak_bytes;
            span
        }
        Algorithm::PositionSweep => position_sweep_counted(stream, ratio, &mut counters)?,
    };
    let ops = match algorithm {
        Algorithm::Brute | Algorithm::DistSort => counters.comparisons,
        Algorithm::SkipMismatch => counters.window_advances,
        Algorithm::DistMap => counters.map_operations,
        Algorithm::DistMatrix => matrix.map_or(0, |m| m.walk_links_followed),
        Algorithm::PositionSweep => counters.positions_scanned,
    };
    Ok(Report {
        span,
        ops,
        alloc_bytes: counters.peak_bytes,
        counters,
        matrix,
    })
}
