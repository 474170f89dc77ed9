//! Longest substrings of a bitstream with a given density of ones.
//!
//! For a ratio `theta = alpha / beta` the *fixed* problem asks for the longest
//! substring whose density is exactly `theta`, and the *bounded* problem for
//! the longest one whose density is at least `theta`. Both reduce to
//! questions about the distance sequence `d_i = beta * rank_i - alpha * i`:
//! `x_a..x_b` has density `theta` iff `d_{a-1} = d_b`, and at least `theta`
//! iff `d_{a-1} <= d_b`.
//!
//! | solver | problems | time |
//! |---|---|---|
//! | [`brute_fixed`], [`brute_bounded`] | both | quadratic |
//! | [`skip_mismatch`] | fixed | input dependent |
//! | [`dist_map`], [`dist_sort`] | fixed (sort: both) | `n log n` |
//! | [`dist_matrix`] | fixed | linear |
//! | [`position_sweep`] | bounded | linear |
//!
//! Spans are 1-based and inclusive. Ratios 0 and 1 are answered by
//! [`trivial_extremes`]; [`solve`] routes them there automatically.

pub mod bits;
pub mod counters;
pub mod error;
pub mod loglinear;
pub mod matrix;
pub mod oracle;
pub mod prefix;
pub mod ratio;
pub mod solver;
pub mod span;
pub mod sweep;

pub use bits::{Bits, Bitstream};
pub use counters::SolverCounters;
pub use error::{DensityError, Result};
pub use loglinear::{
    dist_map, dist_map_counted, dist_sort, dist_sort_counted, skip_mismatch,
    skip_mismatch_counted, DistancePair, SortedPairs,
};
pub use matrix::{
    dist_matrix, dist_matrix_checked, dist_matrix_with_stats, lattice_coords, lattice_step,
    lattice_value, matrix_stats, ms_step_down, ms_step_right, CellHandle, CellRecord, Column,
    HealthError, Lattice, LatticeCoord, MappingMatrix, MatrixStats, MatrixWalk, ShadowMatrix,
};
pub use oracle::{brute_bounded, brute_counted, brute_fixed};
pub use prefix::{check_overflow, distance_sequence, rank_table, DistanceSeq, RankTable};
pub use ratio::{parse_ratio, Ratio};
pub use solver::{solve, Algorithm, Report};
pub use span::{span_len, trivial_extremes, verify_span, Problem, Span, SpanResult};
pub use sweep::{
    maximal_positions, minimal_positions, position_sweep, position_sweep_counted,
    ExtremalPositions,
};
