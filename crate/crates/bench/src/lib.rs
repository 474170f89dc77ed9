//! Deterministic random streams and a comparative benchmark harness.

pub mod harness;
pub mod rng;

pub use harness::{run_bench, BenchConfig, BenchError, BenchRecord, BenchReport, GroupMean, CSV_HEADER};
pub use rng::{case_seed, mix, random_bitstream, SplitMix64};
