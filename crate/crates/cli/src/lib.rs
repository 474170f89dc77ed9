//! Library side of the `densityseek` command: stream formats and commands.

pub mod commands;
pub mod error;
pub mod ingest;

pub use commands::{
    parse_list, run_bench_command, run_find, run_gen, AlgorithmChoice, FindOutcome, FindRequest,
    TRIVIAL_NAME,
};
pub use error::CliError;
pub use ingest::{decode, encode, ingest, AmbiguousPolicy, Format, Ingested};
