//! File formats, the `tempex` command line and the benchmark harness.

pub mod bench;
mod cli;
pub mod format;

pub use bench::{bench_suite, to_csv, BenchError, BenchRow, Suite, CSV_HEADER};
pub use cli::{cli_main, report_text, stats_text, EXIT_INVALID, EXIT_OK, EXIT_USAGE};
pub use format::{parse_instance, parse_walk, write_instance, write_instance_spec_only, write_walk, FormatError};
