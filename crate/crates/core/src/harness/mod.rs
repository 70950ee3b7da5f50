//! Ideal documents, commands and reports.

pub mod commands;
pub mod eval;
pub mod parser;
pub mod random;
pub mod report;
pub mod reproduce;
pub mod sweep;

pub use commands::{run_command, Command, Options, VERIFY_IDS};
pub use eval::{Environment, Value};
pub use parser::{parse_ideal_document, IdealDocument};
pub use random::random_ideal;
pub use report::{ExitCode, RunReport};
pub use reproduce::reproduce_paper;
pub use sweep::{run_suite, Suite, SweepSummary};
