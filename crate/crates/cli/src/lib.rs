//! Output formats and verification suites behind the `lcount` binary.

pub mod format;
pub mod suites;

pub use format::{emit_table, TableDoc, TableFormat};
pub use suites::{run_suite, Suite, SuiteParams};
