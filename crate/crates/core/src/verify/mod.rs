//! Verification suites, run configuration and machine-readable reports.

pub mod export;
pub mod report;
pub mod suites;

pub use export::{fmt_f64, json_document, report_csv, report_json, write_json, Table};
pub use report::{CheckRecord, RunConfig, Suite, VerificationReport, SCHEMA};
pub use suites::{run_suite, thread_cap, THREADS_ENV};
