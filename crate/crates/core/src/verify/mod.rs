//! Verification suites and the report they produce.
//!
//! Every check records the expected and computed values as strings together with
//! where the expected value comes from. Reports contain no timings, so identical
//! inputs serialize to identical bytes.

mod report;
mod suites;

pub use report::{Check, Metadata, Provenance, Section, Status, VerificationReport};
pub use suites::{run, Config, Suite};
