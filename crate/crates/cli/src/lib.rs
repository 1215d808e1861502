//! Library surface of the command-line front end: document schemas, verdict
//! aggregation and report rendering, kept separate from argument parsing so
//! tests can drive them directly.

pub mod report;
pub mod scenario;
pub mod verdict;
