//! Command-line front end for `cfz-core`: argument parsing, run
//! configuration, execution and JSON/CSV reporting.

pub mod cli;
pub mod config;
pub mod parse;
pub mod report;
pub mod run;
