//! Command-line front end for `cpstrata-core`: JSON/CSV formats, run
//! configuration and the verification suites.

pub mod cli;
pub mod config;
pub mod format;
pub mod verify;
