//! Session language, command-line driver and report formats for `daolab-core`.

pub mod cli;
pub mod diag;
pub mod report;
pub mod session;
pub mod syntax;
