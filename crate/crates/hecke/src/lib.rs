//! Command-line front end for `hecke-core`: JSON formats and subcommands.

pub mod commands;
pub mod formats;
