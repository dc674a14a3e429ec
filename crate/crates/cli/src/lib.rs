//! Batch front end for the `hicent` measure library: the `stats`,
//! `measures`, and `pipeline` commands, their configuration, and the
//! output-tree/manifest writers. The binary in `main.rs` is a thin
//! argument-parsing shell over [`run`].

pub mod config;
pub mod output;
pub mod run;

pub use config::{ConfigError, OutputFormat, RunConfig};
