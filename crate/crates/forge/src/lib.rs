//! Command-line front end for `resultant-core`: generator export to
//! Macaulay2, Singular, JSON and text, certification reports, and sampling.

pub mod cli;
pub mod export;
pub mod formats;

pub use cli::{run, run_with_env, Outcome};
