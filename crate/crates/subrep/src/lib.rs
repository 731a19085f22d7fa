//! File formats, JSON and DOT output, and the command-line front end for
//! `subrep-core`.

pub mod cli;
pub mod dot;
pub mod format;
pub mod json;

pub use cli::{run, run_with, Settings};
