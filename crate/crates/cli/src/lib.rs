//! Command-line front end: series parsing, formatting and subcommands.

pub mod app;
pub mod format;
pub mod parse;

pub use app::{run, Outcome};
pub use format::format_series;
pub use parse::{parse_series, ParseError};
