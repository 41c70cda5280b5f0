//! Command-line front end: a small language for varieties and bundles, and
//! the `chern`, `todd`, `euler`, `index` and `report` subcommands.

pub mod ast;
pub mod commands;
pub mod eval;
pub mod output;
pub mod parser;
pub mod report;

pub use ast::{BundleExpr, Twist};
pub use commands::{run, CliError};
pub use parser::{parse_bundle, parse_variety, ParseError, VarietyError};
