//! Command-line front end: run configuration, figure commands, output
//! writers and the validation suite behind `lgdot validate`.

pub mod commands;
pub mod config;
pub mod error;
pub mod figures;
pub mod output;
pub mod svg;
pub mod validation;

pub use config::{parse_config, serialize_config, Format, ParsedConfig, RunConfig, SweepSpec};
pub use error::{CliError, CliResult};
pub use figures::{FigureId, FigureSpec};
