//! Text file format and command-line front end for bipolar fuzzy graphs.

mod cli;
pub mod format;

pub use cli::{run_cli, CliOutput};
pub use format::{parse_graph, parse_graph_bytes, write_graph, FormatError};
