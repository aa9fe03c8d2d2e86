//! Text formats, catalog file and subcommands of the `cubic-waring` tool.

pub mod catalog_file;
pub mod commands;
pub mod parse;
pub mod report;
pub mod sample;
