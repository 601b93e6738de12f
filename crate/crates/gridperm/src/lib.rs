//! Text and JSON formats for [`gridperm_core`], plus the `gridperm` command-line tool.

pub mod json;
pub mod text;
