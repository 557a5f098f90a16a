//! JSON formats, verification suites and the command-line front end for `spincactus`.

#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod checks;
pub mod cli;
mod error;
pub mod formats;
pub mod suites;

pub use error::{ToolError, ToolResult};
