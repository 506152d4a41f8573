//! File format, reports and command-line front end for `kanext-core`.

mod error;

pub mod cli;
pub mod dump;
pub mod format;
pub mod pipeline;
pub mod render;

pub use error::Error;
pub use format::{parse_presentation, print_presentation};
