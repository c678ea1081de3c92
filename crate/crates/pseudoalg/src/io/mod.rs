//! The `.pa` text format and JSON reports.

pub mod pa;
pub mod report;

pub use pa::{parse, parse_algebra, print, print_algebra, AlgebraFile, ParseError};
