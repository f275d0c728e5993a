//! Document formats and report types for the `linrel` command-line tool.

pub mod doc;
pub mod report;
