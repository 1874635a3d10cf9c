//! Election files, result documents and the command line.

pub mod cli;
pub mod document;
pub mod format;

pub use document::{committee_value, committees_value, ResultDocument, SCHEMA};
pub use format::{parse_election, serialize_election};
