//! Reading and writing ontology files: N-Triples, a Turtle subset, and
//! format labelling.

mod format;
mod ntriples;
mod scanner;
mod turtle;

pub use format::{detect_format_label, FormatLabel, UnknownFormat, UnknownLabel};
pub use ntriples::{parse_ntriples, serialize_ntriples};
pub use turtle::parse_turtle;

use thiserror::Error;

/// First parse failure, 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}
