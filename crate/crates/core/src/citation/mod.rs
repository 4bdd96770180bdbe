//! The citation record, its canonical plain-text form and exchange formats.

mod bibtex;
mod canonical;
mod json;
mod record;

pub use bibtex::render_bibtex;
pub use canonical::{parse_canonical, parse_partial, render_canonical, render_creators, CitationParseError, Element};
pub use json::{parse_json, render_json};
pub use record::{build_record, is_version_token, CitationRecord, PartialCitation};

use thiserror::Error;

use crate::syntax::FormatLabel;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CitationError {
    #[error("missing creator")]
    MissingCreator,
    #[error("missing date")]
    MissingDate,
    #[error("missing title")]
    MissingTitle,
    #[error("invalid creator {0:?}")]
    InvalidCreator(String),
    #[error("invalid date {0:?}, expected YYYY-MM-DD")]
    InvalidDate(String),
    #[error("invalid acronym {0:?}")]
    InvalidAcronym(String),
    #[error("invalid version {0:?}")]
    InvalidVersion(String),
    #[error("invalid revision {0:?}")]
    InvalidRevision(String),
    #[error("revision given without a version")]
    RevisionWithoutVersion,
    #[error("duplicate format label {0}")]
    DuplicateFormat(FormatLabel),
    #[error("invalid JSON record: {0}")]
    Json(String),
}
