use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// File-format tag carried in the bracketed tail of a citation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FormatLabel {
    #[serde(rename = "rdf/xml")]
    RdfXml,
    #[serde(rename = "owl/xml")]
    OwlXml,
    #[serde(rename = "obo")]
    Obo,
    #[serde(rename = "n3")]
    N3,
    #[serde(rename = "turtle")]
    Turtle,
    #[serde(rename = "n-triples")]
    NTriples,
}

impl FormatLabel {
    pub const ALL: [FormatLabel; 6] = [
        FormatLabel::RdfXml,
        FormatLabel::OwlXml,
        FormatLabel::Obo,
        FormatLabel::N3,
        FormatLabel::Turtle,
        FormatLabel::NTriples,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FormatLabel::RdfXml => "rdf/xml",
            FormatLabel::OwlXml => "owl/xml",
            FormatLabel::Obo => "obo",
            FormatLabel::N3 => "n3",
            FormatLabel::Turtle => "turtle",
            FormatLabel::NTriples => "n-triples",
        }
    }
}

impl fmt::Display for FormatLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown format label {0:?}")]
pub struct UnknownLabel(pub String);

impl FromStr for FormatLabel {
    type Err = UnknownLabel;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FormatLabel::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| UnknownLabel(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown format: no content or extension rule matched {filename:?}")]
pub struct UnknownFormat {
    pub filename: String,
}

const OWL_NS: &str = "http://www.w3.org/2002/07/owl#";

/// Labels a file from its name and the first (at most 2048) bytes of content.
///
/// Content sniffing wins over the extension. No rule matching is an error.
pub fn detect_format_label(filename: &str, content_prefix: &str) -> Result<FormatLabel, UnknownFormat> {
    let head = match content_prefix.char_indices().nth(2048) {
        Some((i, _)) => &content_prefix[..i],
        None => content_prefix,
    };
    if head.contains("<?xml") {
        if head.contains("rdf:RDF") {
            return Ok(FormatLabel::RdfXml);
        }
        if head.contains(OWL_NS) && (head.contains("<Ontology") || head.contains(":Ontology")) {
            return Ok(FormatLabel::OwlXml);
        }
    }
    if head.trim_start_matches('\u{feff}').trim_start().starts_with("format-version:") {
        return Ok(FormatLabel::Obo);
    }
    let ext = std::path::Path::new(filename)
        .extension()
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase);
    match ext.as_deref() {
        Some("nt") => Ok(FormatLabel::NTriples),
        Some("ttl") => Ok(FormatLabel::Turtle),
        Some("n3") => Ok(FormatLabel::N3),
        Some("owl" | "rdf") => Ok(FormatLabel::RdfXml),
        Some("obo") => Ok(FormatLabel::Obo),
        _ => Err(UnknownFormat {
            filename: filename.to_string(),
        }),
    }
}
