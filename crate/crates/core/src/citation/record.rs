use serde::{Deserialize, Serialize};

use super::CitationError;
use crate::date::is_iso_date;
use crate::metadata::{is_initials, Agent, OntologyMetadata};
use crate::rdf::Iri;
use crate::syntax::FormatLabel;

/// A complete ontology reference: creators, date, name, version, URI and
/// file formats.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CitationRecord {
    pub creators: Vec<Agent>,
    pub date: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub acronym: Option<String>,
    pub full_name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub version: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub revision: Option<String>,
    pub uri: Iri,
    #[serde(default)]
    pub formats: Vec<FormatLabel>,
}

/// Version tokens look like `2.3.1`, `v1.0`, `2014-08-28`: a leading digit
/// (optionally after `v`), no whitespace and no parentheses.
pub fn is_version_token(s: &str) -> bool {
    let body = s.strip_prefix(['v', 'V']).unwrap_or(s);
    body.starts_with(|c: char| c.is_ascii_digit()) && !s.contains(|c: char| c.is_whitespace() || c == '(' || c == ')')
}

pub(crate) fn is_revision_token(s: &str) -> bool {
    !s.is_empty() && !s.contains(|c: char| c.is_whitespace() || c == '(' || c == ')')
}

pub(crate) fn is_acronym_token(s: &str) -> bool {
    !s.is_empty() && !s.contains(|c: char| c.is_whitespace() || c == ':')
}

impl CitationRecord {
    /// Checks every record invariant.
    pub fn validate(&self) -> Result<(), CitationError> {
        if self.creators.is_empty() {
            return Err(CitationError::MissingCreator);
        }
        for a in &self.creators {
            let surname_ok = !a.surname.trim().is_empty() && a.surname.trim() == a.surname;
            let initials_ok = match &a.initials {
                Some(i) => !a.organization && is_initials(i),
                None => true,
            };
            if !surname_ok || !initials_ok {
                return Err(CitationError::InvalidCreator(a.rendered()));
            }
        }
        if !is_iso_date(&self.date) {
            return Err(CitationError::InvalidDate(self.date.clone()));
        }
        if let Some(a) = &self.acronym {
            if !is_acronym_token(a) {
                return Err(CitationError::InvalidAcronym(a.clone()));
            }
        }
        let name = &self.full_name;
        if name.is_empty() || name.trim() != name || name.contains(['\n', '\r']) {
            return Err(CitationError::MissingTitle);
        }
        if let Some(v) = &self.version {
            if !is_version_token(v) {
                return Err(CitationError::InvalidVersion(v.clone()));
            }
        }
        match (&self.version, &self.revision) {
            (None, Some(_)) => return Err(CitationError::RevisionWithoutVersion),
            (_, Some(r)) if !is_revision_token(r) => return Err(CitationError::InvalidRevision(r.clone())),
            _ => {}
        }
        for (i, f) in self.formats.iter().enumerate() {
            if self.formats[..i].contains(f) {
                return Err(CitationError::DuplicateFormat(*f));
            }
        }
        Ok(())
    }

    /// `ACRONYM: full name`, or just the full name.
    pub fn title(&self) -> String {
        match &self.acronym {
            Some(a) => format!("{a}: {}", self.full_name),
            None => self.full_name.clone(),
        }
    }

    /// `VERSION(REVISION)`, `VERSION`, or nothing.
    pub fn version_text(&self) -> Option<String> {
        self.version.as_ref().map(|v| match &self.revision {
            Some(r) => format!("{v}({r})"),
            None => v.clone(),
        })
    }
}

/// Assembles a record from extracted metadata and the acronym split.
///
/// Creator, date and title are mandatory. A version that is not a version
/// token (e.g. free text) is left out, as is a revision without a version.
pub fn build_record(meta: &OntologyMetadata, acronym_split: (Option<String>, String)) -> Result<CitationRecord, CitationError> {
    if meta.creators.is_empty() {
        return Err(CitationError::MissingCreator);
    }
    let date = meta.date.clone().ok_or(CitationError::MissingDate)?;
    let (acronym, full_name) = acronym_split;
    let full_name = full_name.split_whitespace().collect::<Vec<_>>().join(" ");
    if meta.title.is_none() || full_name.is_empty() {
        return Err(CitationError::MissingTitle);
    }
    let version = meta.version.clone().filter(|v| is_version_token(v));
    let revision = version.as_ref().and(meta.revision.clone()).filter(|r| is_revision_token(r));
    let record = CitationRecord {
        creators: meta.creators.clone(),
        date,
        acronym,
        full_name,
        version,
        revision,
        uri: meta.ontology_iri.clone(),
        formats: meta.format_label.into_iter().collect(),
    };
    record.validate()?;
    Ok(record)
}

/// A citation that may be missing pieces; the validator's input.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialCitation {
    #[serde(default)]
    pub creators: Vec<Agent>,
    #[serde(default)]
    pub date: Option<String>,
    #[serde(default)]
    pub acronym: Option<String>,
    #[serde(default)]
    pub full_name: Option<String>,
    #[serde(default)]
    pub version: Option<String>,
    #[serde(default)]
    pub revision: Option<String>,
    #[serde(default)]
    pub uri: Option<String>,
    #[serde(default)]
    pub formats: Vec<String>,
}

impl From<&CitationRecord> for PartialCitation {
    fn from(r: &CitationRecord) -> Self {
        PartialCitation {
            creators: r.creators.clone(),
            date: Some(r.date.clone()),
            acronym: r.acronym.clone(),
            full_name: Some(r.full_name.clone()),
            version: r.version.clone(),
            revision: r.revision.clone(),
            uri: Some(r.uri.as_str().to_string()),
            formats: r.formats.iter().map(|f| f.as_str().to_string()).collect(),
        }
    }
}

impl PartialCitation {
    /// Whatever an ontology header provides, without requiring any field.
    pub fn from_metadata(meta: &OntologyMetadata, acronym_split: Option<(Option<String>, String)>) -> Self {
        let (acronym, full_name) = match acronym_split {
            Some((a, f)) => (a, Some(f)),
            None => (None, meta.title.clone()),
        };
        PartialCitation {
            creators: meta.creators.clone(),
            date: meta.date.clone(),
            acronym,
            full_name,
            version: meta.version.clone(),
            revision: meta.revision.clone(),
            uri: Some(meta.ontology_iri.as_str().to_string()),
            formats: meta.format_label.iter().map(|f| f.as_str().to_string()).collect(),
        }
    }
}
