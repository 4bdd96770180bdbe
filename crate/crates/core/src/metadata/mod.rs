//! Locating the ontology node and pulling bibliographic fields out of its
//! header.

mod acronym;
mod agent;
mod extract;

pub use acronym::derive_acronym;
pub use agent::{is_initials, normalize_person_name, Agent};
pub use extract::{extract_metadata, find_ontology_iri, resolve_agent_name, OntologyMetadata};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetadataError {
    #[error("no ontology node: no subject is typed <{expected}>")]
    NoOntologyNode { expected: String },
    #[error("cannot resolve a name for agent {0}")]
    UnresolvableAgent(String),
    #[error("empty name")]
    EmptyName,
    #[error("ontology has no title")]
    MissingTitle,
}
