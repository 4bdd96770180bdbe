//! Minimal RDF data model: terms, triples and an immutable set-semantics graph.

mod graph;
mod term;

pub use graph::Graph;
pub(crate) use term::is_absolute_iri;
pub use term::{normalize_lang, BlankNode, Iri, Literal, Subject, Term, Triple};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RdfError {
    #[error("not an absolute IRI: {0:?}")]
    InvalidIri(String),
    #[error("invalid language tag: {0:?}")]
    InvalidLanguageTag(String),
    #[error("invalid blank node label: {0:?}")]
    InvalidBlankNode(String),
    #[error("malformed triple: {0}")]
    MalformedTriple(String),
}
