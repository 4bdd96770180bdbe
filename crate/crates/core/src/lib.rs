//! Ontology citation toolkit.
//!
//! Reads ontology headers (N-Triples, a Turtle subset), extracts the fields
//! needed to cite an ontology, renders and parses citations in the form
//!
//! ```text
//! Creator. (Date). Acronym: Full name. Version(revision). URI [formats]
//! ```
//!
//! checks citations for completeness, links ontologies and the publications
//! describing them, and builds import/reference networks over collections of
//! ontologies.

pub mod citation;
pub mod date;
pub mod metadata;
pub mod mutual;
pub mod network;
pub mod principles;
pub mod rdf;
pub mod syntax;
pub mod vocab;
