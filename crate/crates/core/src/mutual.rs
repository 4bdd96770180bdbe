//! Mutual citation: publication references stored in an ontology header, and
//! the ontology's citation found in a publication's reference list.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::citation::{render_canonical, CitationRecord};
use crate::rdf::{Graph, Iri, Literal, RdfError, Subject, Term, Triple};
use crate::vocab;

pub const DEFAULT_THRESHOLD: f64 = 0.6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MutualError {
    #[error("<{0}> is not typed owl:Ontology in this graph")]
    NotOntologyNode(String),
    #[error("empty reference text")]
    EmptyReference,
    #[error(transparent)]
    Rdf(#[from] RdfError),
}

fn is_ontology_node(g: &Graph, onto: &Iri) -> bool {
    let node = Term::Iri(onto.clone());
    let ontology = Term::Iri(vocab::owl::ontology());
    !g.matches(Some(&node), Some(&vocab::rdf::type_()), Some(&ontology)).is_empty()
}

/// Adds `onto dcterms:references "ref_text"@lang`. Injecting the same text
/// twice leaves the graph unchanged.
pub fn inject_reference(g: &Graph, onto: &Iri, ref_text: &str, lang: &str) -> Result<Graph, MutualError> {
    if !is_ontology_node(g, onto) {
        return Err(MutualError::NotOntologyNode(onto.as_str().to_string()));
    }
    if ref_text.trim().is_empty() {
        return Err(MutualError::EmptyReference);
    }
    let object = Term::Literal(Literal::with_lang(ref_text, lang)?);
    Ok(g.insert(Triple::new(Subject::Iri(onto.clone()), vocab::dcterms::references(), object)))
}

fn literal_objects(g: &Graph, onto: &Iri, p: &Iri) -> Vec<(String, Option<String>)> {
    g.objects(&Term::Iri(onto.clone()), p)
        .into_iter()
        .filter_map(Term::as_literal)
        .map(|l| (l.lexical().to_string(), l.lang().map(str::to_string)))
        .collect()
}

/// `(text, lang)` of every `dcterms:references` literal on `onto`.
pub fn list_references(g: &Graph, onto: &Iri) -> Vec<(String, Option<String>)> {
    literal_objects(g, onto, &vocab::dcterms::references())
}

/// Whether the ontology header points at a publication.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OntologySide {
    pub references: Vec<(String, Option<String>)>,
    pub warnings: Vec<String>,
}

impl OntologySide {
    pub fn holds(&self) -> bool {
        !self.references.is_empty()
    }
}

/// `dcterms:references` values, plus legacy `dc:relation` literals (with a
/// warning each).
pub fn check_ontology_side(g: &Graph, onto: &Iri) -> OntologySide {
    let mut references = list_references(g, onto);
    let mut warnings = Vec::new();
    for r in literal_objects(g, onto, &vocab::dc::relation()) {
        warnings.push(format!("reading dc:relation value as a publication reference: {:?}", r.0));
        references.push(r);
    }
    OntologySide { references, warnings }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatchResult {
    pub found: bool,
    pub matched_line: Option<String>,
    pub similarity: f64,
}

/// Looks for the record's canonical citation in a reference list.
///
/// A reference matches if it equals the canonical string, or if it mentions
/// the record's URI and year and its token Jaccard similarity to the
/// canonical string reaches `threshold`. The reported similarity belongs to
/// the matching reference, or to the most similar one when none matches.
pub fn check_publication_side(reference_list_text: &str, r: &CitationRecord, threshold: f64) -> MatchResult {
    let canonical = render_canonical(r);
    let canonical_tokens = tokens(&canonical);
    let year = &r.date[..4.min(r.date.len())];

    let mut best = MatchResult { found: false, matched_line: None, similarity: 0.0 };
    for line in reference_lines(reference_list_text) {
        let similarity = jaccard(&canonical_tokens, &tokens(&line));
        let found = line == canonical || (mentions_uri(&line, r.uri.as_str()) && line.contains(year) && similarity >= threshold);
        if found {
            let similarity = if line == canonical { 1.0 } else { similarity };
            return MatchResult { found, matched_line: Some(line), similarity };
        }
        if similarity > best.similarity {
            best.similarity = similarity;
        }
    }
    best
}

/// One reference per line, or per block when the text uses blank lines
/// between references. Whitespace is collapsed and list markers dropped.
pub fn reference_lines(text: &str) -> Vec<String> {
    let has_blank = text.lines().any(|l| l.trim().is_empty()) && text.lines().filter(|l| !l.trim().is_empty()).count() > 1;
    let chunks: Vec<String> = if has_blank {
        let mut blocks = vec![String::new()];
        for l in text.lines() {
            if l.trim().is_empty() {
                blocks.push(String::new());
            } else {
                let b = blocks.last_mut().unwrap();
                b.push(' ');
                b.push_str(l);
            }
        }
        blocks
    } else {
        text.lines().map(str::to_string).collect()
    };
    chunks
        .iter()
        .map(|c| strip_marker(&c.split_whitespace().collect::<Vec<_>>().join(" ")).to_string())
        .filter(|c| !c.is_empty())
        .collect()
}

fn strip_marker(line: &str) -> &str {
    let Some((first, rest)) = line.split_once(' ') else {
        return line;
    };
    let numbered = |s: &str, open: &str, close: &str| {
        s.strip_prefix(open)
            .and_then(|s| s.strip_suffix(close))
            .is_some_and(|n| !n.is_empty() && n.chars().all(|c| c.is_ascii_digit()))
    };
    let is_marker = matches!(first, "-" | "*" | "•" | "→" | "->" | "=>" | "⟶")
        || numbered(first, "[", "]")
        || numbered(first, "(", ")")
        || numbered(first, "", ".");
    if is_marker {
        rest
    } else {
        line
    }
}

fn mentions_uri(line: &str, uri: &str) -> bool {
    line.split_whitespace().any(|t| {
        let t = t.trim_end_matches(['.', ',', ';']);
        let t = t.trim_start_matches(['<', '(', '[']).trim_end_matches(['>', ')', ']']);
        t == uri
    })
}

/// Lowercased whitespace tokens with everything but letters and digits
/// removed.
pub fn tokens(s: &str) -> BTreeSet<String> {
    s.split_whitespace()
        .map(|t| t.chars().filter(|c| c.is_alphanumeric()).flat_map(char::to_lowercase).collect::<String>())
        .filter(|t| !t.is_empty())
        .collect()
}

pub fn jaccard(a: &BTreeSet<String>, b: &BTreeSet<String>) -> f64 {
    let union = a.union(b).count();
    if union == 0 {
        return 0.0;
    }
    a.intersection(b).count() as f64 / union as f64
}
