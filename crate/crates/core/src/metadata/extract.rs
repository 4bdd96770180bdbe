use serde::Serialize;

use super::agent::{normalize_person_name, person_from_parts, Agent};
use super::MetadataError;
use crate::date::normalize_date;
use crate::rdf::{Graph, Iri, Literal, Term};
use crate::syntax::FormatLabel;
use crate::vocab::{self, dcterms, foaf, owl, rdf, schema};

/// Header fields as found in the file, before they become a citation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OntologyMetadata {
    pub ontology_iri: Iri,
    pub title: Option<String>,
    pub creators: Vec<Agent>,
    pub date: Option<String>,
    pub version: Option<String>,
    pub revision: Option<String>,
    pub format_label: Option<FormatLabel>,
    pub publication_refs: Vec<String>,
    /// Non-fatal findings: ambiguous ontology node, skipped values.
    pub warnings: Vec<String>,
}

impl OntologyMetadata {
    pub fn new(ontology_iri: Iri) -> Self {
        OntologyMetadata {
            ontology_iri,
            title: None,
            creators: Vec::new(),
            date: None,
            version: None,
            revision: None,
            format_label: None,
            publication_refs: Vec::new(),
            warnings: Vec::new(),
        }
    }
}

/// The subject of `?s rdf:type owl:Ontology`; with several candidates, the
/// lexicographically smallest plus a warning.
pub fn find_ontology_iri(g: &Graph) -> Result<(Iri, Option<String>), MetadataError> {
    let ty = Term::Iri(owl::ontology());
    let mut found: Vec<&Iri> = g
        .matches(None, Some(&rdf::type_()), Some(&ty))
        .into_iter()
        .filter_map(|t| t.subject.as_iri())
        .collect();
    found.sort();
    found.dedup();
    match found.as_slice() {
        [] => Err(MetadataError::NoOntologyNode {
            expected: owl::ontology().into_string(),
        }),
        [only] => Ok(((*only).clone(), None)),
        [first, rest @ ..] => {
            let others: Vec<&str> = rest.iter().map(|i| i.as_str()).collect();
            Ok((
                (*first).clone(),
                Some(format!(
                    "{} ontology nodes found; using {} (also: {})",
                    found.len(),
                    first.as_str(),
                    others.join(", ")
                )),
            ))
        }
    }
}

fn non_empty_literals<'a>(g: &'a Graph, node: &Term, p: &Iri) -> Vec<&'a Literal> {
    g.objects(node, p)
        .into_iter()
        .filter_map(Term::as_literal)
        .filter(|l| !l.lexical().trim().is_empty())
        .collect()
}

/// English first, then the smallest language tag, then untagged.
fn pick_by_language<'a>(lits: &[&'a Literal]) -> Option<&'a Literal> {
    let is_en = |l: &&&Literal| l.lang().is_some_and(|t| t == "en" || t.starts_with("en-"));
    if let Some(l) = lits.iter().find(is_en) {
        return Some(l);
    }
    let tagged = lits.iter().filter(|l| l.lang().is_some()).min_by(|a, b| a.lang().cmp(&b.lang()));
    tagged.or_else(|| lits.first()).copied()
}

/// First non-empty literal along a ladder of properties.
fn first_literal<'a>(g: &'a Graph, node: &Term, ladder: &[&str]) -> Option<&'a Literal> {
    vocab::ladder(ladder)
        .iter()
        .map(|p| non_empty_literals(g, node, p))
        .find(|v| !v.is_empty())
        .and_then(|v| pick_by_language(&v))
}

/// The first token shaped like a dotted number, else the whole value.
fn pick_version(value: &str) -> String {
    let dotted = |t: &&str| {
        let mut parts = t.split('.');
        parts.all(|p| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit()))
    };
    value
        .split_whitespace()
        .find(dotted)
        .map_or_else(|| value.trim().to_string(), str::to_string)
}

pub fn extract_metadata(g: &Graph, fmt: Option<FormatLabel>) -> Result<OntologyMetadata, MetadataError> {
    let (iri, warning) = find_ontology_iri(g)?;
    let node = Term::Iri(iri.clone());
    let mut meta = OntologyMetadata::new(iri);
    meta.warnings.extend(warning);
    meta.format_label = fmt;

    meta.title = first_literal(g, &node, vocab::TITLE_LADDER).map(|l| l.lexical().trim().to_string());

    // creators: every object of the first property that has any
    let creator_objects = vocab::ladder(vocab::CREATOR_LADDER)
        .iter()
        .map(|p| {
            g.objects(&node, p)
                .into_iter()
                .filter(|t| !matches!(t, Term::Literal(l) if l.lexical().trim().is_empty()))
                .collect::<Vec<_>>()
        })
        .find(|v| !v.is_empty())
        .unwrap_or_default();
    for obj in creator_objects {
        match resolve_agent_name(g, obj) {
            Ok(agent) => meta.creators.push(agent),
            Err(e) => meta.warnings.push(format!("creator skipped: {e}")),
        }
    }
    meta.creators.sort();
    meta.creators.dedup();

    'date: for p in vocab::ladder(vocab::DATE_LADDER) {
        for lit in non_empty_literals(g, &node, &p) {
            match normalize_date(lit.lexical()) {
                Some(d) => {
                    meta.date = Some(d);
                    break 'date;
                }
                None => meta.warnings.push(format!(
                    "ignored date {:?} on <{}>: not YYYY-MM-DD",
                    lit.lexical(),
                    p.as_str()
                )),
            }
        }
    }

    meta.version = first_literal(g, &node, vocab::VERSION_LADDER).map(|l| pick_version(l.lexical()));
    meta.revision = first_literal(g, &node, &[vocab::REVISION]).map(|l| l.lexical().trim().to_string());

    meta.publication_refs = non_empty_literals(g, &node, &dcterms::references())
        .into_iter()
        .map(|l| l.lexical().to_string())
        .collect();
    Ok(meta)
}

fn is_organization(g: &Graph, node: &Term) -> bool {
    g.objects(node, &rdf::type_()).into_iter().any(|t| {
        t.as_iri().is_some_and(|i| {
            *i == foaf::organization() || *i == schema::organization() || i.as_str() == schema::HTTPS_ORGANIZATION
        })
    })
}

/// Turns a creator value into an [`Agent`].
///
/// Literals are person names. Nodes are named by `foaf:name`, then
/// `rdfs:label`, then `foaf:givenName` + `foaf:familyName`; nodes typed as an
/// organization keep their full name.
pub fn resolve_agent_name(g: &Graph, t: &Term) -> Result<Agent, MetadataError> {
    if let Term::Literal(l) = t {
        return normalize_person_name(l.lexical());
    }
    let name = first_literal(g, t, vocab::AGENT_NAME_LADDER).map(|l| l.lexical().trim().to_string());
    if is_organization(g, t) {
        let name = name.or_else(|| {
            let given = first_literal(g, t, &[vocab::GIVEN_NAME]).map(|l| l.lexical().trim());
            let family = first_literal(g, t, &[vocab::FAMILY_NAME]).map(|l| l.lexical().trim());
            let joined: Vec<&str> = given.into_iter().chain(family).collect();
            (!joined.is_empty()).then(|| joined.join(" "))
        });
        return name
            .map(|n| Agent::organization(n.split_whitespace().collect::<Vec<_>>().join(" ")))
            .ok_or_else(|| MetadataError::UnresolvableAgent(t.to_string()));
    }
    if let Some(name) = name {
        return normalize_person_name(&name);
    }
    let given = first_literal(g, t, &[vocab::GIVEN_NAME]).map(Literal::lexical);
    match first_literal(g, t, &[vocab::FAMILY_NAME]) {
        Some(family) => person_from_parts(given, family.lexical()),
        None => match given {
            Some(given) => normalize_person_name(given),
            None => Err(MetadataError::UnresolvableAgent(t.to_string())),
        },
    }
}
