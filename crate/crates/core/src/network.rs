//! Import and reference links between ontologies, and in-degree counts.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::citation::parse_canonical;
use crate::rdf::{Graph, Iri, Term};
use crate::vocab;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Imports,
    References,
}

impl EdgeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeKind::Imports => "imports",
            EdgeKind::References => "references",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Edge {
    pub from: Iri,
    pub to: Iri,
    pub kind: EdgeKind,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CitationGraph {
    pub nodes: BTreeSet<Iri>,
    pub edges: BTreeSet<Edge>,
}

/// A `dcterms:references` literal that did not parse as a canonical
/// citation, so contributes no edge.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct UnparsedReference {
    pub ontology: Iri,
    pub text: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Network {
    pub graph: CitationGraph,
    pub unparsed: Vec<UnparsedReference>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NetworkError {
    #[error("ontology <{0}> appears more than once in the corpus")]
    DuplicateOntology(String),
}

/// Builds the network over `(graph, ontology node)` pairs. The result does
/// not depend on corpus order.
pub fn build_network(corpus: &[(Graph, Iri)]) -> Result<Network, NetworkError> {
    let mut net = Network::default();
    for (_, onto) in corpus {
        if !net.graph.nodes.insert(onto.clone()) {
            return Err(NetworkError::DuplicateOntology(onto.as_str().to_string()));
        }
    }
    let imports = vocab::owl::imports();
    let references = vocab::dcterms::references();
    for (g, onto) in corpus {
        let node = Term::Iri(onto.clone());
        let mut add = |to: &Iri, kind| {
            net.graph.nodes.insert(to.clone());
            net.graph.edges.insert(Edge { from: onto.clone(), to: to.clone(), kind });
        };
        for t in g.objects(&node, &imports).into_iter().filter_map(Term::as_iri) {
            if t != onto {
                add(t, EdgeKind::Imports);
            }
        }
        for obj in g.objects(&node, &references) {
            match obj {
                Term::Iri(t) => add(t, EdgeKind::References),
                Term::Literal(l) => match parse_canonical(l.lexical()) {
                    Ok(r) => add(&r.uri, EdgeKind::References),
                    Err(_) => net.unparsed.push(UnparsedReference { ontology: onto.clone(), text: l.lexical().to_string() }),
                },
                Term::BlankNode(_) => {}
            }
        }
    }
    net.unparsed.sort();
    Ok(net)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Usage {
    pub imports: usize,
    pub references: usize,
}

/// Incoming edges per node, split by kind.
pub fn usage_counts(cg: &CitationGraph) -> BTreeMap<Iri, Usage> {
    let mut counts: BTreeMap<Iri, Usage> = cg.nodes.iter().map(|n| (n.clone(), Usage::default())).collect();
    for e in &cg.edges {
        let u = counts.entry(e.to.clone()).or_default();
        match e.kind {
            EdgeKind::Imports => u.imports += 1,
            EdgeKind::References => u.references += 1,
        }
    }
    counts
}

fn dot_id(iri: &Iri) -> String {
    format!("\"{}\"", iri.as_str().replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT text: imports edges solid, references edges dashed.
pub fn export_dot(cg: &CitationGraph) -> String {
    let mut out = String::from("digraph ontocite {\n");
    for n in &cg.nodes {
        out.push_str(&format!("  {};\n", dot_id(n)));
    }
    for e in &cg.edges {
        let style = match e.kind {
            EdgeKind::Imports => "solid",
            EdgeKind::References => "dashed",
        };
        out.push_str(&format!("  {} -> {} [label=\"{}\", style={style}];\n", dot_id(&e.from), dot_id(&e.to), e.kind.as_str()));
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct CountsReport<'a> {
    ontologies: usize,
    edges: usize,
    counts: BTreeMap<&'a str, Usage>,
    unparsed_references: &'a [UnparsedReference],
}

/// Pretty JSON: node and edge totals, per-node in-degrees, unparsed
/// reference texts.
pub fn counts_json(net: &Network) -> String {
    let counts = usage_counts(&net.graph);
    let report = CountsReport {
        ontologies: net.graph.nodes.len(),
        edges: net.graph.edges.len(),
        counts: counts.iter().map(|(k, v)| (k.as_str(), *v)).collect(),
        unparsed_references: &net.unparsed,
    };
    let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
    s.push('\n');
    s
}
