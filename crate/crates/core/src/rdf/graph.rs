use std::collections::BTreeSet;
use std::sync::Arc;

use super::{Iri, Term, Triple};

/// An immutable set of triples.
///
/// Iteration is ordered by the N-Triples spelling of subject, predicate and
/// object, so two graphs holding the same triples always iterate identically.
/// Cloning is cheap; [`Graph::insert`] copies on write.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    triples: Arc<BTreeSet<Triple>>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns a graph that also contains `t`.
    #[must_use]
    pub fn insert(&self, t: Triple) -> Graph {
        if self.triples.contains(&t) {
            return self.clone();
        }
        let mut triples = (*self.triples).clone();
        triples.insert(t);
        Graph {
            triples: Arc::new(triples),
        }
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn contains(&self, t: &Triple) -> bool {
        self.triples.contains(t)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Triple> {
        self.triples.iter()
    }

    /// All triples agreeing with every bound position; `None` is a wildcard.
    pub fn matches(&self, s: Option<&Term>, p: Option<&Iri>, o: Option<&Term>) -> Vec<&Triple> {
        self.triples
            .iter()
            .filter(|t| s.is_none_or(|s| t.subject.matches(s)))
            .filter(|t| p.is_none_or(|p| &t.predicate == p))
            .filter(|t| o.is_none_or(|o| &t.object == o))
            .collect()
    }

    /// Objects of `(s, p, ?)` in graph order.
    pub fn objects<'a>(&'a self, s: &Term, p: &Iri) -> Vec<&'a Term> {
        self.matches(Some(s), Some(p), None)
            .into_iter()
            .map(|t| &t.object)
            .collect()
    }
}

impl FromIterator<Triple> for Graph {
    fn from_iter<I: IntoIterator<Item = Triple>>(iter: I) -> Self {
        Graph {
            triples: Arc::new(iter.into_iter().collect()),
        }
    }
}

impl<'a> IntoIterator for &'a Graph {
    type Item = &'a Triple;
    type IntoIter = std::collections::btree_set::Iter<'a, Triple>;

    fn into_iter(self) -> Self::IntoIter {
        self.triples.iter()
    }
}
