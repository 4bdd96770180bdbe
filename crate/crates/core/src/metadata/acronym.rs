use super::{MetadataError, OntologyMetadata};
use crate::rdf::{Graph, Iri, Term};
use crate::vocab;

const MAX_ACRONYM_CHARS: usize = 10;

/// Splits the ontology name into an optional acronym and the full name.
///
/// An explicit acronym property wins; otherwise a title such as
/// `PAV - Provenance, Authoring and Versioning` is split at the separator.
pub fn derive_acronym(meta: &OntologyMetadata, g: &Graph) -> Result<(Option<String>, String), MetadataError> {
    let title = meta
        .title
        .as_deref()
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .ok_or(MetadataError::MissingTitle)?;
    let node = Term::Iri(meta.ontology_iri.clone());
    if let Some(acronym) = explicit_acronym(g, &node) {
        let full_name = match split_title(title) {
            Some((token, rest)) if token.eq_ignore_ascii_case(&acronym) => rest,
            _ => title.to_string(),
        };
        return Ok((Some(acronym), full_name));
    }
    Ok(match split_title(title) {
        Some((acronym, rest)) => (Some(acronym), rest),
        None => (None, title.to_string()),
    })
}

fn explicit_acronym(g: &Graph, node: &Term) -> Option<String> {
    let last = vocab::ACRONYM_LADDER.len() - 1;
    vocab::ACRONYM_LADDER.iter().enumerate().find_map(|(i, p)| {
        let p = Iri::new(*p).expect("ladder IRI");
        g.objects(node, &p)
            .into_iter()
            .filter_map(Term::as_literal)
            .map(|l| l.lexical().trim())
            .find(|v| !v.is_empty() && !v.contains(':') && !v.contains(char::is_whitespace))
            .map(|v| if i == last { v.to_uppercase() } else { v.to_string() })
    })
}

/// `TOKEN - rest`, `TOKEN – rest` or `TOKEN: rest`, where TOKEN is a short
/// single word that is not all lowercase. A hyphen only separates when it is
/// preceded by whitespace, so `PROV-O` stays whole.
fn split_title(title: &str) -> Option<(String, String)> {
    for (i, c) in title.char_indices() {
        if c.is_whitespace() {
            let after = title[i..].trim_start();
            let sep = after.chars().next()?;
            if !matches!(sep, '-' | '–' | ':') {
                return None;
            }
            return accept(&title[..i], &after[sep.len_utf8()..]);
        }
        if c == ':' || c == '–' {
            return accept(&title[..i], &title[i + c.len_utf8()..]);
        }
    }
    None
}

fn accept(token: &str, rest: &str) -> Option<(String, String)> {
    let rest = rest.trim();
    let ok = !token.is_empty()
        && token.chars().count() <= MAX_ACRONYM_CHARS
        && token.chars().any(char::is_uppercase)
        && !token.contains(':')
        && !rest.is_empty();
    ok.then(|| (token.to_string(), rest.to_string()))
}
