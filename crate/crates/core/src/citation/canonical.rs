use std::fmt;

use serde::Serialize;

use super::record::{is_acronym_token, is_revision_token, is_version_token};
use super::{CitationRecord, PartialCitation};
use crate::date::is_iso_date;
use crate::metadata::{is_initials, Agent};
use crate::rdf::Iri;
use crate::syntax::FormatLabel;

/// Renders `CREATORS (DATE). TITLE. [VERSION[(REVISION)]. ]URI[ [FORMATS]]`.
pub fn render_canonical(r: &CitationRecord) -> String {
    let mut out = format!("{} ({}). {}. ", render_creators(&r.creators), r.date, r.title());
    if let Some(v) = r.version_text() {
        out.push_str(&v);
        out.push_str(". ");
    }
    out.push_str(r.uri.as_str());
    if !r.formats.is_empty() {
        let labels: Vec<&str> = r.formats.iter().map(|f| f.as_str()).collect();
        out.push_str(&format!(" [{}]", labels.join(", ")));
    }
    out
}

/// `A, B and C`: agents joined with ", " except " and " before the last.
pub fn render_creators(agents: &[Agent]) -> String {
    let names: Vec<String> = agents.iter().map(Agent::rendered).collect();
    match names.split_last() {
        None => String::new(),
        Some((last, [])) => last.clone(),
        Some((last, rest)) => format!("{} and {last}", rest.join(", ")),
    }
}

/// The template element a parse stopped at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Element {
    Creators,
    Date,
    Title,
    Source,
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Element::Creators => "creators",
            Element::Date => "date",
            Element::Title => "title",
            Element::Source => "source",
        })
    }
}

/// `position` counts characters into the whitespace-normalized input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("at {position}: expected {element}: {message}")]
pub struct CitationParseError {
    pub position: usize,
    pub element: Element,
    pub message: String,
}

struct Parsed {
    text: String,
    partial: PartialCitation,
    date_at: usize,
    title_at: usize,
    uri_at: usize,
}

impl Parsed {
    fn fail(&self, byte: usize, element: Element, message: impl Into<String>) -> CitationParseError {
        CitationParseError { position: self.text[..byte].chars().count(), element, message: message.into() }
    }
}

/// Parses a canonical citation back into a record.
///
/// Also accepts `VERSION, URI` instead of `VERSION. URI`, a URI wrapped in
/// angle brackets, and arbitrary runs of whitespace.
pub fn parse_canonical(s: &str) -> Result<CitationRecord, CitationParseError> {
    let p = split(s, false)?;
    let c = &p.partial;
    if c.creators.is_empty() {
        return Err(p.fail(0, Element::Creators, "no creators before the date"));
    }
    let date = c.date.clone().unwrap_or_default();
    if !is_iso_date(&date) {
        return Err(p.fail(p.date_at, Element::Date, format!("{date:?} is not a YYYY-MM-DD date")));
    }
    let full_name = c.full_name.clone().ok_or_else(|| p.fail(p.title_at, Element::Title, "empty title"))?;
    let uri = c.uri.as_deref().ok_or_else(|| p.fail(p.uri_at, Element::Source, "no URI after the title"))?;
    let uri = Iri::new(uri).map_err(|_| p.fail(p.uri_at, Element::Source, format!("{uri:?} is not an absolute URI")))?;
    let mut formats = Vec::new();
    for label in &c.formats {
        let f: FormatLabel = label.parse().map_err(|_| p.fail(p.uri_at, Element::Source, format!("unknown format label {label:?}")))?;
        if !formats.contains(&f) {
            formats.push(f);
        }
    }
    let record = CitationRecord {
        creators: c.creators.clone(),
        date,
        acronym: c.acronym.clone(),
        full_name,
        version: c.version.clone(),
        revision: c.revision.clone(),
        uri,
        formats,
    };
    record.validate().map_err(|e| p.fail(0, Element::Creators, e.to_string()))?;
    Ok(record)
}

/// Best-effort split of a citation-like string, keeping whatever pieces are
/// recognizable. Only a missing parenthesized date group is fatal.
pub fn parse_partial(s: &str) -> Result<PartialCitation, CitationParseError> {
    split(s, true).map(|p| p.partial)
}

fn split(s: &str, lenient: bool) -> Result<Parsed, CitationParseError> {
    let text = s.split_whitespace().collect::<Vec<_>>().join(" ");
    let mut p = Parsed { partial: PartialCitation::default(), date_at: 0, title_at: 0, uri_at: 0, text };
    let Some((open, close)) = find_date(&p.text, lenient) else {
        let at = p.text.find('(').unwrap_or(p.text.len());
        return Err(p.fail(at, Element::Date, "no \"(YYYY-MM-DD).\" date group"));
    };
    let text = p.text.clone();
    p.date_at = open;
    p.partial.date = Some(text[open + 1..close].trim().to_string());
    p.partial.creators = parse_creators(text[..open].trim());

    // Skip ")." and the following space.
    let after = close + 2;
    if after < text.len() && !text[after..].starts_with(' ') {
        return Err(p.fail(after, Element::Title, "expected a space after the date"));
    }
    let start = (after + 1).min(text.len());
    p.title_at = start;
    let mut rest = &text[start..];

    if rest.ends_with(']') {
        if let Some(i) = rest.rfind(" [") {
            let inner = &rest[i + 2..rest.len() - 1];
            p.partial.formats = inner.split(',').map(str::trim).filter(|l| !l.is_empty()).map(str::to_string).collect();
            rest = &rest[..i];
        }
    }

    let (head, token) = match rest.rsplit_once(' ') {
        Some((h, t)) => (h, t),
        None => ("", rest),
    };
    let head = if looks_like_uri(token) {
        p.uri_at = start + head.len() + usize::from(!head.is_empty());
        p.partial.uri = Some(strip_angles(token).to_string());
        head
    } else {
        p.uri_at = start + rest.len();
        rest
    };

    let head = head.trim_end();
    let head = head.strip_suffix(['.', ',']).unwrap_or(head);
    let title = match head.rsplit_once(". ") {
        Some((title, tail)) if split_version(tail).is_some() => {
            let (v, r) = split_version(tail).unwrap();
            p.partial.version = Some(v.to_string());
            p.partial.revision = r.map(str::to_string);
            title
        }
        _ => head,
    };

    let title = title.trim();
    let (acronym, full) = match title.split_once(": ") {
        Some((a, f)) if is_acronym_token(a) => (Some(a), f.trim()),
        _ => (None, title),
    };
    p.partial.acronym = acronym.map(str::to_string);
    p.partial.full_name = (!full.is_empty()).then(|| full.to_string());
    Ok(p)
}

/// Byte offsets of `(` and `)` around the date. Prefers a real
/// `(YYYY-MM-DD).`; lenient mode falls back to any `(...).` group with a
/// digit in it.
fn find_date(text: &str, lenient: bool) -> Option<(usize, usize)> {
    let groups = text.match_indices('(').filter_map(|(open, _)| {
        let close = open + text[open..].find(')')?;
        let inner = &text[open + 1..close];
        (text[close..].starts_with(").") && !inner.contains('(')).then_some((open, close, inner))
    });
    let groups: Vec<_> = groups.collect();
    groups
        .iter()
        .find(|(_, _, inner)| is_iso_date(inner))
        .or_else(|| lenient.then(|| groups.iter().find(|(_, _, i)| i.contains(|c: char| c.is_ascii_digit()))).flatten())
        .map(|&(o, c, _)| (o, c))
}

/// Splits `A, B., C and D` into agents. A piece shaped like initials
/// attaches to the preceding bare name; names left without initials are
/// group names.
fn parse_creators(s: &str) -> Vec<Agent> {
    let mut pieces: Vec<(bool, &str)> = Vec::new();
    let mut rest = s;
    let mut after_comma = false;
    loop {
        let comma = rest.find(", ").map(|i| (i, 2, true));
        let and = rest.find(" and ").map(|i| (i, 5, false));
        let next = match (comma, and) {
            (Some(c), Some(a)) => Some(if c.0 <= a.0 { c } else { a }),
            (c, a) => c.or(a),
        };
        match next {
            Some((i, len, is_comma)) => {
                pieces.push((after_comma, &rest[..i]));
                after_comma = is_comma;
                rest = &rest[i + len..];
            }
            None => {
                pieces.push((after_comma, rest));
                break;
            }
        }
    }

    let mut agents: Vec<Agent> = Vec::new();
    for (after_comma, piece) in pieces {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        if let Some(prev) = agents.last_mut() {
            if after_comma && prev.organization && is_initials(piece) {
                *prev = Agent::person(&prev.surname, Some(piece));
                continue;
            }
        }
        agents.push(Agent::organization(piece));
    }
    agents
}

fn split_version(tail: &str) -> Option<(&str, Option<&str>)> {
    let (v, r) = match tail.strip_suffix(')').and_then(|t| t.split_once('(')) {
        Some((v, r)) => (v, Some(r)),
        None => (tail, None),
    };
    (is_version_token(v) && r.is_none_or(is_revision_token)).then_some((v, r))
}

fn strip_angles(token: &str) -> &str {
    token.strip_prefix('<').and_then(|t| t.strip_suffix('>')).unwrap_or(token)
}

fn looks_like_uri(token: &str) -> bool {
    let bare = strip_angles(token);
    if bare.len() != token.len() {
        return !bare.is_empty();
    }
    let scheme = bare.split_once(':').map(|(s, _)| s).unwrap_or("");
    let has_scheme = scheme.starts_with(|c: char| c.is_ascii_alphabetic())
        && scheme.chars().all(|c| c.is_ascii_alphanumeric() || matches!(c, '+' | '-' | '.'));
    has_scheme || bare.contains('/')
}

#[cfg(test)]
mod tests {
    use super::*;

    const PAV_CITATION: &str = "Ciccarese, P. and Soiland-Reyes, S. (2014-08-28). PAV: Provenance, Authoring and Versioning. 2.3.1. http://purl.org/pav/ [rdf/xml]";

    fn pav() -> CitationRecord {
        CitationRecord {
            creators: vec![Agent::person("Ciccarese", Some("P.")), Agent::person("Soiland-Reyes", Some("S."))],
            date: "2014-08-28".into(),
            acronym: Some("PAV".into()),
            full_name: "Provenance, Authoring and Versioning".into(),
            version: Some("2.3.1".into()),
            revision: None,
            uri: Iri::new("http://purl.org/pav/").unwrap(),
            formats: vec![FormatLabel::RdfXml],
        }
    }

    #[test]
    fn renders_pav() {
        assert_eq!(render_canonical(&pav()), PAV_CITATION);
    }

    #[test]
    fn renders_minimal() {
        let r = CitationRecord {
            creators: vec![Agent::person("Doe", Some("J."))],
            date: "2020-01-01".into(),
            acronym: None,
            full_name: "Example Ontology".into(),
            version: None,
            revision: None,
            uri: Iri::new("http://example.org/onto").unwrap(),
            formats: vec![],
        };
        assert_eq!(render_canonical(&r), "Doe, J. (2020-01-01). Example Ontology. http://example.org/onto");
    }

    #[test]
    fn renders_revision() {
        let mut r = pav();
        r.version = Some("1.0".into());
        r.revision = Some("2".into());
        assert!(render_canonical(&r).contains(" 1.0(2). "));
        assert_eq!(parse_canonical(&render_canonical(&r)).unwrap(), r);
    }

    #[test]
    fn creator_separators() {
        let six = ["Ciccarese", "Soiland-Reyes", "Belhajjame", "Gray", "Goble", "Clark"]
            .map(|s| Agent::person(s, Some("X.")))
            .to_vec();
        let out = render_creators(&six);
        assert_eq!(out.matches(" and ").count(), 1);
        assert!(out.ends_with("Goble, X. and Clark, X."));
        assert_eq!(render_creators(&six[..1]), "Ciccarese, X.");
    }

    #[test]
    fn parses_pav() {
        assert_eq!(parse_canonical(PAV_CITATION).unwrap(), pav());
    }

    #[test]
    fn tolerates_comma_angles_and_whitespace() {
        let s = "  Ciccarese, P. and   Soiland-Reyes, S. (2014-08-28). PAV: Provenance, Authoring and Versioning. 2.3.1, <http://purl.org/pav/> [rdf/xml]\n";
        assert_eq!(parse_canonical(s).unwrap(), pav());
    }

    #[test]
    fn missing_date() {
        let e = parse_canonical("Nonsense without a date").unwrap_err();
        assert_eq!(e.element, Element::Date);
        let e = parse_canonical("Doe, J. (2020-13-01). T. http://x.org/").unwrap_err();
        assert_eq!(e.element, Element::Date);
    }

    #[test]
    fn other_failures_name_the_element() {
        assert_eq!(parse_canonical("(2020-01-01). T. http://x.org/").unwrap_err().element, Element::Creators);
        assert_eq!(parse_canonical("Doe, J. (2020-01-01). http://x.org/").unwrap_err().element, Element::Title);
        let e = parse_canonical("Doe, J. (2020-01-01). Title only.").unwrap_err();
        assert_eq!(e.element, Element::Source);
        let e = parse_canonical("Doe, J. (2020-01-01). T. http://x.org/ [pdf]").unwrap_err();
        assert_eq!(e.element, Element::Source);
        assert_eq!(e.position, "Doe, J. (2020-01-01). T. ".len());
    }

    #[test]
    fn organizations_and_mixed_creators() {
        let r = parse_canonical("Gene Ontology Consortium and Smith, B. (2019-01-01). GO: Gene Ontology. http://purl.obolibrary.org/obo/go.owl").unwrap();
        assert_eq!(r.creators, [Agent::organization("Gene Ontology Consortium"), Agent::person("Smith", Some("B."))]);
        let r = parse_canonical("Gray, A. J. G., Plato and W3C (2019-01-01). T. http://x.org/").unwrap();
        assert_eq!(r.creators, [Agent::person("Gray", Some("A. J. G.")), Agent::organization("Plato"), Agent::organization("W3C")]);
    }

    #[test]
    fn partial_keeps_what_it_can() {
        let p = parse_partial("(2014). PAV: Provenance. http://purl.org/pav/").unwrap();
        assert!(p.creators.is_empty());
        assert_eq!(p.date.as_deref(), Some("2014"));
        assert_eq!(p.acronym.as_deref(), Some("PAV"));
        assert_eq!(p.uri.as_deref(), Some("http://purl.org/pav/"));
        let p = parse_partial("Doe, J. (2020-01-01). Example. 1.0. relative/onto [rdf/xml, pdf]").unwrap();
        assert_eq!(p.uri.as_deref(), Some("relative/onto"));
        assert_eq!(p.version.as_deref(), Some("1.0"));
        assert_eq!(p.formats, ["rdf/xml", "pdf"]);
        assert!(parse_partial("garbage").is_err());
    }
}
