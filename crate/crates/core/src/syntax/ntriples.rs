use super::scanner::Scanner;
use super::ParseError;
use crate::rdf::{BlankNode, Graph, Iri, Literal, Subject, Term, Triple};

/// Parses an N-Triples document. All-or-nothing: the first malformed
/// statement aborts the parse.
pub fn parse_ntriples(text: &str) -> Result<Graph, ParseError> {
    let mut sc = Scanner::new(text);
    let mut triples = Vec::new();
    loop {
        sc.skip_ws_and_comments();
        if sc.is_eof() {
            break;
        }
        triples.push(statement(&mut sc)?);
    }
    Ok(triples.into_iter().collect())
}

fn statement(sc: &mut Scanner<'_>) -> Result<Triple, ParseError> {
    let subject: Subject = match sc.peek() {
        Some('<') => iri(sc)?.into(),
        Some('_') => bnode(sc)?.into(),
        _ => return Err(sc.error("expected subject IRI or blank node")),
    };
    separator(sc)?;
    if sc.peek() != Some('<') {
        return Err(sc.error("expected predicate IRI"));
    }
    let predicate = iri(sc)?;
    separator(sc)?;
    let object: Term = match sc.peek() {
        Some('<') => iri(sc)?.into(),
        Some('_') => bnode(sc)?.into(),
        Some('"') => literal(sc)?.into(),
        _ => return Err(sc.error("expected object IRI, blank node or literal")),
    };
    sc.skip_inline_ws();
    if !sc.eat('.') {
        return Err(sc.error("expected '.' at end of statement"));
    }
    sc.skip_inline_ws();
    if sc.peek() == Some('#') {
        sc.skip_comment();
    }
    match sc.peek() {
        None | Some('\n' | '\r') => Ok(Triple::new(subject, predicate, object)),
        Some(_) => Err(sc.error("expected end of line after statement")),
    }
}

fn separator(sc: &mut Scanner<'_>) -> Result<(), ParseError> {
    let before = sc.pos();
    sc.skip_inline_ws();
    if sc.pos() == before && !matches!(sc.peek(), Some('<' | '"' | '_')) {
        return Err(sc.error("expected whitespace"));
    }
    Ok(())
}

fn iri(sc: &mut Scanner<'_>) -> Result<Iri, ParseError> {
    let start = sc.pos();
    let value = sc.read_iriref()?;
    Iri::new(value.clone()).map_err(|_| sc.error_at(start, format!("relative or invalid IRI <{value}>")))
}

fn bnode(sc: &mut Scanner<'_>) -> Result<BlankNode, ParseError> {
    let start = sc.pos();
    let label = sc.read_bnode_label()?;
    BlankNode::new(label).map_err(|e| sc.error_at(start, e.to_string()))
}

fn literal(sc: &mut Scanner<'_>) -> Result<Literal, ParseError> {
    let lexical = sc.read_string(false)?;
    match sc.peek() {
        Some('@') => {
            let tag = sc.read_langtag()?;
            Ok(Literal::with_lang(lexical, &tag).expect("tag already validated"))
        }
        Some('^') => {
            if !sc.eat_str("^^") {
                return Err(sc.error("expected '^^'"));
            }
            if sc.peek() != Some('<') {
                return Err(sc.error("expected datatype IRI"));
            }
            Ok(Literal::typed(lexical, iri(sc)?))
        }
        _ => Ok(Literal::plain(lexical)),
    }
}

/// One statement per line in graph order.
pub fn serialize_ntriples(g: &Graph) -> String {
    let mut out = String::new();
    for t in g {
        out.push_str(&t.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_statement() {
        let g = parse_ntriples("<http://a> <http://p> \"x\"@en .").unwrap();
        assert_eq!(g.len(), 1);
        let t = g.iter().next().unwrap();
        assert_eq!(t.object, Term::Literal(Literal::with_lang("x", "en").unwrap()));
    }

    #[test]
    fn comment_only() {
        assert!(parse_ntriples("# comment\n").unwrap().is_empty());
        assert!(parse_ntriples("").unwrap().is_empty());
    }

    #[test]
    fn unicode_escape() {
        // expected lexical "aA" cross-checked with rdflib's N-Triples parser
        let g = parse_ntriples(r#"<http://a> <http://p> "a\u0041" ."#).unwrap();
        let lit = g.iter().next().unwrap().object.as_literal().unwrap().clone();
        assert_eq!(lit.lexical(), "aA");
    }

    #[test]
    fn escapes_datatypes_and_bnodes() {
        let text = "_:x <http://p> \"t\\tq\\\"\\\\\\n\\U0001F600\"^^<http://www.w3.org/2001/XMLSchema#string> . # c\n\
                    <http://a> <http://p> _:x .\n";
        let g = parse_ntriples(text).unwrap();
        assert_eq!(g.len(), 2);
        let lits: Vec<_> = g.iter().filter_map(|t| t.object.as_literal()).collect();
        assert_eq!(lits[0].lexical(), "t\tq\"\\\n\u{1F600}");
        assert!(lits[0].datatype().is_some());
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_ntriples("<http://a> <http://p> \"x\" .\n<http://a> <http://p> \"x\"\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_ntriples("<http://a> \"p\" \"x\" .").unwrap_err();
        assert_eq!((e.line, e.column), (1, 12));
        let e = parse_ntriples("<rel> <http://p> \"x\" .").unwrap_err();
        assert_eq!((e.line, e.column), (1, 1));
        let e = parse_ntriples("\n\n<http://a> <http://p> <http://o> . <http://a> <http://p> <http://o> .").unwrap_err();
        assert_eq!(e.line, 3);
    }

    #[test]
    fn serialize_shapes() {
        assert_eq!(serialize_ntriples(&Graph::new()), "");
        let g = parse_ntriples("<http://a> <http://p> \"x\" .").unwrap();
        let s = serialize_ntriples(&g);
        assert!(s.ends_with(" .\n"));
        assert_eq!(s.lines().count(), 1);
    }
}
