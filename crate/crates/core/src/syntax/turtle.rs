//! A Turtle subset sufficient for ontology headers.
//!
//! Supported: `@prefix`/`@base` (and the SPARQL-style `PREFIX`/`BASE`),
//! prefixed names, `<iri>`, `a`, predicate lists (`;`), object lists (`,`),
//! `[ ... ]` blank-node property lists, short and long string literals,
//! language tags, datatypes, and numeric/boolean shorthand.
//! Collections `( ... )` are rejected with an "unsupported construct" error.

use std::collections::{HashMap, HashSet};

use super::scanner::Scanner;
use super::ParseError;
use crate::rdf::{is_absolute_iri, BlankNode, Graph, Iri, Literal, Subject, Term, Triple};
use crate::vocab::{rdf, xsd};

pub fn parse_turtle(text: &str) -> Result<Graph, ParseError> {
    let mut p = TurtleParser {
        sc: Scanner::new(text),
        prefixes: HashMap::new(),
        base: None,
        used_labels: explicit_labels(text),
        next_anon: 1,
        triples: Vec::new(),
    };
    p.document()?;
    Ok(p.triples.into_iter().collect())
}

/// Labels written as `_:x` anywhere in the text, so generated ones avoid them.
fn explicit_labels(text: &str) -> HashSet<String> {
    text.match_indices("_:")
        .map(|(i, _)| {
            text[i + 2..]
                .chars()
                .take_while(|c| c.is_ascii_alphanumeric() || *c == '_')
                .collect::<String>()
        })
        .filter(|l| !l.is_empty())
        .collect()
}

struct TurtleParser<'a> {
    sc: Scanner<'a>,
    prefixes: HashMap<String, String>,
    base: Option<url::Url>,
    used_labels: HashSet<String>,
    next_anon: usize,
    triples: Vec<Triple>,
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '-' | '.' | '\u{b7}')
}

impl TurtleParser<'_> {
    fn ws(&mut self) {
        self.sc.skip_ws_and_comments();
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        self.ws();
        if self.sc.eat(c) {
            Ok(())
        } else {
            Err(self.sc.error(format!("expected '{c}'")))
        }
    }

    fn fresh_bnode(&mut self) -> BlankNode {
        loop {
            let label = format!("b{}", self.next_anon);
            self.next_anon += 1;
            if !self.used_labels.contains(&label) {
                return BlankNode::new(label).expect("generated label is valid");
            }
        }
    }

    fn emit(&mut self, s: &Subject, p: &Iri, o: Term) {
        self.triples.push(Triple::new(s.clone(), p.clone(), o));
    }

    fn document(&mut self) -> Result<(), ParseError> {
        loop {
            self.ws();
            if self.sc.is_eof() {
                return Ok(());
            }
            if self.sc.peek() == Some('@') {
                self.at_directive()?;
            } else if self.keyword_ahead("PREFIX") {
                self.sc.set_pos(self.sc.pos() + "PREFIX".len());
                self.prefix_body()?;
            } else if self.keyword_ahead("BASE") {
                self.sc.set_pos(self.sc.pos() + "BASE".len());
                self.base_body()?;
            } else {
                self.triples_statement()?;
                self.expect('.')?;
            }
        }
    }

    /// Case-insensitive keyword followed by whitespace.
    fn keyword_ahead(&self, kw: &str) -> bool {
        let rest = self.sc.rest();
        rest.len() > kw.len()
            && rest[..kw.len()].eq_ignore_ascii_case(kw)
            && rest[kw.len()..].starts_with(char::is_whitespace)
    }

    fn at_directive(&mut self) -> Result<(), ParseError> {
        let start = self.sc.pos();
        if self.sc.eat_str("@prefix") {
            self.prefix_body()?;
        } else if self.sc.eat_str("@base") {
            self.base_body()?;
        } else {
            return Err(self.sc.error_at(start, "unknown directive"));
        }
        self.expect('.')
    }

    fn prefix_body(&mut self) -> Result<(), ParseError> {
        self.ws();
        let start = self.sc.pos();
        let mut name = String::new();
        while let Some(c) = self.sc.peek() {
            if c == ':' {
                break;
            }
            if !is_name_char(c) {
                return Err(self.sc.error("expected prefix name followed by ':'"));
            }
            name.push(c);
            self.sc.bump();
        }
        if !self.sc.eat(':') {
            return Err(self.sc.error_at(start, "expected prefix name followed by ':'"));
        }
        self.ws();
        let iri = self.iriref()?;
        self.prefixes.insert(name, iri.into_string());
        Ok(())
    }

    fn base_body(&mut self) -> Result<(), ParseError> {
        self.ws();
        let iri = self.iriref()?;
        self.base = Some(url::Url::parse(iri.as_str()).map_err(|e| self.sc.error(format!("bad base IRI: {e}")))?);
        Ok(())
    }

    fn iriref(&mut self) -> Result<Iri, ParseError> {
        let start = self.sc.pos();
        let raw = self.sc.read_iriref()?;
        if is_absolute_iri(&raw) {
            return Iri::new(raw).map_err(|e| self.sc.error_at(start, e.to_string()));
        }
        let Some(base) = &self.base else {
            return Err(self.sc.error_at(start, format!("relative IRI <{raw}> without @base")));
        };
        let resolved = base
            .join(&raw)
            .map_err(|e| self.sc.error_at(start, format!("cannot resolve <{raw}>: {e}")))?;
        Iri::new(resolved.as_str()).map_err(|e| self.sc.error_at(start, e.to_string()))
    }

    fn prefixed_name(&mut self) -> Result<Iri, ParseError> {
        let start = self.sc.pos();
        let mut prefix = String::new();
        while let Some(c) = self.sc.peek() {
            if c == ':' || !is_name_char(c) {
                break;
            }
            prefix.push(c);
            self.sc.bump();
        }
        if !self.sc.eat(':') {
            return Err(self.sc.error_at(start, "expected IRI, prefixed name or literal"));
        }
        let mut local = String::new();
        let mut local_end = self.sc.pos();
        loop {
            match self.sc.peek() {
                Some('\\') => {
                    self.sc.bump();
                    match self.sc.bump() {
                        Some(c) if "_~.-!$&'()*+,;=/?#@%".contains(c) => local.push(c),
                        _ => return Err(self.sc.error("invalid escape in local name")),
                    }
                    local_end = self.sc.pos();
                }
                Some(c) if is_name_char(c) || c == ':' || c == '%' => {
                    self.sc.bump();
                    local.push(c);
                    if c != '.' {
                        local_end = self.sc.pos();
                    }
                }
                _ => break,
            }
        }
        // a trailing '.' terminates the statement
        let trailing_dots = local.len() - local.trim_end_matches('.').len();
        if trailing_dots > 0 && self.sc.pos() > local_end {
            local.truncate(local.len() - trailing_dots);
            self.sc.set_pos(self.sc.pos() - trailing_dots);
        }
        let Some(ns) = self.prefixes.get(&prefix) else {
            return Err(self.sc.error_at(start, format!("undefined prefix '{prefix}:'")));
        };
        Iri::new(format!("{ns}{local}")).map_err(|e| self.sc.error_at(start, e.to_string()))
    }

    fn iri(&mut self) -> Result<Iri, ParseError> {
        if self.sc.peek() == Some('<') {
            self.iriref()
        } else {
            self.prefixed_name()
        }
    }

    fn triples_statement(&mut self) -> Result<(), ParseError> {
        self.ws();
        let subject: Subject = match self.sc.peek() {
            Some('[') => {
                let node = self.blank_node_property_list()?;
                self.ws();
                if self.sc.peek() == Some('.') {
                    return Ok(());
                }
                node.into()
            }
            Some('_') if self.sc.peek_nth(1) == Some(':') => self.labeled_bnode()?.into(),
            Some('(') => return Err(self.sc.error("unsupported construct: RDF collections")),
            Some('"' | '\'') => return Err(self.sc.error("a literal cannot be a subject")),
            _ => self.iri()?.into(),
        };
        self.predicate_object_list(&subject)
    }

    fn labeled_bnode(&mut self) -> Result<BlankNode, ParseError> {
        let start = self.sc.pos();
        let label = self.sc.read_bnode_label()?;
        BlankNode::new(label).map_err(|e| self.sc.error_at(start, e.to_string()))
    }

    fn predicate_object_list(&mut self, subject: &Subject) -> Result<(), ParseError> {
        loop {
            self.ws();
            let predicate = self.verb()?;
            loop {
                self.ws();
                let object = self.object()?;
                self.emit(subject, &predicate, object);
                self.ws();
                if !self.sc.eat(',') {
                    break;
                }
            }
            self.ws();
            if !self.sc.eat(';') {
                return Ok(());
            }
            // repeated or trailing ';' are allowed
            loop {
                self.ws();
                if !self.sc.eat(';') {
                    break;
                }
            }
            self.ws();
            if matches!(self.sc.peek(), Some('.' | ']') | None) {
                return Ok(());
            }
        }
    }

    fn verb(&mut self) -> Result<Iri, ParseError> {
        if self.sc.peek() == Some('a') && !self.sc.peek_nth(1).is_some_and(|c| is_name_char(c) || c == ':') {
            self.sc.bump();
            return Ok(rdf::type_());
        }
        match self.sc.peek() {
            Some('"' | '\'' | '[' | '_') => Err(self.sc.error("predicate must be an IRI")),
            _ => self.iri(),
        }
    }

    fn blank_node_property_list(&mut self) -> Result<BlankNode, ParseError> {
        self.sc.eat('[');
        let node = self.fresh_bnode();
        self.ws();
        if !self.sc.eat(']') {
            self.predicate_object_list(&node.clone().into())?;
            self.expect(']')?;
        }
        Ok(node)
    }

    fn object(&mut self) -> Result<Term, ParseError> {
        match self.sc.peek() {
            Some('[') => Ok(self.blank_node_property_list()?.into()),
            Some('(') => Err(self.sc.error("unsupported construct: RDF collections")),
            Some('_') if self.sc.peek_nth(1) == Some(':') => Ok(self.labeled_bnode()?.into()),
            Some('"' | '\'') => Ok(self.rdf_literal()?.into()),
            Some('.') if !self.sc.peek_nth(1).is_some_and(|c| c.is_ascii_digit()) => Err(self.sc.error("expected an object")),
            Some(c) if c.is_ascii_digit() || matches!(c, '+' | '-' | '.') => Ok(self.numeric()?.into()),
            Some('t' | 'f') if self.boolean_ahead() => {
                let value = if self.sc.eat_str("true") {
                    "true"
                } else {
                    self.sc.eat_str("false");
                    "false"
                };
                Ok(Literal::typed(value, xsd::boolean()).into())
            }
            None => Err(self.sc.error("unexpected end of input, expected object")),
            _ => Ok(self.iri()?.into()),
        }
    }

    fn boolean_ahead(&self) -> bool {
        let rest = self.sc.rest();
        ["true", "false"].iter().any(|kw| {
            rest.starts_with(kw) && !rest[kw.len()..].starts_with(|c: char| is_name_char(c) || c == ':')
        })
    }

    fn rdf_literal(&mut self) -> Result<Literal, ParseError> {
        let lexical = self.sc.read_string(true)?;
        match self.sc.peek() {
            Some('@') => {
                let tag = self.sc.read_langtag()?;
                Ok(Literal::with_lang(lexical, &tag).expect("tag already validated"))
            }
            Some('^') => {
                if !self.sc.eat_str("^^") {
                    return Err(self.sc.error("expected '^^'"));
                }
                Ok(Literal::typed(lexical, self.iri()?))
            }
            _ => Ok(Literal::plain(lexical)),
        }
    }

    fn numeric(&mut self) -> Result<Literal, ParseError> {
        let start = self.sc.pos();
        let rest = self.sc.rest();
        let bytes = rest.as_bytes();
        let mut i = 0;
        if matches!(bytes.first(), Some(b'+' | b'-')) {
            i += 1;
        }
        let int_start = i;
        while bytes.get(i).is_some_and(u8::is_ascii_digit) {
            i += 1;
        }
        let int_digits = i - int_start;
        let mut frac_digits = 0;
        if bytes.get(i) == Some(&b'.') && bytes.get(i + 1).is_some_and(u8::is_ascii_digit) {
            i += 1;
            while bytes.get(i).is_some_and(u8::is_ascii_digit) {
                i += 1;
                frac_digits += 1;
            }
        }
        if int_digits + frac_digits == 0 {
            return Err(self.sc.error("malformed number"));
        }
        let mut datatype = if frac_digits > 0 { xsd::decimal() } else { xsd::integer() };
        if matches!(bytes.get(i), Some(b'e' | b'E')) {
            let mut j = i + 1;
            if matches!(bytes.get(j), Some(b'+' | b'-')) {
                j += 1;
            }
            let exp_start = j;
            while bytes.get(j).is_some_and(u8::is_ascii_digit) {
                j += 1;
            }
            if j == exp_start {
                return Err(self.sc.error_at(start + i, "malformed exponent"));
            }
            i = j;
            datatype = xsd::double();
        }
        let lexical = rest[..i].to_string();
        self.sc.set_pos(start + i);
        Ok(Literal::typed(lexical, datatype))
    }
}
