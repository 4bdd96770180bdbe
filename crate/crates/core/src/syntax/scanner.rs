//! Character-level reading shared by the N-Triples and Turtle parsers.

use super::ParseError;

pub(crate) struct Scanner<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Scanner<'a> {
    pub fn new(src: &'a str) -> Self {
        Scanner { src, pos: 0 }
    }

    pub fn pos(&self) -> usize {
        self.pos
    }

    pub fn set_pos(&mut self, pos: usize) {
        self.pos = pos;
    }

    pub fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    pub fn peek_nth(&self, n: usize) -> Option<char> {
        self.rest().chars().nth(n)
    }

    pub fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub fn eat_str(&mut self, s: &str) -> bool {
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    pub fn is_eof(&self) -> bool {
        self.pos >= self.src.len()
    }

    pub fn error_at(&self, pos: usize, message: impl Into<String>) -> ParseError {
        let before = &self.src[..pos];
        let line = before.matches('\n').count() + 1;
        let line_start = before.rfind('\n').map_or(0, |i| i + 1);
        let column = before[line_start..].chars().count() + 1;
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }

    pub fn error(&self, message: impl Into<String>) -> ParseError {
        self.error_at(self.pos, message)
    }

    /// Skips spaces and tabs only.
    pub fn skip_inline_ws(&mut self) {
        while matches!(self.peek(), Some(' ' | '\t')) {
            self.pos += 1;
        }
    }

    /// Skips all whitespace and `#` comments.
    pub fn skip_ws_and_comments(&mut self) {
        loop {
            match self.peek() {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('#') => self.skip_comment(),
                _ => return,
            }
        }
    }

    pub fn skip_comment(&mut self) {
        while let Some(c) = self.peek() {
            if c == '\n' || c == '\r' {
                break;
            }
            self.bump();
        }
    }

    /// Reads `<...>` and returns the unescaped content (not yet resolved).
    pub fn read_iriref(&mut self) -> Result<String, ParseError> {
        let start = self.pos;
        if !self.eat('<') {
            return Err(self.error("expected '<'"));
        }
        let mut out = String::new();
        loop {
            let here = self.pos;
            match self.bump() {
                None => return Err(self.error_at(start, "unterminated IRI")),
                Some('>') => return Ok(out),
                Some('\\') => match self.bump() {
                    Some('u') => out.push(self.read_hex(4, here)?),
                    Some('U') => out.push(self.read_hex(8, here)?),
                    _ => return Err(self.error_at(here, "invalid escape in IRI")),
                },
                Some(c) if c.is_whitespace() || c == '<' || c == '"' => {
                    return Err(self.error_at(here, format!("character {c:?} not allowed in IRI")))
                }
                Some(c) => out.push(c),
            }
        }
    }

    fn read_hex(&mut self, digits: usize, at: usize) -> Result<char, ParseError> {
        let rest = self.rest();
        let hex = rest.get(..digits).filter(|h| h.chars().all(|c| c.is_ascii_hexdigit()));
        let Some(hex) = hex else {
            return Err(self.error_at(at, "malformed \\u escape"));
        };
        let code = u32::from_str_radix(hex, 16).map_err(|_| self.error_at(at, "malformed \\u escape"))?;
        self.pos += digits;
        char::from_u32(code).ok_or_else(|| self.error_at(at, format!("escape U+{code:X} is not a character")))
    }

    /// Reads a quoted string. `long` allows the triple-quoted Turtle forms.
    pub fn read_string(&mut self, long: bool) -> Result<String, ParseError> {
        let start = self.pos;
        let quote = match self.peek() {
            Some(q @ ('"' | '\'')) => q,
            _ => return Err(self.error("expected string literal")),
        };
        let triple: String = std::iter::repeat_n(quote, 3).collect();
        let is_long = long && self.rest().starts_with(&triple);
        if is_long {
            self.pos += 3;
        } else {
            self.bump();
        }
        let mut out = String::new();
        loop {
            let here = self.pos;
            if is_long && self.rest().starts_with(&triple) {
                // in a run of more than three quotes the extra ones are content
                let run = self.rest().chars().take_while(|&c| c == quote).count();
                if run > 5 {
                    return Err(self.error_at(here, "too many quotes in long string"));
                }
                out.extend(std::iter::repeat_n(quote, run - 3));
                self.pos += run;
                return Ok(out);
            }
            match self.bump() {
                None => return Err(self.error_at(start, "unterminated string literal")),
                Some(c) if c == quote && !is_long => return Ok(out),
                Some('\n' | '\r') if !is_long => {
                    return Err(self.error_at(here, "line break in string literal"))
                }
                Some('\\') => {
                    let c = match self.bump() {
                        Some('t') => '\t',
                        Some('b') => '\u{8}',
                        Some('n') => '\n',
                        Some('r') => '\r',
                        Some('f') => '\u{c}',
                        Some('"') => '"',
                        Some('\'') => '\'',
                        Some('\\') => '\\',
                        Some('u') => self.read_hex(4, here)?,
                        Some('U') => self.read_hex(8, here)?,
                        _ => return Err(self.error_at(here, "invalid escape in string literal")),
                    };
                    out.push(c);
                }
                Some(c) => out.push(c),
            }
        }
    }

    /// Reads `@tag` after a literal; the leading `@` must be next.
    pub fn read_langtag(&mut self) -> Result<String, ParseError> {
        let start = self.pos;
        if !self.eat('@') {
            return Err(self.error("expected '@'"));
        }
        let from = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '-') {
            self.bump();
        }
        let tag = &self.src[from..self.pos];
        crate::rdf::normalize_lang(tag).map_err(|_| self.error_at(start, format!("invalid language tag {tag:?}")))
    }

    /// Reads `_:label`.
    pub fn read_bnode_label(&mut self) -> Result<String, ParseError> {
        let start = self.pos;
        if !self.eat_str("_:") {
            return Err(self.error("expected blank node"));
        }
        let from = self.pos;
        while matches!(self.peek(), Some(c) if c.is_alphanumeric() || matches!(c, '_' | '-' | '.')) {
            self.bump();
        }
        // a trailing '.' ends the statement rather than the label
        while self.src[from..self.pos].ends_with('.') {
            self.pos -= 1;
        }
        let label = &self.src[from..self.pos];
        if label.is_empty() || !label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(self.error_at(start, format!("blank node label {label:?} must match [A-Za-z0-9_]+")));
        }
        Ok(label.to_string())
    }
}
