//! Completeness and form checks for citations, reported as coded
//! diagnostics.

use std::fmt;

use serde::Serialize;

use crate::citation::{parse_canonical, parse_partial, PartialCitation};
use crate::date::is_iso_date;
use crate::metadata::is_initials;
use crate::rdf::Iri;
use crate::syntax::FormatLabel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Code {
    #[serde(rename = "E-CREATOR-MISSING")]
    CreatorMissing,
    #[serde(rename = "E-DATE-FORMAT")]
    DateFormat,
    #[serde(rename = "E-DATE-MISSING")]
    DateMissing,
    #[serde(rename = "E-PARSE")]
    Parse,
    #[serde(rename = "E-TITLE-MISSING")]
    TitleMissing,
    #[serde(rename = "E-URI-MISSING")]
    UriMissing,
    #[serde(rename = "E-URI-ONLY")]
    UriOnly,
    #[serde(rename = "E-URI-RELATIVE")]
    UriRelative,
    #[serde(rename = "W-ACRONYM-COLON")]
    AcronymColon,
    #[serde(rename = "W-FORMAT-MISSING")]
    FormatMissing,
    #[serde(rename = "W-FORMAT-UNKNOWN")]
    FormatUnknown,
    #[serde(rename = "W-NAME-FORM")]
    NameForm,
    #[serde(rename = "W-VERSION-MISSING")]
    VersionMissing,
}

impl Code {
    /// Variants are declared in alphabetical order of their codes, so the
    /// derived `Ord` sorts by code.
    pub const ALL: [Code; 13] = [
        Code::CreatorMissing,
        Code::DateFormat,
        Code::DateMissing,
        Code::Parse,
        Code::TitleMissing,
        Code::UriMissing,
        Code::UriOnly,
        Code::UriRelative,
        Code::AcronymColon,
        Code::FormatMissing,
        Code::FormatUnknown,
        Code::NameForm,
        Code::VersionMissing,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Code::CreatorMissing => "E-CREATOR-MISSING",
            Code::DateFormat => "E-DATE-FORMAT",
            Code::DateMissing => "E-DATE-MISSING",
            Code::Parse => "E-PARSE",
            Code::TitleMissing => "E-TITLE-MISSING",
            Code::UriMissing => "E-URI-MISSING",
            Code::UriOnly => "E-URI-ONLY",
            Code::UriRelative => "E-URI-RELATIVE",
            Code::AcronymColon => "W-ACRONYM-COLON",
            Code::FormatMissing => "W-FORMAT-MISSING",
            Code::FormatUnknown => "W-FORMAT-UNKNOWN",
            Code::NameForm => "W-NAME-FORM",
            Code::VersionMissing => "W-VERSION-MISSING",
        }
    }

    pub fn severity(self) -> Severity {
        if self.as_str().starts_with("E-") {
            Severity::Error
        } else {
            Severity::Warning
        }
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub code: Code,
    pub severity: Severity,
    pub field: Option<&'static str>,
    pub message: String,
}

impl Diagnostic {
    fn new(code: Code, field: Option<&'static str>, message: impl Into<String>) -> Self {
        Diagnostic { code, severity: code.severity(), field, message: message.into() }
    }
}

/// `CODE<TAB>severity<TAB>message`
impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t{}\t{}", self.code, self.severity, self.message)
    }
}

pub fn has_errors(diags: &[Diagnostic]) -> bool {
    diags.iter().any(|d| d.severity == Severity::Error)
}

fn present(v: &Option<String>) -> Option<&str> {
    v.as_deref().map(str::trim).filter(|s| !s.is_empty())
}

/// Checks a possibly incomplete citation. The result is sorted by code and
/// is empty exactly when the citation is complete and well formed.
pub fn validate_record(c: &PartialCitation) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let mut push = |code, field, msg: String| out.push(Diagnostic::new(code, field, msg));

    let title = present(&c.full_name).or(present(&c.acronym));
    let date = present(&c.date);
    let uri = present(&c.uri);

    if c.creators.is_empty() {
        push(Code::CreatorMissing, Some("creators"), "no creator named".into());
    }
    match date {
        None => push(Code::DateMissing, Some("date"), "no date".into()),
        Some(d) if !is_iso_date(d) => push(Code::DateFormat, Some("date"), format!("date {d:?} is not YYYY-MM-DD")),
        _ => {}
    }
    if present(&c.full_name).is_none() {
        push(Code::TitleMissing, Some("full_name"), "no ontology name".into());
    }
    match uri {
        None => push(Code::UriMissing, Some("uri"), "no URI".into()),
        Some(u) if Iri::new(u).is_err() => push(Code::UriRelative, Some("uri"), format!("URI {u:?} is not absolute")),
        _ => {}
    }
    // Fires with or without the URI itself, so that supplying the URI never
    // adds an error.
    if c.creators.is_empty() && date.is_none() && title.is_none() {
        push(Code::UriOnly, None, "nothing but a link identifies the ontology; give creators, date and title".into());
    }
    if present(&c.version).is_none() {
        push(Code::VersionMissing, Some("version"), "no version".into());
    }
    if c.formats.is_empty() {
        push(Code::FormatMissing, Some("formats"), "no file format label".into());
    }
    for f in &c.formats {
        if f.parse::<FormatLabel>().is_err() {
            push(Code::FormatUnknown, Some("formats"), format!("unknown format label {f:?}"));
        }
    }
    if let Some(a) = &c.acronym {
        if a.contains(':') {
            push(Code::AcronymColon, Some("acronym"), format!("acronym {a:?} contains ':'"));
        }
    }
    for a in c.creators.iter().filter(|a| !a.organization) {
        let ok = !a.surname.trim().is_empty() && !a.surname.contains(',') && a.initials.as_deref().is_some_and(is_initials);
        if !ok {
            push(Code::NameForm, Some("creators"), format!("{:?} is not in \"Surname, I.\" form", a.rendered()));
        }
    }
    out.sort_by_key(|d| d.code);
    out
}

/// Checks a citation string.
///
/// A bare absolute IRI gives `E-URI-ONLY`. Strings that are not canonical
/// but still have a recognizable `(date).` group are checked field by field;
/// anything else yields a single `E-PARSE`.
pub fn validate_citation_string(s: &str) -> Vec<Diagnostic> {
    if let Ok(r) = parse_canonical(s) {
        return validate_record(&PartialCitation::from(&r));
    }
    let t = s.trim();
    let bare = t.strip_prefix('<').and_then(|t| t.strip_suffix('>')).unwrap_or(t);
    if !bare.contains(char::is_whitespace) && Iri::new(bare).is_ok() {
        return vec![Diagnostic::new(Code::UriOnly, None, format!("{bare} is cited by link alone; give creators, date and title"))];
    }
    match parse_partial(s) {
        Ok(p) => validate_record(&p),
        Err(e) => vec![Diagnostic::new(Code::Parse, None, format!("not a citation: {e}"))],
    }
}
