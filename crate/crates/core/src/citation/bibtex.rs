use super::CitationRecord;

/// Renders a `@misc` entry with a fixed field order.
pub fn render_bibtex(r: &CitationRecord) -> String {
    let (year, month, day) = split_date(&r.date);
    let authors: Vec<String> = r
        .creators
        .iter()
        .map(|a| if a.organization || a.initials.is_none() { format!("{{{}}}", escape(&a.surname)) } else { escape(&a.rendered()) })
        .collect();

    let mut fields = vec![
        ("author", authors.join(" and ")),
        ("title", escape(&r.title())),
        ("year", year.to_string()),
        ("month", month.to_string()),
        ("day", day.to_string()),
        ("howpublished", escape(r.uri.as_str())),
    ];
    let mut note = Vec::new();
    if let Some(v) = r.version_text() {
        note.push(format!("version {}", escape(&v)));
    }
    note.extend(r.formats.iter().map(|f| f.as_str().to_string()));
    if !note.is_empty() {
        fields.push(("note", note.join(", ")));
    }

    let mut out = format!("@misc{{{}{},\n", citation_key(r), year);
    for (name, value) in fields {
        out.push_str(&format!("  {name} = {{{value}}},\n"));
    }
    out.push_str("}\n");
    out
}

/// The acronym, or the first few words of the full name squashed to ASCII
/// alphanumerics.
fn citation_key(r: &CitationRecord) -> String {
    let base = r.acronym.as_deref().unwrap_or(&r.full_name);
    let key: String = base
        .split_whitespace()
        .take(if r.acronym.is_some() { usize::MAX } else { 3 })
        .flat_map(str::chars)
        .filter(char::is_ascii_alphanumeric)
        .collect();
    if key.is_empty() {
        "ontology".to_string()
    } else {
        key
    }
}

fn split_date(date: &str) -> (u32, u32, u32) {
    let mut parts = date.split('-').map(|p| p.parse().unwrap_or(0));
    (parts.next().unwrap_or(0), parts.next().unwrap_or(0), parts.next().unwrap_or(0))
}

/// Only characters that change brace balance are escaped.
fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '{' | '}' | '\\' => {
                out.push('\\');
                out.push(c);
            }
            _ => out.push(c),
        }
    }
    out
}
