use super::{CitationError, CitationRecord};

/// Pretty-printed JSON with a single trailing newline. Absent optional keys
/// are omitted, never `null`.
pub fn render_json(r: &CitationRecord) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("record serializes");
    s.push('\n');
    s
}

/// Reads a record back from JSON and checks its invariants.
pub fn parse_json(s: &str) -> Result<CitationRecord, CitationError> {
    let r: CitationRecord = serde_json::from_str(s).map_err(|e| CitationError::Json(e.to_string()))?;
    r.validate()?;
    Ok(r)
}
