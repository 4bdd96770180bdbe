use chrono::NaiveDate;

/// True for a real calendar date written exactly as `YYYY-MM-DD`.
pub fn is_iso_date(s: &str) -> bool {
    let b = s.as_bytes();
    if b.len() != 10 || b[4] != b'-' || b[7] != b'-' {
        return false;
    }
    let digits = |r: std::ops::Range<usize>| b[r].iter().all(u8::is_ascii_digit);
    if !(digits(0..4) && digits(5..7) && digits(8..10)) {
        return false;
    }
    let n = |r: std::ops::Range<usize>| s[r].parse::<u32>().unwrap_or(0);
    NaiveDate::from_ymd_opt(n(0..4) as i32, n(5..7), n(8..10)).is_some()
}

/// Reduces a date or date-time lexical form to `YYYY-MM-DD`.
pub fn normalize_date(s: &str) -> Option<String> {
    let s = s.trim();
    let head = s.get(..10)?;
    if !is_iso_date(head) {
        return None;
    }
    match s[10..].chars().next() {
        None | Some('T' | 't' | 'Z' | '+' | '-' | ' ') => Some(head.to_string()),
        Some(_) => None,
    }
}
