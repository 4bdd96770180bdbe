#![allow(dead_code)]

pub mod citation_gen;

use std::path::PathBuf;

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn read(rel: &str) -> String {
    std::fs::read_to_string(fixtures().join(rel)).unwrap_or_else(|e| panic!("{rel}: {e}"))
}

/// `(stem, turtle text, n-triples text)` for every header twin.
pub fn header_twins() -> Vec<(String, String, String)> {
    let mut out = Vec::new();
    for entry in std::fs::read_dir(fixtures().join("headers")).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "ttl") {
            let stem = path.file_stem().unwrap().to_string_lossy().into_owned();
            let ttl = std::fs::read_to_string(&path).unwrap();
            let nt = std::fs::read_to_string(path.with_extension("nt")).unwrap();
            out.push((stem, ttl, nt));
        }
    }
    out.sort();
    out
}
