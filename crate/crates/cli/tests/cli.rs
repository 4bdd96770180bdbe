use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn fixture(rel: &str) -> String {
    fixtures().join(rel).to_string_lossy().into_owned()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

fn ontocite(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ontocite")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

const PAV_CITATION: &str = "Ciccarese, P. and Soiland-Reyes, S. (2014-08-28). PAV: Provenance, Authoring and Versioning. 2.3.1. http://purl.org/pav/ [rdf/xml]";

fn network_files() -> Vec<String> {
    ["a.ttl", "b.nt", "c.ttl", "d.ttl", "e.ttl"].iter().map(|f| fixture(&format!("network/{f}"))).collect()
}

#[test]
fn cite_styles() {
    let pav = fixture("headers/pav.ttl");
    let o = ontocite(&["cite", &pav, "--style", "canonical", "--format-label", "rdf/xml"]);
    assert_eq!((code(&o), stdout(&o)), (0, format!("{PAV_CITATION}\n")));

    let o = ontocite(&["cite", &pav, "--style", "json", "--format-label", "rdf/xml"]);
    assert_eq!((code(&o), stdout(&o)), (0, golden("pav.json")));

    let o = ontocite(&["cite", &pav, "--style", "bibtex", "--format-label", "rdf/xml"]);
    assert_eq!(stdout(&o), std::fs::read_to_string(fixtures().join("bibtex/pav.bib")).unwrap());

    // Without an override the detected syntax is cited.
    let o = ontocite(&["cite", &pav]);
    assert!(stdout(&o).ends_with("http://purl.org/pav/ [turtle]\n"), "{}", stdout(&o));
}

#[test]
fn cite_failures_name_the_stage() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.to_string_lossy().into_owned()
    };
    let broken = write("broken.ttl", "<http://a> a <http://www.w3.org/2002/07/owl#Ontology> ;\n  <http://x> .\n");
    let o = ontocite(&["cite", &broken]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("parse: ") && stderr(&o).contains("broken.ttl:2:14: "), "{}", stderr(&o));

    let o = ontocite(&["cite", &write("notes.txt", "hello")]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("detect: unknown format"));

    let o = ontocite(&["cite", &write("x.rdf", "<?xml version=\"1.0\"?>\n<rdf:RDF>\n")]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("convert to Turtle/N-Triples first"));

    let o = ontocite(&["cite", &write("x.obo", "format-version: 1.2\n")]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("convert to Turtle/N-Triples first"));

    let o = ontocite(&["cite", &write("plain.ttl", "<http://a> <http://b> <http://c> .\n")]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("extract: ") && stderr(&o).contains("no ontology node"));

    let o = ontocite(&["cite", &write("untitled.ttl", "<http://a> a <http://www.w3.org/2002/07/owl#Ontology> .\n")]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("build: "));

    let o = ontocite(&["cite", &dir.path().join("absent.ttl").to_string_lossy()]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("read: "));
}

#[test]
fn n3_is_read_as_turtle() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("pav.n3");
    std::fs::copy(fixtures().join("headers/pav.ttl"), &p).unwrap();
    let o = ontocite(&["cite", &p.to_string_lossy()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("[n3]\n"));
}

#[test]
fn parse_command() {
    let o = ontocite(&["parse", PAV_CITATION]);
    assert_eq!((code(&o), stdout(&o)), (0, golden("pav.json")));
    let o = ontocite(&["parse", &fixture("citations/pav.txt")]);
    assert_eq!(stdout(&o), golden("pav.json"));
    let o = ontocite(&["parse", "PAV. http://purl.org/pav/"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("expected date"));
}

#[test]
fn validate_inputs() {
    let o = ontocite(&["validate", PAV_CITATION]);
    assert_eq!((code(&o), stdout(&o)), (0, String::new()));

    let o = ontocite(&["validate", "http://purl.org/pav/"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("E-URI-ONLY\terror\t"));

    let o = ontocite(&["validate", "garbage"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("E-PARSE\terror\t"));

    // A citation file, an ontology file.
    assert_eq!(code(&ontocite(&["validate", &fixture("citations/pav.txt")])), 0);
    let o = ontocite(&["validate", &fixture("headers/water-quality.ttl")]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));

    let o = ontocite(&["validate", "no/such/file.json"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("read: "));
}

#[test]
fn validate_defect_fixtures() {
    for entry in std::fs::read_dir(fixtures().join("citations/defects")).unwrap() {
        let path = entry.unwrap().path();
        let expected = path.file_stem().unwrap().to_string_lossy().into_owned();
        let o = ontocite(&["validate", &path.to_string_lossy()]);
        let lines: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
        assert_eq!(lines.len(), 1, "{expected}: {lines:?}");
        let fields: Vec<&str> = lines[0].split('\t').collect();
        assert_eq!(fields.len(), 3);
        assert_eq!(fields[0], expected);
        let error = expected.starts_with("E-");
        assert_eq!(fields[1], if error { "error" } else { "warning" });
        assert_eq!(code(&o), i32::from(error));
    }
}

#[test]
fn validate_ontology_without_node_is_not_found() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("plain.nt");
    std::fs::write(&p, "<http://a> <http://b> <http://c> .\n").unwrap();
    let o = ontocite(&["validate", &p.to_string_lossy()]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("no ontology node"));
}

#[test]
fn inject_and_check_mutual() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("pav.nt");
    let out2 = dir.path().join("again.nt");
    let reference = std::fs::read_to_string(fixtures().join("citations/pav-article.txt")).unwrap();
    let reference = reference.trim();
    let pav = fixture("headers/pav.ttl");

    let o = ontocite(&["inject", &pav, "--reference", reference, "--lang", "EN", "--out", &out.to_string_lossy()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let written = std::fs::read_to_string(&out).unwrap();
    let line = format!("<http://purl.org/pav/> <http://purl.org/dc/terms/references> \"{reference}\"@en .\n");
    assert!(written.contains(&line));

    let o = ontocite(&["inject", &out.to_string_lossy(), "--reference", reference, "--out", &out2.to_string_lossy()]);
    assert_eq!(code(&o), 0);
    assert_eq!(std::fs::read(&out).unwrap(), std::fs::read(&out2).unwrap());

    let injected = out.to_string_lossy();
    let o = ontocite(&["check-mutual", &injected, &fixture("reflists/pav-only.txt"), "--format-label", "rdf/xml"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.starts_with("ontology-side\tholds\t1 reference(s)\n"));
    assert!(text.contains("publication-side\tholds\tsimilarity 1.000\n"));
    assert_eq!(code(&ontocite(&["check-mutual", &injected, &fixture("reflists/mixed.txt")])), 0);

    let o = ontocite(&["check-mutual", &pav, &fixture("reflists/empty.txt")]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "ontology-side\tmissing\t0 reference(s)\npublication-side\tmissing\tsimilarity 0.000\n");

    let o = ontocite(&["check-mutual", &injected, &fixture("reflists/article-only.txt")]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("publication-side\tmissing\t"));

    // An unreachable threshold only blocks the fuzzy path.
    let o = ontocite(&["check-mutual", &injected, &fixture("reflists/mixed.txt"), "--threshold", "1.01"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn inject_and_check_mutual_failures() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.nt").to_string_lossy().into_owned();
    let pav = fixture("headers/pav.ttl");
    assert_eq!(code(&ontocite(&["inject", &pav, "--reference", "  ", "--out", &out])), 2);
    assert_eq!(code(&ontocite(&["inject", &pav, "--reference", "x", "--lang", "not a tag", "--out", &out])), 2);
    let missing_dir = dir.path().join("no/such/dir/out.nt");
    assert_eq!(code(&ontocite(&["inject", &pav, "--reference", "x", "--out", &missing_dir.to_string_lossy()])), 2);
    assert_eq!(code(&ontocite(&["inject", &pav, "--out", &out])), 2);
    assert_eq!(code(&ontocite(&["check-mutual", &pav, "no/such/reflist.txt"])), 2);
    assert_eq!(code(&ontocite(&["check-mutual", &pav, &fixture("reflists/empty.txt"), "--threshold", "x"])), 2);
}

#[test]
fn legacy_relation_warns_on_stderr() {
    let o = ontocite(&["check-mutual", &fixture("headers/legacy-relation.ttl"), &fixture("reflists/empty.txt")]);
    assert!(stdout(&o).starts_with("ontology-side\tholds\t"));
    assert!(stderr(&o).contains("warning: reading dc:relation"));
}

#[test]
fn network_outputs() {
    let files = network_files();
    let mut args = vec!["network"];
    args.extend(files.iter().map(String::as_str));
    args.push("--dot");
    let o = ontocite(&args);
    assert_eq!((code(&o), stdout(&o)), (0, golden("network.dot")));

    *args.last_mut().unwrap() = "--counts";
    let o = ontocite(&args);
    assert_eq!(code(&o), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let manifest: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(fixtures().join("network/manifest.json")).unwrap()).unwrap();
    assert_eq!(report["counts"], manifest["counts"]);
    assert_eq!(report["edges"], manifest["edges"].as_array().unwrap().len());
    assert_eq!(report["ontologies"], manifest["ontologies"].as_array().unwrap().len());
    assert_eq!(report["unparsed_references"].as_array().unwrap().len() as u64, manifest["unparsed_references"].as_u64().unwrap());

    // File order does not matter.
    let mut rev = vec!["network", "--counts"];
    rev.extend(files.iter().rev().map(String::as_str));
    assert_eq!(stdout(&ontocite(&rev)), stdout(&o));
}

#[test]
fn network_single_and_failures() {
    let pav = fixture("headers/pav.ttl");
    let o = ontocite(&["network", &pav, "--dot"]);
    assert_eq!(stdout(&o), "digraph ontocite {\n  \"http://purl.org/pav/\";\n}\n");
    assert_eq!(code(&ontocite(&["network", &pav, &pav, "--dot"])), 2);
    assert_eq!(code(&ontocite(&["network", &pav, "no/such.ttl", "--counts"])), 2);
    assert_eq!(code(&ontocite(&["network", &pav])), 2);
    assert_eq!(code(&ontocite(&["network", "--dot"])), 2);
}

#[test]
fn usage_errors() {
    let o = ontocite(&[]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("Usage"));
    assert_eq!(code(&ontocite(&["frobnicate"])), 2);
    assert_eq!(code(&ontocite(&["cite", "x.ttl", "--style", "apa"])), 2);
    assert_eq!(code(&ontocite(&["cite", "x.ttl", "--format-label", "pdf"])), 2);
    let o = ontocite(&["--help"]);
    assert_eq!(code(&o), 0);
    for sub in ["cite", "parse", "validate", "inject", "check-mutual", "network"] {
        assert!(stdout(&o).contains(sub), "{sub}");
    }
}
