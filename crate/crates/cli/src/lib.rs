//! The `ontocite` command line: every subcommand runs in-process and returns
//! its output streams and exit status, so `main` only prints.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use ontocite::citation::{build_record, parse_canonical, render_bibtex, render_canonical, render_json, CitationRecord, PartialCitation};
use ontocite::metadata::{derive_acronym, extract_metadata, find_ontology_iri, MetadataError, OntologyMetadata};
use ontocite::mutual::{check_ontology_side, check_publication_side, inject_reference, DEFAULT_THRESHOLD};
use ontocite::network::{build_network, counts_json, export_dot};
use ontocite::principles::{has_errors, validate_citation_string, validate_record, Diagnostic};
use ontocite::rdf::{Graph, Iri};
use ontocite::syntax::{detect_format_label, parse_ntriples, parse_turtle, serialize_ntriples, FormatLabel};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ontocite", version, about = "Cite ontologies, check citations, link ontologies to publications")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Style {
    Canonical,
    Bibtex,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the citation of an ontology file.
    Cite {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "canonical")]
        style: Style,
        /// Format label to cite instead of the detected one.
        #[arg(long, value_parser = format_label)]
        format_label: Option<FormatLabel>,
    },
    /// Parse a canonical citation string (or a file holding one) into JSON.
    Parse { citation: String },
    /// Check a citation string, a citation file, a JSON record or an ontology file.
    Validate { input: String },
    /// Add a publication reference to an ontology header; writes N-Triples.
    Inject {
        path: PathBuf,
        #[arg(long)]
        reference: String,
        #[arg(long, default_value = "en")]
        lang: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check that an ontology and a publication's reference list cite each other.
    CheckMutual {
        ontology: PathBuf,
        reflist: PathBuf,
        #[arg(long, default_value_t = DEFAULT_THRESHOLD)]
        threshold: f64,
        #[arg(long, value_parser = format_label)]
        format_label: Option<FormatLabel>,
    },
    /// Import and reference links across a set of ontology files.
    #[command(group(ArgGroup::new("output").required(true).args(["dot", "counts"])))]
    Network {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        counts: bool,
    },
}

fn format_label(s: &str) -> Result<FormatLabel, String> {
    s.parse::<FormatLabel>().map_err(|e| e.to_string())
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: EXIT_OK }
    }
}

/// A failed stage: message for stderr plus the exit status.
struct Failure {
    code: i32,
    message: String,
}

fn fail(stage: &str, detail: impl std::fmt::Display) -> Failure {
    Failure { code: EXIT_ERROR, message: format!("{stage}: {detail}") }
}

/// Runs the command line given in `args` (program name first).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code: EXIT_ERROR }
            } else {
                Outcome::ok(text)
            };
        }
    };
    let result = match cli.command {
        Command::Cite { path, style, format_label } => cite(&path, style, format_label),
        Command::Parse { citation } => parse(&citation),
        Command::Validate { input } => validate(&input),
        Command::Inject { path, reference, lang, out } => inject(&path, &reference, &lang, &out),
        Command::CheckMutual { ontology, reflist, threshold, format_label } => check_mutual(&ontology, &reflist, threshold, format_label),
        Command::Network { paths, dot, .. } => network(&paths, dot),
    };
    result.unwrap_or_else(|f| Outcome { stdout: String::new(), stderr: format!("ontocite: {}\n", f.message), code: f.code })
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| fail("read", format!("{}: {e}", path.display())))
}

/// Detects the syntax and parses. XML syntaxes and OBO are recognized but
/// not read; N3 is read as Turtle.
fn load(path: &Path) -> Result<(Graph, FormatLabel), Failure> {
    let text = read(path)?;
    let label = detect_format_label(&path.to_string_lossy(), &text).map_err(|e| fail("detect", e))?;
    let parsed = match label {
        FormatLabel::Turtle | FormatLabel::N3 => parse_turtle(&text),
        FormatLabel::NTriples => parse_ntriples(&text),
        FormatLabel::RdfXml | FormatLabel::OwlXml | FormatLabel::Obo => {
            return Err(fail("detect", format!("{} is {label}; convert to Turtle/N-Triples first", path.display())));
        }
    };
    let g = parsed.map_err(|e| fail("parse", format!("{}:{e}", path.display())))?;
    Ok((g, label))
}

fn metadata(g: &Graph, label: FormatLabel, path: &Path) -> Result<OntologyMetadata, Failure> {
    extract_metadata(g, Some(label)).map_err(|e| fail("extract", format!("{}: {e}", path.display())))
}

fn record_for(path: &Path, label_override: Option<FormatLabel>) -> Result<(Graph, Iri, CitationRecord, Vec<String>), Failure> {
    let (g, detected) = load(path)?;
    let meta = metadata(&g, label_override.unwrap_or(detected), path)?;
    let split = derive_acronym(&meta, &g).map_err(|e| fail("build", e))?;
    let record = build_record(&meta, split).map_err(|e| fail("build", e))?;
    Ok((g, meta.ontology_iri, record, meta.warnings))
}

fn warnings_text(warnings: &[String]) -> String {
    warnings.iter().map(|w| format!("ontocite: warning: {w}\n")).collect()
}

fn cite(path: &Path, style: Style, label: Option<FormatLabel>) -> Result<Outcome, Failure> {
    let (_, _, record, warnings) = record_for(path, label)?;
    let stdout = match style {
        Style::Canonical => render_canonical(&record) + "\n",
        Style::Bibtex => render_bibtex(&record),
        Style::Json => render_json(&record),
    };
    Ok(Outcome { stdout, stderr: warnings_text(&warnings), code: EXIT_OK })
}

/// A citation given inline, or the contents of an existing file.
fn citation_text(arg: &str) -> Result<String, Failure> {
    let p = Path::new(arg);
    if p.is_file() {
        Ok(read(p)?.trim().to_string())
    } else {
        Ok(arg.to_string())
    }
}

fn parse(arg: &str) -> Result<Outcome, Failure> {
    let text = citation_text(arg)?;
    let record = parse_canonical(&text).map_err(|e| fail("parse", e))?;
    Ok(Outcome::ok(render_json(&record)))
}

/// Something meant as a file name rather than a citation: no spaces, not
/// an absolute IRI, and a path separator or an extension.
fn looks_like_path(arg: &str) -> bool {
    !arg.contains(char::is_whitespace)
        && Iri::new(arg).is_err()
        && (arg.contains(std::path::MAIN_SEPARATOR) || Path::new(arg).extension().is_some())
}

fn validate(arg: &str) -> Result<Outcome, Failure> {
    let p = Path::new(arg);
    let diags = if p.is_file() || looks_like_path(arg) {
        validate_file(p)?
    } else {
        validate_citation_string(arg)
    };
    let mut stdout = String::new();
    for d in &diags {
        writeln!(stdout, "{d}").unwrap();
    }
    let code = if has_errors(&diags) { EXIT_FAILED } else { EXIT_OK };
    Ok(Outcome { stdout, stderr: String::new(), code })
}

fn validate_file(p: &Path) -> Result<Vec<Diagnostic>, Failure> {
    let ext = p.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase);
    match ext.as_deref() {
        Some("json") => {
            let text = read(p)?;
            let partial: PartialCitation = serde_json::from_str(&text).map_err(|e| fail("parse", format!("{}: {e}", p.display())))?;
            Ok(validate_record(&partial))
        }
        Some("ttl" | "nt" | "n3" | "owl" | "rdf" | "owx" | "obo") => {
            let (g, label) = load(p)?;
            let meta = match extract_metadata(&g, Some(label)) {
                Ok(m) => m,
                Err(e @ MetadataError::NoOntologyNode { .. }) => {
                    return Err(Failure { code: EXIT_FAILED, message: format!("extract: {}: {e}", p.display()) })
                }
                Err(e) => return Err(fail("extract", e)),
            };
            let split = derive_acronym(&meta, &g).ok();
            Ok(validate_record(&PartialCitation::from_metadata(&meta, split)))
        }
        _ => Ok(validate_citation_string(read(p)?.trim())),
    }
}

fn ontology_node(g: &Graph, path: &Path) -> Result<Iri, Failure> {
    find_ontology_iri(g).map(|(iri, _)| iri).map_err(|e| fail("extract", format!("{}: {e}", path.display())))
}

fn inject(path: &Path, reference: &str, lang: &str, out: &Path) -> Result<Outcome, Failure> {
    let (g, _) = load(path)?;
    let onto = ontology_node(&g, path)?;
    let g = inject_reference(&g, &onto, reference, lang).map_err(|e| fail("inject", e))?;
    std::fs::write(out, serialize_ntriples(&g)).map_err(|e| fail("write", format!("{}: {e}", out.display())))?;
    Ok(Outcome::ok(String::new()))
}

fn check_mutual(onto_path: &Path, reflist: &Path, threshold: f64, label: Option<FormatLabel>) -> Result<Outcome, Failure> {
    let (g, onto, record, mut warnings) = record_for(onto_path, label)?;
    let text = read(reflist)?;
    let side = check_ontology_side(&g, &onto);
    warnings.extend(side.warnings.iter().cloned());
    let m = check_publication_side(&text, &record, threshold);

    let verdict = |b: bool| if b { "holds" } else { "missing" };
    let mut stdout = String::new();
    writeln!(stdout, "ontology-side\t{}\t{} reference(s)", verdict(side.holds()), side.references.len()).unwrap();
    for (text, _) in &side.references {
        writeln!(stdout, "  {text}").unwrap();
    }
    writeln!(stdout, "publication-side\t{}\tsimilarity {:.3}", verdict(m.found), m.similarity).unwrap();
    if let Some(line) = &m.matched_line {
        writeln!(stdout, "  {line}").unwrap();
    }
    let code = if side.holds() && m.found { EXIT_OK } else { EXIT_FAILED };
    Ok(Outcome { stdout, stderr: warnings_text(&warnings), code })
}

fn network(paths: &[PathBuf], dot: bool) -> Result<Outcome, Failure> {
    let mut corpus = Vec::with_capacity(paths.len());
    for p in paths {
        let (g, _) = load(p)?;
        let onto = ontology_node(&g, p)?;
        corpus.push((g, onto));
    }
    let net = build_network(&corpus).map_err(|e| fail("network", e))?;
    Ok(Outcome::ok(if dot { export_dot(&net.graph) } else { counts_json(&net) }))
}
