//! Record and string generators for citation round-trip properties.
#![allow(dead_code)]

use ontocite::citation::CitationRecord;
use ontocite::metadata::Agent;
use ontocite::rdf::Iri;
use ontocite::syntax::FormatLabel;
use proptest::prelude::*;
use proptest::sample::subsequence;

fn days_in_month(y: u32, m: u32) -> u32 {
    match m {
        4 | 6 | 9 | 11 => 30,
        2 if (y.is_multiple_of(4) && !y.is_multiple_of(100)) || y.is_multiple_of(400) => 29,
        2 => 28,
        _ => 31,
    }
}

pub fn date() -> impl Strategy<Value = String> {
    (1000u32..3000, 1u32..=12)
        .prop_flat_map(|(y, m)| (Just(y), Just(m), 1..=days_in_month(y, m)))
        .prop_map(|(y, m, d)| format!("{y:04}-{m:02}-{d:02}"))
}

fn surname() -> impl Strategy<Value = String> {
    "[A-Z][a-zéü]{1,8}(-[A-Z][a-z]{1,6})?"
}

fn person() -> impl Strategy<Value = Agent> {
    (surname(), "[A-Z]\\.( [A-Z]\\.){0,2}").prop_map(|(s, i)| Agent::person(s, Some(&i)))
}

fn group_name() -> impl Strategy<Value = String> {
    prop_oneof![
        "[A-Z][a-z0-9]{1,8}( [A-Za-z][a-z0-9]{1,8}){0,3}",
        "[A-Z][A-Z0-9]{1,5}",
    ]
    .prop_filter("no ' and ' inside group names", |s| !s.split(' ').any(|w| w == "and"))
}

fn creators() -> impl Strategy<Value = Vec<Agent>> {
    prop::collection::vec(prop_oneof![3 => person(), 1 => group_name().prop_map(Agent::organization)], 1..6)
}

fn full_name() -> impl Strategy<Value = String> {
    let sep = prop_oneof![Just(" "), Just(" "), Just(", "), Just(" - "), Just(". ")];
    (prop::collection::vec(("[A-Za-z][a-z]{0,9}", sep), 1..7), any::<bool>()).prop_map(|(words, dot)| {
        let mut s = String::new();
        for (i, (w, sep)) in words.iter().enumerate() {
            if i > 0 {
                s.push_str(sep);
            }
            s.push_str(w);
        }
        if dot {
            s.push('.');
        }
        s
    })
}

fn version() -> impl Strategy<Value = Option<(String, Option<String>)>> {
    proptest::option::of(("v?[0-9]{1,3}(\\.[0-9]{1,3}){0,3}(-[a-z0-9]{1,5})?", proptest::option::of("[a-z0-9]{1,6}")))
}

fn uri() -> impl Strategy<Value = Iri> {
    prop_oneof![
        "http://example\\.org/[a-z]{1,8}/",
        "https://w3id\\.org/[a-z]{1,6}#",
        "urn:x-onto:[a-z0-9]{1,8}",
        "http://purl\\.obolibrary\\.org/obo/[a-z]{2,5}\\.owl",
    ]
    .prop_map(|s| Iri::new(s).unwrap())
}

fn formats() -> impl Strategy<Value = Vec<FormatLabel>> {
    subsequence(FormatLabel::ALL.to_vec(), 0..=FormatLabel::ALL.len()).prop_shuffle()
}

/// Valid records inside the domain where the canonical string determines
/// the record: people carry initials, group names contain neither ", " nor
/// " and ", and names without an acronym do not start with `WORD: `.
pub fn record() -> impl Strategy<Value = CitationRecord> {
    (creators(), date(), proptest::option::of("[A-Z][A-Z0-9-]{0,9}"), full_name(), version(), uri(), formats()).prop_map(
        |(creators, date, acronym, full_name, v, uri, formats)| {
            let (version, revision) = match v {
                Some((v, r)) => (Some(v), r),
                None => (None, None),
            };
            CitationRecord { creators, date, acronym, full_name, version, revision, uri, formats }
        },
    )
}

fn loose_creator() -> impl Strategy<Value = String> {
    prop_oneof![
        person().prop_map(|a| a.rendered()),
        surname(),
        group_name(),
        "[A-Z][a-z]{1,6} and [A-Z][a-z]{1,6} Ltd",
        "[A-Z][a-z]{1,6}, [A-Z][a-z]{1,6}",
    ]
}

fn loose_title() -> impl Strategy<Value = String> {
    prop_oneof![
        full_name(),
        ("[A-Za-z]{1,6}", full_name()).prop_map(|(a, f)| format!("{a}: {f}")),
        (full_name(), "[0-9]\\.[0-9]").prop_map(|(f, v)| format!("{f}. {v}")),
        (full_name(), full_name()).prop_map(|(a, b)| format!("{a}: {b}: x")),
    ]
}

fn noisy_space() -> impl Strategy<Value = &'static str> {
    prop_oneof![8 => Just(" "), 1 => Just("  "), 1 => Just(" \n\t ")]
}

/// Citation-like strings that stray outside the unambiguous domain:
/// mononyms, `and` inside group names, comma before the URI, angle
/// brackets, repeated format labels, uneven whitespace.
pub fn loose_string() -> impl Strategy<Value = String> {
    let labels = prop::collection::vec(prop::sample::select(FormatLabel::ALL.to_vec()), 0..4);
    (
        prop::collection::vec(loose_creator(), 1..5),
        date(),
        loose_title(),
        version(),
        prop_oneof![Just(". "), Just(", ")],
        uri(),
        any::<bool>(),
        labels,
        noisy_space(),
        noisy_space(),
    )
        .prop_map(|(creators, date, title, v, vsep, uri, angles, labels, sp1, sp2)| {
            let names = match creators.split_last() {
                Some((last, [])) => last.clone(),
                Some((last, rest)) => format!("{} and {last}", rest.join(", ")),
                None => unreachable!(),
            };
            let mut s = format!("{sp1}{names} ({date}).{sp2}{title}.");
            if let Some((v, r)) = v {
                s.push(' ');
                s.push_str(&v);
                if let Some(r) = r {
                    s.push_str(&format!("({r})"));
                }
                s.push_str(vsep.trim_end());
            }
            s.push(' ');
            if angles {
                s.push_str(&format!("<{}>", uri.as_str()));
            } else {
                s.push_str(uri.as_str());
            }
            if !labels.is_empty() {
                let l: Vec<&str> = labels.iter().map(|f| f.as_str()).collect();
                s.push_str(&format!(" [{}]", l.join(",  ")));
            }
            s
        })
}
