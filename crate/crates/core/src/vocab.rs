//! Vocabulary IRIs and the property precedence ladders used for extraction.
//!
//! The ladders are mirrored in `data/ladders.json`; a unit test keeps the two
//! in sync.

use crate::rdf::Iri;

macro_rules! terms {
    ($ns:literal; $($fn_name:ident => $local:literal),* $(,)?) => {
        pub const NS: &str = $ns;
        $(
            pub fn $fn_name() -> $crate::rdf::Iri {
                $crate::rdf::Iri::new(concat!($ns, $local)).expect("vocabulary IRI")
            }
        )*
    };
}

pub mod rdf {
    terms!("http://www.w3.org/1999/02/22-rdf-syntax-ns#"; type_ => "type");
}

pub mod rdfs {
    terms!("http://www.w3.org/2000/01/rdf-schema#"; label => "label");
}

pub mod owl {
    terms!("http://www.w3.org/2002/07/owl#";
        ontology => "Ontology",
        imports => "imports",
        version_info => "versionInfo",
    );
}

pub mod xsd {
    terms!("http://www.w3.org/2001/XMLSchema#";
        integer => "integer",
        decimal => "decimal",
        double => "double",
        boolean => "boolean",
    );
}

pub mod dcterms {
    terms!("http://purl.org/dc/terms/";
        title => "title",
        creator => "creator",
        issued => "issued",
        created => "created",
        modified => "modified",
        references => "references",
    );
}

pub mod dc {
    terms!("http://purl.org/dc/elements/1.1/"; relation => "relation");
}

pub mod foaf {
    terms!("http://xmlns.com/foaf/0.1/";
        name => "name",
        organization => "Organization",
    );
}

pub mod schema {
    terms!("http://schema.org/"; organization => "Organization");
    pub const HTTPS_ORGANIZATION: &str = "https://schema.org/Organization";
}

pub const TITLE_LADDER: &[&str] = &[
    "http://purl.org/dc/terms/title",
    "http://purl.org/dc/elements/1.1/title",
    "http://www.w3.org/2000/01/rdf-schema#label",
    "http://www.w3.org/2004/02/skos/core#prefLabel",
];

pub const CREATOR_LADDER: &[&str] = &[
    "http://purl.org/dc/terms/creator",
    "http://purl.org/dc/elements/1.1/creator",
    "http://purl.org/pav/createdBy",
    "http://xmlns.com/foaf/0.1/maker",
    "http://schema.org/creator",
];

pub const DATE_LADDER: &[&str] = &[
    "http://purl.org/dc/terms/issued",
    "http://purl.org/pav/createdOn",
    "http://purl.org/dc/terms/created",
    "http://purl.org/pav/lastUpdateOn",
    "http://purl.org/dc/terms/modified",
];

pub const VERSION_LADDER: &[&str] = &[
    "http://www.w3.org/2002/07/owl#versionInfo",
    "http://purl.org/pav/version",
    "http://schema.org/version",
];

/// Explicit acronym properties; the last one is upper-cased on use.
pub const ACRONYM_LADDER: &[&str] = &[
    "http://omv.ontoware.org/2005/05/ontology#acronym",
    "http://identifiers.org/idot/preferredPrefix",
    "http://purl.org/vocab/vann/preferredNamespacePrefix",
];

pub const AGENT_NAME_LADDER: &[&str] = &[
    "http://xmlns.com/foaf/0.1/name",
    "http://www.w3.org/2000/01/rdf-schema#label",
];

pub const GIVEN_NAME: &str = "http://xmlns.com/foaf/0.1/givenName";
pub const FAMILY_NAME: &str = "http://xmlns.com/foaf/0.1/familyName";

/// The template's revision slot has no standard property.
pub const REVISION: &str = "http://purl.org/ontocite/revision";

pub(crate) fn ladder(iris: &[&str]) -> Vec<Iri> {
    iris.iter().map(|s| Iri::new(*s).expect("ladder IRI")).collect()
}
