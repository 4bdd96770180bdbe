use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use super::MetadataError;

/// One creator: a person reduced to surname and initials, or an organization
/// cited by its full name.
///
/// Equality, ordering and hashing ignore `raw`, which only records where the
/// name came from.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Agent {
    pub surname: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initials: Option<String>,
    #[serde(default)]
    pub organization: bool,
    #[serde(skip)]
    pub raw: String,
}

impl Agent {
    pub fn person(surname: impl Into<String>, initials: Option<&str>) -> Self {
        let surname = surname.into();
        let initials = initials.map(str::to_string);
        let raw = match &initials {
            Some(i) => format!("{surname}, {i}"),
            None => surname.clone(),
        };
        Agent {
            surname,
            initials,
            organization: false,
            raw,
        }
    }

    pub fn organization(name: impl Into<String>) -> Self {
        let name = name.into();
        Agent {
            raw: name.clone(),
            surname: name,
            initials: None,
            organization: true,
        }
    }

    /// `Surname, I. J.` for people with initials, the bare name otherwise.
    pub fn rendered(&self) -> String {
        match &self.initials {
            Some(i) if !self.organization => format!("{}, {}", self.surname, i),
            _ => self.surname.clone(),
        }
    }

    fn key(&self) -> (&str, Option<&str>, bool) {
        (&self.surname, self.initials.as_deref(), self.organization)
    }
}

impl PartialEq for Agent {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for Agent {}

impl Hash for Agent {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl Ord for Agent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Agent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Agent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.rendered())
    }
}

/// `X.` groups separated by single spaces, each X an uppercase letter.
pub fn is_initials(s: &str) -> bool {
    !s.is_empty()
        && s.split(' ').all(|part| {
            let mut chars = part.chars();
            matches!(
                (chars.next(), chars.next(), chars.next()),
                (Some(c), Some('.'), None) if c.is_uppercase()
            )
        })
}

/// Initials for a given-name string: "Alasdair J. G." → "A. J. G.".
fn initials_of(given: &str) -> Option<String> {
    let parts: Vec<String> = given
        .split(|c: char| c.is_whitespace() || c == '.')
        .filter_map(|tok| tok.chars().find(|c| c.is_alphabetic()))
        .map(|c| format!("{}.", c.to_uppercase().next().unwrap_or(c)))
        .collect();
    (!parts.is_empty()).then(|| parts.join(" "))
}

/// Person name to "surname + initials".
///
/// `"Surname, Given"` keeps the surname and reduces the given part; otherwise
/// the last whitespace token is the surname and the earlier ones become
/// initials. A single token is a surname without initials.
pub fn normalize_person_name(raw: &str) -> Result<Agent, MetadataError> {
    let trimmed = raw.split_whitespace().collect::<Vec<_>>().join(" ");
    if trimmed.is_empty() {
        return Err(MetadataError::EmptyName);
    }
    let (surname, initials) = match trimmed.split_once(',') {
        Some((surname, given)) => (surname.trim().to_string(), initials_of(given)),
        None => {
            let mut tokens: Vec<&str> = trimmed.split(' ').collect();
            let surname = tokens.pop().expect("non-empty").to_string();
            (surname, initials_of(&tokens.join(" ")))
        }
    };
    if surname.is_empty() {
        return Err(MetadataError::EmptyName);
    }
    Ok(Agent {
        surname,
        initials,
        organization: false,
        raw: raw.to_string(),
    })
}

/// Person from separate given and family names.
pub(crate) fn person_from_parts(given: Option<&str>, family: &str) -> Result<Agent, MetadataError> {
    let family = family.split_whitespace().collect::<Vec<_>>().join(" ");
    if family.is_empty() {
        return Err(MetadataError::EmptyName);
    }
    let initials = given.and_then(initials_of);
    let raw = match given {
        Some(g) => format!("{} {family}", g.trim()),
        None => family.clone(),
    };
    Ok(Agent {
        surname: family,
        initials,
        organization: false,
        raw,
    })
}
