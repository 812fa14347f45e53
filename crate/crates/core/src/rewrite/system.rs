use std::fmt;
use std::str::FromStr;

use indexmap::IndexSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::words::{canonical_word, enumerate_transversal, Word};

/// A balanced identity `lhs ≈ rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Identity {
    lhs: Word,
    rhs: Word,
}

impl Identity {
    /// Fails with [`Error::Unbalanced`] unless every letter occurs equally often on both sides.
    pub fn new(lhs: Word, rhs: Word) -> Result<Self> {
        if lhs.count_vector() != rhs.count_vector() {
            return Err(Error::Unbalanced { lhs, rhs });
        }
        Ok(Identity { lhs, rhs })
    }

    pub fn lhs(&self) -> &Word {
        &self.lhs
    }

    pub fn rhs(&self) -> &Word {
        &self.rhs
    }

    pub fn is_trivial(&self) -> bool {
        self.lhs == self.rhs
    }

    /// `ℓ(u ≈ v)`
    pub fn len(&self) -> usize {
        self.lhs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `∂(u ≈ v)`
    pub fn partition(&self) -> Partition {
        self.lhs.partition()
    }

    /// The side a rewrite in `direction` matches against.
    pub fn source_side(&self, direction: Direction) -> &Word {
        match direction {
            Direction::Forward => &self.lhs,
            Direction::Backward => &self.rhs,
        }
    }

    /// The side a rewrite in `direction` produces.
    pub fn target_side(&self, direction: Direction) -> &Word {
        match direction {
            Direction::Forward => &self.rhs,
            Direction::Backward => &self.lhs,
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs.to_text(), self.rhs.to_text())
    }
}

impl FromStr for Identity {
    type Err = Error;

    /// `lhs = rhs` in either word syntax.
    fn from_str(text: &str) -> Result<Self> {
        let mut sides = text.split('=');
        let (Some(lhs), Some(rhs), None) = (sides.next(), sides.next(), sides.next()) else {
            return Err(Error::parse(text, "expected exactly one '='"));
        };
        Identity::new(Word::parse(lhs)?, Word::parse(rhs)?)
    }
}

/// Orientation in which an identity is applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// `lhs → rhs`
    Forward,
    /// `rhs → lhs`
    Backward,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        }
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        match text {
            "forward" => Ok(Direction::Forward),
            "backward" => Ok(Direction::Backward),
            _ => Err(Error::parse(text, "expected forward or backward")),
        }
    }
}

/// A finite set of balanced identities, kept in insertion order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IdentitySystem {
    identities: IndexSet<Identity>,
}

impl IdentitySystem {
    pub fn new() -> Self {
        IdentitySystem::default()
    }

    /// Returns false if the identity was already present.
    pub fn insert(&mut self, identity: Identity) -> bool {
        self.identities.insert(identity)
    }

    pub fn extend_from(&mut self, other: &IdentitySystem) {
        self.identities.extend(other.identities.iter().cloned());
    }

    pub fn len(&self) -> usize {
        self.identities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.identities.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&Identity> {
        self.identities.get_index(index)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Identity> {
        self.identities.iter()
    }

    pub fn contains(&self, identity: &Identity) -> bool {
        self.identities.contains(identity)
    }

    pub fn max_length(&self) -> usize {
        self.identities.iter().map(Identity::len).max().unwrap_or(0)
    }

    /// Reads one `lhs = rhs` per line; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut system = IdentitySystem::new();
        for (number, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let identity = line
                .parse::<Identity>()
                .map_err(|e| Error::Line { line: number + 1, source: Box::new(e) })?;
            system.insert(identity);
        }
        Ok(system)
    }

    /// One identity per line, compact word syntax where possible.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for identity in &self.identities {
            out.push_str(&identity.to_string());
            out.push('\n');
        }
        out
    }
}

impl FromIterator<Identity> for IdentitySystem {
    fn from_iter<I: IntoIterator<Item = Identity>>(iter: I) -> Self {
        IdentitySystem { identities: iter.into_iter().collect() }
    }
}

impl<'a> IntoIterator for &'a IdentitySystem {
    type Item = &'a Identity;
    type IntoIter = indexmap::set::Iter<'a, Identity>;

    fn into_iter(self) -> Self::IntoIter {
        self.identities.iter()
    }
}

/// `{canonical ≈ w : w ∈ W_λ, w ≠ canonical}`, whose consequences identify all of `W_λ`.
pub fn collapse_system(lambda: &Partition) -> Result<IdentitySystem> {
    let canonical = canonical_word(lambda)?;
    Ok(enumerate_transversal(lambda)?
        .into_iter()
        .filter(|w| *w != canonical)
        .map(|w| Identity { lhs: canonical.clone(), rhs: w })
        .collect())
}
