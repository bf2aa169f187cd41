//! Attribute symbols and finite sets of them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A named column. Attributes compare and order by name.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Attribute(Arc<str>);

impl Attribute {
    /// Builds an attribute, checking the identifier grammar
    /// `[A-Za-z_][A-Za-z0-9_]*`.
    pub fn new(name: &str) -> Result<Self> {
        if is_identifier(name) {
            Ok(Attribute(Arc::from(name)))
        } else {
            Err(Error::InvalidName(name.to_string()))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for Attribute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Attribute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for Attribute {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Attribute::new(s)
    }
}

/// A finite set of attributes, iterated in name order.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AttributeSet(BTreeSet<Attribute>);

impl AttributeSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Parses whitespace- or comma-separated names.
    pub fn parse(text: &str) -> Result<Self> {
        text.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(Attribute::new)
            .collect()
    }

    /// One attribute per character, the `ACE = {A, C, E}` shorthand.
    /// Panics on characters that are not identifiers; meant for tests and examples.
    pub fn from_chars(letters: &str) -> Self {
        letters
            .chars()
            .map(|c| Attribute::new(c.encode_utf8(&mut [0; 4])).expect("letter attribute"))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, a: &Attribute) -> bool {
        self.0.contains(a)
    }

    pub fn insert(&mut self, a: Attribute) -> bool {
        self.0.insert(a)
    }

    pub fn remove(&mut self, a: &Attribute) -> bool {
        self.0.remove(a)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = &Attribute> + ExactSizeIterator + Clone {
        self.0.iter()
    }

    pub fn is_subset(&self, other: &AttributeSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_superset(&self, other: &AttributeSet) -> bool {
        self.0.is_superset(&other.0)
    }

    pub fn is_disjoint(&self, other: &AttributeSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &AttributeSet) -> AttributeSet {
        AttributeSet(self.0.union(&other.0).cloned().collect())
    }

    pub fn intersection(&self, other: &AttributeSet) -> AttributeSet {
        AttributeSet(self.0.intersection(&other.0).cloned().collect())
    }

    pub fn difference(&self, other: &AttributeSet) -> AttributeSet {
        AttributeSet(self.0.difference(&other.0).cloned().collect())
    }

    pub fn with(&self, a: &Attribute) -> AttributeSet {
        let mut out = self.clone();
        out.insert(a.clone());
        out
    }

    pub fn without(&self, a: &Attribute) -> AttributeSet {
        let mut out = self.clone();
        out.remove(a);
        out
    }

    /// First attribute not in `universe`, if any.
    pub fn first_outside(&self, universe: &AttributeSet) -> Option<&Attribute> {
        self.0.iter().find(|a| !universe.contains(a))
    }

    pub fn check_within(&self, universe: &AttributeSet) -> Result<()> {
        match self.first_outside(universe) {
            Some(a) => Err(Error::AttributeOutOfUniverse {
                attribute: a.clone(),
                universe: universe.clone(),
            }),
            None => Ok(()),
        }
    }

    /// Names joined by `sep`, in canonical order.
    pub fn joined(&self, sep: &str) -> String {
        let names: Vec<&str> = self.0.iter().map(Attribute::name).collect();
        names.join(sep)
    }
}

impl fmt::Display for AttributeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.joined(", "))
    }
}

impl fmt::Debug for AttributeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromIterator<Attribute> for AttributeSet {
    fn from_iter<I: IntoIterator<Item = Attribute>>(iter: I) -> Self {
        AttributeSet(iter.into_iter().collect())
    }
}

impl<'a> FromIterator<&'a Attribute> for AttributeSet {
    fn from_iter<I: IntoIterator<Item = &'a Attribute>>(iter: I) -> Self {
        AttributeSet(iter.into_iter().cloned().collect())
    }
}

impl Extend<Attribute> for AttributeSet {
    fn extend<I: IntoIterator<Item = Attribute>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl IntoIterator for AttributeSet {
    type Item = Attribute;
    type IntoIter = std::collections::btree_set::IntoIter<Attribute>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a AttributeSet {
    type Item = &'a Attribute;
    type IntoIter = std::collections::btree_set::Iter<'a, Attribute>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl From<Attribute> for AttributeSet {
    fn from(a: Attribute) -> Self {
        AttributeSet(BTreeSet::from([a]))
    }
}
