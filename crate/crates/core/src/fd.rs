//! Functional dependencies and ordered collections of them.

use std::fmt;
use std::str::FromStr;

use indexmap::IndexSet;

use crate::attr::AttributeSet;
use crate::error::{Error, Result};

/// `lhs -> rhs`. The right side may be empty, which is vacuously true.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fd {
    lhs: AttributeSet,
    rhs: AttributeSet,
}

impl Fd {
    pub fn new(lhs: AttributeSet, rhs: AttributeSet) -> Self {
        Fd { lhs, rhs }
    }

    /// Parses `A B -> C`, `A,B -> C` or `A B → C`. Either side may be empty.
    pub fn parse(text: &str) -> Result<Self> {
        let (lhs, rhs) = text
            .split_once("->")
            .or_else(|| text.split_once('→'))
            .ok_or_else(|| Error::InvalidName(text.to_string()))?;
        Ok(Fd::new(AttributeSet::parse(lhs)?, AttributeSet::parse(rhs)?))
    }

    pub fn lhs(&self) -> &AttributeSet {
        &self.lhs
    }

    pub fn rhs(&self) -> &AttributeSet {
        &self.rhs
    }

    pub fn attributes(&self) -> AttributeSet {
        self.lhs.union(&self.rhs)
    }

    /// Holds in every relation: `rhs ⊆ lhs`.
    pub fn is_trivial(&self) -> bool {
        self.rhs.is_subset(&self.lhs)
    }

    pub fn check_within(&self, universe: &AttributeSet) -> Result<()> {
        self.lhs.check_within(universe)?;
        self.rhs.check_within(universe)
    }
}

impl fmt::Display for Fd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lhs = self.lhs.joined(" ");
        let rhs = self.rhs.joined(" ");
        match (lhs.is_empty(), rhs.is_empty()) {
            (true, true) => f.write_str("->"),
            (true, false) => write!(f, "-> {rhs}"),
            (false, true) => write!(f, "{lhs} ->"),
            (false, false) => write!(f, "{lhs} -> {rhs}"),
        }
    }
}

impl fmt::Debug for Fd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Fd {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Fd::parse(s)
    }
}

/// A set of fds over a fixed universe. Insertion order is kept because the
/// cover algorithms scan in that order; structural duplicates are dropped.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct FdSet {
    universe: AttributeSet,
    fds: IndexSet<Fd>,
}

impl FdSet {
    pub fn new(universe: AttributeSet) -> Self {
        FdSet {
            universe,
            fds: IndexSet::new(),
        }
    }

    pub fn from_fds<I>(universe: AttributeSet, fds: I) -> Result<Self>
    where
        I: IntoIterator<Item = Fd>,
    {
        let mut set = FdSet::new(universe);
        for fd in fds {
            set.insert(fd)?;
        }
        Ok(set)
    }

    /// Test helper: the universe is the union of the fds' attributes plus
    /// `extra`, and each fd is written `AB->C` with one-letter attributes.
    pub fn from_letters(extra: &str, fds: &[&str]) -> Self {
        let fds: Vec<Fd> = fds
            .iter()
            .map(|s| {
                let (l, r) = s.split_once("->").expect("fd arrow");
                Fd::new(AttributeSet::from_chars(l.trim()), AttributeSet::from_chars(r.trim()))
            })
            .collect();
        let mut universe = AttributeSet::from_chars(extra);
        for fd in &fds {
            universe = universe.union(&fd.attributes());
        }
        FdSet::from_fds(universe, fds).expect("fds within their own universe")
    }

    /// Returns false when the fd was already present.
    pub fn insert(&mut self, fd: Fd) -> Result<bool> {
        fd.check_within(&self.universe)?;
        Ok(self.fds.insert(fd))
    }

    /// Removes `fd`, keeping the order of the rest.
    pub fn remove(&mut self, fd: &Fd) -> bool {
        self.fds.shift_remove(fd)
    }

    pub fn contains(&self, fd: &Fd) -> bool {
        self.fds.contains(fd)
    }

    pub fn universe(&self) -> &AttributeSet {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.fds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fds.is_empty()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &Fd> + Clone {
        self.fds.iter()
    }

    pub fn get(&self, index: usize) -> Option<&Fd> {
        self.fds.get_index(index)
    }

    /// Same fds over a larger universe.
    pub fn widen(&self, universe: &AttributeSet) -> Result<FdSet> {
        FdSet::from_fds(universe.clone(), self.fds.iter().cloned())
    }

    /// Fds whose attributes all lie inside `attrs`, re-homed on `attrs`.
    pub fn embedded_in(&self, attrs: &AttributeSet) -> FdSet {
        let mut out = FdSet::new(attrs.clone());
        out.fds
            .extend(self.fds.iter().filter(|fd| fd.attributes().is_subset(attrs)).cloned());
        out
    }

    /// Union of two sets over the union of their universes; order is self then other.
    pub fn union(&self, other: &FdSet) -> FdSet {
        let mut out = FdSet::new(self.universe.union(&other.universe));
        out.fds.extend(self.fds.iter().cloned());
        out.fds.extend(other.fds.iter().cloned());
        out
    }

    pub(crate) fn from_parts_unchecked(universe: AttributeSet, fds: IndexSet<Fd>) -> FdSet {
        FdSet { universe, fds }
    }
}

impl fmt::Display for FdSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, fd) in self.fds.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{fd}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for FdSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.universe)
    }
}

impl<'a> IntoIterator for &'a FdSet {
    type Item = &'a Fd;
    type IntoIter = indexmap::set::Iter<'a, Fd>;

    fn into_iter(self) -> Self::IntoIter {
        self.fds.iter()
    }
}
