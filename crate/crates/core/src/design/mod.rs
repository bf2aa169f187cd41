//! Relation schemes, keys, normal forms, BCNF decomposition and 3NF synthesis.
//!
//! Determinants, superkeys and keys of a scheme `R` are always evaluated
//! against a global fd set `Σ` whose universe contains `R`. For a
//! [`DatabaseSchema`], `Σ` is the union of the schemes' local fd sets.

mod decompose;
mod keys;
mod normal_form;
mod represents;
mod synthesis;

use std::fmt;

use crate::attr::AttributeSet;
use crate::error::{Error, Result};
use crate::fd::FdSet;

pub use decompose::{bcnf_decompose, BcnfDecomposition};
pub use keys::{enumerate_keys, find_key, is_determinant, is_prime, is_superkey};
pub use normal_form::{check_3nf, check_bcnf, NormalForm, NormalFormReport, Reason, Verdict, Witness};
pub use represents::{check_represents, LosslessEvidence, RepresentOptions, Representation};
pub use synthesis::{synthesize_3nf, SynthesisMode};

/// `(R, Σ_R)`: attributes plus local fds over exactly those attributes.
#[derive(Clone, PartialEq, Eq)]
pub struct RelationScheme {
    name: String,
    fds: FdSet,
}

impl RelationScheme {
    /// The scheme's attributes are `fds.universe()`.
    pub fn new(name: impl Into<String>, fds: FdSet) -> Self {
        RelationScheme { name: name.into(), fds }
    }

    /// A scheme over `attrs` with the given fds, which must lie inside `attrs`.
    pub fn with_fds(name: impl Into<String>, attrs: AttributeSet, fds: &FdSet) -> Result<Self> {
        Ok(RelationScheme::new(name, FdSet::from_fds(attrs, fds.iter().cloned())?))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn attrs(&self) -> &AttributeSet {
        self.fds.universe()
    }

    pub fn fds(&self) -> &FdSet {
        &self.fds
    }
}

impl fmt::Debug for RelationScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}) {}", self.name, self.attrs().joined(", "), self.fds)
    }
}

/// An ordered collection of relation schemes. The universe is the union of
/// their attributes.
#[derive(Clone, PartialEq, Eq)]
pub struct DatabaseSchema {
    schemes: Vec<RelationScheme>,
    universe: AttributeSet,
}

impl DatabaseSchema {
    pub fn new(schemes: Vec<RelationScheme>) -> Self {
        let universe = schemes.iter().fold(AttributeSet::new(), |acc, s| acc.union(s.attrs()));
        DatabaseSchema { schemes, universe }
    }

    /// The one-scheme schema `{(U, Σ)}`.
    pub fn single(scheme: RelationScheme) -> Self {
        DatabaseSchema::new(vec![scheme])
    }

    pub fn schemes(&self) -> &[RelationScheme] {
        &self.schemes
    }

    pub fn universe(&self) -> &AttributeSet {
        &self.universe
    }

    /// `Σ = ∪ Σ_j`, over the schema's universe.
    pub fn global_fds(&self) -> FdSet {
        self.schemes
            .iter()
            .fold(FdSet::new(self.universe.clone()), |acc, s| acc.union(s.fds()))
    }

    pub fn scheme_attrs(&self) -> Vec<AttributeSet> {
        self.schemes.iter().map(|s| s.attrs().clone()).collect()
    }
}

impl fmt::Debug for DatabaseSchema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.schemes).finish()
    }
}

/// `scheme.attrs ⊆ sigma.universe`.
pub(crate) fn check_scheme_in(scheme: &RelationScheme, sigma: &FdSet) -> Result<()> {
    scheme.attrs().check_within(sigma.universe())
}

pub(crate) fn check_in_scheme(x: &AttributeSet, scheme: &RelationScheme) -> Result<()> {
    match x.first_outside(scheme.attrs()) {
        Some(a) => Err(Error::AttributeOutOfScheme {
            attribute: a.clone(),
            scheme: scheme.attrs().clone(),
        }),
        None => Ok(()),
    }
}
