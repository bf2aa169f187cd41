use thiserror::Error;

use crate::attr::{Attribute, AttributeSet};

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by the library. Limit errors are refusals: the requested
/// search was not attempted, no partial answer is returned.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("attribute {attribute} is not in the universe {universe}")]
    AttributeOutOfUniverse {
        attribute: Attribute,
        universe: AttributeSet,
    },

    #[error("attribute {attribute} is not in the scheme {scheme}")]
    AttributeOutOfScheme { attribute: Attribute, scheme: AttributeSet },

    #[error("universes differ: {left} vs {right}")]
    UniverseMismatch { left: AttributeSet, right: AttributeSet },

    #[error("{what}: {size} attributes exceeds the limit of {limit}")]
    LimitExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("parts cover {covered} but the relation scheme is {scheme}")]
    SchemeCoverage {
        covered: AttributeSet,
        scheme: AttributeSet,
    },

    #[error("symbol {0} is used twice in the reduction")]
    SymbolCollision(String),

    #[error("invalid attribute name {0:?}")]
    InvalidName(String),

    #[error("invalid relation: {0}")]
    InvalidRelation(String),

    #[error("invalid hitting-set instance: {0}")]
    InvalidInstance(String),

    #[error("empty join")]
    EmptyJoin,
}
