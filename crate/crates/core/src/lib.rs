//! Functional dependencies over relational schemas.
//!
//! The crate covers attribute-set closure and implication, cover
//! computation, keys, BCNF/3NF checking, BCNF decomposition and 3NF
//! synthesis. A small relation-instance laboratory ([`instance`]) provides
//! projection, join and fd satisfaction on concrete relations, and serves as
//! an independent brute-force oracle for the symbolic algorithms.
//! [`reduction`] maps hitting-set instances to schemas whose BCNF check is
//! as hard as the hitting-set problem.

pub mod attr;
pub mod cover;
pub mod design;
mod engine;
pub mod error;
pub mod exec;
pub mod fd;
pub mod implication;
pub mod instance;
mod lattice;
pub mod projection;
pub mod random;
pub mod reduction;

pub use attr::{Attribute, AttributeSet};
pub use cover::{canonical_cover, minimum_cover, nonredundant_cover, reduced_cover};
pub use error::{Error, Result};
pub use exec::{Config, Limits, Strategy};
pub use fd::{Fd, FdSet};
pub use implication::{closure, equivalent, implies, is_closed, is_redundant};
pub use projection::project_fds;
