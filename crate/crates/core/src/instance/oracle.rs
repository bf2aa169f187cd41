//! Two-row relations as counterexamples for fd implication.
//!
//! If `Σ ⊭ X → Y`, the two-row relation whose rows agree exactly on
//! `cl_Σ(X)` satisfies `Σ` and violates `X → Y`. Conversely, a brute-force
//! scan over every agreement pattern of two rows decides implication
//! without computing any closure; [`ImplicationOracle`] does that scan and
//! is used to cross-check the closure-based algorithms.

use std::collections::BTreeSet;

use super::Relation;
use super::Value;
use crate::attr::AttributeSet;
use crate::error::Result;
use crate::exec::{check_limit, Config};
use crate::fd::{Fd, FdSet};
use crate::implication::closure;

const ALPHA: i64 = 0;
const BETA: i64 = 1;

/// Two rows over the universe that agree exactly on `cl_Σ(x)`. When the
/// closure is the whole universe the rows coincide and one row remains.
pub fn two_tuple_witness(sigma: &FdSet, x: &AttributeSet) -> Result<Relation> {
    let agree = closure(sigma, x)?;
    let u: Vec<Value> = sigma.universe().iter().map(|_| Value::Int(ALPHA)).collect();
    let v: Vec<Value> = sigma
        .universe()
        .iter()
        .map(|a| Value::Int(if agree.contains(a) { ALPHA } else { BETA }))
        .collect();
    Ok(Relation::from_canonical_rows(
        sigma.universe().clone(),
        BTreeSet::from([u, v]),
    ))
}

/// Precomputed set of two-row agreement patterns that satisfy `Σ`.
///
/// A pattern is the set `S` of attributes on which row two equals row one
/// (row one is all zeros). The pair satisfies `L → R` unless it agrees on
/// all of `L` but not on all of `R`.
#[derive(Debug, Clone)]
pub struct ImplicationOracle {
    universe: AttributeSet,
    models: Vec<u64>,
}

fn mask(universe: &AttributeSet, set: &AttributeSet) -> u64 {
    universe
        .iter()
        .enumerate()
        .filter(|(_, a)| set.contains(a))
        .fold(0, |m, (i, _)| m | 1 << i)
}

fn pattern_satisfies(pattern: u64, lhs: u64, rhs: u64) -> bool {
    lhs & !pattern != 0 || rhs & !pattern == 0
}

impl ImplicationOracle {
    /// Refuses universes larger than `config.limits.oracle` (there are
    /// `2^|U|` patterns).
    pub fn new(sigma: &FdSet, config: &Config) -> Result<Self> {
        let universe = sigma.universe().clone();
        check_limit("implication oracle", universe.len(), config.limits.oracle.min(62))?;
        let fds: Vec<(u64, u64)> = sigma
            .iter()
            .map(|fd| (mask(&universe, fd.lhs()), mask(&universe, fd.rhs())))
            .collect();
        let models = config.strategy.filter_map_range(1u64 << universe.len(), |p| {
            fds.iter().all(|&(l, r)| pattern_satisfies(p, l, r)).then_some(p)
        });
        Ok(ImplicationOracle { universe, models })
    }

    /// False iff some pattern satisfying `Σ` violates `fd`.
    pub fn implies(&self, fd: &Fd) -> Result<bool> {
        fd.check_within(&self.universe)?;
        let (l, r) = (mask(&self.universe, fd.lhs()), mask(&self.universe, fd.rhs()));
        Ok(self.models.iter().all(|&p| pattern_satisfies(p, l, r)))
    }

    /// A two-row relation satisfying `Σ` but not `fd`, when one exists.
    pub fn counterexample(&self, fd: &Fd) -> Result<Option<Relation>> {
        fd.check_within(&self.universe)?;
        let (l, r) = (mask(&self.universe, fd.lhs()), mask(&self.universe, fd.rhs()));
        Ok(self
            .models
            .iter()
            .find(|&&p| !pattern_satisfies(p, l, r))
            .map(|&p| pattern_relation(&self.universe, p)))
    }
}

pub(crate) fn pattern_relation(universe: &AttributeSet, pattern: u64) -> Relation {
    let u: Vec<Value> = universe.iter().map(|_| Value::Int(ALPHA)).collect();
    let v: Vec<Value> = (0..universe.len())
        .map(|i| Value::Int(if pattern >> i & 1 == 1 { ALPHA } else { BETA }))
        .collect();
    Relation::from_canonical_rows(universe.clone(), BTreeSet::from([u, v]))
}

/// One-shot [`ImplicationOracle`] query.
pub fn oracle_implies(sigma: &FdSet, fd: &Fd, config: &Config) -> Result<bool> {
    ImplicationOracle::new(sigma, config)?.implies(fd)
}
