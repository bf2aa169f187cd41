//! Closure, implication and equivalence of fd sets.

use crate::attr::AttributeSet;
use crate::engine::{Engine, Indexer};
use crate::error::{Error, Result};
use crate::fd::{Fd, FdSet};

/// `cl_Σ(x)`: every attribute `A` with `Σ ⊨ x → A`.
pub fn closure(sigma: &FdSet, x: &AttributeSet) -> Result<AttributeSet> {
    let index = Indexer::new(sigma.universe());
    let x = index.bits(x)?;
    let engine = Engine::from_fdset(&index, sigma)?;
    Ok(index.set(&engine.closure(&x)))
}

/// `Σ ⊨ fd`, decided by `fd.rhs ⊆ cl_Σ(fd.lhs)`.
pub fn implies(sigma: &FdSet, fd: &Fd) -> Result<bool> {
    fd.check_within(sigma.universe())?;
    Ok(fd.rhs().is_subset(&closure(sigma, fd.lhs())?))
}

/// Whether each set implies every fd of the other. Both must share a universe.
pub fn equivalent(delta: &FdSet, sigma: &FdSet) -> Result<bool> {
    if delta.universe() != sigma.universe() {
        return Err(Error::UniverseMismatch {
            left: delta.universe().clone(),
            right: sigma.universe().clone(),
        });
    }
    Ok(implies_all(delta, sigma)? && implies_all(sigma, delta)?)
}

/// Whether `premises` implies every fd in `goals`.
pub fn implies_all(premises: &FdSet, goals: &FdSet) -> Result<bool> {
    let index = Indexer::new(premises.universe());
    let engine = Engine::from_fdset(&index, premises)?;
    for fd in goals {
        if !engine.implies(&index.bits(fd.lhs())?, &index.bits(fd.rhs())?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Some fd follows from the others.
pub fn is_redundant(sigma: &FdSet) -> bool {
    let index = Indexer::new(sigma.universe());
    let engine = Engine::from_fdset(&index, sigma).expect("FdSet members lie in its universe");
    (0..engine.len()).any(|id| engine.is_implied_by_rest(id))
}

/// Whether `rhs == cl_Σ(lhs)` for every fd in `sigma`.
pub fn is_closed(sigma: &FdSet) -> bool {
    let index = Indexer::new(sigma.universe());
    let engine = Engine::from_fdset(&index, sigma).expect("FdSet members lie in its universe");
    (0..engine.len()).all(|id| engine.closure(&engine.lhs_bits(id)) == engine.rhs_bits(id))
}
