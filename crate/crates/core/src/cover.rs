//! Covers of fd sets: reduced, non-redundant, canonical and minimum.
//!
//! All four scan fds in the set's insertion order and attributes in
//! canonical order, so their output is a deterministic function of the input.

use std::collections::HashMap;

use indexmap::IndexSet;

use crate::engine::{Engine, Indexer};
use crate::fd::{Fd, FdSet};

fn compile(sigma: &FdSet) -> (Indexer, Engine) {
    let index = Indexer::new(sigma.universe());
    let engine = Engine::from_fdset(&index, sigma).expect("FdSet members lie in its universe");
    (index, engine)
}

fn collect_active(sigma: &FdSet, index: &Indexer, engine: &Engine) -> FdSet {
    let fds: IndexSet<Fd> = engine.active_ids().map(|id| engine.to_fd(index, id)).collect();
    FdSet::from_parts_unchecked(sigma.universe().clone(), fds)
}

/// Drops extraneous left-side attributes: for each `X → Y`, each `A ∈ X` is
/// removed when the current set still implies `X − A → Y`.
pub fn reduced_cover(sigma: &FdSet) -> FdSet {
    let (index, mut engine) = compile(sigma);
    for id in 0..engine.len() {
        let rhs = engine.rhs_bits(id);
        for a in engine.lhs_bits(id).ones() {
            let mut smaller = engine.lhs_bits(id);
            smaller.set(a, false);
            if engine.implies(&smaller, &rhs) {
                engine.remove_lhs_attribute(id, a);
            }
        }
    }
    collect_active(sigma, &index, &engine)
}

/// Greedily removes fds implied by the remaining ones. The result is a
/// subset of `sigma`.
pub fn nonredundant_cover(sigma: &FdSet) -> FdSet {
    let (index, mut engine) = compile(sigma);
    for id in 0..engine.len() {
        if engine.is_implied_by_rest(id) {
            engine.set_active(id, false);
        }
    }
    collect_active(sigma, &index, &engine)
}

/// Splits every fd into singleton right sides; `X → ∅` disappears.
pub fn canonical_cover(sigma: &FdSet) -> FdSet {
    let fds: IndexSet<Fd> = sigma
        .iter()
        .flat_map(|fd| {
            fd.rhs()
                .iter()
                .map(move |a| Fd::new(fd.lhs().clone(), a.clone().into()))
        })
        .collect();
    FdSet::from_parts_unchecked(sigma.universe().clone(), fds)
}

/// A non-redundant cover whose fds are all closed (`X → cl(X)`), hence of
/// minimum cardinality.
///
/// Each original fd `X → Y` is taken out of the working set; if the rest no
/// longer yields `Y` from `X`, the closed fd `X → cl_Σ(X)` goes back in. A
/// final non-redundancy pass removes closed fds made superfluous by ones
/// inserted after them.
pub fn minimum_cover(sigma: &FdSet) -> FdSet {
    let (index, original) = compile(sigma);
    let mut work = original.clone();
    let mut live: HashMap<Fd, usize> = (0..work.len()).map(|id| (work.to_fd(&index, id), id)).collect();

    for id in 0..original.len() {
        let fd = original.to_fd(&index, id);
        if let Some(slot) = live.remove(&fd) {
            work.set_active(slot, false);
        }
        let lhs = original.lhs_bits(id);
        if !work.implies(&lhs, &original.rhs_bits(id)) {
            let closed_rhs = original.closure(&lhs);
            let closed = Fd::new(index.set(&lhs), index.set(&closed_rhs));
            live.entry(closed).or_insert_with(|| work.push(&lhs, &closed_rhs));
        }
    }
    nonredundant_cover(&collect_active(sigma, &index, &work))
}
