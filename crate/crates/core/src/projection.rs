//! Projection of an fd set onto a subset of its universe.

use std::ops::ControlFlow;

use indexmap::IndexSet;

use crate::attr::AttributeSet;
use crate::cover::nonredundant_cover;
use crate::engine::{Engine, Indexer};
use crate::error::Result;
use crate::exec::{check_limit, Config};
use crate::fd::{Fd, FdSet};
use crate::lattice;

/// A cover of `{S → T | Σ ⊨ S → T, ST ⊆ x}` over universe `x`.
///
/// Only subsets `S ⊆ x` that are minimal generators of their closure emit an
/// fd, `S → (cl(S) ∩ x) − S`, and the result goes through
/// [`nonredundant_cover`]. Exponential in `|x|`; refused beyond
/// `config.limits.subsets` attributes.
pub fn project_fds(sigma: &FdSet, x: &AttributeSet, config: &Config) -> Result<FdSet> {
    x.check_within(sigma.universe())?;
    check_limit("fd projection", x.len(), config.limits.subsets)?;
    let index = Indexer::new(sigma.universe());
    let engine = Engine::from_fdset(&index, sigma)?;
    let positions: Vec<usize> = x.iter().map(|a| index.index(a).expect("checked")).collect();
    let local = |mask: u64| -> AttributeSet {
        positions
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| index.attribute(p).clone())
            .collect()
    };

    let mut fds = IndexSet::new();
    lattice::scan::<()>(&engine, index.len(), &positions, config.strategy, |level| {
        for e in level.iter().filter(|e| e.generator) {
            let gained = e.closure & !e.subset;
            if gained != 0 {
                fds.insert(Fd::new(local(e.subset), local(gained)));
            }
        }
        ControlFlow::Continue(())
    });
    Ok(nonredundant_cover(&FdSet::from_parts_unchecked(x.clone(), fds)))
}
