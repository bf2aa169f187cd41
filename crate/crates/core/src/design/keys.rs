use std::ops::ControlFlow;

use super::{check_in_scheme, check_scheme_in, RelationScheme};
use crate::attr::{Attribute, AttributeSet};
use crate::engine::{Engine, Indexer};
use crate::error::Result;
use crate::exec::{check_limit, Config};
use crate::fd::FdSet;
use crate::lattice::{self, full_mask, Entry};

/// A scheme's attributes located inside the global universe, with a compiled Σ.
pub(crate) struct SchemeView {
    pub index: Indexer,
    pub engine: Engine,
    pub positions: Vec<usize>,
}

impl SchemeView {
    pub fn new(attrs: &AttributeSet, sigma: &FdSet) -> Result<Self> {
        attrs.check_within(sigma.universe())?;
        let index = Indexer::new(sigma.universe());
        let engine = Engine::from_fdset(&index, sigma)?;
        let positions = attrs.iter().map(|a| index.index(a).expect("checked")).collect();
        Ok(SchemeView {
            index,
            engine,
            positions,
        })
    }

    pub fn local_set(&self, mask: u64) -> AttributeSet {
        self.positions
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| self.index.attribute(p).clone())
            .collect()
    }

    pub fn full(&self) -> u64 {
        full_mask(self.positions.len())
    }

    pub fn scan<B>(&self, config: &Config, visit: impl FnMut(&[Entry]) -> ControlFlow<B>) -> Option<B> {
        lattice::scan(&self.engine, self.index.len(), &self.positions, config.strategy, visit)
    }
}

/// `x ⊆ R` implies some attribute of `R − x`.
pub fn is_determinant(scheme: &RelationScheme, sigma: &FdSet, x: &AttributeSet) -> Result<bool> {
    check_in_scheme(x, scheme)?;
    check_scheme_in(scheme, sigma)?;
    let closure = crate::implication::closure(sigma, x)?;
    Ok(scheme.attrs().iter().any(|a| !x.contains(a) && closure.contains(a)))
}

/// `R ⊆ cl_Σ(x)`.
pub fn is_superkey(scheme: &RelationScheme, sigma: &FdSet, x: &AttributeSet) -> Result<bool> {
    check_in_scheme(x, scheme)?;
    check_scheme_in(scheme, sigma)?;
    Ok(scheme.attrs().is_subset(&crate::implication::closure(sigma, x)?))
}

/// One key, found by dropping attributes of `R` in canonical order while
/// the remainder stays a superkey.
pub fn find_key(scheme: &RelationScheme, sigma: &FdSet) -> Result<AttributeSet> {
    find_key_of(scheme.attrs(), sigma)
}

pub(crate) fn find_key_of(attrs: &AttributeSet, sigma: &FdSet) -> Result<AttributeSet> {
    let view = SchemeView::new(attrs, sigma)?;
    let target = view.index.bits(attrs)?;
    let mut key = target.clone();
    for &p in &view.positions {
        key.set(p, false);
        if !target.is_subset(&view.engine.closure(&key)) {
            key.insert(p);
        }
    }
    Ok(view.index.set(&key))
}

/// Every key of the scheme, smallest first, lexicographic within a size.
/// Exhaustive; refused beyond `config.limits.keys` attributes.
pub fn enumerate_keys(scheme: &RelationScheme, sigma: &FdSet, config: &Config) -> Result<Vec<AttributeSet>> {
    check_scheme_in(scheme, sigma)?;
    check_limit("key enumeration", scheme.attrs().len(), config.limits.keys)?;
    let view = SchemeView::new(scheme.attrs(), sigma)?;
    let full = view.full();
    let mut superkey = vec![false; 1usize << view.positions.len()];
    let mut keys = Vec::new();
    view.scan::<()>(config, |level| {
        for e in level {
            if e.closure == full {
                superkey[e.subset as usize] = true;
                let minimal = (0..view.positions.len())
                    .filter(|&a| e.subset >> a & 1 == 1)
                    .all(|a| !superkey[(e.subset & !(1 << a)) as usize]);
                if minimal {
                    keys.push(view.local_set(e.subset));
                }
            }
        }
        ControlFlow::Continue(())
    });
    Ok(keys)
}

/// `a` belongs to some key of the scheme.
pub fn is_prime(scheme: &RelationScheme, sigma: &FdSet, a: &Attribute, config: &Config) -> Result<bool> {
    check_in_scheme(&a.clone().into(), scheme)?;
    Ok(enumerate_keys(scheme, sigma, config)?.iter().any(|k| k.contains(a)))
}
