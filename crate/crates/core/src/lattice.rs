//! Level-by-level closure scan over all subsets of a small attribute set.
//!
//! For `X = {x_0 … x_{k-1}}` (k < 64) every subset `S ⊆ X` is visited in
//! size order, lexicographic within a size, together with `cl(S) ∩ X` as a
//! bitmask. Closures are memoised per subset: when some `a ∈ S` already lies
//! in `cl(S − a)`, the closure of `S` equals that of `S − a` and no engine
//! call is made. Subsets reached only that way are not *generators*.

use std::ops::ControlFlow;

use crate::engine::{Bits, Engine};
use crate::exec::{combinations, Strategy};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Entry {
    pub subset: u64,
    /// `cl(subset) ∩ X`, as a mask over `X`.
    pub closure: u64,
    /// No `a ∈ subset` is derivable from `subset − a`.
    pub generator: bool,
}

pub(crate) fn full_mask(k: usize) -> u64 {
    if k == 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Closure of `subset` (local mask over `positions`) restricted back to `positions`.
pub(crate) fn local_closure(engine: &Engine, width: usize, positions: &[usize], subset: u64) -> u64 {
    let mut bits = Bits::with_capacity(width);
    for (i, &p) in positions.iter().enumerate() {
        if subset >> i & 1 == 1 {
            bits.insert(p);
        }
    }
    let closed = engine.closure(&bits);
    positions
        .iter()
        .enumerate()
        .filter(|(_, &p)| closed.contains(p))
        .fold(0u64, |m, (i, _)| m | 1 << i)
}

/// Visits every level; stops early when `visit` breaks.
pub(crate) fn scan<B>(
    engine: &Engine,
    width: usize,
    positions: &[usize],
    strategy: Strategy,
    mut visit: impl FnMut(&[Entry]) -> ControlFlow<B>,
) -> Option<B> {
    let k = positions.len();
    assert!(k < 32, "subset scan over {k} attributes");
    let mut memo = vec![0u64; 1usize << k];
    for size in 0..=k {
        let level = combinations(k, size);
        let entries = strategy.filter_map(&level, |&subset| {
            let derived = (0..k).find_map(|a| {
                if subset >> a & 1 == 0 {
                    return None;
                }
                let rest = memo[(subset & !(1 << a)) as usize];
                (rest >> a & 1 == 1).then_some(rest)
            });
            Some(match derived {
                Some(closure) => Entry {
                    subset,
                    closure,
                    generator: false,
                },
                None => Entry {
                    subset,
                    closure: local_closure(engine, width, positions, subset),
                    generator: true,
                },
            })
        });
        for e in &entries {
            memo[e.subset as usize] = e.closure;
        }
        if let ControlFlow::Break(b) = visit(&entries) {
            return Some(b);
        }
    }
    None
}
