//! Random relation instances that satisfy a given fd set.

use std::collections::{BTreeSet, HashMap};

use rand::Rng;

use super::{Relation, Value};
use crate::engine::{Engine, Indexer};
use crate::fd::FdSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InstanceShape {
    /// Random rows drawn before repair (at least one).
    pub max_rows: usize,
    /// Values of random rows come from `0..domain`.
    pub domain: i64,
    /// Two-row closure witnesses mixed in, each with fresh constants.
    pub witnesses: usize,
}

impl Default for InstanceShape {
    fn default() -> Self {
        InstanceShape {
            max_rows: 6,
            domain: 3,
            witnesses: 2,
        }
    }
}

/// Draws random rows plus a few two-row witnesses `cl(X)`-agreement pairs,
/// then repairs every fd violation by merging values column-wide: when two
/// rows agree on `S` and differ on `B ∈ T` for `S → T ∈ Σ`, one of the two
/// `B`-values is renamed to the other everywhere. Each merge removes a
/// distinct value from a column, so repair terminates, and the result
/// satisfies `Σ`.
pub fn random_satisfying_instance<R: Rng + ?Sized>(sigma: &FdSet, rng: &mut R, shape: &InstanceShape) -> Relation {
    let index = Indexer::new(sigma.universe());
    let engine = Engine::from_fdset(&index, sigma).expect("FdSet members lie in its universe");
    let width = index.len();
    let domain = shape.domain.max(1);

    let mut rows: Vec<Vec<i64>> = (0..rng.random_range(1..=shape.max_rows.max(1)))
        .map(|_| (0..width).map(|_| rng.random_range(0..domain)).collect())
        .collect();
    let mut fresh = domain;
    for _ in 0..shape.witnesses {
        let mut x = index.empty();
        for a in 0..width {
            if rng.random_bool(0.3) {
                x.insert(a);
            }
        }
        let agree = engine.closure(&x);
        rows.push(vec![fresh; width]);
        rows.push(
            (0..width)
                .map(|a| if agree.contains(a) { fresh } else { fresh + 1 })
                .collect(),
        );
        fresh += 2;
    }

    let rules: Vec<(Vec<usize>, Vec<usize>)> = sigma
        .iter()
        .map(|fd| {
            let pos = |s: &crate::attr::AttributeSet| -> Vec<usize> {
                s.iter().map(|a| index.index(a).expect("in universe")).collect()
            };
            (pos(fd.lhs()), pos(fd.rhs()))
        })
        .collect();
    while let Some((column, from, to)) = find_violation(&rows, &rules) {
        for row in rows.iter_mut() {
            if row[column] == from {
                row[column] = to;
            }
        }
    }

    let rows: BTreeSet<Vec<Value>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(Value::Int).collect())
        .collect();
    Relation::from_canonical_rows(sigma.universe().clone(), rows)
}

/// A merge `(column, from, to)` that repairs one violated fd.
fn find_violation(rows: &[Vec<i64>], rules: &[(Vec<usize>, Vec<usize>)]) -> Option<(usize, i64, i64)> {
    for (lhs, rhs) in rules {
        let mut first: HashMap<Vec<i64>, usize> = HashMap::new();
        for (r, row) in rows.iter().enumerate() {
            let key: Vec<i64> = lhs.iter().map(|&c| row[c]).collect();
            let &mut seen = first.entry(key).or_insert(r);
            if let Some(&c) = rhs.iter().find(|&&c| rows[seen][c] != row[c]) {
                return Some((c, row[c], rows[seen][c]));
            }
        }
    }
    None
}
