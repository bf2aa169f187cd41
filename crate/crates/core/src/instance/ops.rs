use std::collections::{BTreeSet, HashMap};

use super::{check_in_scheme, Relation, Value};
use crate::attr::AttributeSet;
use crate::error::{Error, Result};
use crate::fd::{Fd, FdSet};

/// `π_Y(I) = { w[Y] | w ∈ I }`.
pub fn project(i: &Relation, y: &AttributeSet) -> Result<Relation> {
    check_in_scheme(y, i.scheme())?;
    let cols = i.column_positions(y);
    let rows = i.rows().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
    Ok(Relation::from_canonical_rows(y.clone(), rows))
}

/// Natural join of all `relations`, folded left to right.
pub fn join(relations: &[Relation]) -> Result<Relation> {
    let (first, rest) = relations.split_first().ok_or(Error::EmptyJoin)?;
    Ok(rest.iter().fold(first.clone(), |acc, r| join2(&acc, r)))
}

fn join2(left: &Relation, right: &Relation) -> Relation {
    let scheme = left.scheme().union(right.scheme());
    let common = left.scheme().intersection(right.scheme());
    let left_common = left.column_positions(&common);
    let right_common = right.column_positions(&common);

    // each output column comes from the left relation if present there
    let sources: Vec<(bool, usize)> = scheme
        .iter()
        .map(|a| match left.scheme().iter().position(|x| x == a) {
            Some(p) => (true, p),
            None => (false, right.scheme().iter().position(|x| x == a).expect("union")),
        })
        .collect();

    let mut by_key: HashMap<Vec<&Value>, Vec<&[Value]>> = HashMap::new();
    for r in right.rows() {
        by_key
            .entry(right_common.iter().map(|&c| &r[c]).collect())
            .or_default()
            .push(r);
    }

    let mut rows = BTreeSet::new();
    for l in left.rows() {
        let key: Vec<&Value> = left_common.iter().map(|&c| &l[c]).collect();
        for r in by_key.get(&key).into_iter().flatten() {
            rows.insert(
                sources
                    .iter()
                    .map(|&(from_left, p)| if from_left { l[p].clone() } else { r[p].clone() })
                    .collect(),
            );
        }
    }
    Relation::from_canonical_rows(scheme, rows)
}

/// No two rows agree on `fd.lhs` and differ on `fd.rhs`.
pub fn satisfies(i: &Relation, fd: &Fd) -> Result<bool> {
    check_in_scheme(&fd.attributes(), i.scheme())?;
    let lhs = i.column_positions(fd.lhs());
    let rhs = i.column_positions(fd.rhs());
    let mut seen: HashMap<Vec<&Value>, Vec<&Value>> = HashMap::new();
    for row in i.rows() {
        let key = lhs.iter().map(|&c| &row[c]).collect();
        let image: Vec<&Value> = rhs.iter().map(|&c| &row[c]).collect();
        match seen.get(&key) {
            Some(prev) if *prev != image => return Ok(false),
            Some(_) => {}
            None => {
                seen.insert(key, image);
            }
        }
    }
    Ok(true)
}

pub fn satisfies_all(i: &Relation, sigma: &FdSet) -> Result<bool> {
    for fd in sigma {
        if !satisfies(i, fd)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether joining the projections of `i` onto `parts` gives back exactly `i`.
/// The join always contains `i`, so `false` means the decomposition is lossy
/// on this instance.
pub fn is_lossless_on(i: &Relation, parts: &[AttributeSet]) -> Result<bool> {
    let covered = parts.iter().fold(AttributeSet::new(), |acc, p| acc.union(p));
    if &covered != i.scheme() {
        return Err(Error::SchemeCoverage {
            covered,
            scheme: i.scheme().clone(),
        });
    }
    let projections = parts.iter().map(|p| project(i, p)).collect::<Result<Vec<_>>>()?;
    Ok(&join(&projections)? == i)
}
