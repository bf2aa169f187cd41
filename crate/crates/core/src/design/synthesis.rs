use indexmap::IndexMap;

use super::keys::find_key_of;
use super::{DatabaseSchema, RelationScheme};
use crate::attr::AttributeSet;
use crate::cover::{canonical_cover, nonredundant_cover, reduced_cover};
use crate::error::Result;
use crate::exec::Config;
use crate::fd::FdSet;
use crate::projection::project_fds;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum SynthesisMode {
    /// One scheme per fd of the minimal cover plus the key scheme, as the
    /// textbook algorithm states it.
    Verbatim,
    /// Fds sharing a left side share a scheme; schemes contained in another
    /// are dropped and schemes with equal attributes merged.
    #[default]
    Merged,
}

/// Bernstein-style 3NF synthesis from a universal scheme `(U, Σ)`.
///
/// `Δ = nonredundant(reduced(canonical(Σ)))`, `X = key(U, Δ)`; every fd
/// `Y → A` of `Δ` yields the scheme `(YA, π_YA(Δ))` and `(X, ∅)` is added.
/// The output is in 3NF, preserves `Σ` and is lossless.
pub fn synthesize_3nf(universal: &RelationScheme, mode: SynthesisMode, config: &Config) -> Result<DatabaseSchema> {
    let sigma = universal.fds();
    let delta = nonredundant_cover(&reduced_cover(&canonical_cover(sigma)));
    let key = find_key_of(universal.attrs(), &delta)?;

    let groups: Vec<AttributeSet> = match mode {
        SynthesisMode::Verbatim => delta.iter().map(|fd| fd.attributes()).collect(),
        SynthesisMode::Merged => {
            let mut by_lhs: IndexMap<&AttributeSet, AttributeSet> = IndexMap::new();
            for fd in &delta {
                let entry = by_lhs.entry(fd.lhs()).or_insert_with(|| fd.lhs().clone());
                *entry = entry.union(fd.rhs());
            }
            by_lhs.into_values().collect()
        }
    };

    let mut schemes: Vec<(AttributeSet, FdSet)> = Vec::new();
    for attrs in groups {
        let fds = project_fds(&delta, &attrs, config)?;
        schemes.push((attrs, fds));
    }
    schemes.push((key.clone(), FdSet::new(key)));

    match mode {
        SynthesisMode::Verbatim => {
            let mut seen = Vec::new();
            schemes.retain(|s| {
                let fresh = !seen.contains(s);
                if fresh {
                    seen.push(s.clone());
                }
                fresh
            });
        }
        SynthesisMode::Merged => schemes = merge_subsumed(schemes),
    }

    Ok(DatabaseSchema::new(
        schemes
            .into_iter()
            .enumerate()
            .map(|(i, (_, fds))| RelationScheme::new(format!("R{}", i + 1), fds))
            .collect(),
    ))
}

/// Drops schemes whose attributes are a proper subset of another scheme's,
/// and folds schemes with equal attributes into the first of them.
fn merge_subsumed(schemes: Vec<(AttributeSet, FdSet)>) -> Vec<(AttributeSet, FdSet)> {
    let mut merged: Vec<(AttributeSet, FdSet)> = Vec::new();
    for (attrs, fds) in schemes {
        match merged.iter_mut().find(|(a, _)| *a == attrs) {
            Some((_, existing)) => *existing = existing.union(&fds),
            None => merged.push((attrs, fds)),
        }
    }
    let all: Vec<AttributeSet> = merged.iter().map(|(a, _)| a.clone()).collect();
    merged.retain(|(a, _)| !all.iter().any(|b| a != b && a.is_subset(b)));
    merged
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::{check_3nf, check_represents, RepresentOptions};

    fn universal(extra: &str, fds: &[&str]) -> RelationScheme {
        RelationScheme::new("U", FdSet::from_letters(extra, fds))
    }

    fn layout(schema: &DatabaseSchema) -> Vec<String> {
        schema
            .schemes()
            .iter()
            .map(|s| format!("{}:{}", s.attrs().joined(""), s.fds()))
            .collect()
    }

    #[test]
    fn chain_drops_the_key_scheme() {
        let u = universal("", &["A->B", "B->C"]);
        let out = synthesize_3nf(&u, SynthesisMode::Merged, &Config::default()).unwrap();
        assert_eq!(layout(&out), vec!["AB:{A -> B}", "BC:{B -> C}"]);
        assert!(check_3nf(&out, &Config::default()).unwrap().holds());
        let rep = check_represents(&out, &u, &RepresentOptions::default(), &Config::default()).unwrap();
        assert!(rep.dependency_preserving);
        assert!(rep.lossless.is_consistent());
    }

    #[test]
    fn no_fds_gives_the_universal_scheme() {
        let u = universal("ABC", &[]);
        let out = synthesize_3nf(&u, SynthesisMode::Merged, &Config::default()).unwrap();
        assert_eq!(layout(&out), vec!["ABC:{}"]);
    }

    #[test]
    fn running_example_merges_same_lhs() {
        let u = universal("ABCDE", &["E->C", "E->D"]);
        let merged = synthesize_3nf(&u, SynthesisMode::Merged, &Config::default()).unwrap();
        assert_eq!(layout(&merged), vec!["CDE:{E -> C D}", "ABE:{}"]);
        let verbatim = synthesize_3nf(&u, SynthesisMode::Verbatim, &Config::default()).unwrap();
        assert_eq!(layout(&verbatim), vec!["CE:{E -> C}", "DE:{E -> D}", "ABE:{}"]);
    }

    #[test]
    fn verbatim_keeps_redundant_schemes() {
        let u = universal("", &["A->B", "A->C"]);
        let verbatim = synthesize_3nf(&u, SynthesisMode::Verbatim, &Config::default()).unwrap();
        assert_eq!(layout(&verbatim), vec!["AB:{A -> B}", "AC:{A -> C}", "A:{}"]);
        let merged = synthesize_3nf(&u, SynthesisMode::Merged, &Config::default()).unwrap();
        assert_eq!(layout(&merged), vec!["ABC:{A -> B C}"]);
    }
}
