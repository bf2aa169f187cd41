//! Hitting set (exactly one element per subset) and its polynomial
//! reduction to BCNF violation.
//!
//! For ground set `T = {A_1 … A_n}` and subsets `B_1 … B_m`, the generated
//! schema over `U = A_1…A_n B_1…B_m C D` consists of
//!
//! * `(A_i B_j, {A_i → B_j})` for every membership `A_i ∈ B_j`,
//! * `(B_1…B_m C, {B_1…B_m → C})`,
//! * `(A_1…A_n C D, {CD → A_1…A_n} ∪ {A_i A_j → CD | A_i, A_j share a subset})`,
//!
//! and it violates BCNF iff the instance has a hitting set. A hitting set
//! `W` is then a determinant of the last scheme with `cl(W) = W B_1…B_m C`.

use std::cmp::Ordering;
use std::fmt;

use crate::attr::{Attribute, AttributeSet};
use crate::design::{DatabaseSchema, RelationScheme};
use crate::error::{Error, Result};
use crate::exec::{check_limit, Config};
use crate::fd::{Fd, FdSet};

pub const RESERVED_C: &str = "__C";
pub const RESERVED_D: &str = "__D";

#[derive(Clone, PartialEq, Eq)]
pub struct HittingSetInstance {
    ground: Vec<Attribute>,
    subsets: Vec<AttributeSet>,
}

impl HittingSetInstance {
    pub fn new(ground: Vec<Attribute>, subsets: Vec<AttributeSet>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidInstance(msg));
        if ground.is_empty() {
            return bad("empty ground set".into());
        }
        if subsets.is_empty() {
            return bad("no subsets".into());
        }
        let all: AttributeSet = ground.iter().collect();
        if all.len() != ground.len() {
            return bad("repeated element".into());
        }
        for (j, b) in subsets.iter().enumerate() {
            if b.is_empty() {
                return bad(format!("subset {} is empty", j + 1));
            }
            if let Some(a) = b.first_outside(&all) {
                return bad(format!("subset {} mentions unknown element {a}", j + 1));
            }
        }
        Ok(HittingSetInstance { ground, subsets })
    }

    /// Parses `elements: p1 p2 …` followed by one `set: …` line per subset.
    /// Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut ground = None;
        let mut subsets = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::InvalidInstance(format!("line {}: {msg}", n + 1));
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| err("expected `elements:` or `set:`"))?;
            let names: Vec<Attribute> = rest
                .split_whitespace()
                .map(Attribute::new)
                .collect::<Result<_>>()
                .map_err(|e| err(&e.to_string()))?;
            match key.trim() {
                "elements" if ground.is_none() => ground = Some(names),
                "elements" => return Err(err("duplicate `elements:` line")),
                "set" if ground.is_some() => subsets.push(names.into_iter().collect()),
                "set" => return Err(err("`set:` before `elements:`")),
                other => return Err(err(&format!("unknown key `{other}`"))),
            }
        }
        let ground = ground.ok_or_else(|| Error::InvalidInstance("missing `elements:` line".into()))?;
        HittingSetInstance::new(ground, subsets)
    }

    pub fn ground(&self) -> &[Attribute] {
        &self.ground
    }

    pub fn subsets(&self) -> &[AttributeSet] {
        &self.subsets
    }

    /// Attribute names of the subsets in the generated schema: `B1 … Bm`.
    pub fn subset_names(&self) -> Vec<Attribute> {
        (1..=self.subsets.len())
            .map(|j| Attribute::new(&format!("B{j}")).expect("identifier"))
            .collect()
    }

    pub fn is_hitting_set(&self, w: &AttributeSet) -> bool {
        self.subsets.iter().all(|b| b.intersection(w).len() == 1)
    }
}

impl fmt::Display for HittingSetInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.ground.iter().map(Attribute::name).collect();
        writeln!(f, "elements: {}", names.join(" "))?;
        for b in &self.subsets {
            writeln!(f, "set: {}", b.joined(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for HittingSetInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Orders masks by their sorted element sequences, lexicographically.
fn sequence_cmp(a: u64, b: u64) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let d = (a ^ b).trailing_zeros();
    let a_has = a >> d & 1 == 1;
    let without = if a_has { b } else { a };
    // `without` is a prefix of the other unless it continues past d
    let with_first = without >> d != 0;
    match (a_has, with_first) {
        (true, true) | (false, false) => Ordering::Less,
        _ => Ordering::Greater,
    }
}

/// A `W ⊆ T` meeting every subset in exactly one element, or `None`.
/// Exhaustive over `2^n` candidates; the lexicographically least solution
/// (elements in canonical order) is returned.
pub fn solve_hitting_set(inst: &HittingSetInstance, config: &Config) -> Result<Option<AttributeSet>> {
    check_limit("hitting set", inst.ground.len(), config.limits.hitting_set.min(63))?;
    let order: Vec<Attribute> = inst.ground.iter().collect::<AttributeSet>().into_iter().collect();
    let masks: Vec<u64> = inst
        .subsets
        .iter()
        .map(|b| {
            order
                .iter()
                .enumerate()
                .filter(|(_, a)| b.contains(a))
                .fold(0u64, |m, (i, _)| m | 1 << i)
        })
        .collect();
    let least = config.strategy.filter_min_range(
        1u64 << order.len(),
        |w| masks.iter().all(|&b| (w & b).count_ones() == 1).then_some(w),
        |&a, &b| sequence_cmp(a, b),
    );
    Ok(least.map(|w| {
        order
            .iter()
            .enumerate()
            .filter(|(i, _)| w >> i & 1 == 1)
            .map(|(_, a)| a.clone())
            .collect()
    }))
}

/// Builds the three families of schemes described in the module docs.
pub fn reduce_to_schema(inst: &HittingSetInstance) -> Result<DatabaseSchema> {
    let c = Attribute::new(RESERVED_C).expect("identifier");
    let d = Attribute::new(RESERVED_D).expect("identifier");
    let b_names = inst.subset_names();
    let mut seen = AttributeSet::new();
    for a in inst.ground.iter().chain(&b_names).chain([&c, &d]) {
        if !seen.insert(a.clone()) {
            return Err(Error::SymbolCollision(a.to_string()));
        }
    }
    let elements: AttributeSet = inst.ground.iter().collect();
    let bs: AttributeSet = b_names.iter().collect();
    let cd: AttributeSet = [c.clone(), d.clone()].into_iter().collect();

    let mut schemes = Vec::new();
    for (b, members) in b_names.iter().zip(&inst.subsets) {
        for a in members {
            let attrs: AttributeSet = [a.clone(), b.clone()].into_iter().collect();
            let fd = Fd::new(a.clone().into(), b.clone().into());
            schemes.push(RelationScheme::new(
                format!("D1_{a}_{b}"),
                FdSet::from_fds(attrs, [fd])?,
            ));
        }
    }

    let d2_attrs = bs.with(&c);
    let d2 = FdSet::from_fds(d2_attrs, [Fd::new(bs.clone(), c.clone().into())])?;
    schemes.push(RelationScheme::new("D2", d2));

    let mut d3 = FdSet::new(elements.union(&cd));
    d3.insert(Fd::new(cd.clone(), elements.clone()))?;
    for members in &inst.subsets {
        let list: Vec<&Attribute> = members.iter().collect();
        for (i, x) in list.iter().enumerate() {
            for y in &list[i + 1..] {
                let pair: AttributeSet = [(*x).clone(), (*y).clone()].into_iter().collect();
                d3.insert(Fd::new(pair, cd.clone()))?;
            }
        }
    }
    schemes.push(RelationScheme::new("D3", d3));
    Ok(DatabaseSchema::new(schemes))
}
