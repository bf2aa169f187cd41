//! Index-based closure machinery shared by the fd algorithms.
//!
//! Attributes of a universe are numbered in canonical order and attribute
//! sets become bitsets. Closure uses the counter/worklist scheme: every fd
//! keeps a count of left-side attributes not yet derived and fires once,
//! when the count reaches zero, so a closure costs time linear in the size
//! of the fd set.

use fixedbitset::FixedBitSet;

use crate::attr::{Attribute, AttributeSet};
use crate::error::{Error, Result};
use crate::fd::{Fd, FdSet};

pub(crate) type Bits = FixedBitSet;

#[derive(Debug, Clone)]
pub(crate) struct Indexer {
    attrs: Vec<Attribute>,
}

impl Indexer {
    pub fn new(universe: &AttributeSet) -> Self {
        Indexer {
            attrs: universe.iter().cloned().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.attrs.len()
    }

    pub fn attribute(&self, i: usize) -> &Attribute {
        &self.attrs[i]
    }

    pub fn index(&self, a: &Attribute) -> Option<usize> {
        self.attrs.binary_search(a).ok()
    }

    pub fn bits(&self, set: &AttributeSet) -> Result<Bits> {
        let mut out = Bits::with_capacity(self.attrs.len());
        for a in set {
            match self.index(a) {
                Some(i) => out.insert(i),
                None => {
                    return Err(Error::AttributeOutOfUniverse {
                        attribute: a.clone(),
                        universe: self.attrs.iter().collect(),
                    })
                }
            }
        }
        Ok(out)
    }

    pub fn set(&self, bits: &Bits) -> AttributeSet {
        bits.ones().map(|i| self.attrs[i].clone()).collect()
    }

    pub fn empty(&self) -> Bits {
        Bits::with_capacity(self.attrs.len())
    }
}

#[derive(Debug, Clone)]
struct Rule {
    lhs: Vec<usize>,
    rhs: Vec<usize>,
    active: bool,
}

/// A mutable, indexed fd set answering closure queries.
#[derive(Debug, Clone)]
pub(crate) struct Engine {
    width: usize,
    rules: Vec<Rule>,
    /// attribute -> rules having it on the left
    occurs: Vec<Vec<usize>>,
}

impl Engine {
    pub fn new(width: usize) -> Self {
        Engine {
            width,
            rules: Vec::new(),
            occurs: vec![Vec::new(); width],
        }
    }

    pub fn from_fdset(index: &Indexer, sigma: &FdSet) -> Result<Self> {
        let mut engine = Engine::new(index.len());
        for fd in sigma {
            engine.push(&index.bits(fd.lhs())?, &index.bits(fd.rhs())?);
        }
        Ok(engine)
    }

    pub fn push(&mut self, lhs: &Bits, rhs: &Bits) -> usize {
        let id = self.rules.len();
        let lhs: Vec<usize> = lhs.ones().collect();
        for &a in &lhs {
            self.occurs[a].push(id);
        }
        self.rules.push(Rule {
            lhs,
            rhs: rhs.ones().collect(),
            active: true,
        });
        id
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn set_active(&mut self, id: usize, active: bool) {
        self.rules[id].active = active;
    }

    pub fn lhs_bits(&self, id: usize) -> Bits {
        self.to_bits(&self.rules[id].lhs)
    }

    pub fn rhs_bits(&self, id: usize) -> Bits {
        self.to_bits(&self.rules[id].rhs)
    }

    fn to_bits(&self, items: &[usize]) -> Bits {
        let mut b = Bits::with_capacity(self.width);
        b.extend(items.iter().copied());
        b
    }

    pub fn remove_lhs_attribute(&mut self, id: usize, a: usize) {
        let rule = &mut self.rules[id];
        if let Some(pos) = rule.lhs.iter().position(|&x| x == a) {
            rule.lhs.remove(pos);
            self.occurs[a].retain(|&r| r != id);
        }
    }

    pub fn closure(&self, x: &Bits) -> Bits {
        self.closure_skipping(x, None)
    }

    /// Closure with rule `skip` treated as absent.
    pub fn closure_skipping(&self, x: &Bits, skip: Option<usize>) -> Bits {
        let mut result = x.clone();
        result.grow(self.width);
        let mut pending: Vec<u32> = self.rules.iter().map(|r| r.lhs.len() as u32).collect();
        let mut queue: Vec<usize> = result.ones().collect();
        let usable = |id: usize, rules: &[Rule]| rules[id].active && Some(id) != skip;

        for (id, rule) in self.rules.iter().enumerate() {
            if rule.lhs.is_empty() && usable(id, &self.rules) {
                fire(&rule.rhs, &mut result, &mut queue);
            }
        }
        while let Some(a) = queue.pop() {
            for &id in &self.occurs[a] {
                pending[id] -= 1;
                if pending[id] == 0 && usable(id, &self.rules) {
                    fire(&self.rules[id].rhs, &mut result, &mut queue);
                }
            }
        }
        result
    }

    pub fn implies(&self, lhs: &Bits, rhs: &Bits) -> bool {
        rhs.is_subset(&self.closure(lhs))
    }

    /// Whether rule `id` follows from the other active rules.
    pub fn is_implied_by_rest(&self, id: usize) -> bool {
        let rule = &self.rules[id];
        let closure = self.closure_skipping(&self.to_bits(&rule.lhs), Some(id));
        rule.rhs.iter().all(|&a| closure.contains(a))
    }

    pub fn active_ids(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.rules.len()).filter(|&id| self.rules[id].active)
    }

    pub fn to_fd(&self, index: &Indexer, id: usize) -> Fd {
        Fd::new(index.set(&self.lhs_bits(id)), index.set(&self.rhs_bits(id)))
    }
}

fn fire(rhs: &[usize], result: &mut Bits, queue: &mut Vec<usize>) {
    for &b in rhs {
        if !result.put(b) {
            queue.push(b);
        }
    }
}
