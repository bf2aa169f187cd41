//! Finite relation instances.
//!
//! Relations are sets of rows over a scheme; row order never matters and
//! rendering sorts rows. Values are opaque tokens.

mod csv_format;
mod generate;
mod ops;
mod oracle;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::attr::{Attribute, AttributeSet};
use crate::error::{Error, Result};

pub use csv_format::{parse_csv, to_csv};
pub use generate::{random_satisfying_instance, InstanceShape};
pub use ops::{is_lossless_on, join, project, satisfies, satisfies_all};
pub use oracle::{oracle_implies, two_tuple_witness, ImplicationOracle};

/// An atomic constant. Integers and symbols never compare equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Int(i64),
    Text(Arc<str>),
}

impl Value {
    /// Reads a bare token; canonical decimal integers become `Int`.
    pub fn parse(token: &str) -> Result<Value> {
        if token.is_empty() || token.chars().any(|c| c.is_whitespace() || c == ',' || c == '"') {
            return Err(Error::InvalidRelation(format!("bad value token {token:?}")));
        }
        Ok(match token.parse::<i64>() {
            Ok(n) if n.to_string() == token => Value::Int(n),
            _ => Value::Text(Arc::from(token)),
        })
    }
}

impl From<i64> for Value {
    fn from(n: i64) -> Self {
        Value::Int(n)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(n) => write!(f, "{n}"),
            Value::Text(s) => f.write_str(s),
        }
    }
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A tuple on a scheme: one value per attribute.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tuple {
    scheme: AttributeSet,
    values: Vec<Value>,
}

impl Tuple {
    pub fn scheme(&self) -> &AttributeSet {
        &self.scheme
    }

    pub fn get(&self, a: &Attribute) -> Option<&Value> {
        self.scheme.iter().position(|x| x == a).map(|i| &self.values[i])
    }

    /// `v[Y]`; `restrict(scheme)` is the tuple itself.
    pub fn restrict(&self, y: &AttributeSet) -> Result<Tuple> {
        check_in_scheme(y, &self.scheme)?;
        let values = self
            .scheme
            .iter()
            .zip(&self.values)
            .filter(|(a, _)| y.contains(a))
            .map(|(_, v)| v.clone())
            .collect();
        Ok(Tuple {
            scheme: y.clone(),
            values,
        })
    }
}

impl fmt::Debug for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.scheme.iter().zip(&self.values)).finish()
    }
}

/// A finite set of tuples over `scheme`. Row vectors hold values in the
/// canonical attribute order of the scheme.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    scheme: AttributeSet,
    rows: BTreeSet<Vec<Value>>,
}

impl Relation {
    pub fn empty(scheme: AttributeSet) -> Self {
        Relation {
            scheme,
            rows: BTreeSet::new(),
        }
    }

    /// Rows given with columns in the order of `header`.
    pub fn from_records<R, V>(header: &[Attribute], records: R) -> Result<Relation>
    where
        R: IntoIterator<Item = V>,
        V: IntoIterator<Item = Value>,
    {
        let scheme: AttributeSet = header.iter().collect();
        if scheme.len() != header.len() {
            return Err(Error::InvalidRelation("duplicate column in header".into()));
        }
        // position in header of each canonical column
        let order: Vec<usize> = scheme
            .iter()
            .map(|a| header.iter().position(|h| h == a).expect("header attribute"))
            .collect();
        let mut rel = Relation::empty(scheme);
        for record in records {
            let record: Vec<Value> = record.into_iter().collect();
            if record.len() != header.len() {
                return Err(Error::InvalidRelation(format!(
                    "row has {} values, header has {}",
                    record.len(),
                    header.len()
                )));
            }
            rel.rows.insert(order.iter().map(|&i| record[i].clone()).collect());
        }
        Ok(rel)
    }

    /// Whitespace-separated table literal: `header` names the columns and
    /// each row string lists one token per column.
    pub fn from_table(header: &str, rows: &[&str]) -> Result<Relation> {
        let header: Vec<Attribute> = header.split_whitespace().map(Attribute::new).collect::<Result<_>>()?;
        let records = rows
            .iter()
            .map(|r| r.split_whitespace().map(Value::parse).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Relation::from_records(&header, records)
    }

    pub(crate) fn from_canonical_rows(scheme: AttributeSet, rows: BTreeSet<Vec<Value>>) -> Self {
        Relation { scheme, rows }
    }

    pub fn scheme(&self) -> &AttributeSet {
        &self.scheme
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Rows in sorted order, values in canonical column order.
    pub fn rows(&self) -> impl ExactSizeIterator<Item = &[Value]> {
        self.rows.iter().map(Vec::as_slice)
    }

    pub fn tuples(&self) -> impl Iterator<Item = Tuple> + '_ {
        self.rows.iter().map(|r| Tuple {
            scheme: self.scheme.clone(),
            values: r.clone(),
        })
    }

    pub fn contains(&self, t: &Tuple) -> bool {
        t.scheme == self.scheme && self.rows.contains(&t.values)
    }

    /// Every row of `self` is a row of `other`.
    pub fn is_subset(&self, other: &Relation) -> bool {
        self.scheme == other.scheme && self.rows.is_subset(&other.rows)
    }

    pub(crate) fn column_positions(&self, y: &AttributeSet) -> Vec<usize> {
        self.scheme
            .iter()
            .enumerate()
            .filter(|(_, a)| y.contains(a))
            .map(|(i, _)| i)
            .collect()
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", to_csv(self))
    }
}

pub(crate) fn check_in_scheme(y: &AttributeSet, scheme: &AttributeSet) -> Result<()> {
    match y.first_outside(scheme) {
        Some(a) => Err(Error::AttributeOutOfScheme {
            attribute: a.clone(),
            scheme: scheme.clone(),
        }),
        None => Ok(()),
    }
}
