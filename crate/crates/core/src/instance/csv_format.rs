//! Relation literals as CSV: a header row of attribute names, then one row
//! per tuple of bare tokens. Rendering puts columns in canonical order and
//! sorts rows, so `render ∘ parse` is the identity on rendered text.

use super::{Relation, Value};
use crate::attr::Attribute;
use crate::error::{Error, Result};

pub fn parse_csv(text: &str) -> Result<Relation> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let bad = |e: csv::Error| Error::InvalidRelation(e.to_string());
    let header: Vec<Attribute> = reader
        .headers()
        .map_err(bad)?
        .iter()
        .map(Attribute::new)
        .collect::<Result<_>>()?;
    if header.is_empty() || header.iter().all(|a| a.name().is_empty()) {
        return Err(Error::InvalidRelation("missing header".into()));
    }
    let mut records = Vec::new();
    for record in reader.records() {
        let record = record.map_err(bad)?;
        records.push(record.iter().map(Value::parse).collect::<Result<Vec<_>>>()?);
    }
    Relation::from_records(&header, records)
}

pub fn to_csv(relation: &Relation) -> String {
    let mut out = relation.scheme().joined(",");
    out.push('\n');
    for row in relation.rows() {
        let line: Vec<String> = row.iter().map(Value::to_string).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}
