//! Schema language, JSON reports and command dispatch for the `fdkit` binary.

pub mod dsl;
pub mod report;
pub mod run;

pub use dsl::{parse_schema, parse_schema_with, Diagnostic, ParseOptions, SchemaDocument};
pub use report::Report;
