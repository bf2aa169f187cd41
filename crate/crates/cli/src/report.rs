//! Structured command results, serialized with `--json`.
//!
//! Every report carries a `command` tag. Attribute sets are arrays of names
//! in canonical order and fds are strings in the `A B -> C` form, so a
//! report can be fed back to the library (see [`WitnessReport::to_witness`]).

use std::fmt::Write as _;

use fdkit_core::design::{DatabaseSchema, NormalForm, Reason, Verdict, Witness};
use fdkit_core::instance::Relation;
use fdkit_core::{Attribute, AttributeSet, Fd, FdSet};
use serde::{Deserialize, Serialize};

pub fn names(set: &AttributeSet) -> Vec<String> {
    set.iter().map(|a| a.name().to_string()).collect()
}

pub fn fd_strings(sigma: &FdSet) -> Vec<String> {
    sigma.iter().map(Fd::to_string).collect()
}

pub fn attribute_set(names: &[String]) -> fdkit_core::Result<AttributeSet> {
    names.iter().map(|n| Attribute::new(n)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeReport {
    pub name: String,
    pub attributes: Vec<String>,
    pub fds: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemaReport {
    pub schemes: Vec<SchemeReport>,
}

impl SchemaReport {
    pub fn new(schema: &DatabaseSchema) -> Self {
        SchemaReport {
            schemes: schema
                .schemes()
                .iter()
                .map(|s| SchemeReport {
                    name: s.name().to_string(),
                    attributes: names(s.attrs()),
                    fds: fd_strings(s.fds()),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub attributes: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl RelationReport {
    pub fn new(r: &Relation) -> Self {
        RelationReport {
            attributes: names(r.scheme()),
            rows: r
                .rows()
                .map(|row| row.iter().map(ToString::to_string).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FormTag {
    #[serde(rename = "bcnf")]
    Bcnf,
    #[serde(rename = "3nf")]
    ThirdNf,
}

impl From<NormalForm> for FormTag {
    fn from(f: NormalForm) -> Self {
        match f {
            NormalForm::Bcnf => FormTag::Bcnf,
            NormalForm::ThirdNf => FormTag::ThirdNf,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictTag {
    Satisfies,
    Violates,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub scheme: String,
    pub scheme_index: usize,
    pub determinant: Vec<String>,
    pub attribute: String,
    pub reason: String,
}

impl WitnessReport {
    pub fn new(w: &Witness, schema: &DatabaseSchema) -> Self {
        WitnessReport {
            scheme: schema.schemes()[w.scheme].name().to_string(),
            scheme_index: w.scheme,
            determinant: names(&w.determinant),
            attribute: w.attribute.name().to_string(),
            reason: w.reason.tag().to_string(),
        }
    }

    /// The library witness this entry describes, if it is well formed.
    pub fn to_witness(&self) -> Option<Witness> {
        Some(Witness {
            scheme: self.scheme_index,
            determinant: attribute_set(&self.determinant).ok()?,
            attribute: Attribute::new(&self.attribute).ok()?,
            reason: Reason::from_tag(&self.reason)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeKeys {
    pub scheme: String,
    pub keys: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LosslessTag {
    NoCounterexampleFound,
    Counterexample,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Report {
    Closure {
        of: Vec<String>,
        closure: Vec<String>,
    },
    Implies {
        fd: String,
        holds: bool,
    },
    Equivalent {
        equivalent: bool,
    },
    /// `mincover`, `nonredundant`, `reduce-fds`, `canonical`.
    Cover {
        kind: String,
        fds: Vec<String>,
    },
    Keys {
        all: bool,
        schemes: Vec<SchemeKeys>,
    },
    Check {
        form: FormTag,
        verdict: VerdictTag,
        witnesses: Vec<WitnessReport>,
    },
    Decompose {
        schema: SchemaReport,
        dependency_preserving: bool,
    },
    Synthesize {
        verbatim: bool,
        schema: SchemaReport,
    },
    Represents {
        dependency_preserving: bool,
        lossless: LosslessTag,
        instances: usize,
        seed: u64,
        counterexample: Option<RelationReport>,
    },
    HittingSet {
        solution: Option<Vec<String>>,
    },
    Reduce {
        schema: SchemaReport,
        bcnf: Option<VerdictTag>,
    },
    OracleImplies {
        fd: String,
        holds: bool,
        counterexample: Option<RelationReport>,
    },
}

impl From<Verdict> for VerdictTag {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Satisfies => VerdictTag::Satisfies,
            Verdict::Violates => VerdictTag::Violates,
        }
    }
}

/// A schema report as a schema-language document.
pub fn render_schema(schema: &SchemaReport) -> String {
    let mut out = String::new();
    for s in &schema.schemes {
        let _ = writeln!(out, "scheme {}({})", s.name, s.attributes.join(", "));
    }
    let mut seen: Vec<&String> = Vec::new();
    for fd in schema.schemes.iter().flat_map(|s| &s.fds) {
        if !seen.contains(&fd) {
            seen.push(fd);
            let _ = writeln!(out, "fd {fd}");
        }
    }
    out
}

fn render_relation(r: &RelationReport) -> String {
    let mut out = r.attributes.join(",") + "\n";
    for row in &r.rows {
        out += &row.join(",");
        out.push('\n');
    }
    out
}

impl Report {
    /// Whether the command's property holds; decides the exit status.
    pub fn holds(&self) -> bool {
        match self {
            Report::Implies { holds, .. } | Report::OracleImplies { holds, .. } => *holds,
            Report::Equivalent { equivalent } => *equivalent,
            Report::Check { verdict, .. } => *verdict == VerdictTag::Satisfies,
            Report::Represents {
                dependency_preserving,
                lossless,
                ..
            } => *dependency_preserving && *lossless == LosslessTag::NoCounterexampleFound,
            Report::HittingSet { solution } => solution.is_some(),
            Report::Reduce { bcnf, .. } => *bcnf != Some(VerdictTag::Violates),
            _ => true,
        }
    }

    /// Human-readable rendering.
    pub fn text(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Closure { closure, .. } => out = closure.join(" ") + "\n",
            Report::Implies { holds, .. } | Report::Equivalent { equivalent: holds } => out = format!("{holds}\n"),
            Report::OracleImplies {
                holds, counterexample, ..
            } => {
                out = format!("{holds}\n");
                if let Some(r) = counterexample {
                    out += &render_relation(r);
                }
            }
            Report::Cover { fds, .. } => {
                for fd in fds {
                    let _ = writeln!(out, "{fd}");
                }
            }
            Report::Keys { schemes, .. } => {
                for s in schemes {
                    for k in &s.keys {
                        let _ = writeln!(out, "{}: {}", s.scheme, k.join(" "));
                    }
                }
            }
            Report::Check { verdict, witnesses, .. } => {
                let _ = writeln!(
                    out,
                    "{}",
                    if *verdict == VerdictTag::Satisfies {
                        "satisfies"
                    } else {
                        "violates"
                    }
                );
                for w in witnesses {
                    let _ = writeln!(
                        out,
                        "{}: {} -> {} ({})",
                        w.scheme,
                        w.determinant.join(" "),
                        w.attribute,
                        w.reason
                    );
                }
            }
            Report::Decompose {
                schema,
                dependency_preserving,
            } => {
                out = render_schema(schema);
                let _ = writeln!(out, "# dependency preserving: {dependency_preserving}");
            }
            Report::Synthesize { schema, .. } => out = render_schema(schema),
            Report::Represents {
                dependency_preserving,
                lossless,
                instances,
                counterexample,
                ..
            } => {
                let _ = writeln!(out, "dependency-preserving: {dependency_preserving}");
                match lossless {
                    LosslessTag::NoCounterexampleFound => {
                        let _ = writeln!(out, "lossless: no counterexample in {instances} instances");
                    }
                    LosslessTag::Counterexample => out += "lossless: false, counterexample:\n",
                }
                if let Some(r) = counterexample {
                    out += &render_relation(r);
                }
            }
            Report::HittingSet { solution } => match solution {
                Some(w) => out = w.join(" ") + "\n",
                None => out = "none\n".into(),
            },
            Report::Reduce { schema, bcnf } => {
                out = render_schema(schema);
                if let Some(v) = bcnf {
                    let word = if *v == VerdictTag::Satisfies {
                        "satisfies"
                    } else {
                        "violates"
                    };
                    let _ = writeln!(out, "# bcnf: {word}");
                }
            }
        }
        out
    }
}
