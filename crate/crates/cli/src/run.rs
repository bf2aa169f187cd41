//! Command-line surface and dispatch.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use fdkit_core::design::{
    bcnf_decompose, check_3nf, check_bcnf, check_represents, enumerate_keys, find_key, synthesize_3nf, DatabaseSchema,
    LosslessEvidence, NormalFormReport, RepresentOptions, SynthesisMode,
};
use fdkit_core::instance::ImplicationOracle;
use fdkit_core::reduction::{reduce_to_schema, solve_hitting_set, HittingSetInstance};
use fdkit_core::{
    canonical_cover, closure, equivalent, implies, minimum_cover, nonredundant_cover, reduced_cover, AttributeSet,
    Config, Error, Fd, FdSet, Limits, Strategy,
};

use crate::dsl::{parse_schema, Diagnostic, SchemaDocument};
use crate::report::{fd_strings, names, LosslessTag, RelationReport, Report, SchemaReport, SchemeKeys, WitnessReport};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILS: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_LIMIT: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "fdkit",
    version,
    about = "Functional dependencies: closures, covers, keys, normal forms"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Schema file; standard input when absent or `-`.
    #[arg(short, long, global = true, value_name = "PATH")]
    pub file: Option<PathBuf>,
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Attribute-count bound for every exponential search.
    #[arg(long, global = true, env = "FDKIT_LIMIT", value_name = "N")]
    pub limit: Option<usize>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Run searches on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NfArg {
    Bcnf,
    #[value(name = "3nf")]
    ThirdNf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closure of an attribute set.
    Closure {
        #[arg(long, value_name = "ATTRS")]
        of: String,
    },
    /// Whether Σ implies an fd.
    Implies { fd: String },
    /// Whether Σ is equivalent to the fds of another file.
    Equivalent { other: PathBuf },
    /// Minimum cover (closed, non-redundant).
    Mincover,
    /// Non-redundant cover.
    Nonredundant,
    /// Left-reduced cover.
    ReduceFds,
    /// Singleton right sides.
    Canonical,
    /// One key per scheme, or all of them.
    Keys {
        #[arg(long)]
        all: bool,
    },
    /// Normal-form check; exits 1 on a violation.
    Check {
        #[arg(long, value_enum)]
        nf: NfArg,
    },
    /// BCNF decomposition.
    Decompose {
        #[arg(long, required = true)]
        bcnf: bool,
    },
    /// 3NF synthesis from the universal scheme.
    Synthesize {
        #[arg(long = "3nf", required = true)]
        third_nf: bool,
        /// One scheme per fd, no merging.
        #[arg(long = "verbatim-3nf")]
        verbatim: bool,
    },
    /// Whether the schema represents the universal scheme of another file.
    Represents {
        universal: PathBuf,
        #[arg(long, default_value_t = 100)]
        instances: usize,
    },
    /// Solve a hitting-set instance exactly.
    HittingSet { instance: PathBuf },
    /// Translate a hitting-set instance into a schema.
    Reduce {
        instance: PathBuf,
        /// Also check the schema for BCNF; exits 1 on a violation.
        #[arg(long)]
        check: bool,
    },
    /// Queries answered by the brute-force instance oracle.
    Oracle {
        #[command(subcommand)]
        query: OracleQuery,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleQuery {
    /// Two-row search for a counterexample.
    Implies { fd: String },
}

pub enum Failure {
    Usage(String),
    Parse {
        source: String,
        diagnostics: Vec<Diagnostic>,
    },
    Limit(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::LimitExceeded { .. } => Failure::Limit(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

struct Context<'a> {
    global: &'a GlobalArgs,
    config: Config,
    stdin: &'a mut dyn Read,
    warnings: Vec<(String, Diagnostic)>,
}

impl Context<'_> {
    fn read(&mut self, path: Option<&Path>) -> Result<(String, String), Failure> {
        match path {
            None => {
                let mut text = String::new();
                self.stdin
                    .read_to_string(&mut text)
                    .map_err(|e| Failure::Usage(format!("reading standard input: {e}")))?;
                Ok(("<stdin>".into(), text))
            }
            Some(p) if p == Path::new("-") => self.read(None),
            Some(p) => {
                let text = fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
                Ok((p.display().to_string(), text))
            }
        }
    }

    fn document_at(&mut self, path: Option<&Path>) -> Result<SchemaDocument, Failure> {
        let (source, text) = self.read(path)?;
        match parse_schema(&text) {
            Ok(parsed) => {
                self.warnings
                    .extend(parsed.warnings.into_iter().map(|d| (source.clone(), d)));
                Ok(parsed.document)
            }
            Err(diagnostics) => Err(Failure::Parse { source, diagnostics }),
        }
    }

    fn document(&mut self) -> Result<SchemaDocument, Failure> {
        let path = self.global.file.clone();
        self.document_at(path.as_deref())
    }

    fn instance(&mut self, path: &Path) -> Result<HittingSetInstance, Failure> {
        let (source, text) = self.read(Some(path))?;
        HittingSetInstance::parse(&text).map_err(|e| Failure::Usage(format!("{source}: {e}")))
    }
}

/// Σ for a query mentioning `attrs`. A document that declares neither a
/// universe nor schemes has an open universe, so the query may add to it.
fn query_sigma(doc: &SchemaDocument, attrs: &AttributeSet) -> Result<FdSet, Failure> {
    let sigma = doc.sigma();
    if doc.universe.is_none() && doc.schemes.is_empty() {
        return Ok(sigma.widen(&sigma.universe().union(attrs))?);
    }
    attrs.check_within(sigma.universe())?;
    Ok(sigma)
}

fn parse_fd(text: &str) -> Result<Fd, Failure> {
    Fd::parse(text).map_err(|e| Failure::Usage(format!("bad fd `{text}`: {e}")))
}

fn check_report(report: NormalFormReport, schema: &DatabaseSchema) -> Report {
    Report::Check {
        form: report.form.into(),
        verdict: report.verdict.into(),
        witnesses: report.witnesses.iter().map(|w| WitnessReport::new(w, schema)).collect(),
    }
}

fn execute(command: &Command, cx: &mut Context<'_>) -> Result<Report, Failure> {
    let config = cx.config;
    Ok(match command {
        Command::Closure { of } => {
            let doc = cx.document()?;
            let x = AttributeSet::parse(of).map_err(|e| Failure::Usage(e.to_string()))?;
            Report::Closure {
                of: names(&x),
                closure: names(&closure(&query_sigma(&doc, &x)?, &x)?),
            }
        }
        Command::Implies { fd } => {
            let doc = cx.document()?;
            let fd = parse_fd(fd)?;
            Report::Implies {
                holds: implies(&query_sigma(&doc, &fd.attributes())?, &fd)?,
                fd: fd.to_string(),
            }
        }
        Command::Equivalent { other } => {
            let a = cx.document()?.sigma();
            let b = cx.document_at(Some(other))?.sigma();
            let universe = a.universe().union(b.universe());
            Report::Equivalent {
                equivalent: equivalent(&a.widen(&universe)?, &b.widen(&universe)?)?,
            }
        }
        Command::Mincover | Command::Nonredundant | Command::ReduceFds | Command::Canonical => {
            let sigma = cx.document()?.sigma();
            let (kind, fds) = match command {
                Command::Mincover => ("mincover", minimum_cover(&sigma)),
                Command::Nonredundant => ("nonredundant", nonredundant_cover(&sigma)),
                Command::ReduceFds => ("reduce-fds", reduced_cover(&sigma)),
                _ => ("canonical", canonical_cover(&sigma)),
            };
            Report::Cover {
                kind: kind.into(),
                fds: fd_strings(&fds),
            }
        }
        Command::Keys { all } => {
            let schema = cx.document()?.schema();
            let sigma = schema.global_fds();
            let mut schemes = Vec::new();
            for s in schema.schemes() {
                let keys = if *all {
                    enumerate_keys(s, &sigma, &config)?
                } else {
                    vec![find_key(s, &sigma)?]
                };
                schemes.push(SchemeKeys {
                    scheme: s.name().to_string(),
                    keys: keys.iter().map(names).collect(),
                });
            }
            Report::Keys { all: *all, schemes }
        }
        Command::Check { nf } => {
            let schema = cx.document()?.schema();
            let report = match nf {
                NfArg::Bcnf => check_bcnf(&schema, &config)?,
                NfArg::ThirdNf => check_3nf(&schema, &config)?,
            };
            check_report(report, &schema)
        }
        Command::Decompose { .. } => {
            let schema = cx.document()?.schema();
            let out = bcnf_decompose(&schema, &config)?;
            Report::Decompose {
                schema: SchemaReport::new(&out.schema),
                dependency_preserving: out.dependency_preserving,
            }
        }
        Command::Synthesize { verbatim, .. } => {
            let universal = cx.document()?.universal();
            let mode = if *verbatim {
                SynthesisMode::Verbatim
            } else {
                SynthesisMode::Merged
            };
            Report::Synthesize {
                verbatim: *verbatim,
                schema: SchemaReport::new(&synthesize_3nf(&universal, mode, &config)?),
            }
        }
        Command::Represents { universal, instances } => {
            let schema = cx.document()?.schema();
            let universal = cx.document_at(Some(universal))?.universal();
            let options = RepresentOptions {
                seed: cx.global.seed,
                instances: *instances,
                ..RepresentOptions::default()
            };
            let rep = check_represents(&schema, &universal, &options, &config)?;
            let (lossless, counterexample) = match &rep.lossless {
                LosslessEvidence::NoCounterexampleFound { .. } => (LosslessTag::NoCounterexampleFound, None),
                LosslessEvidence::Counterexample(r) => (LosslessTag::Counterexample, Some(RelationReport::new(r))),
            };
            Report::Represents {
                dependency_preserving: rep.dependency_preserving,
                lossless,
                instances: *instances,
                seed: cx.global.seed,
                counterexample,
            }
        }
        Command::HittingSet { instance } => {
            let inst = cx.instance(instance)?;
            Report::HittingSet {
                solution: solve_hitting_set(&inst, &config)?.as_ref().map(names),
            }
        }
        Command::Reduce { instance, check } => {
            let inst = cx.instance(instance)?;
            let schema = reduce_to_schema(&inst)?;
            let bcnf = if *check {
                Some(check_bcnf(&schema, &config)?.verdict.into())
            } else {
                None
            };
            Report::Reduce {
                schema: SchemaReport::new(&schema),
                bcnf,
            }
        }
        Command::Oracle {
            query: OracleQuery::Implies { fd },
        } => {
            let doc = cx.document()?;
            let fd = parse_fd(fd)?;
            let oracle = ImplicationOracle::new(&query_sigma(&doc, &fd.attributes())?, &config)?;
            let counterexample = oracle.counterexample(&fd)?;
            Report::OracleImplies {
                fd: fd.to_string(),
                holds: counterexample.is_none(),
                counterexample: counterexample.as_ref().map(RelationReport::new),
            }
        }
    })
}

fn config_for(global: &GlobalArgs) -> Config {
    Config {
        limits: global.limit.map(Limits::uniform).unwrap_or_default(),
        strategy: if global.sequential {
            Strategy::Sequential
        } else {
            Strategy::default()
        },
    }
}

fn print_diagnostic(err: &mut dyn Write, json: bool, source: &str, d: &Diagnostic) {
    let _ = if json {
        let value = serde_json::json!({
            "source": source,
            "line": d.position.line,
            "column": d.position.column,
            "severity": if d.is_error() { "error" } else { "warning" },
            "code": d.code.as_str(),
            "message": d.message,
        });
        writeln!(err, "{value}")
    } else {
        writeln!(err, "{source}:{d}")
    };
}

/// Runs one parsed command line and returns the exit status.
pub fn run(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let json = cli.global.json;
    let mut cx = Context {
        global: &cli.global,
        config: config_for(&cli.global),
        stdin,
        warnings: Vec::new(),
    };
    let result = execute(&cli.command, &mut cx);
    for (source, d) in &cx.warnings {
        print_diagnostic(err, json, source, d);
    }
    match result {
        Ok(report) => {
            let _ = if json {
                writeln!(out, "{}", serde_json::to_string(&report).expect("serializable"))
            } else {
                write!(out, "{}", report.text())
            };
            if report.holds() {
                EXIT_OK
            } else {
                EXIT_FAILS
            }
        }
        Err(Failure::Parse { source, diagnostics }) => {
            for d in &diagnostics {
                print_diagnostic(err, json, &source, d);
            }
            EXIT_USAGE
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Limit(msg)) => {
            let _ = writeln!(err, "error: {msg} (raise it with --limit or FDKIT_LIMIT)");
            EXIT_LIMIT
        }
    }
}
