//! The schema language.
//!
//! ```text
//! # comment
//! universe A, B, C, D        # optional
//! scheme R(A, B, C)
//! scheme S(C D)
//! fd A B -> C
//! fd C -> D
//! fd A ->                    # A -> φ, accepted with a warning
//! ```
//!
//! Identifiers match `[A-Za-z_][A-Za-z0-9_]*`; lists are separated by
//! whitespace or single commas; `→` is accepted for `->`. The keywords are
//! only recognised at the start of a line.
//!
//! The fds form the universal set Σ over the universe: the declared
//! `universe`, else the union of the schemes, else (no schemes at all) every
//! attribute the fds mention. Each scheme carries the fds embedded in it.

use std::fmt;

use fdkit_core::design::{DatabaseSchema, RelationScheme};
use fdkit_core::reduction::{RESERVED_C, RESERVED_D};
use fdkit_core::{Attribute, AttributeSet, Fd, FdSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

/// Stable diagnostic codes. See `docs/formats.md`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Code {
    /// E001: malformed declaration.
    Syntax,
    /// E002: token that is not an identifier.
    InvalidIdentifier,
    /// E003: scheme name declared twice.
    DuplicateScheme,
    /// E004: `__C` or `__D` used in input.
    ReservedName,
    /// E005: fd attribute outside the universe.
    UnknownAttribute,
    /// E006: attribute listed twice in one declaration.
    DuplicateAttribute,
    /// E007: scheme attribute outside the declared universe.
    SchemeOutsideUniverse,
    /// E008: second `universe` line.
    DuplicateUniverse,
    /// W001: fd with an empty right side.
    VacuousFd,
    /// W002: fd not contained in any scheme.
    UnembeddedFd,
}

impl Code {
    pub fn as_str(self) -> &'static str {
        match self {
            Code::Syntax => "E001",
            Code::InvalidIdentifier => "E002",
            Code::DuplicateScheme => "E003",
            Code::ReservedName => "E004",
            Code::UnknownAttribute => "E005",
            Code::DuplicateAttribute => "E006",
            Code::SchemeOutsideUniverse => "E007",
            Code::DuplicateUniverse => "E008",
            Code::VacuousFd => "W001",
            Code::UnembeddedFd => "W002",
        }
    }

    pub fn severity(self) -> Severity {
        if self.as_str().starts_with('W') {
            Severity::Warning
        } else {
            Severity::Error
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub code: Code,
    pub position: Position,
    pub message: String,
}

impl Diagnostic {
    fn new(code: Code, position: Position, message: impl Into<String>) -> Self {
        Diagnostic {
            code,
            position,
            message: message.into(),
        }
    }

    pub fn severity(&self) -> Severity {
        self.code.severity()
    }

    pub fn is_error(&self) -> bool {
        self.severity() == Severity::Error
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.severity() {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(f, "{}: {kind}[{}]: {}", self.position, self.code.as_str(), self.message)
    }
}

/// A value with the place it was declared. Equality ignores the position.
#[derive(Debug, Clone)]
pub struct Spanned<T> {
    pub value: T,
    pub position: Position,
}

impl<T: PartialEq> PartialEq for Spanned<T> {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl<T: Eq> Eq for Spanned<T> {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeDecl {
    pub name: String,
    pub attrs: AttributeSet,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SchemaDocument {
    pub universe: Option<Spanned<AttributeSet>>,
    pub schemes: Vec<Spanned<SchemeDecl>>,
    pub fds: Vec<Spanned<Fd>>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    /// Accept `__C` and `__D`, as produced by `fdkit reduce`.
    pub allow_reserved: bool,
}

#[derive(Debug)]
pub struct Parsed {
    pub document: SchemaDocument,
    pub warnings: Vec<Diagnostic>,
}

pub fn parse_schema(text: &str) -> Result<Parsed, Vec<Diagnostic>> {
    parse_schema_with(text, ParseOptions::default())
}

/// Parses a whole document. On failure every diagnostic found is returned,
/// warnings included, sorted by position.
pub fn parse_schema_with(text: &str, options: ParseOptions) -> Result<Parsed, Vec<Diagnostic>> {
    let mut parser = Parser {
        options,
        diagnostics: Vec::new(),
        document: SchemaDocument::default(),
        fd_positions: Vec::new(),
    };
    for (n, line) in text.lines().enumerate() {
        parser.line(n + 1, line);
    }
    parser.validate();
    let Parser {
        mut diagnostics,
        document,
        ..
    } = parser;
    diagnostics.sort_by_key(|d| d.position);
    if diagnostics.iter().any(Diagnostic::is_error) {
        Err(diagnostics)
    } else {
        Ok(Parsed {
            document,
            warnings: diagnostics,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Open,
    Close,
    Comma,
    Arrow,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Ident(s) => write!(f, "`{s}`"),
            Token::Open => f.write_str("`(`"),
            Token::Close => f.write_str("`)`"),
            Token::Comma => f.write_str("`,`"),
            Token::Arrow => f.write_str("`->`"),
        }
    }
}

fn lex(line_no: usize, line: &str) -> Result<Vec<(Token, Position)>, Diagnostic> {
    let chars: Vec<char> = line.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let pos = Position {
            line: line_no,
            column: i + 1,
        };
        let c = chars[i];
        match c {
            '#' => break,
            c if c.is_whitespace() => i += 1,
            '(' | ')' | ',' | '→' => {
                tokens.push((
                    match c {
                        '(' => Token::Open,
                        ')' => Token::Close,
                        ',' => Token::Comma,
                        _ => Token::Arrow,
                    },
                    pos,
                ));
                i += 1;
            }
            '-' if chars.get(i + 1) == Some(&'>') => {
                tokens.push((Token::Arrow, pos));
                i += 2;
            }
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                if word.starts_with(|c: char| c.is_ascii_digit()) {
                    return Err(Diagnostic::new(
                        Code::InvalidIdentifier,
                        pos,
                        format!("`{word}` is not an identifier"),
                    ));
                }
                tokens.push((Token::Ident(word), pos));
            }
            other => {
                return Err(Diagnostic::new(
                    Code::Syntax,
                    pos,
                    format!("unexpected character `{other}`"),
                ))
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    options: ParseOptions,
    diagnostics: Vec<Diagnostic>,
    document: SchemaDocument,
    /// Attribute positions of every fd, for unknown-attribute reports.
    fd_positions: Vec<Vec<(Attribute, Position)>>,
}

type Tokens<'a> = &'a [(Token, Position)];

impl Parser {
    fn error(&mut self, code: Code, position: Position, message: impl Into<String>) {
        self.diagnostics.push(Diagnostic::new(code, position, message));
    }

    fn line(&mut self, line_no: usize, line: &str) {
        let tokens = match lex(line_no, line) {
            Ok(t) => t,
            Err(d) => return self.diagnostics.push(d),
        };
        let Some(((first, pos), rest)) = tokens.split_first() else {
            return;
        };
        let end = Position {
            line: line_no,
            column: line.chars().count() + 1,
        };
        match first {
            Token::Ident(k) if k == "universe" => self.universe(*pos, rest),
            Token::Ident(k) if k == "scheme" => self.scheme(*pos, rest, end),
            Token::Ident(k) if k == "fd" => self.fd(*pos, rest, end),
            other => self.error(
                Code::Syntax,
                *pos,
                format!("expected `universe`, `scheme` or `fd`, found {other}"),
            ),
        }
    }

    /// A list of identifiers separated by whitespace or single commas,
    /// running up to the first token that is neither.
    fn list<'a>(&mut self, tokens: Tokens<'a>) -> Option<(Vec<(Attribute, Position)>, Tokens<'a>)> {
        let mut out: Vec<(Attribute, Position)> = Vec::new();
        let mut i = 0;
        let mut after_comma = false;
        while let Some((tok, pos)) = tokens.get(i) {
            match tok {
                Token::Ident(name) => {
                    let attr = self.identifier(name, *pos)?;
                    if out.iter().any(|(a, _)| *a == attr) {
                        self.error(Code::DuplicateAttribute, *pos, format!("`{name}` listed twice"));
                        return None;
                    }
                    out.push((attr, *pos));
                    after_comma = false;
                }
                Token::Comma if !out.is_empty() && !after_comma => after_comma = true,
                Token::Comma => {
                    self.error(Code::Syntax, *pos, "unexpected `,`");
                    return None;
                }
                _ => break,
            }
            i += 1;
        }
        if after_comma {
            let pos = tokens[i - 1].1;
            self.error(Code::Syntax, pos, "trailing `,`");
            return None;
        }
        Some((out, &tokens[i..]))
    }

    fn identifier(&mut self, name: &str, pos: Position) -> Option<Attribute> {
        if !self.options.allow_reserved && (name == RESERVED_C || name == RESERVED_D) {
            self.error(Code::ReservedName, pos, format!("`{name}` is reserved"));
            return None;
        }
        Attribute::new(name).ok().or_else(|| {
            self.error(Code::InvalidIdentifier, pos, format!("`{name}` is not an identifier"));
            None
        })
    }

    fn expect_end(&mut self, rest: Tokens<'_>) -> Option<()> {
        match rest.first() {
            None => Some(()),
            Some((tok, pos)) => {
                self.error(Code::Syntax, *pos, format!("unexpected {tok}"));
                None
            }
        }
    }

    fn universe(&mut self, pos: Position, rest: Tokens<'_>) {
        let Some((attrs, rest)) = self.list(rest) else { return };
        if self.expect_end(rest).is_none() {
            return;
        }
        if attrs.is_empty() {
            return self.error(Code::Syntax, pos, "empty universe");
        }
        if self.document.universe.is_some() {
            return self.error(Code::DuplicateUniverse, pos, "universe declared twice");
        }
        self.document.universe = Some(Spanned {
            value: attrs.into_iter().map(|(a, _)| a).collect(),
            position: pos,
        });
    }

    fn scheme(&mut self, pos: Position, rest: Tokens<'_>, end: Position) {
        let Some((Token::Ident(name), name_pos)) = rest.first() else {
            let at = rest.first().map_or(end, |t| t.1);
            return self.error(Code::Syntax, at, "expected a scheme name");
        };
        if self.identifier(name, *name_pos).is_none() {
            return;
        }
        match rest.get(1) {
            Some((Token::Open, _)) => {}
            other => {
                let at = other.map_or(end, |t| t.1);
                return self.error(Code::Syntax, at, "expected `(` after the scheme name");
            }
        }
        let Some((attrs, rest)) = self.list(&rest[2..]) else {
            return;
        };
        let close = match rest.first() {
            Some((Token::Close, p)) => *p,
            other => {
                let at = other.map_or(end, |t| t.1);
                return self.error(Code::Syntax, at, "expected `)`");
            }
        };
        if self.expect_end(&rest[1..]).is_none() {
            return;
        }
        if attrs.is_empty() {
            return self.error(Code::Syntax, close, "a scheme needs at least one attribute");
        }
        if self.document.schemes.iter().any(|s| s.value.name == *name) {
            return self.error(
                Code::DuplicateScheme,
                *name_pos,
                format!("scheme `{name}` declared twice"),
            );
        }
        self.document.schemes.push(Spanned {
            value: SchemeDecl {
                name: name.clone(),
                attrs: attrs.into_iter().map(|(a, _)| a).collect(),
            },
            position: pos,
        });
    }

    fn fd(&mut self, pos: Position, rest: Tokens<'_>, end: Position) {
        let Some((lhs, rest)) = self.list(rest) else { return };
        let arrow = match rest.first() {
            Some((Token::Arrow, p)) => *p,
            other => {
                let at = other.map_or(end, |t| t.1);
                return self.error(Code::Syntax, at, "expected `->`");
            }
        };
        if lhs.is_empty() {
            return self.error(Code::Syntax, arrow, "empty left side");
        }
        let Some((rhs, rest)) = self.list(&rest[1..]) else {
            return;
        };
        if self.expect_end(rest).is_none() {
            return;
        }
        if rhs.is_empty() {
            self.error(Code::VacuousFd, pos, "vacuous fd: the right side is empty");
        }
        let fd = Fd::new(
            lhs.iter().map(|(a, _)| a.clone()).collect(),
            rhs.iter().map(|(a, _)| a.clone()).collect(),
        );
        self.fd_positions.push(lhs.into_iter().chain(rhs).collect());
        self.document.fds.push(Spanned {
            value: fd,
            position: pos,
        });
    }

    fn validate(&mut self) {
        if let Some(universe) = self.document.universe.clone() {
            for s in self.document.schemes.clone() {
                if let Some(a) = s.value.attrs.first_outside(&universe.value) {
                    self.error(
                        Code::SchemeOutsideUniverse,
                        s.position,
                        format!("scheme `{}` uses `{a}`, which is not in the universe", s.value.name),
                    );
                }
            }
        }
        if self.document.universe.is_none() && self.document.schemes.is_empty() {
            return;
        }
        let universe = self.document.universe();
        for (fd, attrs) in self.document.fds.clone().iter().zip(self.fd_positions.clone()) {
            let mut ok = true;
            for (a, p) in attrs {
                if !universe.contains(&a) {
                    ok = false;
                    self.error(Code::UnknownAttribute, p, format!("unknown attribute `{a}`"));
                }
            }
            let embedded = self
                .document
                .schemes
                .iter()
                .any(|s| fd.value.attributes().is_subset(&s.value.attrs));
            if ok && !self.document.schemes.is_empty() && !embedded {
                self.error(
                    Code::UnembeddedFd,
                    fd.position,
                    format!("`{}` is not contained in any scheme", fd.value),
                );
            }
        }
    }
}

impl SchemaDocument {
    /// Declared universe, else the union of the schemes, else the
    /// attributes of the fds.
    pub fn universe(&self) -> AttributeSet {
        if let Some(u) = &self.universe {
            return u.value.clone();
        }
        if !self.schemes.is_empty() {
            return self
                .schemes
                .iter()
                .flat_map(|s| s.value.attrs.iter().cloned())
                .collect();
        }
        self.fds.iter().flat_map(|fd| fd.value.attributes()).collect()
    }

    /// The universal fd set Σ.
    pub fn sigma(&self) -> FdSet {
        FdSet::from_fds(self.universe(), self.fds.iter().map(|fd| fd.value.clone())).expect("validated document")
    }

    /// The declared schemes with their embedded fds; a single scheme `R`
    /// over the universe when none is declared.
    pub fn schema(&self) -> DatabaseSchema {
        if self.schemes.is_empty() {
            return DatabaseSchema::single(self.universal());
        }
        let sigma = self.sigma();
        DatabaseSchema::new(
            self.schemes
                .iter()
                .map(|s| RelationScheme::new(s.value.name.clone(), sigma.embedded_in(&s.value.attrs)))
                .collect(),
        )
    }

    /// `(U, Σ)`, named after the only scheme when there is exactly one.
    pub fn universal(&self) -> RelationScheme {
        let name = match self.schemes.as_slice() {
            [only] => only.value.name.clone(),
            _ => "R".to_string(),
        };
        RelationScheme::new(name, self.sigma())
    }

    /// A document listing the schemes of `schema` and every fd of their
    /// local sets, first occurrence order.
    pub fn from_schema(schema: &DatabaseSchema) -> SchemaDocument {
        let origin = Position { line: 0, column: 0 };
        let mut fds: Vec<Spanned<Fd>> = Vec::new();
        for s in schema.schemes() {
            for fd in s.fds() {
                if !fds.iter().any(|f| f.value == *fd) {
                    fds.push(Spanned {
                        value: fd.clone(),
                        position: origin,
                    });
                }
            }
        }
        SchemaDocument {
            universe: None,
            schemes: schema
                .schemes()
                .iter()
                .map(|s| Spanned {
                    value: SchemeDecl {
                        name: s.name().to_string(),
                        attrs: s.attrs().clone(),
                    },
                    position: origin,
                })
                .collect(),
            fds,
        }
    }

    /// A document of bare fds over `sigma`'s universe.
    pub fn from_fds(sigma: &FdSet) -> SchemaDocument {
        let origin = Position { line: 0, column: 0 };
        let mentioned: AttributeSet = sigma.iter().flat_map(Fd::attributes).collect();
        SchemaDocument {
            universe: (&mentioned != sigma.universe()).then(|| Spanned {
                value: sigma.universe().clone(),
                position: origin,
            }),
            schemes: Vec::new(),
            fds: sigma
                .iter()
                .map(|fd| Spanned {
                    value: fd.clone(),
                    position: origin,
                })
                .collect(),
        }
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for SchemaDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(u) = &self.universe {
            writeln!(f, "universe {}", u.value.joined(", "))?;
        }
        for s in &self.schemes {
            writeln!(f, "scheme {}({})", s.value.name, s.value.attrs.joined(", "))?;
        }
        for fd in &self.fds {
            writeln!(f, "fd {}", fd.value)?;
        }
        Ok(())
    }
}
