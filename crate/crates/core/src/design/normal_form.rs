use std::fmt;
use std::ops::ControlFlow;

use super::keys::{enumerate_keys, is_superkey, SchemeView};
use super::{DatabaseSchema, RelationScheme};
use crate::attr::{Attribute, AttributeSet};
use crate::cover::canonical_cover;
use crate::error::Result;
use crate::exec::{check_limit, Config};
use crate::fd::FdSet;
use crate::projection::project_fds;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalForm {
    Bcnf,
    ThirdNf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Satisfies,
    Violates,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reason {
    /// BCNF: the determinant is not a superkey.
    DeterminantNotSuperkey,
    /// 3NF: the left side is not a superkey and the attribute is not prime.
    NonprimeNotSuperkey,
}

impl Reason {
    pub fn tag(self) -> &'static str {
        match self {
            Reason::DeterminantNotSuperkey => "determinant-not-superkey",
            Reason::NonprimeNotSuperkey => "nonprime-not-superkey",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Reason> {
        match tag {
            "determinant-not-superkey" => Some(Reason::DeterminantNotSuperkey),
            "nonprime-not-superkey" => Some(Reason::NonprimeNotSuperkey),
            _ => None,
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// `determinant → attribute` in scheme number `scheme` breaks the normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub scheme: usize,
    pub determinant: AttributeSet,
    pub attribute: Attribute,
    pub reason: Reason,
}

impl Witness {
    /// Re-derives the violation from scratch against `schema`.
    pub fn replay(&self, schema: &DatabaseSchema, config: &Config) -> Result<bool> {
        let Some(scheme) = schema.schemes().get(self.scheme) else {
            return Ok(false);
        };
        let sigma = schema.global_fds();
        let implied = crate::implication::closure(&sigma, &self.determinant)?.contains(&self.attribute);
        let outside = scheme.attrs().contains(&self.attribute) && !self.determinant.contains(&self.attribute);
        let not_superkey = !is_superkey(scheme, &sigma, &self.determinant)?;
        Ok(match self.reason {
            Reason::DeterminantNotSuperkey => implied && outside && not_superkey,
            Reason::NonprimeNotSuperkey => {
                let prime = enumerate_keys(scheme, &sigma, config)?
                    .iter()
                    .any(|k| k.contains(&self.attribute));
                implied && outside && not_superkey && !prime
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalFormReport {
    pub form: NormalForm,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
}

impl NormalFormReport {
    fn from_witnesses(form: NormalForm, witnesses: Vec<Witness>) -> Self {
        let verdict = if witnesses.is_empty() {
            Verdict::Satisfies
        } else {
            Verdict::Violates
        };
        NormalFormReport {
            form,
            verdict,
            witnesses,
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Satisfies
    }
}

/// First subset of `attrs` (size order, then lexicographic) that determines
/// an attribute of `attrs` without being a superkey, with the first such
/// attribute.
pub(crate) fn first_bcnf_violation(
    attrs: &AttributeSet,
    sigma: &FdSet,
    config: &Config,
) -> Result<Option<(AttributeSet, Attribute)>> {
    check_limit("BCNF check", attrs.len(), config.limits.subsets)?;
    let view = SchemeView::new(attrs, sigma)?;
    let full = view.full();
    Ok(view.scan(config, |level| {
        match level.iter().find(|e| e.closure & !e.subset != 0 && e.closure != full) {
            Some(e) => {
                let gained = e.closure & !e.subset;
                let attr = view.local_set(gained & gained.wrapping_neg());
                let attr = attr.iter().next().expect("one attribute").clone();
                ControlFlow::Break((view.local_set(e.subset), attr))
            }
            None => ControlFlow::Continue(()),
        }
    }))
}

/// Every scheme is searched exhaustively for a determinant that is not a
/// superkey; the first one found (size order) is the scheme's witness.
/// Worst case exponential, as deciding BCNF of a schema is NP-complete.
pub fn check_bcnf(schema: &DatabaseSchema, config: &Config) -> Result<NormalFormReport> {
    let sigma = schema.global_fds();
    let mut witnesses = Vec::new();
    for (j, scheme) in schema.schemes().iter().enumerate() {
        if let Some((determinant, attribute)) = first_bcnf_violation(scheme.attrs(), &sigma, config)? {
            witnesses.push(Witness {
                scheme: j,
                determinant,
                attribute,
                reason: Reason::DeterminantNotSuperkey,
            });
        }
    }
    Ok(NormalFormReport::from_witnesses(NormalForm::Bcnf, witnesses))
}

/// For each scheme, every `X → A` of the canonical projected cover is a
/// violation when `X` is not a superkey and `A` is not prime.
pub fn check_3nf(schema: &DatabaseSchema, config: &Config) -> Result<NormalFormReport> {
    let sigma = schema.global_fds();
    let mut witnesses = Vec::new();
    for (j, scheme) in schema.schemes().iter().enumerate() {
        witnesses.extend(third_nf_violations(j, scheme, &sigma, config)?);
    }
    Ok(NormalFormReport::from_witnesses(NormalForm::ThirdNf, witnesses))
}

fn third_nf_violations(j: usize, scheme: &RelationScheme, sigma: &FdSet, config: &Config) -> Result<Vec<Witness>> {
    let local = canonical_cover(&project_fds(sigma, scheme.attrs(), config)?);
    if local.is_empty() {
        return Ok(Vec::new());
    }
    let prime: AttributeSet = enumerate_keys(scheme, sigma, config)?.into_iter().flatten().collect();
    let mut out = Vec::new();
    for fd in &local {
        let attribute = fd.rhs().iter().next().expect("canonical").clone();
        if !prime.contains(&attribute) && !is_superkey(scheme, sigma, fd.lhs())? {
            out.push(Witness {
                scheme: j,
                determinant: fd.lhs().clone(),
                attribute,
                reason: Reason::NonprimeNotSuperkey,
            });
        }
    }
    Ok(out)
}
