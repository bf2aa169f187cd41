use super::normal_form::first_bcnf_violation;
use super::{DatabaseSchema, RelationScheme};
use crate::attr::AttributeSet;
use crate::error::Result;
use crate::exec::Config;
use crate::implication::equivalent;
use crate::projection::project_fds;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BcnfDecomposition {
    pub schema: DatabaseSchema,
    /// Whether the union of the local fd sets is still equivalent to the
    /// input's global fd set. BCNF decomposition does not guarantee this.
    pub dependency_preserving: bool,
}

/// Splits schemes until no BCNF violation remains.
///
/// The first violation `X → A` (lowest scheme index, then the order used by
/// [`check_bcnf`](super::check_bcnf)) replaces `R` by `XA` and `R − A`, named
/// `<R>_1` and `<R>_2`. Every split is lossless since `X → A` holds. When any
/// split happens, all local fd sets are recomputed as projections of the
/// input's global fd set.
pub fn bcnf_decompose(schema: &DatabaseSchema, config: &Config) -> Result<BcnfDecomposition> {
    let sigma = schema.global_fds();
    let mut parts: Vec<(String, AttributeSet)> = schema
        .schemes()
        .iter()
        .map(|s| (s.name().to_string(), s.attrs().clone()))
        .collect();
    let mut split_any = false;

    'search: loop {
        for j in 0..parts.len() {
            if let Some((x, a)) = first_bcnf_violation(&parts[j].1, &sigma, config)? {
                let (name, attrs) = parts.remove(j);
                parts.insert(j, (format!("{name}_2"), attrs.without(&a)));
                parts.insert(j, (format!("{name}_1"), x.with(&a)));
                split_any = true;
                continue 'search;
            }
        }
        break;
    }

    if !split_any {
        return Ok(BcnfDecomposition {
            schema: schema.clone(),
            dependency_preserving: true,
        });
    }
    let schemes = parts
        .into_iter()
        .map(|(name, attrs)| Ok(RelationScheme::new(name, project_fds(&sigma, &attrs, config)?)))
        .collect::<Result<Vec<_>>>()?;
    let out = DatabaseSchema::new(schemes);
    let dependency_preserving = equivalent(&out.global_fds(), &sigma)?;
    Ok(BcnfDecomposition {
        schema: out,
        dependency_preserving,
    })
}
