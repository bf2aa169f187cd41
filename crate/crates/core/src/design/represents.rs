use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{DatabaseSchema, RelationScheme};
use crate::error::{Error, Result};
use crate::exec::Config;
use crate::implication::equivalent;
use crate::instance::{is_lossless_on, random_satisfying_instance, InstanceShape, Relation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RepresentOptions {
    pub seed: u64,
    /// Random instances of the universal scheme to try.
    pub instances: usize,
    pub shape: InstanceShape,
}

impl Default for RepresentOptions {
    fn default() -> Self {
        RepresentOptions {
            seed: 0,
            instances: 100,
            shape: InstanceShape::default(),
        }
    }
}

/// Randomized evidence about losslessness. Never a proof.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LosslessEvidence {
    /// All `instances` sampled relations decomposed losslessly.
    NoCounterexampleFound { instances: usize },
    /// A relation satisfying `Σ` whose decomposition is lossy.
    Counterexample(Relation),
}

impl LosslessEvidence {
    pub fn is_consistent(&self) -> bool {
        matches!(self, LosslessEvidence::NoCounterexampleFound { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub lossless: LosslessEvidence,
    /// Exact: `∪ Σ_j ≡ Σ`.
    pub dependency_preserving: bool,
}

impl Representation {
    pub fn holds(&self) -> bool {
        self.dependency_preserving && self.lossless.is_consistent()
    }
}

/// Whether `schema` represents the universal scheme `(U, Σ)`.
///
/// Dependency preservation is decided exactly. Losslessness is tested on
/// `options.instances` random relations over `U` satisfying `Σ`; instance
/// `i` is drawn from a generator seeded with `(seed, i)`, and the lowest-index
/// counterexample is reported, so the outcome depends only on the seed.
pub fn check_represents(
    schema: &DatabaseSchema,
    universal: &RelationScheme,
    options: &RepresentOptions,
    config: &Config,
) -> Result<Representation> {
    if schema.universe() != universal.attrs() {
        return Err(Error::UniverseMismatch {
            left: schema.universe().clone(),
            right: universal.attrs().clone(),
        });
    }
    let sigma = universal.fds();
    let dependency_preserving = equivalent(&schema.global_fds(), sigma)?;

    let parts = schema.scheme_attrs();
    let counterexample = config.strategy.find_map_first_range(options.instances as u64, |i| {
        let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
        rng.set_stream(i);
        let instance = random_satisfying_instance(sigma, &mut rng, &options.shape);
        match is_lossless_on(&instance, &parts) {
            Ok(true) => None,
            _ => Some(instance),
        }
    });
    let lossless = match counterexample {
        Some(instance) => LosslessEvidence::Counterexample(instance),
        None => LosslessEvidence::NoCounterexampleFound {
            instances: options.instances,
        },
    };
    Ok(Representation {
        lossless,
        dependency_preserving,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::attr::AttributeSet;
    use crate::fd::FdSet;
    use crate::instance::satisfies_all;

    #[test]
    fn disjoint_halves_are_lossy() {
        let universal = RelationScheme::new("U", FdSet::new(AttributeSet::from_chars("ABCD")));
        let schema = DatabaseSchema::new(vec![
            RelationScheme::new("L", FdSet::new(AttributeSet::from_chars("AB"))),
            RelationScheme::new("R", FdSet::new(AttributeSet::from_chars("CD"))),
        ]);
        let rep = check_represents(&schema, &universal, &RepresentOptions::default(), &Config::default()).unwrap();
        assert!(rep.dependency_preserving);
        match rep.lossless {
            LosslessEvidence::Counterexample(rel) => {
                assert!(!is_lossless_on(&rel, &schema.scheme_attrs()).unwrap());
                assert!(satisfies_all(&rel, universal.fds()).unwrap());
            }
            other => panic!("expected a counterexample, got {other:?}"),
        }
    }

    #[test]
    fn universal_scheme_represents_itself() {
        let universal = RelationScheme::new("U", FdSet::from_letters("", &["A->B", "B->C"]));
        let schema = DatabaseSchema::single(universal.clone());
        let rep = check_represents(&schema, &universal, &RepresentOptions::default(), &Config::default()).unwrap();
        assert!(rep.holds());
    }

    #[test]
    fn seed_determines_the_outcome() {
        let universal = RelationScheme::new("U", FdSet::new(AttributeSet::from_chars("ABC")));
        let schema = DatabaseSchema::new(vec![
            RelationScheme::new("L", FdSet::new(AttributeSet::from_chars("AB"))),
            RelationScheme::new("R", FdSet::new(AttributeSet::from_chars("BC"))),
        ]);
        let opts = RepresentOptions {
            seed: 42,
            ..Default::default()
        };
        let a = check_represents(&schema, &universal, &opts, &Config::default()).unwrap();
        let b = check_represents(&schema, &universal, &opts, &Config::sequential()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn universe_must_match() {
        let universal = RelationScheme::new("U", FdSet::new(AttributeSet::from_chars("ABC")));
        let schema = DatabaseSchema::single(RelationScheme::new("R", FdSet::new(AttributeSet::from_chars("AB"))));
        assert!(matches!(
            check_represents(&schema, &universal, &RepresentOptions::default(), &Config::default()),
            Err(Error::UniverseMismatch { .. })
        ));
    }
}
