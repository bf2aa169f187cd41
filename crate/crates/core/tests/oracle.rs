use fdkit_core::instance::{satisfies, satisfies_all, ImplicationOracle};
use fdkit_core::random::random_fdset;
use fdkit_core::{implies, AttributeSet, Config, Fd, FdSet};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Every `X → A` over the universe, `A ∉ X`.
fn canonical_fds(sigma: &FdSet) -> Vec<Fd> {
    let attrs: Vec<_> = sigma.universe().iter().cloned().collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << attrs.len() {
        let x: AttributeSet = attrs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, a)| a.clone())
            .collect();
        for a in attrs.iter().filter(|a| !x.contains(a)) {
            out.push(Fd::new(x.clone(), a.clone().into()));
        }
    }
    out
}

#[test]
fn symbolic_and_semantic_implication_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let config = Config::default();
    for case in 0..300 {
        let sigma = random_fdset(&mut rng, 4 + case % 2, 6, 3);
        let oracle = ImplicationOracle::new(&sigma, &config).unwrap();
        for fd in canonical_fds(&sigma) {
            let symbolic = implies(&sigma, &fd).unwrap();
            assert_eq!(oracle.implies(&fd).unwrap(), symbolic, "{fd} under {sigma}");
            match oracle.counterexample(&fd).unwrap() {
                None => assert!(symbolic),
                Some(i) => {
                    assert!(!symbolic);
                    assert_eq!(i.len(), 2);
                    assert!(satisfies_all(&i, &sigma).unwrap());
                    assert!(!satisfies(&i, &fd).unwrap());
                }
            }
        }
    }
}

#[test]
fn oracle_respects_its_limit() {
    let sigma = FdSet::new(AttributeSet::from_chars("ABCDEFGHIJKLM"));
    assert!(ImplicationOracle::new(&sigma, &Config::default()).is_err());
}
