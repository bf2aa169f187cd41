use fdkit_core::design::{
    bcnf_decompose, check_3nf, check_bcnf, check_represents, enumerate_keys, find_key, is_superkey, synthesize_3nf,
    DatabaseSchema, RelationScheme, RepresentOptions, SynthesisMode,
};
use fdkit_core::instance::{is_lossless_on, random_satisfying_instance, InstanceShape};
use fdkit_core::random::random_fdset;
use fdkit_core::{project_fds, AttributeSet, Config, Fd, FdSet, Strategy};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn parallel() -> Config {
    Config {
        strategy: Strategy::Parallel,
        ..Config::default()
    }
}

fn student() -> DatabaseSchema {
    let attrs = AttributeSet::parse("STUDENT DEPARTMENT SUPERVISOR").unwrap();
    let fds = FdSet::from_fds(attrs, [Fd::parse("DEPARTMENT -> SUPERVISOR").unwrap()]).unwrap();
    DatabaseSchema::single(RelationScheme::new("R", fds))
}

/// One to three schemes over a shared random Σ, each carrying its projection.
fn random_schema(rng: &mut ChaCha8Rng) -> DatabaseSchema {
    let width = rng.random_range(2..=6);
    let sigma = random_fdset(rng, width, 6, 2);
    let schemes = (0..rng.random_range(1..=3))
        .map(|k| {
            let mut attrs: AttributeSet = sigma
                .universe()
                .iter()
                .filter(|_| rng.random_bool(0.7))
                .cloned()
                .collect();
            attrs.insert(sigma.universe().iter().next().unwrap().clone());
            RelationScheme::new(
                format!("S{k}"),
                project_fds(&sigma, &attrs, &Config::default()).unwrap(),
            )
        })
        .collect();
    DatabaseSchema::new(schemes)
}

#[test]
fn student_examples() {
    let schema = student();
    let bcnf = check_bcnf(&schema, &Config::default()).unwrap();
    assert!(!bcnf.holds());
    assert_eq!(bcnf.witnesses[0].determinant.joined(" "), "DEPARTMENT");
    assert!(!check_3nf(&schema, &Config::default()).unwrap().holds());
    let r = &schema.schemes()[0];
    assert_eq!(find_key(r, r.fds()).unwrap().joined(" "), "DEPARTMENT STUDENT");

    let out = bcnf_decompose(&schema, &Config::default()).unwrap();
    let parts: Vec<String> = out.schema.schemes().iter().map(|s| s.attrs().joined(" ")).collect();
    assert_eq!(parts, ["DEPARTMENT SUPERVISOR", "DEPARTMENT STUDENT"]);
    assert!(out.dependency_preserving);
}

#[test]
fn keys_are_minimal_superkeys() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..400 {
        let schema = random_schema(&mut rng);
        let sigma = schema.global_fds();
        for r in schema.schemes() {
            let key = find_key(r, &sigma).unwrap();
            assert!(is_superkey(r, &sigma, &key).unwrap());
            for a in &key {
                assert!(!is_superkey(r, &sigma, &key.without(a)).unwrap());
            }
            let all = enumerate_keys(r, &sigma, &Config::sequential()).unwrap();
            assert_eq!(all, enumerate_keys(r, &sigma, &parallel()).unwrap());
            assert!(all.contains(&key));
            for (i, k) in all.iter().enumerate() {
                assert!(all
                    .iter()
                    .skip(i + 1)
                    .all(|other| !k.is_subset(other) && !other.is_subset(k)));
            }
        }
    }
}

#[test]
fn bcnf_implies_3nf_and_witnesses_replay() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let mut bcnf_seen = 0;
    for _ in 0..500 {
        let schema = random_schema(&mut rng);
        let bcnf = check_bcnf(&schema, &Config::sequential()).unwrap();
        let third = check_3nf(&schema, &Config::sequential()).unwrap();
        assert_eq!(bcnf, check_bcnf(&schema, &parallel()).unwrap());
        assert_eq!(third, check_3nf(&schema, &parallel()).unwrap());
        if bcnf.holds() {
            bcnf_seen += 1;
            assert!(third.holds());
        }
        for w in bcnf.witnesses.iter().chain(&third.witnesses) {
            assert!(w.replay(&schema, &Config::default()).unwrap(), "{w:?}");
        }
    }
    assert!(bcnf_seen > 50);
}

#[test]
fn bcnf_decomposition_is_bcnf_and_lossless() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..200 {
        let width = rng.random_range(2..=6);
        let sigma = random_fdset(&mut rng, width, 6, 2);
        let schema = DatabaseSchema::single(RelationScheme::new("R", sigma.clone()));
        let out = bcnf_decompose(&schema, &Config::default()).unwrap();
        assert!(check_bcnf(&out.schema, &Config::default()).unwrap().holds());
        assert_eq!(out.schema.universe(), sigma.universe());
        for _ in 0..5 {
            let i = random_satisfying_instance(&sigma, &mut rng, &InstanceShape::default());
            assert!(is_lossless_on(&i, &out.schema.scheme_attrs()).unwrap());
        }
    }
}

#[test]
fn synthesis_represents_the_universal_scheme() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    let options = RepresentOptions {
        instances: 20,
        ..RepresentOptions::default()
    };
    for _ in 0..150 {
        let width = rng.random_range(1..=7);
        let sigma = random_fdset(&mut rng, width, 7, 3);
        let universal = RelationScheme::new("R", sigma.clone());
        for mode in [SynthesisMode::Merged, SynthesisMode::Verbatim] {
            let schema = synthesize_3nf(&universal, mode, &Config::default()).unwrap();
            assert_eq!(schema.universe(), sigma.universe());
            let report = check_3nf(&schema, &Config::default()).unwrap();
            assert!(
                report.holds(),
                "{sigma} {mode:?} {:?} {report:?}",
                schema
                    .schemes()
                    .iter()
                    .map(|s| format!("{}:{}", s.attrs().joined(""), s.fds()))
                    .collect::<Vec<_>>()
            );
            let rep = check_represents(&schema, &universal, &options, &Config::default()).unwrap();
            assert!(rep.holds(), "{sigma}: {rep:?}");
        }
    }
}

#[test]
fn represents_is_deterministic_per_seed() {
    let sigma = FdSet::from_letters("", &["A->B", "B->C"]);
    let universal = RelationScheme::new("R", sigma.clone());
    let lossy = DatabaseSchema::new(vec![
        RelationScheme::new(
            "X",
            project_fds(&sigma, &AttributeSet::from_chars("AB"), &Config::default()).unwrap(),
        ),
        RelationScheme::new("Y", FdSet::new(AttributeSet::from_chars("AC"))),
    ]);
    let a = check_represents(&lossy, &universal, &RepresentOptions::default(), &Config::sequential()).unwrap();
    let b = check_represents(&lossy, &universal, &RepresentOptions::default(), &parallel()).unwrap();
    assert_eq!(a, b);
    assert!(!a.dependency_preserving);
}
