use fdkit_core::instance::{
    is_lossless_on, join, parse_csv, project, random_satisfying_instance, satisfies, to_csv, InstanceShape, Relation,
};
use fdkit_core::random::random_fdset;
use fdkit_core::{AttributeSet, Fd, FdSet};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rel(header: &str, rows: &[&str]) -> Relation {
    Relation::from_table(header, rows).unwrap()
}

fn set(s: &str) -> AttributeSet {
    AttributeSet::from_chars(s)
}

fn pj(i: &Relation, s: &str) -> Relation {
    project(i, &set(s)).unwrap()
}

#[test]
fn golden_tables() {
    let i = rel("A B C", &["0 0 0", "1 0 1", "0 0 1", "1 0 0"]);
    let j = rel("A B C", &["0 0 0", "1 0 1"]);
    let k = rel("A B", &["0 0", "0 1"]);
    let l = rel("B C", &["0 0", "0 1"]);
    let m = rel("A B C", &["0 0 0", "0 0 1"]);
    let n = rel("A B", &["0 0"]);

    assert_eq!(join(&[pj(&i, "AB"), pj(&i, "BC")]).unwrap(), i);
    assert_eq!(join(&[pj(&j, "AB"), pj(&j, "BC")]).unwrap(), i);
    assert_eq!(join(&[k, l.clone()]).unwrap(), m);
    assert_eq!(pj(&m, "AB"), n);
    assert_eq!(pj(&m, "BC"), l);
    assert!(!is_lossless_on(&j, &[set("AB"), set("BC")]).unwrap());
    assert!(is_lossless_on(&i, &[set("AB"), set("BC")]).unwrap());
    assert!(is_lossless_on(&m, &[set("AB"), set("BC")]).unwrap());
}

#[test]
fn running_example_is_lossless() {
    let i = rel("A B C D E", &["0 0 0 0 1", "0 1 0 0 1", "1 0 1 1 0", "1 1 1 1 0"]);
    assert!(satisfies(&i, &Fd::parse("E -> C D").unwrap()).unwrap());
    assert_eq!(join(&[pj(&i, "ABE"), pj(&i, "CDE")]).unwrap(), i);
}

#[test]
fn student_table() {
    let csv = "STUDENT,DEPARTMENT,SUPERVISOR\n\
               Alice,Cryptology,John\nBob,Cryptology,John\n\
               Carol,Graph_Theory,Yohann\nDarrel,Graph_Theory,Yohann\nFrank,Graph_Theory,Yohann\n";
    let i = parse_csv(csv).unwrap();
    assert!(satisfies(&i, &Fd::parse("DEPARTMENT -> SUPERVISOR").unwrap()).unwrap());
    assert!(!satisfies(&i, &Fd::parse("DEPARTMENT -> STUDENT").unwrap()).unwrap());
    assert_eq!(parse_csv(&to_csv(&i)).unwrap(), i);
}

fn random_relation(rng: &mut ChaCha8Rng, scheme: &str) -> Relation {
    let rows: Vec<String> = (0..rng.random_range(0..7))
        .map(|_| {
            (0..scheme.split(' ').count())
                .map(|_| rng.random_range(0..3).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    let refs: Vec<&str> = rows.iter().map(String::as_str).collect();
    rel(scheme, &refs)
}

/// A random cover of `attrs` by up to four parts.
fn random_parts(rng: &mut ChaCha8Rng, attrs: &AttributeSet) -> Vec<AttributeSet> {
    let mut parts: Vec<AttributeSet> = (0..rng.random_range(1..=4))
        .map(|_| attrs.iter().filter(|_| rng.random_bool(0.5)).cloned().collect())
        .collect();
    for a in attrs {
        let k = rng.random_range(0..parts.len());
        parts[k].insert(a.clone());
    }
    parts
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn relation_is_inside_join_of_its_projections(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let i = random_relation(&mut rng, "A B C D");
        let parts = random_parts(&mut rng, i.scheme());
        let projections: Vec<Relation> = parts.iter().map(|p| project(&i, p).unwrap()).collect();
        prop_assert!(i.is_subset(&join(&projections).unwrap()));
    }

    #[test]
    fn projections_of_a_join_shrink(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rels = [random_relation(&mut rng, "A B"), random_relation(&mut rng, "B C"), random_relation(&mut rng, "A C D")];
        let joined = join(&rels).unwrap();
        for r in &rels {
            prop_assert!(project(&joined, r.scheme()).unwrap().is_subset(r));
        }
    }

    #[test]
    fn join_ignores_argument_order(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut rels = vec![random_relation(&mut rng, "A B"), random_relation(&mut rng, "B C"), random_relation(&mut rng, "C D"), random_relation(&mut rng, "A")];
        let first = join(&rels).unwrap();
        rels.shuffle(&mut rng);
        prop_assert_eq!(join(&rels).unwrap(), first);
    }

    #[test]
    fn fd_holds_iff_it_holds_on_its_projection(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let i = random_relation(&mut rng, "A B C D");
        let x: AttributeSet = i.scheme().iter().filter(|_| rng.random_bool(0.4)).cloned().collect();
        let y: AttributeSet = i.scheme().iter().filter(|_| rng.random_bool(0.4)).cloned().collect();
        let fd = Fd::new(x.clone(), y.clone());
        prop_assert_eq!(satisfies(&i, &fd).unwrap(), satisfies(&project(&i, &x.union(&y)).unwrap(), &fd).unwrap());
    }

    #[test]
    fn x_to_y_makes_xy_xz_lossless(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let attrs = set("ABCDEF");
        // each attribute lands in X, Y or Z; X is non-empty
        let mut xyz = [AttributeSet::new(), AttributeSet::new(), AttributeSet::new()];
        for (n, a) in attrs.iter().enumerate() {
            let k = if n == 0 { 0 } else { rng.random_range(0..3) };
            xyz[k].insert(a.clone());
        }
        let [x, y, z] = xyz;
        let sigma = FdSet::from_fds(attrs.clone(), [Fd::new(x.clone(), y.clone())]).unwrap();
        let i = random_satisfying_instance(&sigma, &mut rng, &InstanceShape { max_rows: 8, domain: 2, witnesses: 2 });
        prop_assert!(is_lossless_on(&i, &[x.union(&y), x.union(&z)]).unwrap());
    }

    #[test]
    fn generated_instances_satisfy_their_fds(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sigma = random_fdset(&mut rng, 5, 6, 2);
        let i = random_satisfying_instance(&sigma, &mut rng, &InstanceShape::default());
        prop_assert!(!i.is_empty());
        for fd in sigma.iter() {
            prop_assert!(satisfies(&i, fd).unwrap());
        }
    }

    #[test]
    fn csv_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let i = random_relation(&mut rng, "C A B");
        let text = to_csv(&i);
        prop_assert_eq!(parse_csv(&text).unwrap(), i);
        prop_assert_eq!(to_csv(&parse_csv(&text).unwrap()), text);
    }
}
