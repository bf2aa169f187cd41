mod common;

use common::{fdkit, RUNNING, STUDENT};
use fdkit::dsl::parse_schema;
use fdkit::report::{attribute_set, render_schema, Report, VerdictTag};
use fdkit::SchemaDocument;
use fdkit_core::design::{check_3nf, check_bcnf};
use fdkit_core::random::random_fdset;
use fdkit_core::{closure, implies, Config, Fd};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn json(args: &[&str], stdin: &str) -> (i32, Report) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = fdkit(&full, stdin);
    (
        out.status,
        serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout)),
    )
}

/// Re-derives a check report from the library and replays each witness.
fn replay_check(text: &str, report: &Report) {
    let Report::Check {
        form,
        verdict,
        witnesses,
    } = report
    else {
        panic!("{report:?}")
    };
    let schema = parse_schema(text).unwrap().document.schema();
    let fresh = match form {
        fdkit::report::FormTag::Bcnf => check_bcnf(&schema, &Config::default()).unwrap(),
        fdkit::report::FormTag::ThirdNf => check_3nf(&schema, &Config::default()).unwrap(),
    };
    assert_eq!(*verdict == VerdictTag::Satisfies, fresh.holds());
    assert_eq!(witnesses.len(), fresh.witnesses.len());
    for (w, f) in witnesses.iter().zip(&fresh.witnesses) {
        let lib = w.to_witness().unwrap();
        assert_eq!(&lib, f);
        assert!(lib.replay(&schema, &Config::default()).unwrap());
    }
}

#[test]
fn check_reports_replay() {
    for text in [
        STUDENT,
        RUNNING,
        "scheme R(A, B)\nscheme S(B, C)\nfd A -> B\nfd B -> C\n",
    ] {
        for nf in ["bcnf", "3nf"] {
            let (status, report) = json(&["check", "--nf", nf], text);
            assert_eq!(status == 0, report.holds());
            replay_check(text, &report);
        }
    }
}

#[test]
fn random_documents_replay() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..25 {
        let width = rng.random_range(2..=6);
        let text = SchemaDocument::from_fds(&random_fdset(&mut rng, width, 5, 2)).render();
        let sigma = parse_schema(&text).unwrap().document.sigma();
        let (_, report) = json(&["check", "--nf", "bcnf"], &text);
        replay_check(&text, &report);

        let (status, Report::Implies { fd, holds }) = json(&["implies", "A -> B"], &text) else {
            panic!()
        };
        assert_eq!(holds, implies(&sigma, &Fd::parse(&fd).unwrap()).unwrap());
        assert_eq!(status, if holds { 0 } else { 1 });

        let (_, Report::OracleImplies { holds: oracle, .. }) = json(&["oracle", "implies", "A -> B"], &text) else {
            panic!()
        };
        assert_eq!(oracle, holds);

        let (_, Report::Closure { of, closure: got }) = json(&["closure", "--of", "A"], &text) else {
            panic!()
        };
        let x = attribute_set(&of).unwrap();
        assert_eq!(attribute_set(&got).unwrap(), closure(&sigma, &x).unwrap());
    }
}

#[test]
fn schema_reports_are_documents() {
    let (_, report) = json(&["decompose", "--bcnf"], RUNNING);
    let Report::Decompose { schema, .. } = &report else {
        panic!()
    };
    let doc = render_schema(schema);
    let (status, check) = json(&["check", "--nf", "bcnf"], &doc);
    assert_eq!(status, 0);
    replay_check(&doc, &check);
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let universal = common::write(dir.path(), "u.fd", RUNNING);
    let universal = universal.to_str().unwrap();
    for args in [
        &["synthesize", "--3nf"][..],
        &["keys", "--all"],
        &["mincover"],
        &["represents", universal],
    ] {
        let a = fdkit(&[&["--json"][..], args].concat(), RUNNING);
        let b = fdkit(&[&["--json"][..], args].concat(), RUNNING);
        assert_eq!(a.status, 0, "{args:?}: {}", a.stderr);
        assert!(!a.stdout.is_empty());
        assert_eq!(a.stdout, b.stdout);
    }
}
