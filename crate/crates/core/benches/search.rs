use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fdkit_core::design::{check_bcnf, enumerate_keys, DatabaseSchema, RelationScheme};
use fdkit_core::instance::ImplicationOracle;
use fdkit_core::random::{random_fdset, random_hitting_set};
use fdkit_core::reduction::{reduce_to_schema, solve_hitting_set};
use fdkit_core::{project_fds, Config, Strategy};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const STRATEGIES: [(&str, Strategy); 2] = [("sequential", Strategy::Sequential), ("parallel", Strategy::Parallel)];

fn config(strategy: Strategy) -> Config {
    Config {
        strategy,
        ..Config::default()
    }
}

fn keys_and_projection(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let sigma = random_fdset(&mut rng, 16, 14, 3);
    let scheme = RelationScheme::new("R", sigma.clone());
    let half = sigma.universe().iter().take(14).cloned().collect();

    let mut group = c.benchmark_group("keys");
    for (name, s) in STRATEGIES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| enumerate_keys(black_box(&scheme), &sigma, &config(s)).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("project_fds");
    for (name, s) in STRATEGIES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| project_fds(black_box(&sigma), &half, &config(s)).unwrap())
        });
    }
    group.finish();

    let schema = DatabaseSchema::single(scheme);
    let mut group = c.benchmark_group("check_bcnf");
    for (name, s) in STRATEGIES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| check_bcnf(black_box(&schema), &config(s)).unwrap())
        });
    }
    group.finish();
}

fn hitting_set(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let inst = random_hitting_set(&mut rng, 18, 12, 4);
    let mut group = c.benchmark_group("hitting_set");
    for (name, s) in STRATEGIES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| solve_hitting_set(black_box(&inst), &config(s)).unwrap())
        });
    }
    group.finish();

    let small = random_hitting_set(&mut rng, 7, 4, 3);
    let schema = reduce_to_schema(&small).unwrap();
    let mut group = c.benchmark_group("reduced_schema_bcnf");
    group.sample_size(10);
    for (name, s) in STRATEGIES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| check_bcnf(black_box(&schema), &config(s)).unwrap())
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let sigma = random_fdset(&mut rng, 12, 10, 3);
    let mut group = c.benchmark_group("oracle");
    for (name, s) in STRATEGIES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| ImplicationOracle::new(black_box(&sigma), &config(s)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, keys_and_projection, hitting_set, oracle);
criterion_main!(benches);
