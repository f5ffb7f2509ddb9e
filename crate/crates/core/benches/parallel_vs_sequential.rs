//! Default rayon pool against a single-thread pool on the data-parallel paths.
//!
//! For the rayon-free build run `cargo bench --no-default-features`.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rayon::ThreadPoolBuilder;
use tokendom::domination::{greedy_dominating, is_dominating};
use tokendom::report::{run_table, Experiment, TableOptions};
use tokendom::{BaseGraph, Mode, TokenGraph};

fn pools() -> Vec<(&'static str, rayon::ThreadPool)> {
    vec![
        ("sequential", ThreadPoolBuilder::new().num_threads(1).build().unwrap()),
        ("parallel", ThreadPoolBuilder::new().build().unwrap()),
    ]
}

fn materialize(c: &mut Criterion) {
    let mut group = c.benchmark_group("materialize F4(K16)");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| TokenGraph::build(BaseGraph::complete(16).unwrap(), 4, Mode::Explicit).unwrap()))
        });
    }
    group.finish();
}

fn domination(c: &mut Criterion) {
    let tg = TokenGraph::build(BaseGraph::star(14).unwrap(), 4, Mode::Explicit).unwrap();
    let g = tg.adjacency().unwrap();
    let set = greedy_dominating(g);
    let mut group = c.benchmark_group("F4(S14)");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::new("greedy", name), |b| b.iter(|| pool.install(|| greedy_dominating(g))));
        group.bench_function(BenchmarkId::new("verify", name), |b| {
            b.iter(|| pool.install(|| is_dominating(g, &set).unwrap()))
        });
    }
    group.finish();
}

fn implicit_edges(c: &mut Criterion) {
    let tg = TokenGraph::build(BaseGraph::star(20).unwrap(), 6, Mode::Implicit).unwrap();
    let mut group = c.benchmark_group("edge count F6(S20) implicit");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| pool.install(|| tg.edge_count())));
    }
    group.finish();
}

fn table(c: &mut Criterion) {
    let options = TableOptions {
        timing: false,
        exact_max_vertices: 60,
        ..TableOptions::default()
    };
    let ns: Vec<u32> = (6..=14).collect();
    let mut group = c.benchmark_group("table complete-f3");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| run_table(Experiment::CompleteF3, &ns, &[], &options).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, materialize, domination, implicit_edges, table);
criterion_main!(benches);
