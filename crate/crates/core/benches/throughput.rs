//! Sequential vs rayon throughput on the two sweep workloads.
//!
//! Run with `cargo bench -p iongate-core`; the parallel benchmarks disappear
//! when the crate is built with `--no-default-features`.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use iongate_core::sweep::{
    default_embed_unitary, embedding_rows_sequential, evaluate_grid_sequential, SweepConfig,
};

fn transport_grid(c: &mut Criterion) {
    let mut group = c.benchmark_group("transport_grid");
    for (name, step) in [("default_306_rows", 0.1), ("fine_3006_rows", 0.01)] {
        let mut cfg = SweepConfig::default();
        cfg.e_grid.step = step;
        group.bench_with_input(BenchmarkId::new("sequential", name), &cfg, |b, cfg| {
            b.iter(|| evaluate_grid_sequential(cfg).unwrap())
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", name), &cfg, |b, cfg| {
            b.iter(|| iongate_core::sweep::evaluate_grid_parallel(cfg).unwrap())
        });
    }
    group.finish();
}

fn embedding_convergence(c: &mut Criterion) {
    let sizes: Vec<usize> = vec![1, 2, 4, 8, 16, 32, 64];
    let u = default_embed_unitary();
    let mut group = c.benchmark_group("embedding_convergence");
    group.bench_function("sequential", |b| {
        b.iter(|| embedding_rows_sequential(&u, &sizes).unwrap())
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| iongate_core::sweep::embedding_rows_parallel(&u, &sizes).unwrap())
    });
    group.finish();
}

criterion_group!(benches, transport_grid, embedding_convergence);
criterion_main!(benches);
