use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use edge_ideal_lab::census::connected_graphs_with;
use edge_ideal_lab::families::{gab, hk};
use edge_ideal_lab::homology::{hochster_betti_with, Budget, Field};
use edge_ideal_lab::Exec;

fn hochster_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("hochster_betti");
    group.sample_size(10);
    for (name, g) in [("H_3", hk(3).unwrap()), ("G_{1,1}", gab(1, 1).unwrap())] {
        for exec in [Exec::Sequential, Exec::Parallel] {
            let budget = Budget { exec, ..Budget::default() };
            group.bench_with_input(BenchmarkId::new(format!("{exec:?}"), name), &g, |b, g| {
                b.iter(|| hochster_betti_with(black_box(g), Field::Gf2, budget).unwrap())
            });
        }
    }
    group.finish();
}

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    for exec in [Exec::Sequential, Exec::Parallel] {
        group.bench_function(BenchmarkId::new(format!("{exec:?}"), 7), |b| {
            b.iter(|| connected_graphs_with(black_box(7), exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, hochster_sweep, census);
criterion_main!(benches);
