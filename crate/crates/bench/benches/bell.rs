use bellgraph::reconstruct::reconstruct_prime;
use bellgraph::{build_bell, canonical_code, Graph};
use bellgraph_bench::{hosts, petersen, scrambled_full};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn build(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_bell");
    for (name, g, variant) in hosts() {
        group.bench_with_input(
            BenchmarkId::from_parameter(name),
            &(g, variant),
            |b, (g, v)| b.iter(|| build_bell(black_box(g), *v).unwrap()),
        );
    }
    group.finish();
}

fn reconstruct(c: &mut Criterion) {
    let mut group = c.benchmark_group("reconstruct_prime");
    for (name, g) in [
        ("empty_5", Graph::empty(5)),
        ("c5", Graph::cycle(5)),
        ("empty_6", Graph::empty(6)),
    ] {
        let b = scrambled_full(&g, 1);
        group.bench_with_input(BenchmarkId::from_parameter(name), &b, |bench, b| {
            bench.iter(|| reconstruct_prime(black_box(b)).unwrap())
        });
    }
    group.finish();
}

fn canon(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonical_code");
    group.bench_function("petersen", |b| {
        b.iter(|| canonical_code(black_box(&petersen())))
    });
    let bell = scrambled_full(&Graph::empty(5), 3);
    group.bench_function("bell_empty_5", |b| {
        b.iter(|| black_box(&bell).canonical_code())
    });
    group.finish();
}

criterion_group!(benches, build, reconstruct, canon);
criterion_main!(benches);
