use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use plandscape_core::{
    brute_degree, degree, enumerate_partitions, extremal_witness, landscape_row, max_degree_set,
    partition_count,
};

fn bench_enumeration(c: &mut Criterion) {
    c.bench_function("enumerate_partitions n=45", |b| {
        b.iter(|| enumerate_partitions(black_box(45)).count())
    });

    c.bench_function("degree sweep n=35", |b| {
        b.iter(|| {
            enumerate_partitions(black_box(35))
                .map(|p| degree(&p))
                .sum::<u64>()
        })
    });
}

fn bench_counting(c: &mut Criterion) {
    c.bench_function("partition_count n=1000", |b| {
        b.iter(|| partition_count(black_box(1000)).unwrap())
    });
}

fn bench_oracle(c: &mut Criterion) {
    let witness = extremal_witness(30);
    c.bench_function("brute_degree of the n=30 witness", |b| {
        b.iter(|| brute_degree(black_box(&witness)))
    });
}

fn bench_landscape(c: &mut Criterion) {
    c.bench_function("landscape_row n=30", |b| {
        b.iter(|| landscape_row(black_box(30)))
    });

    c.bench_function("max_degree_set n=60 (stratum path)", |b| {
        b.iter(|| max_degree_set(black_box(60)).len())
    });
}

criterion_group!(
    benches,
    bench_enumeration,
    bench_counting,
    bench_oracle,
    bench_landscape
);
criterion_main!(benches);
