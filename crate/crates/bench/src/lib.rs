// Copyright 2026 The abelsq Authors
// SPDX-License-Identifier: Apache-2.0

//! Criterion benchmark bodies, kept in a library so they can be grouped from
//! `benches/bench.rs`.

use abelsq_core::{
    count_fast, count_signature_oracle, expressiveness_grid, mc_expected_fidelity_power,
    walsh_hadamard, AbelianParams,
};
use criterion::{black_box, BenchmarkId, Criterion, Throughput};

/// Recursion cost against `t` at a fixed huge alphabet, and against `log d`.
pub fn recursion(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_fast/d=2^256");
    group.sample_size(10);
    for t in [16usize, 32, 64, 128] {
        group.bench_with_input(BenchmarkId::from_parameter(t), &t, |b, &t| {
            let p = AbelianParams::power_of_two(256, t);
            b.iter(|| count_fast(black_box(&p)))
        });
    }
    group.finish();

    let mut group = c.benchmark_group("count_fast/t=32");
    group.sample_size(10);
    for exponent in [8u32, 64, 512, 4096] {
        group.bench_with_input(BenchmarkId::from_parameter(exponent), &exponent, |b, &e| {
            let p = AbelianParams::power_of_two(e, 32);
            b.iter(|| count_fast(black_box(&p)))
        });
    }
    group.finish();
}

pub fn oracle_vs_recursion(c: &mut Criterion) {
    let mut group = c.benchmark_group("f_6(7)");
    let p = AbelianParams::new(6u32, 7).unwrap();
    group.bench_function("oracle", |b| {
        b.iter(|| count_signature_oracle(black_box(&p), u64::MAX))
    });
    group.bench_function("fast", |b| b.iter(|| count_fast(black_box(&p))));
    group.finish();
}

pub fn grid(c: &mut Criterion) {
    let n_values: Vec<u32> = (1..=8).collect();
    c.bench_function("expressiveness_grid/1..8x32", |b| {
        b.iter(|| expressiveness_grid(black_box(&n_values), 32))
    });
}

pub fn transform(c: &mut Criterion) {
    let mut group = c.benchmark_group("walsh_hadamard");
    for n in [4u32, 8, 12, 14] {
        let len = 1usize << n;
        group.throughput(Throughput::Elements(len as u64));
        group.bench_with_input(BenchmarkId::from_parameter(n), &len, |b, &len| {
            let mut values: Vec<f64> = (0..len).map(|i| i as f64 * 0.001).collect();
            b.iter(|| walsh_hadamard(black_box(&mut values)))
        });
    }
    group.finish();
}

pub fn monte_carlo(c: &mut Criterion) {
    let mut group = c.benchmark_group("mc/10k samples");
    group.sample_size(10);
    for n in [2u32, 6, 10] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| mc_expected_fidelity_power(n, 2, 10_000, 1))
        });
    }
    group.finish();
}
