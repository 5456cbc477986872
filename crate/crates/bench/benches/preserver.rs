use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fixpt_bench::{matrices, similarity, transpose_similarity};
use fixpt_core::preserver::{check_condition2, classify};
use fixpt_core::{fixed_space, rref};

fn elimination(c: &mut Criterion) {
    let mut group = c.benchmark_group("rref");
    for n in [4, 8, 16] {
        let input = matrices(n, 8, n as u64);
        group.bench_with_input(BenchmarkId::from_parameter(n), &input, |b, ms| {
            b.iter(|| ms.iter().map(|m| rref(m).rank).sum::<usize>())
        });
    }
    group.finish();

    let input = matrices(5, 32, 5);
    c.bench_function("fixed_space/5", |b| {
        b.iter(|| input.iter().map(|m| fixed_space(m).unwrap().dim()).sum::<usize>())
    });
}

fn recovery(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify");
    for n in [3, 4, 5] {
        let phi = transpose_similarity(n, 7);
        group.bench_with_input(BenchmarkId::from_parameter(n), &phi, |b, phi| b.iter(|| classify(phi)));
    }
    group.finish();
}

fn falsifier(c: &mut Criterion) {
    let mut group = c.benchmark_group("check_condition2");
    group.sample_size(20);
    for n in [3, 4] {
        let phi = similarity(n, 9);
        group.bench_with_input(BenchmarkId::from_parameter(n), &phi, |b, phi| {
            b.iter(|| check_condition2(phi, 16, 0))
        });
    }
    group.finish();
}

criterion_group!(benches, elimination, recovery, falsifier);
criterion_main!(benches);
