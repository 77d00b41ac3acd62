use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use graphcode::analysis::{empirical_nn_distance, levenshtein, patch_flip};
use graphcode::datagen::{gen_dataset, GenParams};
use graphcode::{encode_canonical, execute, Cell};
use graphcode_bench::bernoulli_matrix;
use std::hint::black_box;

fn encode(c: &mut Criterion) {
    let mut group = c.benchmark_group("encode_canonical");
    for (n, rho) in [(64, 0.2), (256, 0.01), (512, 0.01)] {
        let m = bernoulli_matrix(n, rho, true, 1);
        group.bench_with_input(BenchmarkId::new(format!("rho={rho}"), n), &m, |b, m| {
            b.iter(|| encode_canonical(black_box(m)))
        });
    }
    group.finish();
}

fn decode(c: &mut Criterion) {
    let mut group = c.benchmark_group("execute");
    for (n, rho) in [(64, 0.2), (512, 0.01)] {
        let m = bernoulli_matrix(n, rho, true, 2);
        let w = encode_canonical(&m);
        group.bench_with_input(BenchmarkId::new(format!("rho={rho}"), n), &w, |b, w| {
            b.iter(|| execute(black_box(w), n, true).unwrap())
        });
    }
    group.finish();
}

fn binary_vs_instructions(c: &mut Criterion) {
    let m = bernoulli_matrix(256, 0.01, true, 3);
    c.bench_function("flatten_binary n=256", |b| {
        b.iter(|| black_box(&m).flatten_binary())
    });
}

fn analysis(c: &mut Criterion) {
    let m = bernoulli_matrix(512, 0.01, true, 4);
    c.bench_function("empirical_nn_distance n=512 rho=0.01", |b| {
        b.iter(|| empirical_nn_distance(black_box(&m)))
    });

    let small = bernoulli_matrix(48, 0.05, false, 5);
    let w = encode_canonical(&small);
    c.bench_function("patch_flip n=48", |b| {
        b.iter(|| patch_flip(&small, &w, black_box(Cell::new(24, 17))).unwrap())
    });

    let a = encode_canonical(&bernoulli_matrix(64, 0.05, true, 6));
    let bb = encode_canonical(&bernoulli_matrix(64, 0.05, true, 7));
    c.bench_function("levenshtein canonical n=64", |b| {
        b.iter(|| levenshtein(black_box(&a), black_box(&bb)))
    });
}

fn dataset(c: &mut Criterion) {
    let params = GenParams::default();
    c.bench_function("gen_dataset per_class=100", |b| {
        b.iter(|| gen_dataset(100, &params, black_box(1)).unwrap())
    });
}

criterion_group!(benches, encode, decode, binary_vs_instructions, analysis, dataset);
criterion_main!(benches);
