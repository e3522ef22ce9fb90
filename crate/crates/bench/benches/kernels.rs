use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use qspace_bench::{classical_spec, mixed_spec};
use qspace_core::{
    check_p_sequence, e_series_via_dims, e_series_via_star, lr_coefficient, schur_value, Partition,
};

fn bench_schur_value(c: &mut Criterion) {
    let sp = mixed_spec().specialization(12);
    let staircase = Partition::new(vec![4, 3, 2, 1]);
    c.bench_function("schur_value staircase 4321 mixed spec", |b| {
        b.iter(|| schur_value(black_box(&sp), black_box(&staircase)).unwrap())
    });
}

fn bench_e_series_routes(c: &mut Criterion) {
    let spec = classical_spec(3);
    c.bench_function("e_series_via_dims classical3 N=8", |b| {
        b.iter(|| e_series_via_dims(black_box(&spec), 8))
    });
    c.bench_function("e_series_via_star classical3 N=8", |b| {
        b.iter(|| e_series_via_star(black_box(&spec), 8))
    });
}

fn bench_p_sequence(c: &mut Criterion) {
    let series = mixed_spec().lambda_series(10);
    c.bench_function("check_p_sequence mixed spec (4,10)", |b| {
        b.iter(|| check_p_sequence(black_box(series.coeffs()), 4, 10).unwrap())
    });
}

fn bench_lr(c: &mut Criterion) {
    let mu = Partition::new(vec![3, 2, 1]);
    let gamma = Partition::new(vec![3, 2, 1]);
    let lambda = Partition::new(vec![4, 4, 2, 1, 1]);
    c.bench_function("lr_coefficient 321x321 -> 44211", |b| {
        b.iter(|| lr_coefficient(black_box(&mu), black_box(&gamma), black_box(&lambda)))
    });
}

criterion_group!(
    benches,
    bench_schur_value,
    bench_e_series_routes,
    bench_p_sequence,
    bench_lr
);
criterion_main!(benches);
