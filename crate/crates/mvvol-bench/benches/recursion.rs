use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mvvol::graphs::{enumerate_stable_graphs, mv_polynomial_via_graphs};
use mvvol::kontsevich::Kontsevich;
use mvvol::square_tiled::{sts_series, Norbury};
use mvvol::virasoro::MasurVeech;
use std::hint::black_box;

fn cold_volume_coefficients(c: &mut Criterion) {
    let mut group = c.benchmark_group("mv_coeff_cold");
    for (g, n) in [(1u32, 4usize), (2, 3), (3, 1)] {
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{g}_{n}")),
            &(g, n),
            |b, &(g, n)| b.iter(|| MasurVeech::new().coeff(black_box(g), &vec![0; n])),
        );
    }
    group.finish();
}

fn cold_intersection_numbers(c: &mut Criterion) {
    c.bench_function("psi_cold_g3_tau2_tau5_tau2", |b| {
        b.iter(|| Kontsevich::new().coeff(black_box(3), &[2, 5, 2]))
    });
}

fn lattice_counts(c: &mut Criterion) {
    c.bench_function("norbury_cold_g1_n2", |b| {
        b.iter(|| Norbury::new().count(black_box(1), &[8, 6]))
    });
    c.bench_function("sts_series_g1_n1_order20", |b| {
        b.iter(|| sts_series(1, 1, black_box(&[2]), 20).unwrap())
    });
}

fn graph_sums(c: &mut Criterion) {
    c.bench_function("stable_graphs_g2_n2", |b| {
        b.iter(|| enumerate_stable_graphs(black_box(2), 2).unwrap())
    });
    c.bench_function("graph_sum_g2_n2", |b| {
        b.iter(|| mv_polynomial_via_graphs(black_box(2), 2).unwrap())
    });
}

criterion_group!(
    benches,
    cold_volume_coefficients,
    cold_intersection_numbers,
    lattice_counts,
    graph_sums
);
criterion_main!(benches);
