use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use dyck_cluster::{
    ar_quiver, count_matchings_transfer, dyck_cluster_variables, enumerate_cluster_variables, enumerate_dyck,
    enumerate_matchings, quiver_from_subchain, snake_from_subchain, verify_bijection,
};
use dyck_cluster_bench::{linear, zigzag};

fn dyck_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_dyck");
    for n in [8, 10, 12] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| enumerate_dyck(black_box(n)).unwrap())
        });
    }
    group.finish();
}

fn matchings(c: &mut Criterion) {
    let mut group = c.benchmark_group("matchings");
    for n in [6, 9, 12] {
        let g = snake_from_subchain(&zigzag(n).unwrap());
        group.bench_with_input(BenchmarkId::new("enumerate", n), &g, |b, g| {
            b.iter(|| enumerate_matchings(black_box(g)))
        });
        group.bench_with_input(BenchmarkId::new("transfer", n), &g, |b, g| {
            b.iter(|| count_matchings_transfer(black_box(g)))
        });
    }
    group.finish();
}

fn cluster_engines(c: &mut Criterion) {
    let mut group = c.benchmark_group("cluster_variables");
    group.sample_size(10);
    for n in [5, 7] {
        let chain = linear(n).unwrap();
        let q = quiver_from_subchain(&chain);
        group.bench_with_input(BenchmarkId::new("mutation", n), &q, |b, q| {
            b.iter(|| enumerate_cluster_variables(black_box(q)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("dyck", n), &chain, |b, ch| {
            b.iter(|| dyck_cluster_variables(black_box(ch)).unwrap())
        });
    }
    group.bench_function("verify_zigzag_7", |b| {
        let chain = zigzag(7).unwrap();
        b.iter(|| verify_bijection(black_box(&chain)).unwrap())
    });
    group.finish();
}

fn ar_knitting(c: &mut Criterion) {
    let chain = zigzag(10).unwrap();
    c.bench_function("ar_quiver_zigzag_10", |b| b.iter(|| ar_quiver(black_box(&chain)).unwrap()));
}

criterion_group!(benches, dyck_enumeration, matchings, cluster_engines, ar_knitting);
criterion_main!(benches);
