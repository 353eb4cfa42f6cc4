use criterion::{criterion_group, criterion_main, Criterion};

use flexloci::{
    catalan_closed, catalan_recursive, degree_vk_chern, mul_sigma1_power_iter, n_k_lambda,
    n_k_mu, SchubertIndex,
};

fn bench_catalan(c: &mut Criterion) {
    c.bench_function("catalan_closed a=3 (30,30)", |b| {
        b.iter(|| catalan_closed(3, 30, 30).unwrap())
    });
    c.bench_function("catalan_recursive a=3 (30,30)", |b| {
        b.iter(|| catalan_recursive(3, 30, 30).unwrap())
    });
}

fn bench_pieri(c: &mut Criterion) {
    c.bench_function("sigma1^14 in G(1,8)", |b| {
        b.iter(|| mul_sigma1_power_iter(8, SchubertIndex::new(0, 0), 14).unwrap())
    });
}

fn bench_degree_routes(c: &mut Criterion) {
    c.bench_function("N_11(6,12) lambda route", |b| {
        b.iter(|| n_k_lambda(6, 12, 11).unwrap())
    });
    c.bench_function("N_11(6,12) mu route", |b| {
        b.iter(|| n_k_mu(6, 12, 11).unwrap())
    });
    c.bench_function("N_11(6,12) Chern route", |b| {
        b.iter(|| degree_vk_chern(6, 12, 11).unwrap())
    });
}

criterion_group!(benches, bench_catalan, bench_pieri, bench_degree_routes);
criterion_main!(benches);
