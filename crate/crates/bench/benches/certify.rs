use std::hint::black_box;

use boundent::linalg::{orthonormal_range, DEFAULT_RANK_TOL};
use boundent::range::{certify, pcc_span, product_search, Sampling};
use boundent::state::symmetric_instance;
use boundent::FamilyParams;
use criterion::{criterion_group, criterion_main, Criterion};

fn bench_certify(c: &mut Criterion) {
    let params = FamilyParams::symmetric(0.3).unwrap();
    let range =
        orthonormal_range(symmetric_instance(0.3).unwrap().matrix(), DEFAULT_RANK_TOL).unwrap();
    let sampling = Sampling::default();

    let mut g = c.benchmark_group("range");
    g.sample_size(10);
    g.bench_function("pcc_span", |b| {
        b.iter(|| pcc_span(black_box(&range), &sampling).unwrap())
    });
    g.bench_function("product_search 100 restarts", |b| {
        b.iter(|| product_search(black_box(&range), 100, 0))
    });
    g.bench_function("certify", |b| {
        b.iter(|| certify(black_box(&params), &sampling).unwrap())
    });
    g.finish();
}

criterion_group!(benches, bench_certify);
criterion_main!(benches);
