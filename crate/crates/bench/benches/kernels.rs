use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use gagc::bch::best_bch_curve;
use gagc::field::FieldTower;

fn bench_field_mul(c: &mut Criterion) {
    let tower = FieldTower::new(2, 3, 6).unwrap();
    let xs: Vec<_> = (1..1001u64)
        .map(|i| tower.elem(6, i * 251 % tower.top_size()).unwrap())
        .collect();
    c.bench_function("f2e18_mul_1000", |b| {
        b.iter(|| {
            let mut acc = tower.one(6);
            for &x in &xs {
                acc = tower.mul(acc, black_box(x));
            }
            black_box(acc)
        })
    });
    c.bench_function("f2e18_frobenius_1000", |b| {
        b.iter(|| {
            for &x in &xs {
                black_box(tower.frobenius(black_box(x)));
            }
        })
    });
}

fn bench_tower_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("tower_build");
    group.sample_size(10);
    group.bench_function("f8_ext6", |b| {
        b.iter(|| black_box(FieldTower::new(2, 3, 6).unwrap()))
    });
    group.bench_function("f17_ext4", |b| {
        b.iter(|| black_box(FieldTower::new(17, 1, 4).unwrap()))
    });
    group.finish();
}

fn bench_bch_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("bch_sweep");
    group.sample_size(10);
    group.bench_function("q8_len4095_short567", |b| {
        b.iter(|| black_box(best_bch_curve(8, 4095, 567, false).unwrap()))
    });
    group.finish();
}

criterion_group!(benches, bench_field_mul, bench_tower_build, bench_bch_sweep);
criterion_main!(benches);
