use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use detcurve::{
    build_field, classify_form, curve_points, defining_triple, find_reducing_columns, projective_variety, valla_fg,
    DefiningSystem, TripleVariant, VallaExponents,
};
use detcurve_bench::{curve, matrix, CURVES, MATRICES};

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("construction");
    for (d, e1, e2) in CURVES {
        let params = curve(d, e1, e2);
        group.bench_with_input(BenchmarkId::new("system", format!("{d},{e1},{e2}")), &params, |b, p| {
            b.iter(|| DefiningSystem::new(black_box(*p), false))
        });
        group.bench_with_input(BenchmarkId::new("identities", format!("{d},{e1},{e2}")), &params, |b, p| {
            b.iter(|| black_box(p).check_identities())
        });
    }
    group.finish();
}

fn radical(c: &mut Criterion) {
    let mut group = c.benchmark_group("radical");
    for text in MATRICES {
        let a = matrix(text);
        group.bench_with_input(BenchmarkId::new("reducing_columns", text), &a, |b, a| {
            b.iter(|| find_reducing_columns(black_box(a)))
        });
        group.bench_with_input(BenchmarkId::new("classify", text), &a, |b, a| {
            b.iter(|| classify_form(black_box(a)))
        });
    }
    group.finish();
}

fn field(c: &mut Criterion) {
    let mut group = c.benchmark_group("field");
    for (p, k) in [(2, 12), (3, 6), (101, 3)] {
        group.bench_function(BenchmarkId::new("modulus", format!("{p}^{k}")), |b| {
            b.iter(|| build_field(black_box(p), black_box(k)))
        });
        let f = build_field(p, k).unwrap();
        let x = f.generator();
        group.bench_function(BenchmarkId::new("inverse", format!("{p}^{k}")), |b| b.iter(|| f.inv(black_box(&x))));
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    let params = curve(4, 3, 1);
    let triple = defining_triple(&params, TripleVariant::Minors, false);
    for p in [5, 13] {
        let f = build_field(p, 1).unwrap();
        group.bench_function(BenchmarkId::new("variety", p), |b| {
            b.iter(|| projective_variety(black_box(&triple), &f))
        });
        group.bench_function(BenchmarkId::new("curve_points", p), |b| {
            b.iter(|| curve_points(black_box(&params), p, 3))
        });
    }
    group.finish();
}

fn valla(c: &mut Criterion) {
    let e = VallaExponents::new(9, 40, 3, 70, 2, 5).unwrap();
    c.bench_function("valla_fg", |b| b.iter(|| valla_fg(black_box(&e))));
}

criterion_group!(benches, construction, radical, field, oracle, valla);
criterion_main!(benches);
