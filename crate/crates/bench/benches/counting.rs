use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use tracecurve_bench::{curve, field, label, FIELDS};
use tracecurve_core::characters::{gauss_sum_direct, Level};
use tracecurve_core::count::{count_brute, count_d2, count_gauss};
use tracecurve_core::{FieldContext, DEFAULT_SIZE_CAP};

fn build_context(c: &mut Criterion) {
    let mut g = c.benchmark_group("build_context");
    g.sample_size(10);
    for (p, s, n) in FIELDS {
        g.bench_function(BenchmarkId::from_parameter(format!("{}^{}", p.pow(s), n)), |b| {
            b.iter(|| FieldContext::new(black_box(p), s, n, DEFAULT_SIZE_CAP).unwrap())
        });
    }
    g.finish();
}

fn counting(c: &mut Criterion) {
    let mut g = c.benchmark_group("count");
    g.sample_size(10);
    for (p, s, n) in FIELDS {
        let ctx = field(p, s, n);
        let spec = curve(&ctx, 4);
        let spec2 = curve(&ctx, 2);
        let id = label(&ctx);
        g.bench_with_input(BenchmarkId::new("brute", &id), &spec, |b, sp| b.iter(|| count_brute(&ctx, sp).unwrap()));
        g.bench_with_input(BenchmarkId::new("gauss", &id), &spec, |b, sp| b.iter(|| count_gauss(&ctx, sp).unwrap()));
        g.bench_with_input(BenchmarkId::new("d2", &id), &spec2, |b, sp| b.iter(|| count_d2(&ctx, sp).unwrap()));
    }
    g.finish();
}

fn gauss_sums(c: &mut Criterion) {
    let mut g = c.benchmark_group("gauss_sum_direct");
    for (p, s, n) in FIELDS {
        let ctx = field(p, s, n);
        g.bench_function(BenchmarkId::from_parameter(label(&ctx)), |b| {
            b.iter(|| gauss_sum_direct(&ctx, 4, black_box(1), Level::Full).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, build_context, counting, gauss_sums);
criterion_main!(benches);
