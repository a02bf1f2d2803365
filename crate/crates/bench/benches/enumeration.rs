use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use selfdual_bench::{c17_code, c17_subcode};

fn gray_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("weight_distribution");
    group.sample_size(10);
    for k in [16, 20, 24] {
        let code = c17_subcode(k);
        group.bench_with_input(BenchmarkId::new("parallel", k), &code, |b, code| {
            b.iter(|| code.weight_distribution().unwrap())
        });
        group.bench_with_input(BenchmarkId::new("serial", k), &code, |b, code| {
            b.iter(|| code.weight_distribution_serial().unwrap())
        });
    }
    group.finish();
}

fn low_weight(c: &mut Criterion) {
    let code = c17_code();
    let mut group = c.benchmark_group("low_weight_distribution");
    group.sample_size(10);
    for w in [12, 14] {
        group.bench_with_input(BenchmarkId::from_parameter(w), &w, |b, &w| {
            b.iter(|| code.low_weight_distribution(w).unwrap())
        });
    }
    group.finish();
}

fn min_distance(c: &mut Criterion) {
    let code = c17_code();
    c.bench_function("min_distance", |b| b.iter(|| code.min_distance()));
}

criterion_group!(benches, gray_enumeration, low_weight, min_distance);
criterion_main!(benches);
