use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use bu2_bench::workload;
use bu2_core::grading::Grading;
use bu2_core::maps::eta;
use bu2_core::presentation::bu2;
use bu2_core::rewrite::{check_confluence, enumerate_basis};

fn normal_forms(c: &mut Criterion) {
    let mut group = c.benchmark_group("normal_form");
    for max_exp in [2, 4, 6] {
        let polys = workload(bu2(), 1, 64, max_exp, 6);
        group.bench_with_input(BenchmarkId::from_parameter(max_exp), &polys, |b, polys| {
            b.iter(|| {
                for p in polys {
                    black_box(bu2().normal_form(p));
                }
            })
        });
    }
    group.finish();
}

fn confluence(c: &mut Criterion) {
    c.bench_function("critical_pairs", |b| b.iter(|| black_box(check_confluence(&bu2().system))));
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_basis");
    for a_max in [4, 8, 12] {
        group.bench_with_input(BenchmarkId::from_parameter(a_max), &a_max, |b, &a_max| {
            b.iter(|| black_box(enumerate_basis(bu2(), Grading::zero(3), a_max)))
        });
    }
    group.finish();
}

fn restriction(c: &mut Criterion) {
    let polys: Vec<_> = workload(bu2(), 2, 32, 3, 4).iter().map(|p| bu2().normal_form(p)).collect();
    c.bench_function("eta_apply", |b| {
        b.iter(|| {
            for p in &polys {
                black_box(eta().apply(p).expect("eta"));
            }
        })
    });
}

criterion_group!(benches, normal_forms, confluence, enumeration, restriction);
criterion_main!(benches);
