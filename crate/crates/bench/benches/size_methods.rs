use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fibcube_bench::{workloads, METHODS};
use fibcube_core::size_formulas::Sizes;
use fibcube_core::Budget;

fn size_methods(c: &mut Criterion) {
    let mut group = c.benchmark_group("edge_count");
    for (family, n) in workloads() {
        for method in METHODS {
            let id = BenchmarkId::new(method.name(), format!("{family} n={n}"));
            group.bench_function(id, |b| {
                b.iter(|| {
                    // fresh evaluator so caches are not reused across iterations
                    let mut sizes = Sizes::new(family).unwrap();
                    sizes.evaluate(method, black_box(n), Budget::default()).unwrap()
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, size_methods);
criterion_main!(benches);
