//! Benchmarks the verification sweeps under both execution strategies.
//!
//! The work distribution and shard merge are identical in both paths, so
//! this measures pure scheduling overhead/speedup; on a single-CPU host
//! the data-parallel path can only lose by its setup cost.

use std::time::Duration;

use criterion::{criterion_group, criterion_main, Criterion};

use rainbow_harness::par::Parallelism;
use rainbow_harness::verify::{verify_theorem, TheoremId, VerifyMode};

fn strategies() -> [(&'static str, Parallelism); 2] {
    [
        ("sequential", Parallelism::Sequential),
        ("rayon", Parallelism::Rayon),
    ]
}

fn bench_sampled_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("woc-n5-sample2000");
    group.sample_size(10).measurement_time(Duration::from_secs(8));
    for (name, par) in strategies() {
        group.bench_function(name, |b| {
            b.iter(|| {
                let report = verify_theorem(
                    TheoremId::Woc,
                    5,
                    VerifyMode::Sample {
                        count: 2000,
                        seed: 7,
                    },
                    par,
                )
                .expect("in envelope");
                assert!(report.passed());
                report.families_checked
            })
        });
    }
    group.finish();
}

fn bench_exhaustive_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("odd-char-n4-exhaustive");
    group.sample_size(10).measurement_time(Duration::from_secs(8));
    for (name, par) in strategies() {
        group.bench_function(name, |b| {
            b.iter(|| {
                let report =
                    verify_theorem(TheoremId::OddChar, 4, VerifyMode::Exhaustive, par)
                        .expect("in envelope");
                assert!(report.passed());
                report.families_checked
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bench_sampled_sweep, bench_exhaustive_sweep);
criterion_main!(benches);
