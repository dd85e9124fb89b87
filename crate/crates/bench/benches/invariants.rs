use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use kodaira_core::{build, classify, enumerate_types, invariant_profile, partner_matrix, KodairaType};

const SAMPLE_TYPES: [KodairaType; 5] = [
    KodairaType::I(20),
    KodairaType::IV,
    KodairaType::IStar(20),
    KodairaType::IIStar,
    KodairaType::MI(6, 20),
];

fn bench_classify(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify");
    for t in SAMPLE_TYPES {
        let config = build(t).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(t), &config, |b, config| {
            b.iter(|| classify(black_box(config)))
        });
    }
    group.finish();
}

fn bench_profile(c: &mut Criterion) {
    let mut group = c.benchmark_group("invariant_profile");
    for t in SAMPLE_TYPES {
        let config = build(t).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(t), &config, |b, config| {
            b.iter(|| invariant_profile(black_box(config)).unwrap())
        });
    }
    group.finish();
}

fn bench_matrix(c: &mut Criterion) {
    let mut group = c.benchmark_group("partner_matrix");
    group.sample_size(10);
    for (max_n, max_m) in [(4, 3), (10, 4)] {
        let types = enumerate_types(max_n, max_m);
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("n{max_n}_m{max_m}")),
            &types,
            |b, types| b.iter(|| partner_matrix(black_box(types)).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(benches, bench_classify, bench_profile, bench_matrix);
criterion_main!(benches);
