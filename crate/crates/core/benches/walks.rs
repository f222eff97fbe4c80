use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ramyip::parallel::Exec;
use ramyip::ramyip::{RYSystem, SystemKind, DEFAULT_WALK_BUDGET};

fn walk_sums(c: &mut Criterion) {
    let cases: [(SystemKind, usize, &[i32]); 3] = [
        (SystemKind::CC, 2, &[2, -1]),
        (SystemKind::BRY, 2, &[-2, 2]),
        (SystemKind::CRY, 3, &[-1, 1, -1]),
    ];
    let mut group = c.benchmark_group("walk_sum");
    group.sample_size(10);
    for (kind, n, mu) in cases {
        let sys = RYSystem::new(kind, n);
        let label = format!("{}/{mu:?}", kind.name());
        for (name, exec) in [("sequential", Exec::Sequential), ("parallel", Exec::Parallel(None))] {
            group.bench_with_input(BenchmarkId::new(name, &label), &exec, |b, exec| {
                b.iter(|| sys.nonsymmetric_poly(mu, DEFAULT_WALK_BUDGET, exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, walk_sums);
criterion_main!(benches);
