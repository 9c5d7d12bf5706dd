use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use extbranch::segments::CuspidalLine;
use extbranch::sweep::{ggp_pairs, run, run_sequential};

fn sweeps(c: &mut Criterion) {
    let line = CuspidalLine::new("r", 1);
    let mut group = c.benchmark_group("ggp_sweep");
    group.sample_size(10);
    for max_n in [4, 6] {
        let pairs = ggp_pairs(&line, max_n);
        group.bench_with_input(BenchmarkId::new("sequential", max_n), &pairs, |b, p| b.iter(|| run_sequential(black_box(p.clone()))));
        group.bench_with_input(BenchmarkId::new("parallel", max_n), &pairs, |b, p| b.iter(|| run(black_box(p.clone()))));
    }
    group.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
