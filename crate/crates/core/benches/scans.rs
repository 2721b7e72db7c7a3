use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use kronlab::kronecker::{character_table, kronecker_in};
use kronlab::par::Execution;
use kronlab::partitions::{partitions_of, Partition};
use kronlab::stability::scan_conjecture_510;
use kronlab::tables::generate_table;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn kronecker_sweep(n: u32, exec: Execution) -> u64 {
    let table = character_table(n).unwrap();
    let ps = partitions_of(n);
    exec.map(&ps, |l: &Partition| {
        let mut s = 0;
        for m in &ps {
            for v in &ps {
                s += kronecker_in(&table, l, m, v);
            }
        }
        s
    })
    .into_iter()
    .sum()
}

fn bench_scan(c: &mut Criterion) {
    let mut g = c.benchmark_group("scan_conjecture");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 6), &6, |b, &w| {
            b.iter(|| scan_conjecture_510(w, exec).unwrap())
        });
    }
    g.finish();
}

fn bench_table(c: &mut Criterion) {
    // The series is cached after the first call, so this measures extraction.
    let mut g = c.benchmark_group("table");
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 3), &3, |b, &w| {
            b.iter(|| generate_table(w, exec).unwrap())
        });
    }
    g.finish();
}

fn bench_sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("kronecker_sweep");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 10), &10, |b, &n| {
            b.iter(|| kronecker_sweep(n, exec))
        });
    }
    g.finish();
}

criterion_group!(benches, bench_scan, bench_table, bench_sweep);
criterion_main!(benches);
