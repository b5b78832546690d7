use criterion::{criterion_group, criterion_main, BatchSize, BenchmarkId, Criterion};

use blockhh::engine::{dim_hh1_group, lookup};
use blockhh::groupalgebra::{block_idempotents, DEFAULT_SEED};
use blockhh::par::set_parallel;

// Groups cache their element and class tables, so every iteration gets a
// freshly built group.
fn fresh(name: &str) -> blockhh::PermGroup {
    lookup(name).unwrap().group
}

fn totals(c: &mut Criterion) {
    let mut g = c.benchmark_group("dim_hh1_group");
    g.sample_size(10);
    for (name, p) in [("M11", 2u32), ("C2xS5", 2), ("M12", 3)] {
        for (path, on) in [("parallel", true), ("sequential", false)] {
            g.bench_with_input(BenchmarkId::new(path, format!("{name}/{p}")), &(name, p), |b, &(name, p)| {
                set_parallel(on);
                b.iter_batched(|| fresh(name), |grp| dim_hh1_group(&grp, p).unwrap(), BatchSize::PerIteration)
            });
        }
    }
    set_parallel(true);
    g.finish();
}

fn blocks(c: &mut Criterion) {
    let mut g = c.benchmark_group("block_idempotents");
    g.sample_size(10);
    for (name, p) in [("M11", 2u32), ("S3xA4", 2)] {
        for (path, on) in [("parallel", true), ("sequential", false)] {
            g.bench_with_input(BenchmarkId::new(path, format!("{name}/{p}")), &(name, p), |b, &(name, p)| {
                set_parallel(on);
                b.iter_batched(
                    || fresh(name),
                    |grp| block_idempotents(&grp, p, DEFAULT_SEED).unwrap().blocks.len(),
                    BatchSize::PerIteration,
                )
            });
        }
    }
    set_parallel(true);
    g.finish();
}

criterion_group!(benches, totals, blocks);
criterion_main!(benches);
