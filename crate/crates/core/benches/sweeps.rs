use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use schubert::diagram::MarkedDiagram;
use schubert::par::{self, Exec};
use schubert::rigidity::{self, PairDescriptor};
use schubert::schubert::all_subdiagrams;

const EXECS: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn cover_tables(c: &mut Criterion) {
    let mut g = c.benchmark_group("cover_table");
    g.sample_size(10);
    for (ty, k) in [("D6", 2), ("E6", 3), ("F4", 1)] {
        let t: schubert::root_system::SimpleType = ty.parse().unwrap();
        for (name, exec) in EXECS {
            g.bench_with_input(BenchmarkId::new(name, format!("{ty}:{}", k + 1)), &exec, |b, &e| {
                b.iter(|| MarkedDiagram::with_exec(black_box(t), k, e).unwrap())
            });
        }
    }
    g.finish();
}

fn classify_sweep(c: &mut Criterion) {
    let mut pairs = Vec::new();
    for ty in ["B6", "C6", "D6", "F4"] {
        let t: schubert::root_system::SimpleType = ty.parse().unwrap();
        for k in 0..t.rank {
            let d = MarkedDiagram::shared(t, k).unwrap();
            pairs.extend(all_subdiagrams(&d).into_iter().map(|n| PairDescriptor::subdiagram(d.clone(), n)));
        }
    }
    let mut g = c.benchmark_group("classify_batch");
    for (name, exec) in EXECS {
        g.bench_function(name, |b| b.iter(|| rigidity::classify_batch(exec, black_box(&pairs))));
    }
    g.finish();
}

fn verify_sweep(c: &mut Criterion) {
    let diagrams: Vec<_> = schubert::cli::default_verify_range()
        .into_iter()
        .map(|(t, k)| MarkedDiagram::shared(t, k).unwrap())
        .collect();
    let mut g = c.benchmark_group("verify_catalog");
    g.sample_size(10);
    for (name, exec) in EXECS {
        g.bench_function(name, |b| {
            b.iter(|| par::map(exec, black_box(&diagrams), |d| rigidity::verify_catalog(d).unwrap()))
        });
    }
    g.finish();
}

criterion_group!(benches, cover_tables, classify_sweep, verify_sweep);
criterion_main!(benches);
