use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use perrin_cordial::claims::{claim_for, default_grid, sweep};
use perrin_cordial::constructors::construct;
use perrin_cordial::oracle::{decide_exhaustive, SearchConfig};
use perrin_cordial::perrin::{even_count, even_count_scan};
use perrin_cordial::{Family, FamilySpec};

fn counts(c: &mut Criterion) {
    c.bench_function("even_count closed form 10^4", |b| {
        b.iter(|| {
            (0..=10_000)
                .map(|n| even_count(black_box(n)))
                .sum::<usize>()
        })
    });
    c.bench_function("even_count scan 10^4", |b| {
        b.iter(|| even_count_scan(black_box(10_000)))
    });
}

fn exhaustive(c: &mut Criterion) {
    let mut group = c.benchmark_group("decide_exhaustive");
    group.sample_size(10);
    // infeasible members scan every candidate set
    for spec in [
        FamilySpec::Cycle(14),
        FamilySpec::Cycle(18),
        FamilySpec::Friendship(10),
    ] {
        let g = spec.generate().unwrap();
        for parallel in [false, true] {
            let cfg = SearchConfig {
                parallel,
                ..SearchConfig::default()
            };
            let id = BenchmarkId::new(if parallel { "parallel" } else { "sequential" }, spec);
            group.bench_with_input(id, &g, |b, g| {
                b.iter(|| decide_exhaustive(g, &cfg).unwrap())
            });
        }
    }
    group.finish();
}

fn constructors(c: &mut Criterion) {
    let mut group = c.benchmark_group("construct");
    for spec in [
        FamilySpec::Path(200),
        FamilySpec::Wheel(200),
        FamilySpec::Complete(83),
        FamilySpec::CompleteBipartite(60, 59),
        FamilySpec::Jellyfish(50, 50),
    ] {
        group.bench_with_input(BenchmarkId::from_parameter(spec), &spec, |b, &s| {
            b.iter(|| construct(s).unwrap())
        });
    }
    group.finish();
}

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for fam in [Family::Bistar, Family::Jellyfish] {
        let claim = claim_for(fam);
        let grid = default_grid(fam);
        group.bench_function(fam.name(), |b| {
            b.iter(|| sweep(&claim, &grid, &SearchConfig::default()).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, counts, exhaustive, constructors, sweeps);
criterion_main!(benches);
