use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use densityseek_bench::random_bitstream;
use densityseek_core::{solve, Algorithm, Problem, Ratio};

fn fixed_density(c: &mut Criterion) {
    let theta = Ratio::new(31, 101).unwrap();
    let mut group = c.benchmark_group("fixed-31/101");
    group.sample_size(10);
    for n in [100_000usize, 1_000_000] {
        let stream = random_bitstream(1, n, Ratio::new(1, 2).unwrap());
        for algorithm in [Algorithm::DistMap, Algorithm::DistSort, Algorithm::DistMatrix] {
            group.bench_with_input(BenchmarkId::new(algorithm.name(), n), &stream, |b, s| {
                b.iter(|| solve(s, theta, Problem::Fixed, algorithm).unwrap())
            });
        }
    }
    group.finish();
}

fn bounded_density(c: &mut Criterion) {
    let theta = Ratio::new(1, 2).unwrap();
    let mut group = c.benchmark_group("bounded-1/2");
    group.sample_size(10);
    let n = 1_000_000;
    let stream = random_bitstream(2, n, Ratio::new(1, 2).unwrap());
    for algorithm in [Algorithm::DistSort, Algorithm::PositionSweep] {
        group.bench_with_input(BenchmarkId::new(algorithm.name(), n), &stream, |b, s| {
            b.iter(|| solve(s, theta, Problem::Bounded, algorithm).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, fixed_density, bounded_density);
criterion_main!(benches);
