use densityseek_bench::{random_bitstream, run_bench, BenchConfig, BenchError, CSV_HEADER};
use densityseek_core::{Algorithm, Problem, Ratio};

fn ratio(a: u64, b: u64) -> Ratio {
    Ratio::new(a, b).unwrap()
}

fn strip_seconds(csv: &str) -> String {
    csv.lines()
        .map(|line| {
            let mut fields: Vec<&str> = line.split(',').collect();
            fields[4] = "_";
            fields.join(",")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn seed_42_ones_count() {
    let s = random_bitstream(42, 10_000, ratio(1, 2));
    let ones = s.count_ones();
    assert!((4600..=5400).contains(&ones));
    // Recorded from an independent implementation of the generator.
    assert_eq!(ones, 4954);
}

#[test]
fn two_algorithms_one_case() {
    let cfg = BenchConfig {
        lengths: vec![2_000],
        thetas: vec![ratio(2, 5)],
        algorithms: vec![Algorithm::DistMap, Algorithm::DistMatrix],
        ..BenchConfig::default()
    };
    let report = run_bench(&cfg).unwrap();
    assert_eq!(report.records.len(), 2);
    assert_eq!(report.records[0].result_length, report.records[1].result_length);
    let csv = report.to_csv_string().unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], CSV_HEADER.join(","));
    assert_eq!(lines.len(), 1 + 2 + 2);
    assert!(lines[3].starts_with("dist-map,2000,2/5,mean,"));
}

#[test]
fn same_config_same_csv() {
    let cfg = BenchConfig {
        lengths: vec![500, 1_000],
        thetas: vec![ratio(1, 2), ratio(31, 101)],
        algorithms: vec![Algorithm::SkipMismatch, Algorithm::DistSort, Algorithm::DistMatrix],
        repeats: 3,
        seed: 11,
        ..BenchConfig::default()
    };
    let a = run_bench(&cfg).unwrap().to_csv_string().unwrap();
    let b = run_bench(&cfg).unwrap().to_csv_string().unwrap();
    assert_eq!(strip_seconds(&a), strip_seconds(&b));
    let other = BenchConfig { seed: 12, ..cfg };
    let c = run_bench(&other).unwrap().to_csv_string().unwrap();
    assert_ne!(strip_seconds(&a), strip_seconds(&c));
}

#[test]
fn mismatched_algorithms_are_skipped() {
    let cfg = BenchConfig {
        algorithms: vec![Algorithm::DistMatrix, Algorithm::PositionSweep, Algorithm::DistSort],
        problem: Problem::Bounded,
        lengths: vec![1_000],
        ..BenchConfig::default()
    };
    let report = run_bench(&cfg).unwrap();
    assert_eq!(report.skipped, vec![Algorithm::DistMatrix]);
    assert!(report.records.iter().all(|r| r.algorithm != Algorithm::DistMatrix));
    assert_eq!(report.records.len(), 2);
}

#[test]
fn empty_or_zero_config_is_rejected() {
    let cfg = BenchConfig {
        repeats: 0,
        ..BenchConfig::default()
    };
    assert!(matches!(run_bench(&cfg), Err(BenchError::Config(_))));
    let cfg = BenchConfig {
        lengths: vec![],
        ..BenchConfig::default()
    };
    assert!(matches!(run_bench(&cfg), Err(BenchError::Config(_))));
}

#[test]
fn skip_mismatch_slows_down_near_stream_density() {
    let cfg = BenchConfig {
        lengths: vec![20_000],
        thetas: vec![ratio(1, 2), ratio(1, 101)],
        algorithms: vec![Algorithm::SkipMismatch],
        repeats: 3,
        seed: 5,
        ..BenchConfig::default()
    };
    let means = run_bench(&cfg).unwrap().means();
    assert_eq!(means.len(), 2);
    assert!(means[0].ops > means[1].ops, "{means:?}");
}

#[test]
fn matrix_work_and_memory_grow_linearly() {
    let cfg = BenchConfig {
        lengths: vec![20_000, 40_000, 80_000],
        thetas: vec![ratio(31, 101), ratio(1, 2)],
        algorithms: vec![Algorithm::DistMatrix],
        repeats: 3,
        seed: 3,
        ..BenchConfig::default()
    };
    let means = run_bench(&cfg).unwrap().means();
    for theta in &cfg.thetas {
        let group: Vec<_> = means.iter().filter(|g| g.theta == *theta).collect();
        for pair in group.windows(2) {
            assert!(pair[1].ops <= 2.5 * pair[0].ops, "{theta}: {pair:?}");
            // the pool doubles its reservation, so allow one extra factor of 2
            assert!(pair[1].alloc_bytes <= 5.0 * pair[0].alloc_bytes, "{theta}: {pair:?}");
        }
    }
}
