//! Comparative timing runs with CSV output.

use std::io::Write;
use std::time::Instant;

use densityseek_core::{solve, span_len, Algorithm, DensityError, Problem, Ratio};
use thiserror::Error;

use crate::rng::{case_seed, random_bitstream};

pub const CSV_HEADER: [&str; 8] = [
    "algorithm",
    "n",
    "theta",
    "repeat",
    "seconds",
    "result_length",
    "ops",
    "alloc_bytes",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchConfig {
    pub lengths: Vec<usize>,
    pub thetas: Vec<Ratio>,
    pub algorithms: Vec<Algorithm>,
    pub repeats: usize,
    pub seed: u64,
    /// Density of ones in the generated streams.
    pub rho: Ratio,
    pub problem: Problem,
}

impl Default for BenchConfig {
    fn default() -> Self {
        let half = Ratio::new(1, 2).expect("valid ratio");
        Self {
            lengths: vec![10_000],
            thetas: vec![half],
            algorithms: vec![Algorithm::DistMap, Algorithm::DistMatrix],
            repeats: 1,
            seed: 0,
            rho: half,
            problem: Problem::Fixed,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub algorithm: Algorithm,
    pub n: usize,
    pub theta: Ratio,
    pub repeat: usize,
    pub seconds: f64,
    pub result_length: usize,
    /// The algorithm's characteristic operation count.
    pub ops: u64,
    pub alloc_bytes: u64,
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("invalid benchmark configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Solver(#[from] DensityError),
    #[error("n = {n}, theta = {theta}, repeat {repeat}: {algorithm} found length {got}, {reference} found {want}")]
    Disagreement {
        n: usize,
        theta: Ratio,
        repeat: usize,
        algorithm: Algorithm,
        got: usize,
        reference: Algorithm,
        want: usize,
    },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Debug, Default)]
pub struct BenchReport {
    pub records: Vec<BenchRecord>,
    /// Requested algorithms that do not solve the configured problem.
    pub skipped: Vec<Algorithm>,
    pub problem: Option<Problem>,
}

/// Means over the repeats of one (algorithm, n, theta) group.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupMean {
    pub algorithm: Algorithm,
    pub n: usize,
    pub theta: Ratio,
    pub seconds: f64,
    pub result_length: f64,
    pub ops: f64,
    pub alloc_bytes: f64,
}

impl BenchReport {
    /// Group means, in the order the groups first appear.
    pub fn means(&self) -> Vec<GroupMean> {
        let mut out: Vec<(GroupMean, usize)> = Vec::new();
        for r in &self.records {
            let slot = out
                .iter_mut()
                .find(|(g, _)| g.algorithm == r.algorithm && g.n == r.n && g.theta == r.theta);
            let (group, count) = match slot {
                Some(slot) => slot,
                None => {
                    out.push((
                        GroupMean {
                            algorithm: r.algorithm,
                            n: r.n,
                            theta: r.theta,
                            seconds: 0.0,
                            result_length: 0.0,
                            ops: 0.0,
                            alloc_bytes: 0.0,
                        },
                        0,
                    ));
                    out.last_mut().expect("just pushed")
                }
            };
            group.seconds += r.seconds;
            group.result_length += r.result_length as f64;
            group.ops += r.ops as f64;
            group.alloc_bytes += r.alloc_bytes as f64;
            *count += 1;
        }
        out.into_iter()
            .map(|(mut g, count)| {
                let k = count as f64;
                g.seconds /= k;
                g.result_length /= k;
                g.ops /= k;
                g.alloc_bytes /= k;
                g
            })
            .collect()
    }

    /// One row per record, then one `mean` row per group after the last
    /// record of each (n, theta) case.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), BenchError> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(CSV_HEADER)?;
        let means = self.means();
        let mut i = 0;
        while i < self.records.len() {
            let (n, theta) = (self.records[i].n, self.records[i].theta);
            while i < self.records.len() && self.records[i].n == n && self.records[i].theta == theta {
                let r = &self.records[i];
                w.write_record([
                    r.algorithm.name().to_owned(),
                    r.n.to_string(),
                    r.theta.to_string(),
                    r.repeat.to_string(),
                    format!("{:.9}", r.seconds),
                    r.result_length.to_string(),
                    r.ops.to_string(),
                    r.alloc_bytes.to_string(),
                ])?;
                i += 1;
            }
            for g in means.iter().filter(|g| g.n == n && g.theta == theta) {
                w.write_record([
                    g.algorithm.name().to_owned(),
                    g.n.to_string(),
                    g.theta.to_string(),
                    "mean".to_owned(),
                    format!("{:.9}", g.seconds),
                    format!("{:.3}", g.result_length),
                    format!("{:.3}", g.ops),
                    format!("{:.3}", g.alloc_bytes),
                ])?;
            }
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> Result<String, BenchError> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        Ok(String::from_utf8(buf).expect("csv output is ascii"))
    }
}

/// Runs every (n, theta, repeat, algorithm) case in order, one stream per
/// (n, theta, repeat) shared by all algorithms. Only the solver call is
/// timed. Fails if two algorithms disagree on a result length.
pub fn run_bench(cfg: &BenchConfig) -> Result<BenchReport, BenchError> {
    if cfg.repeats == 0 {
        return Err(BenchError::Config("repeats must be at least 1".into()));
    }
    if cfg.lengths.is_empty() || cfg.thetas.is_empty() || cfg.algorithms.is_empty() {
        return Err(BenchError::Config("lengths, thetas and algorithms must be non-empty".into()));
    }
    let (runnable, skipped): (Vec<Algorithm>, Vec<Algorithm>) =
        cfg.algorithms.iter().partition(|a| a.supports(cfg.problem));
    let mut report = BenchReport {
        records: Vec::new(),
        skipped,
        problem: Some(cfg.problem),
    };
    for (ni, &n) in cfg.lengths.iter().enumerate() {
        for (ti, &theta) in cfg.thetas.iter().enumerate() {
            for repeat in 0..cfg.repeats {
                let stream = random_bitstream(case_seed(cfg.seed, ni, ti, repeat), n, cfg.rho);
                let mut reference: Option<(Algorithm, usize)> = None;
                for &algorithm in &runnable {
                    let started = Instant::now();
                    let result = solve(&stream, theta, cfg.problem, algorithm)?;
                    let seconds = started.elapsed().as_secs_f64();
                    let length = span_len(&result.span);
                    match reference {
                        Some((first, want)) if want != length => {
                            return Err(BenchError::Disagreement {
                                n,
                                theta,
                                repeat,
                                algorithm,
                                got: length,
                                reference: first,
                                want,
                            });
                        }
                        Some(_) => {}
                        None => reference = Some((algorithm, length)),
                    }
                    report.records.push(BenchRecord {
                        algorithm,
                        n,
                        theta,
                        repeat,
                        seconds,
                        result_length: length,
                        ops: result.ops,
                        alloc_bytes: result.alloc_bytes,
                    });
                }
            }
        }
    }
    Ok(report)
}
