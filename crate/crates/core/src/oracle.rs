//! Quadratic reference solvers.
//!
//! These examine every span through the rank table and exist only to check
//! the faster solvers. Among equally long answers the one with the smallest
//! start is returned.

use crate::bits::Bitstream;
use crate::counters::SolverCounters;
use crate::error::Result;
use crate::prefix::{check_overflow, RankTable};
use crate::ratio::Ratio;
use crate::span::{Problem, Span, SpanResult};

pub fn brute_fixed(stream: &Bitstream, ratio: Ratio) -> Result<SpanResult> {
    brute_counted(stream, ratio, Problem::Fixed, &mut SolverCounters::default())
}

pub fn brute_bounded(stream: &Bitstream, ratio: Ratio) -> Result<SpanResult> {
    brute_counted(stream, ratio, Problem::Bounded, &mut SolverCounters::default())
}

pub fn brute_counted(
    stream: &Bitstream,
    ratio: Ratio,
    problem: Problem,
    counters: &mut SolverCounters,
) -> Result<SpanResult> {
    check_overflow(stream.len(), ratio)?;
    let n = stream.len();
    let rank = RankTable::new(stream);
    let (alpha, beta) = (ratio.alpha(), ratio.beta());
    let mut best: SpanResult = None;
    let mut best_len = 0usize;
    for a in 1..=n {
        // For this start, only ends giving a strictly longer span matter; the
        // first hit scanning downwards is the longest for this start.
        let first_end = a + best_len;
        for b in (first_end..=n).rev() {
            counters.comparisons += 1;
            let ones = rank.rank(b) - rank.rank(a - 1);
            let lhs = ones * beta;
            let rhs = (b - a + 1) as u64 * alpha;
            let hit = match problem {
                Problem::Fixed => lhs == rhs,
                Problem::Bounded => lhs >= rhs,
            };
            if hit {
                best = Some(Span::new(a, b));
                best_len = b - a + 1;
                break;
            }
        }
    }
    Ok(best)
}
