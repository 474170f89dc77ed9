//! Skipping window scan, ordered-map scan and sort-and-clump scan.
//!
//! All three require `0 < alpha < beta`; the extreme ratios are handled by
//! [`crate::span::trivial_extremes`].

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::bits::Bitstream;
use crate::counters::SolverCounters;
use crate::error::Result;
use crate::prefix::{check_overflow, RankTable};
use crate::ratio::Ratio;
use crate::span::{Problem, Span, SpanResult};

/// A `(distance, position)` pair.
pub type DistancePair = (i64, u64);

/// All pairs `(d_i, i)` for `0 <= i <= n`, ordered by distance.
#[derive(Clone, Debug)]
pub struct SortedPairs {
    pairs: Vec<DistancePair>,
}

impl SortedPairs {
    pub fn new(stream: &Bitstream, ratio: Ratio) -> Result<Self> {
        Self::build(stream, ratio, &mut SolverCounters::default())
    }

    fn build(stream: &Bitstream, ratio: Ratio, counters: &mut SolverCounters) -> Result<Self> {
        check_overflow(stream.len(), ratio)?;
        let up = (ratio.beta() - ratio.alpha()) as i64;
        let down = ratio.alpha() as i64;
        let mut pairs = Vec::with_capacity(stream.len() + 1);
        let mut delta = 0i64;
        pairs.push((0, 0));
        for (offset, bit) in stream.iter().enumerate() {
            delta += if bit { up } else { -down };
            pairs.push((delta, offset as u64 + 1));
        }
        // Positions inside a clump may come out in any order.
        let mut comparisons = 0u64;
        pairs.sort_unstable_by(|x: &DistancePair, y: &DistancePair| -> Ordering {
            comparisons += 1;
            x.0.cmp(&y.0)
        });
        counters.comparisons += comparisons;
        counters.peak_bytes = counters
            .peak_bytes
            .max((pairs.capacity() * std::mem::size_of::<DistancePair>()) as u64);
        Ok(Self { pairs })
    }

    pub fn as_slice(&self) -> &[DistancePair] {
        &self.pairs
    }
}

/// Scans window lengths `k * beta` from longest to shortest, jumping each
/// window forward by its one-count error; the first exact window wins.
pub fn skip_mismatch(stream: &Bitstream, ratio: Ratio) -> Result<SpanResult> {
    skip_mismatch_counted(stream, ratio, &mut SolverCounters::default())
}

pub fn skip_mismatch_counted(
    stream: &Bitstream,
    ratio: Ratio,
    counters: &mut SolverCounters,
) -> Result<SpanResult> {
    ratio.require_nontrivial()?;
    check_overflow(stream.len(), ratio)?;
    let n = stream.len();
    let beta = ratio.beta() as usize;
    if beta > n {
        return Ok(None);
    }
    let rank = RankTable::new(stream);
    counters.peak_bytes = counters.peak_bytes.max(rank.heap_bytes());
    for k in (1..=n / beta).rev() {
        let target = k as u64 * ratio.alpha();
        let (mut a, mut b) = (1usize, k * beta);
        while b <= n {
            counters.window_advances += 1;
            let ones = rank.rank(b) - rank.rank(a - 1);
            let error = target.abs_diff(ones) as usize;
            if error == 0 {
                return Ok(Some(Span::new(a, b)));
            }
            a += error;
            b += error;
        }
    }
    Ok(None)
}

/// Node storage of `std`'s B-tree for `len` pairs, assuming leaves of eleven
/// slots run about two thirds full.
fn btree_bytes(len: usize) -> u64 {
    const LEAF_BYTES: u64 = 8 + 2 + 2 + 11 * std::mem::size_of::<DistancePair>() as u64;
    (len as u64).div_ceil(7) * LEAF_BYTES
}

/// Single pass remembering the first position of every distance in an
/// ordered map; a repeated distance closes a span of density theta.
pub fn dist_map(stream: &Bitstream, ratio: Ratio) -> Result<SpanResult> {
    dist_map_counted(stream, ratio, &mut SolverCounters::default())
}

pub fn dist_map_counted(
    stream: &Bitstream,
    ratio: Ratio,
    counters: &mut SolverCounters,
) -> Result<SpanResult> {
    ratio.require_nontrivial()?;
    check_overflow(stream.len(), ratio)?;
    let up = (ratio.beta() - ratio.alpha()) as i64;
    let down = ratio.alpha() as i64;
    let mut first_seen: BTreeMap<i64, u64> = BTreeMap::new();
    first_seen.insert(0, 0);
    counters.map_operations += 1;
    let mut best: SpanResult = None;
    let mut best_len = 0u64;
    let mut delta = 0i64;
    for (offset, bit) in stream.iter().enumerate() {
        let i = offset as u64 + 1;
        delta += if bit { up } else { -down };
        counters.map_operations += 1;
        match first_seen.entry(delta) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                counters.map_operations += 1;
                slot.insert(i);
            }
            std::collections::btree_map::Entry::Occupied(seen) => {
                let start = *seen.get();
                if i - start > best_len {
                    best_len = i - start;
                    best = Some(Span::between(start as usize, i as usize));
                }
            }
        }
    }
    counters.peak_bytes = counters.peak_bytes.max(btree_bytes(first_seen.len()));
    Ok(best)
}

/// Sorts all `(d_i, i)` pairs by distance and scans clumps of equal distance.
///
/// For the bounded problem the smallest position is carried across clumps,
/// so it becomes the smallest position among all distances seen so far.
pub fn dist_sort(stream: &Bitstream, ratio: Ratio, problem: Problem) -> Result<SpanResult> {
    dist_sort_counted(stream, ratio, problem, &mut SolverCounters::default())
}

pub fn dist_sort_counted(
    stream: &Bitstream,
    ratio: Ratio,
    problem: Problem,
    counters: &mut SolverCounters,
) -> Result<SpanResult> {
    ratio.require_nontrivial()?;
    let sorted = SortedPairs::build(stream, ratio, counters)?;
    let pairs = sorted.as_slice();
    let mut best: SpanResult = None;
    let mut best_len = 0u64;
    let mut p_min = pairs[0].1;
    let mut i = 0;
    while i < pairs.len() {
        let (distance, position) = pairs[i];
        if problem == Problem::Fixed || position < p_min {
            p_min = position;
        }
        let mut p_max = position;
        i += 1;
        counters.positions_scanned += 1;
        while i < pairs.len() && pairs[i].0 == distance {
            let position = pairs[i].1;
            p_min = p_min.min(position);
            p_max = p_max.max(position);
            i += 1;
            counters.positions_scanned += 1;
        }
        if p_max > p_min && p_max - p_min > best_len {
            best_len = p_max - p_min;
            best = Some(Span::between(p_min as usize, p_max as usize));
        }
    }
    Ok(best)
}
