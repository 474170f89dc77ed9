//! Linear bounded-density solver over minimal and maximal positions.
//!
//! An optimal span `x_a..x_b` always has `a - 1` at a prefix minimum of the
//! distance sequence and `b` at a suffix maximum, and both lists are sorted
//! by strictly decreasing distance. One monotone pointer pairs them up.

use crate::bits::Bitstream;
use crate::counters::SolverCounters;
use crate::error::Result;
use crate::prefix::DistanceSeq;
use crate::ratio::Ratio;
use crate::span::{Span, SpanResult};

/// Prefix minima and suffix maxima of a distance sequence, each in
/// increasing position order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalPositions {
    pub minimal: Vec<usize>,
    pub maximal: Vec<usize>,
}

impl ExtremalPositions {
    pub fn new(d: &DistanceSeq) -> Self {
        Self {
            minimal: minimal_positions(d),
            maximal: maximal_positions(d),
        }
    }
}

/// Positions `k` with `d_i > d_k` for every `i < k`. Always starts with 0.
pub fn minimal_positions(d: &DistanceSeq) -> Vec<usize> {
    let d = d.as_slice();
    let mut out = vec![0];
    let mut lowest = d[0];
    for (k, &value) in d.iter().enumerate().skip(1) {
        if value < lowest {
            lowest = value;
            out.push(k);
        }
    }
    out
}

/// Positions `k` with `d_i < d_k` for every `i > k`. Always ends with `n`.
pub fn maximal_positions(d: &DistanceSeq) -> Vec<usize> {
    let d = d.as_slice();
    let n = d.len() - 1;
    let mut out = vec![n];
    let mut highest = d[n];
    for k in (0..n).rev() {
        if d[k] > highest {
            highest = d[k];
            out.push(k);
        }
    }
    out.reverse();
    out
}

pub fn position_sweep(stream: &Bitstream, ratio: Ratio) -> Result<SpanResult> {
    position_sweep_counted(stream, ratio, &mut SolverCounters::default())
}

pub fn position_sweep_counted(
    stream: &Bitstream,
    ratio: Ratio,
    counters: &mut SolverCounters,
) -> Result<SpanResult> {
    ratio.require_nontrivial()?;
    let d = DistanceSeq::new(stream, ratio)?;
    let extremal = ExtremalPositions::new(&d);
    counters.positions_scanned += 2 * d.as_slice().len() as u64;
    counters.peak_bytes = counters.peak_bytes.max(
        d.heap_bytes()
            + ((extremal.minimal.capacity() + extremal.maximal.capacity())
                * std::mem::size_of::<usize>()) as u64,
    );
    Ok(sweep(&d, &extremal, counters).0)
}

/// Pairs each minimal position with the furthest maximal position whose
/// distance is not smaller. Also returns the final pointer trace, one entry
/// per minimal position.
fn sweep(
    d: &DistanceSeq,
    extremal: &ExtremalPositions,
    counters: &mut SolverCounters,
) -> (SpanResult, Vec<usize>) {
    let (minimal, maximal) = (&extremal.minimal, &extremal.maximal);
    let mut best: SpanResult = None;
    let mut best_len = 0usize;
    let mut j = 0usize;
    let mut trace = Vec::with_capacity(minimal.len());
    for &a in minimal {
        while j + 1 < maximal.len() && d.get(a) <= d.get(maximal[j + 1]) {
            counters.comparisons += 1;
            j += 1;
        }
        counters.comparisons += 1;
        trace.push(j);
        let b = maximal[j];
        if b > a && b - a > best_len {
            best_len = b - a;
            best = Some(Span::between(a, b));
        }
    }
    (best, trace)
}
