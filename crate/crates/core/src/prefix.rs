//! Prefix tables over a bitstream: one-counts and the distance sequence.

use crate::bits::Bitstream;
use crate::error::{DensityError, Result};
use crate::ratio::Ratio;

/// Largest admissible value of `n * beta`.
pub const ARITHMETIC_BOUND: u128 = 1 << 62;

/// Rejects inputs where `n * beta > 2^62`.
///
/// Every distance satisfies `|d_i| <= n * beta`, as does every product
/// `beta * ones` and `alpha * length`, so this keeps all solver arithmetic
/// inside `i64`.
pub fn check_overflow(n: usize, ratio: Ratio) -> Result<()> {
    if n as u128 * ratio.beta() as u128 > ARITHMETIC_BOUND {
        Err(DensityError::Overflow {
            n,
            beta: ratio.beta(),
        })
    } else {
        Ok(())
    }
}

/// `rank[k]` is the number of ones in `x_1..x_k`, for `0 <= k <= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTable {
    rank: Vec<u64>,
}

impl RankTable {
    pub fn new(stream: &Bitstream) -> Self {
        let mut rank = Vec::with_capacity(stream.len() + 1);
        let mut ones = 0u64;
        rank.push(0);
        for bit in stream {
            ones += u64::from(bit);
            rank.push(ones);
        }
        Self { rank }
    }

    /// Length of the underlying stream.
    pub fn n(&self) -> usize {
        self.rank.len() - 1
    }

    #[inline]
    pub fn rank(&self, k: usize) -> u64 {
        self.rank[k]
    }

    /// Number of ones in `x_a..x_b`; requires `1 <= a <= b <= n`.
    pub fn ones_in_range(&self, a: usize, b: usize) -> Result<u64> {
        if a == 0 || a > b || b > self.n() {
            return Err(DensityError::IndexOutOfRange {
                start: a,
                end: b,
                len: self.n(),
            });
        }
        Ok(self.rank[b] - self.rank[a - 1])
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.rank
    }

    pub(crate) fn heap_bytes(&self) -> u64 {
        (self.rank.capacity() * std::mem::size_of::<u64>()) as u64
    }
}

pub fn rank_table(stream: &Bitstream) -> RankTable {
    RankTable::new(stream)
}

/// `d_i = beta * rank[i] - alpha * i`, built incrementally: each one adds
/// `beta - alpha`, each zero subtracts `alpha`.
///
/// `d_{a-1} == d_b` exactly when `x_a..x_b` has density `alpha / beta`, and
/// `d_{a-1} <= d_b` exactly when its density is at least that.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceSeq {
    d: Vec<i64>,
}

impl DistanceSeq {
    pub fn new(stream: &Bitstream, ratio: Ratio) -> Result<Self> {
        check_overflow(stream.len(), ratio)?;
        let up = (ratio.beta() - ratio.alpha()) as i64;
        let down = ratio.alpha() as i64;
        let mut d = Vec::with_capacity(stream.len() + 1);
        let mut delta = 0i64;
        d.push(0);
        for bit in stream {
            delta += if bit { up } else { -down };
            d.push(delta);
        }
        Ok(Self { d })
    }

    pub fn n(&self) -> usize {
        self.d.len() - 1
    }

    #[inline]
    pub fn get(&self, i: usize) -> i64 {
        self.d[i]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.d
    }

    pub(crate) fn heap_bytes(&self) -> u64 {
        (self.d.capacity() * std::mem::size_of::<i64>()) as u64
    }
}

pub fn distance_sequence(stream: &Bitstream, ratio: Ratio) -> Result<DistanceSeq> {
    DistanceSeq::new(stream, ratio)
}
