//! Linear-time fixed-density solver over a compressed mapping matrix.
//!
//! Distances are laid out on the lattice of [`lattice`]; the walk over a
//! bitstream visits `coords(d_0), coords(d_1), ...` and the matrix remembers
//! the first position at which each cell was reached. Reaching a visited
//! cell again at position `i` with first visit `v` closes a span
//! `x_{v+1}..x_i` of density exactly theta.

pub mod health;
pub mod lattice;
pub mod structure;

use crate::bits::Bitstream;
use crate::error::Result;
use crate::prefix::check_overflow;
use crate::ratio::Ratio;
use crate::span::{Span, SpanResult};

pub use health::{dist_matrix_checked, HealthError, ShadowMatrix};
pub use lattice::{lattice_coords, lattice_step, lattice_value, Lattice, LatticeCoord};
pub use structure::{
    matrix_stats, ms_step_down, ms_step_right, CellHandle, CellRecord, Column, MappingMatrix,
    MatrixStats,
};

/// Incremental driver: feed bits one at a time, read the best span so far.
pub struct MatrixWalk {
    matrix: MappingMatrix,
    position: u64,
    best: SpanResult,
    best_len: u64,
}

impl MatrixWalk {
    pub fn new(ratio: Ratio) -> Result<Self> {
        Ok(Self {
            matrix: MappingMatrix::new(ratio)?,
            position: 0,
            best: None,
            best_len: 0,
        })
    }

    /// Processes the next bit; returns the first-visit value of the cell
    /// reached, if it had been visited before.
    #[inline]
    pub fn push(&mut self, bit: bool) -> Option<u64> {
        self.position += 1;
        let i = self.position;
        let prior = self.matrix.step(bit, i);
        if let Some(v) = prior {
            if i - v > self.best_len {
                self.best_len = i - v;
                self.best = Some(Span::between(v as usize, i as usize));
            }
        }
        prior
    }

    /// Bits processed so far.
    pub fn position(&self) -> u64 {
        self.position
    }

    pub fn best(&self) -> SpanResult {
        self.best
    }

    pub fn matrix(&self) -> &MappingMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> MappingMatrix {
        self.matrix
    }
}

/// Longest substring of density exactly theta, in amortised linear time.
/// Requires `0 < alpha < beta`.
pub fn dist_matrix(stream: &Bitstream, ratio: Ratio) -> Result<SpanResult> {
    Ok(dist_matrix_with_stats(stream, ratio)?.0)
}

pub fn dist_matrix_with_stats(stream: &Bitstream, ratio: Ratio) -> Result<(SpanResult, MatrixStats)> {
    check_overflow(stream.len(), ratio)?;
    let mut walk = MatrixWalk::new(ratio)?;
    for bit in stream {
        walk.push(bit);
    }
    Ok((walk.best(), walk.matrix().stats()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::DensityError;
    use crate::oracle::brute_fixed;
    use crate::span::{span_len, verify_span, Problem};
    use proptest::prelude::*;

    fn ratio(a: u64, b: u64) -> Ratio {
        Ratio::new(a, b).unwrap()
    }

    fn stream(s: &str) -> Bitstream {
        s.parse().unwrap()
    }

    /// Drives the matrix with chosen positions, mirroring every step in a
    /// shadow and checking health as it goes.
    struct Replay {
        matrix: MappingMatrix,
        shadow: ShadowMatrix,
        coord: LatticeCoord,
        scratch: u64,
    }

    impl Replay {
        fn new(r: Ratio) -> Self {
            let matrix = MappingMatrix::new(r).unwrap();
            let shadow = ShadowMatrix::new(matrix.rows());
            Self {
                matrix,
                shadow,
                coord: LatticeCoord::ORIGIN,
                scratch: 1000,
            }
        }

        fn step(&mut self, bit: bool, position: u64) -> Option<u64> {
            self.coord = self.matrix.lattice().step(self.coord, bit);
            let want = self.shadow.visit(self.coord, position);
            let got = self.matrix.step(bit, position);
            assert_eq!(got, want, "position {position} at {:?}", self.coord);
            assert_eq!(self.matrix.cursor_coord(), self.coord);
            health::check_health(&self.matrix, &self.shadow).unwrap();
            got
        }

        fn right(&mut self, position: u64) -> Option<u64> {
            self.step(true, position)
        }

        fn down(&mut self, position: u64) -> Option<u64> {
            self.step(false, position)
        }

        /// Routing steps whose positions do not matter.
        fn route(&mut self, downs: usize, rights: usize) {
            for _ in 0..downs {
                self.scratch += 1;
                self.step(false, self.scratch);
            }
            for _ in 0..rights {
                self.scratch += 1;
                self.step(true, self.scratch);
            }
        }

        fn row_dump(&self, row: u64) -> String {
            let prefix = format!("{row} ");
            self.matrix
                .debug_dump()
                .lines()
                .filter(|l| l.starts_with(&prefix))
                .map(|l| format!("{l}\n"))
                .collect()
        }
    }

    const ROW_EIGHT: &str = "\
8 -5 70 70
8 -2 30 30
8 1 10 10
8 3 12 78
8 7 50 82
8 9 84 -
";

    /// Ratio 13/23 gives ten rows and a wrap shift of 13 columns. Four paths
    /// cross row 8; the routes between them stay in the other rows.
    fn four_paths() -> Replay {
        let mut m = Replay::new(ratio(13, 23));
        m.route(7, 1);
        assert_eq!(m.coord, LatticeCoord::new(7, 1));
        // A
        assert_eq!(m.down(10), None);
        assert_eq!(m.right(11), None);
        assert_eq!(m.right(12), None);
        assert_eq!(m.down(13), None);
        // B
        m.route(8, 8);
        assert_eq!(m.coord, LatticeCoord::new(7, -2));
        assert_eq!(m.down(30), None);
        assert_eq!(m.right(31), None);
        assert_eq!(m.right(32), None);
        assert_eq!(m.right(33), Some(10));
        assert_eq!(m.down(34), None);
        // C
        m.route(8, 19);
        assert_eq!(m.coord, LatticeCoord::new(7, 7));
        assert_eq!(m.down(50), None);
        assert_eq!(m.down(51), None);
        // D
        m.route(8, 1);
        assert_eq!(m.coord, LatticeCoord::new(7, -5));
        assert_eq!(m.down(70), None);
        let mut returned = Vec::new();
        for position in 71..=84 {
            returned.push(m.right(position));
        }
        let revisits: Vec<_> = returned.iter().flatten().copied().collect();
        assert_eq!(revisits, vec![30, 31, 32, 10, 11, 12, 50]);
        assert_eq!(m.down(85), None);
        m
    }

    #[test]
    fn compression_golden_row() {
        let m = four_paths();
        assert_eq!(m.row_dump(8), ROW_EIGHT);
        assert_eq!(m.shadow.visited_in_row(8), 15);
    }

    #[test]
    fn later_path_reads_older_values() {
        let mut m = four_paths();
        m.route(8, 2);
        assert_eq!(m.coord, LatticeCoord::new(7, -2));
        let walked = m.matrix.stats().walk_links_followed;
        assert_eq!(m.down(90), Some(30));
        assert_eq!(m.matrix.stats().walk_links_followed, walked + 1);
        let reads: Vec<_> = (91..=99).map(|p| m.right(p)).collect();
        let want = [31, 32, 10, 11, 12, 79, 80, 81, 50].map(Some);
        assert_eq!(reads, want);
        assert_eq!(m.row_dump(8), ROW_EIGHT);
    }

    #[test]
    fn worked_examples() {
        let got = dist_matrix(&stream("010110101100"), ratio(3, 5)).unwrap();
        assert_eq!(span_len(&got), 10);
        assert_eq!(dist_matrix(&stream("10"), ratio(1, 2)).unwrap(), Some(Span::new(1, 2)));
        let got = dist_matrix(&stream("1001101001011"), ratio(3, 5)).unwrap();
        assert_eq!(got, Some(Span::new(4, 13)));
        assert_eq!(dist_matrix(&stream(""), ratio(3, 5)).unwrap(), None);
        assert!(matches!(
            dist_matrix(&stream("0101"), Ratio::ZERO),
            Err(DensityError::TrivialRatio { .. })
        ));
    }

    #[test]
    fn stats_count_every_step() {
        let s = stream("0110100110010111000101");
        let (_, stats) = dist_matrix_with_stats(&s, ratio(2, 7)).unwrap();
        assert_eq!(stats.right_steps + stats.down_steps, s.len() as u64);
        let ones = Bitstream::from_bits(std::iter::repeat_n(true, 500));
        let (best, stats) = dist_matrix_with_stats(&ones, ratio(1, 3)).unwrap();
        assert_eq!(best, None);
        assert_eq!(stats.down_steps, 0);
        assert_eq!(stats.walk_links_followed, 0);
    }

    #[test]
    fn checked_run_on_single_row_lattice() {
        let bits = (0..400u32).map(|i| (i * 7 + i / 3) % 5 < 3);
        let s = Bitstream::from_bits(bits);
        for r in [ratio(1, 2), ratio(2, 3), ratio(4, 5)] {
            let checked = dist_matrix_checked(&s, r).unwrap().unwrap();
            assert_eq!(span_len(&checked), span_len(&brute_fixed(&s, r).unwrap()));
        }
    }

    fn any_ratio() -> impl Strategy<Value = Ratio> {
        (2u64..12, 0u64..100).prop_map(|(beta, seed)| ratio(1 + seed % (beta - 1), beta))
    }

    proptest! {
        #[test]
        fn matches_oracle_with_health_checks(
            bits in prop::collection::vec(any::<bool>(), 0..90),
            r in any_ratio(),
        ) {
            let s = Bitstream::from_bits(bits.iter().copied());
            let checked = dist_matrix_checked(&s, r).unwrap();
            let got = checked.map_err(|e| TestCaseError::fail(e.to_string()))?;
            let want = brute_fixed(&s, r).unwrap();
            prop_assert_eq!(span_len(&got), span_len(&want));
            prop_assert_eq!(got, dist_matrix(&s, r).unwrap());
            if let Some(span) = got {
                prop_assert!(verify_span(&s, r, span, Problem::Fixed));
            }
        }

        #[test]
        fn biased_streams_with_health_checks(
            seeds in prop::collection::vec(0u8..=255, 0..300),
            r in any_ratio(),
            bias in 1u8..255,
        ) {
            let s = Bitstream::from_bits(seeds.iter().map(|&x| x < bias));
            let got = dist_matrix_checked(&s, r).unwrap()
                .map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert_eq!(span_len(&got), span_len(&brute_fixed(&s, r).unwrap()));
        }
    }
}
