//! Integer lattice with `beta - alpha` rows.
//!
//! Every integer `z` has unique coordinates `(row, column)` with
//! `0 <= row < beta - alpha` and `(beta - alpha) * column - alpha * row = z`.
//! Adding `beta - alpha` moves one column right; subtracting `alpha` moves one
//! row down, wrapping from the bottom row to the top with a shift of `alpha`
//! columns to the left.

use crate::error::Result;
use crate::ratio::Ratio;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeCoord {
    pub row: u64,
    pub column: i64,
}

impl LatticeCoord {
    pub const ORIGIN: LatticeCoord = LatticeCoord { row: 0, column: 0 };

    pub fn new(row: u64, column: i64) -> Self {
        Self { row, column }
    }
}

/// Precomputed lattice arithmetic for one ratio.
#[derive(Clone, Copy, Debug)]
pub struct Lattice {
    rows: i64,
    alpha: i64,
    /// `alpha^{-1} mod rows`.
    alpha_inverse: i64,
}

fn mod_inverse(value: i64, modulus: i64) -> i64 {
    let (mut old_r, mut r) = (value.rem_euclid(modulus) as i128, modulus as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert!(old_r == 1 || modulus == 1);
    old_s.rem_euclid(modulus as i128) as i64
}

impl Lattice {
    /// Requires `0 < alpha < beta`.
    pub fn new(ratio: Ratio) -> Result<Self> {
        ratio.require_nontrivial()?;
        let rows = (ratio.beta() - ratio.alpha()) as i64;
        let alpha = ratio.alpha() as i64;
        Ok(Self {
            rows,
            alpha,
            alpha_inverse: mod_inverse(alpha, rows),
        })
    }

    pub fn rows(&self) -> u64 {
        self.rows as u64
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    pub fn coords(&self, z: i64) -> LatticeCoord {
        // -alpha * row = z (mod rows)
        let row = ((-(z as i128)) * self.alpha_inverse as i128).rem_euclid(self.rows as i128);
        let column = (z as i128 + self.alpha as i128 * row) / self.rows as i128;
        LatticeCoord {
            row: row as u64,
            column: column as i64,
        }
    }

    pub fn value(&self, coord: LatticeCoord) -> i64 {
        debug_assert!((coord.row as i64) < self.rows);
        self.rows * coord.column - self.alpha * coord.row as i64
    }

    pub fn step(&self, coord: LatticeCoord, bit: bool) -> LatticeCoord {
        if bit {
            LatticeCoord::new(coord.row, coord.column + 1)
        } else if (coord.row as i64) < self.rows - 1 {
            LatticeCoord::new(coord.row + 1, coord.column)
        } else {
            LatticeCoord::new(0, coord.column - self.alpha)
        }
    }
}

pub fn lattice_coords(z: i64, ratio: Ratio) -> Result<LatticeCoord> {
    Ok(Lattice::new(ratio)?.coords(z))
}

pub fn lattice_value(coord: LatticeCoord, ratio: Ratio) -> i64 {
    let rows = (ratio.beta() - ratio.alpha()) as i64;
    rows * coord.column - ratio.alpha() as i64 * coord.row as i64
}

pub fn lattice_step(coord: LatticeCoord, bit: bool, ratio: Ratio) -> Result<LatticeCoord> {
    Ok(Lattice::new(ratio)?.step(coord, bit))
}
