//! Debug-mode verification of the compressed matrix against a dense shadow.

use std::fmt;

use super::lattice::{Lattice, LatticeCoord};
use super::structure::{Column, MappingMatrix};
use super::MatrixWalk;
use crate::bits::Bitstream;
use crate::error::Result;
use crate::prefix::check_overflow;
use crate::ratio::Ratio;
use crate::span::SpanResult;

const EMPTY: u64 = u64::MAX;

/// Uncompressed record of every first visit, one growable window per row.
#[derive(Clone, Debug)]
pub struct ShadowMatrix {
    rows: Vec<ShadowRow>,
}

#[derive(Clone, Debug, Default)]
struct ShadowRow {
    /// Column of `values[0]`.
    base: i64,
    values: Vec<u64>,
}

impl ShadowRow {
    fn get(&self, column: i64) -> Option<u64> {
        let k = column.checked_sub(self.base)?;
        let v = *self.values.get(usize::try_from(k).ok()?)?;
        (v != EMPTY).then_some(v)
    }

    fn slot(&mut self, column: i64) -> &mut u64 {
        if self.values.is_empty() {
            self.base = column;
        }
        if column < self.base {
            let grow = (self.base - column) as usize;
            let grow = grow.max(self.values.len() / 2);
            self.values.splice(0..0, std::iter::repeat_n(EMPTY, grow));
            self.base -= grow as i64;
        }
        let k = (column - self.base) as usize;
        if k >= self.values.len() {
            let len = (k + 1).max(self.values.len() * 3 / 2);
            self.values.resize(len, EMPTY);
        }
        &mut self.values[k]
    }

    fn visited(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != EMPTY)
            .map(move |(k, &v)| (self.base + k as i64, v))
    }
}

impl ShadowMatrix {
    /// A shadow holding only the origin's value 0.
    pub fn new(rows: u64) -> Self {
        let mut shadow = Self {
            rows: vec![ShadowRow::default(); rows as usize],
        };
        shadow.visit(LatticeCoord::ORIGIN, 0);
        shadow
    }

    pub fn get(&self, coord: LatticeCoord) -> Option<u64> {
        self.rows[coord.row as usize].get(coord.column)
    }

    /// Stores `position` if the cell is unvisited; returns the prior value.
    pub fn visit(&mut self, coord: LatticeCoord, position: u64) -> Option<u64> {
        let slot = self.rows[coord.row as usize].slot(coord.column);
        if *slot == EMPTY {
            *slot = position;
            None
        } else {
            Some(*slot)
        }
    }

    pub fn visited_in_row(&self, row: u64) -> usize {
        self.rows[row as usize].visited().count()
    }
}

/// First disagreement found while checking a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HealthError {
    /// Stream position whose step exposed the problem; 0 before any step.
    pub position: u64,
    pub message: String,
}

impl fmt::Display for HealthError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "after position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for HealthError {}

/// Checks that explicit records and run arithmetic describe exactly the
/// visited cells of `shadow` with their first-visit values.
pub fn check_values(matrix: &MappingMatrix, shadow: &ShadowMatrix) -> std::result::Result<(), String> {
    for row in 0..matrix.rows() {
        let mut want = shadow.rows[row as usize].visited();
        let mut expect = |column: i64, value: u64| -> std::result::Result<(), String> {
            match want.next() {
                Some(cell) if cell == (column, value) => Ok(()),
                Some((c, v)) if c < column => Err(format!("({row},{c}) = {v} is not represented")),
                Some((c, v)) if c == column => {
                    Err(format!("({row},{c}) reads {value}, first visit was {v}"))
                }
                _ => Err(format!("({row},{column}) reads {value} but was never visited")),
            }
        };
        let mut records = matrix.row_records(row).peekable();
        while let Some(left) = records.next() {
            let Some(right) = records.peek() else {
                break;
            };
            let base = match left.column {
                Column::Finite(c) => {
                    expect(c, left.cell_value.ok_or("record without value")?)?;
                    c
                }
                _ => continue,
            };
            let Some(rho) = left.run_start_value else {
                continue;
            };
            let end = match right.column {
                Column::Finite(c) => c,
                _ => return Err(format!("({row},{base}) run {rho} runs to +inf")),
            };
            for column in base + 1..end {
                let value = rho + (column - base);
                if value < 0 {
                    return Err(format!("({row},{column}) reads negative value {value}"));
                }
                expect(column, value as u64)?;
            }
        }
        if let Some((c, v)) = want.next() {
            return Err(format!("({row},{c}) = {v} is not represented"));
        }
    }
    Ok(())
}

/// Full structure and value check of `matrix` against `shadow`.
pub fn check_health(matrix: &MappingMatrix, shadow: &ShadowMatrix) -> std::result::Result<(), String> {
    matrix.check_structure()?;
    check_values(matrix, shadow)
}

/// Runs the matrix solver while checking, after every step, that the step's
/// answer and the cursor match the shadow, and that the whole structure is
/// healthy. Quadratic in the worst case; meant for tests.
pub fn dist_matrix_checked(
    stream: &Bitstream,
    ratio: Ratio,
) -> Result<std::result::Result<SpanResult, HealthError>> {
    check_overflow(stream.len(), ratio)?;
    let lattice = Lattice::new(ratio)?;
    let mut walk = MatrixWalk::new(ratio)?;
    let mut shadow = ShadowMatrix::new(lattice.rows());
    let fail = |position: u64, message: String| Ok(Err(HealthError { position, message }));
    if let Err(message) = check_health(walk.matrix(), &shadow) {
        return fail(0, message);
    }
    let up = (ratio.beta() - ratio.alpha()) as i64;
    let down = ratio.alpha() as i64;
    let mut distance = 0i64;
    for (offset, bit) in stream.iter().enumerate() {
        let position = offset as u64 + 1;
        distance += if bit { up } else { -down };
        let coord = lattice.coords(distance);
        let want = shadow.visit(coord, position);
        let got = walk.push(bit);
        if got != want {
            return fail(position, format!("step returned {got:?}, shadow has {want:?}"));
        }
        if walk.matrix().cursor_coord() != coord {
            return fail(
                position,
                format!("cursor at {:?}, distance {distance} is at {coord:?}", walk.matrix().cursor_coord()),
            );
        }
        if let Err(message) = check_health(walk.matrix(), &shadow) {
            return fail(position, message);
        }
    }
    Ok(Ok(walk.best()))
}
