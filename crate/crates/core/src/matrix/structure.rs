//! Compressed sparse storage for the mapping matrix.
//!
//! Each row is a doubly linked list of explicit cell records bounded by
//! `-inf` and `+inf` sentinels. A record at column `c` holds the first-visit
//! value `M[r][c]` and the run value `M[r][c+1] - 1`; every cell strictly
//! between two explicit records is implicit and, when the run value `rho` of
//! the left record is present, holds `rho + (column - c)`.
//!
//! Records that were stepped down from carry a vertical link to the cell
//! below and sit on the row's secondary chain, which links each vertical
//! carrier to the next one on its right. Sentinels are permanent carriers.
//!
//! Explicit records are kept for the origin, the cursor, and cells where the
//! walk entered or left a row by a zero bit. Any other record is folded into
//! its left neighbour's run as soon as the cursor moves off it.

use std::fmt::{self, Write as _};
use std::mem::size_of;

use super::lattice::{Lattice, LatticeCoord};
use crate::error::Result;
use crate::ratio::Ratio;

const NIL: u32 = u32::MAX;
const NO_VALUE: i64 = i64::MIN;
const NEG_INF: i64 = i64::MIN;
const POS_INF: i64 = i64::MAX;

/// Stable index of a record in the matrix pool.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellHandle(u32);

impl CellHandle {
    fn from_raw(raw: u32) -> Option<Self> {
        (raw != NIL).then_some(CellHandle(raw))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Column of a record; sentinels sit at the infinities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Column {
    NegInfinity,
    Finite(i64),
    PosInfinity,
}

impl Column {
    fn from_raw(raw: i64) -> Self {
        match raw {
            NEG_INF => Column::NegInfinity,
            POS_INF => Column::PosInfinity,
            c => Column::Finite(c),
        }
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Column::Finite(c) => Some(c),
            _ => None,
        }
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Column::NegInfinity => f.write_str("-inf"),
            Column::Finite(c) => write!(f, "{c}"),
            Column::PosInfinity => f.write_str("+inf"),
        }
    }
}

#[derive(Clone, Debug)]
struct Cell {
    column: i64,
    value: i64,
    run_start: i64,
    prev: u32,
    next: u32,
    vertical: u32,
    secondary: u32,
    /// Origin, sentinel, row entry or row exit: never folded away.
    pinned: bool,
}

impl Cell {
    fn new(column: i64, value: i64, run_start: i64) -> Self {
        Self {
            column,
            value,
            run_start,
            prev: NIL,
            next: NIL,
            vertical: NIL,
            secondary: NIL,
            pinned: false,
        }
    }

    fn is_sentinel(&self) -> bool {
        self.column == NEG_INF || self.column == POS_INF
    }
}

/// Read-only view of one explicit record.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellRecord {
    pub handle: CellHandle,
    pub row: u64,
    pub column: Column,
    /// `M[r][c]`, absent for sentinels.
    pub cell_value: Option<u64>,
    /// `M[r][c+1] - 1`, absent when the cell to the right is empty.
    pub run_start_value: Option<i64>,
    pub prev: Option<CellHandle>,
    pub next: Option<CellHandle>,
    pub vertical: Option<CellHandle>,
    pub secondary: Option<CellHandle>,
    pub pinned: bool,
}

impl CellRecord {
    pub fn is_sentinel(&self) -> bool {
        !matches!(self.column, Column::Finite(_))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MatrixStats {
    pub right_steps: u64,
    pub down_steps: u64,
    /// Links followed while stepping down, including a direct vertical hop.
    pub walk_links_followed: u64,
    /// Records created, including sentinels and reused slots.
    pub cells_allocated: u64,
    /// Bytes reserved by the record pool at its largest.
    pub peak_bytes: u64,
}

pub struct MappingMatrix {
    lattice: Lattice,
    rows: usize,
    alpha: i64,
    cells: Vec<Cell>,
    free: Vec<u32>,
    heads: Vec<u32>,
    tails: Vec<u32>,
    origin: u32,
    cursor: u32,
    cursor_row: usize,
    stats: MatrixStats,
}

impl MappingMatrix {
    /// An empty matrix holding only `M[0][0] = 0`, with the cursor there.
    /// Requires `0 < alpha < beta`.
    pub fn new(ratio: Ratio) -> Result<Self> {
        Self::with_capacity(ratio, 0)
    }

    /// As [`MappingMatrix::new`], reserving room for about `records` cells.
    pub fn with_capacity(ratio: Ratio, records: usize) -> Result<Self> {
        let lattice = Lattice::new(ratio)?;
        let rows = lattice.rows() as usize;
        let mut matrix = Self {
            lattice,
            rows,
            alpha: lattice.alpha(),
            cells: Vec::with_capacity(2 * rows + 1 + records),
            free: Vec::new(),
            heads: Vec::with_capacity(rows),
            tails: Vec::with_capacity(rows),
            origin: NIL,
            cursor: NIL,
            cursor_row: 0,
            stats: MatrixStats::default(),
        };
        for _ in 0..rows {
            let head = matrix.alloc(Cell::new(NEG_INF, NO_VALUE, NO_VALUE));
            let tail = matrix.alloc(Cell::new(POS_INF, NO_VALUE, NO_VALUE));
            matrix.heads.push(head);
            matrix.tails.push(tail);
            let (h, t) = (head as usize, tail as usize);
            matrix.cells[h].next = tail;
            matrix.cells[t].prev = head;
            matrix.cells[h].secondary = tail;
            matrix.cells[h].pinned = true;
            matrix.cells[t].pinned = true;
        }
        for r in 0..rows {
            let below = (r + 1) % rows;
            let (head, tail) = (matrix.heads[r] as usize, matrix.tails[r] as usize);
            matrix.cells[head].vertical = matrix.heads[below];
            matrix.cells[tail].vertical = matrix.tails[below];
        }
        let origin = matrix.alloc(Cell::new(0, 0, NO_VALUE));
        matrix.cells[origin as usize].pinned = true;
        matrix.link_after(matrix.heads[0], origin);
        matrix.origin = origin;
        matrix.cursor = origin;
        matrix.note_capacity();
        Ok(matrix)
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn rows(&self) -> u64 {
        self.rows as u64
    }

    pub fn stats(&self) -> MatrixStats {
        self.stats
    }

    pub fn cursor(&self) -> CellHandle {
        CellHandle(self.cursor)
    }

    pub fn origin(&self) -> CellHandle {
        CellHandle(self.origin)
    }

    pub fn cursor_coord(&self) -> LatticeCoord {
        LatticeCoord::new(self.cursor_row as u64, self.cells[self.cursor as usize].column)
    }

    /// Number of live records, sentinels included.
    pub fn live_records(&self) -> usize {
        self.cells.len() - self.free.len()
    }

    fn alloc(&mut self, cell: Cell) -> u32 {
        self.stats.cells_allocated += 1;
        match self.free.pop() {
            Some(slot) => {
                self.cells[slot as usize] = cell;
                slot
            }
            None => {
                self.cells.push(cell);
                self.note_capacity();
                (self.cells.len() - 1) as u32
            }
        }
    }

    fn note_capacity(&mut self) {
        let bytes = (self.cells.capacity() * size_of::<Cell>()
            + self.free.capacity() * size_of::<u32>()
            + (self.heads.capacity() + self.tails.capacity()) * size_of::<u32>())
            as u64;
        self.stats.peak_bytes = self.stats.peak_bytes.max(bytes);
    }

    fn link_after(&mut self, left: u32, cell: u32) {
        let right = self.cells[left as usize].next;
        self.cells[cell as usize].prev = left;
        self.cells[cell as usize].next = right;
        self.cells[left as usize].next = cell;
        self.cells[right as usize].prev = cell;
    }

    /// `M[r][c+1] - 1` for a record placed at `column` whose right neighbour
    /// is `next`, given the run value the gap would otherwise carry.
    #[inline]
    fn run_before(&self, column: i64, next: u32, gap_run: i64) -> i64 {
        let next = &self.cells[next as usize];
        if next.column == column + 1 {
            next.value - 1
        } else {
            gap_run
        }
    }

    /// Folds an unpinned record into its left neighbour's run when that run
    /// already predicts every value the record describes.
    fn try_release(&mut self, cell: u32) {
        let x = &self.cells[cell as usize];
        if x.pinned {
            return;
        }
        let (left, right) = (x.prev, x.next);
        let l = &self.cells[left as usize];
        let predicted = l.run_start != NO_VALUE && l.run_start + (x.column - l.column) == x.value;
        let continues =
            self.cells[right as usize].column == x.column + 1 || x.run_start == x.value;
        if predicted && continues {
            self.cells[left as usize].next = right;
            self.cells[right as usize].prev = left;
            self.free.push(cell);
        }
    }

    /// Moves the cursor one column right for position `position`.
    ///
    /// Returns the destination's first-visit value if it had one; otherwise
    /// records `position` there and returns `None`.
    pub fn step_right(&mut self, position: u64) -> Option<u64> {
        self.stats.right_steps += 1;
        let from = self.cursor;
        let (column, run, next) = {
            let x = &self.cells[from as usize];
            (x.column, x.run_start, x.next)
        };
        let dest = column + 1;
        let prior = if self.cells[next as usize].column == dest {
            self.cursor = next;
            Some(self.cells[next as usize].value as u64)
        } else if run != NO_VALUE {
            let value = run + 1;
            let run_after = self.run_before(dest, next, value);
            let cell = self.alloc(Cell::new(dest, value, run_after));
            self.link_after(from, cell);
            self.cursor = cell;
            Some(value as u64)
        } else {
            let value = position as i64;
            self.cells[from as usize].run_start = value - 1;
            let run_after = self.run_before(dest, next, NO_VALUE);
            let cell = self.alloc(Cell::new(dest, value, run_after));
            self.link_after(from, cell);
            self.cursor = cell;
            None
        };
        self.try_release(from);
        prior
    }

    /// Moves the cursor one row down (wrapping from the bottom row to the top
    /// with a shift of `alpha` columns left) for position `position`.
    ///
    /// Without an existing vertical link, walks back to the nearest vertical
    /// carrier on the left, jumps along the secondary chain to the nearest
    /// carrier on the right, follows it down and walks back to the
    /// destination column. The destination is then linked below the source
    /// and the source is spliced into the secondary chain.
    pub fn step_down(&mut self, position: u64) -> Option<u64> {
        self.stats.down_steps += 1;
        let from = self.cursor;
        let wraps = self.cursor_row + 1 == self.rows;
        let dest_row = if wraps { 0 } else { self.cursor_row + 1 };
        let existing = self.cells[from as usize].vertical;
        if existing != NIL {
            self.stats.walk_links_followed += 1;
            self.cursor = existing;
            self.cursor_row = dest_row;
            return Some(self.cells[existing as usize].value as u64);
        }

        let column = self.cells[from as usize].column;
        let dest = if wraps { column - self.alpha } else { column };
        let mut links = 0u64;

        let mut left_carrier = self.cells[from as usize].prev;
        links += 1;
        while self.cells[left_carrier as usize].vertical == NIL {
            left_carrier = self.cells[left_carrier as usize].prev;
            links += 1;
        }
        let right_carrier = self.cells[left_carrier as usize].secondary;
        let mut probe = self.cells[right_carrier as usize].vertical;
        links += 2;
        while self.cells[probe as usize].column > dest {
            probe = self.cells[probe as usize].prev;
            links += 1;
        }
        self.stats.walk_links_followed += links;

        let (target, prior) = if self.cells[probe as usize].column == dest {
            (probe, Some(self.cells[probe as usize].value as u64))
        } else {
            let (p_column, p_run, next) = {
                let p = &self.cells[probe as usize];
                (p.column, p.run_start, p.next)
            };
            let (value, run_after, prior) = if p_run != NO_VALUE {
                let value = p_run + (dest - p_column);
                (value, self.run_before(dest, next, value), Some(value as u64))
            } else {
                let value = position as i64;
                if p_column == dest - 1 {
                    self.cells[probe as usize].run_start = value - 1;
                }
                (value, self.run_before(dest, next, NO_VALUE), None)
            };
            let cell = self.alloc(Cell::new(dest, value, run_after));
            self.link_after(probe, cell);
            (cell, prior)
        };

        self.cells[target as usize].pinned = true;
        let source = &mut self.cells[from as usize];
        source.vertical = target;
        source.pinned = true;
        source.secondary = right_carrier;
        self.cells[left_carrier as usize].secondary = from;

        self.cursor = target;
        self.cursor_row = dest_row;
        prior
    }

    /// Processes one bit at `position`: a one steps right, a zero steps down.
    #[inline]
    pub fn step(&mut self, bit: bool, position: u64) -> Option<u64> {
        if bit {
            self.step_right(position)
        } else {
            self.step_down(position)
        }
    }

    pub fn record(&self, handle: CellHandle) -> CellRecord {
        self.view(handle.0, self.row_of(handle.0))
    }

    fn row_of(&self, raw: u32) -> u64 {
        // Only used by debugging views: walk to the row's head sentinel.
        let mut h = raw;
        while self.cells[h as usize].column != NEG_INF {
            h = self.cells[h as usize].prev;
        }
        self.heads.iter().position(|&head| head == h).expect("head sentinel") as u64
    }

    fn view(&self, raw: u32, row: u64) -> CellRecord {
        let c = &self.cells[raw as usize];
        let opt = |v: i64| (v != NO_VALUE).then_some(v);
        CellRecord {
            handle: CellHandle(raw),
            row,
            column: Column::from_raw(c.column),
            cell_value: opt(c.value).map(|v| v as u64),
            run_start_value: opt(c.run_start),
            prev: CellHandle::from_raw(c.prev),
            next: CellHandle::from_raw(c.next),
            vertical: CellHandle::from_raw(c.vertical),
            secondary: CellHandle::from_raw(c.secondary),
            pinned: c.pinned,
        }
    }

    /// Records of one row from `-inf` to `+inf`, sentinels included.
    pub fn row_records(&self, row: u64) -> RowRecords<'_> {
        RowRecords {
            matrix: self,
            row,
            at: self.heads[row as usize],
        }
    }

    /// First-visit value of `(row, column)` reconstructed from the compressed
    /// rows. Linear in the row length.
    pub fn value_at(&self, coord: LatticeCoord) -> Option<u64> {
        let mut left = None;
        for rec in self.row_records(coord.row) {
            match rec.column {
                Column::Finite(c) if c == coord.column => return rec.cell_value,
                Column::Finite(c) if c > coord.column => break,
                Column::PosInfinity => break,
                _ => left = Some(rec),
            }
        }
        let left = left?;
        let base = left.column.finite()?;
        left.run_start_value
            .map(|rho| (rho + (coord.column - base)) as u64)
    }

    /// One line per explicit non-sentinel record, `row column value run`,
    /// with `-` for an absent value; rows in order, columns ascending.
    pub fn debug_dump(&self) -> String {
        let mut out = String::new();
        for row in 0..self.rows as u64 {
            for rec in self.row_records(row).filter(|r| !r.is_sentinel()) {
                let show = |v: Option<String>| v.unwrap_or_else(|| "-".to_owned());
                let _ = writeln!(
                    out,
                    "{} {} {} {}",
                    row,
                    rec.column,
                    show(rec.cell_value.map(|v| v.to_string())),
                    show(rec.run_start_value.map(|v| v.to_string())),
                );
            }
        }
        out
    }

    pub fn head(&self, row: u64) -> CellHandle {
        CellHandle(self.heads[row as usize])
    }

    pub fn tail(&self, row: u64) -> CellHandle {
        CellHandle(self.tails[row as usize])
    }

    /// Verifies every link and run invariant that can be checked without
    /// knowing which cells were visited. Linear in the number of records.
    ///
    /// Checked: row ordering and prev/next symmetry, every pool slot either
    /// live in exactly one row or free, sentinel shape, secondary chains equal
    /// to the vertical carriers, vertical targets one row down (or wrapped),
    /// pinning, the cursor, the origin, and `run = M[c+1] - 1` wherever the
    /// right neighbour is adjacent (`-` when it is `+inf`).
    pub fn check_structure(&self) -> std::result::Result<(), String> {
        let rows = self.rows;
        let mut row_of = vec![u32::MAX; self.cells.len()];
        for &slot in &self.free {
            if row_of[slot as usize] != u32::MAX {
                return Err(format!("slot {slot} freed twice"));
            }
            row_of[slot as usize] = u32::MAX - 1;
        }
        let mut carriers = Vec::new();
        for r in 0..rows {
            let (head, tail) = (self.heads[r], self.tails[r]);
            let h = &self.cells[head as usize];
            if h.column != NEG_INF || h.prev != NIL || h.value != NO_VALUE || h.run_start != NO_VALUE {
                return Err(format!("row {r}: malformed -inf sentinel"));
            }
            carriers.clear();
            let mut at = head;
            loop {
                if row_of[at as usize] != u32::MAX {
                    return Err(format!("row {r}: record {at} reached twice or freed"));
                }
                row_of[at as usize] = r as u32;
                let cell = &self.cells[at as usize];
                if cell.vertical != NIL {
                    carriers.push(at);
                }
                if at == tail {
                    break;
                }
                let next = cell.next;
                if next == NIL {
                    return Err(format!("row {r}: list ends before +inf"));
                }
                let right = &self.cells[next as usize];
                if right.prev != at {
                    return Err(format!("row {r}: prev of {next} is not {at}"));
                }
                if right.column <= cell.column {
                    return Err(format!(
                        "row {r}: columns {} then {} out of order",
                        Column::from_raw(cell.column),
                        Column::from_raw(right.column)
                    ));
                }
                if at != head {
                    if cell.value == NO_VALUE {
                        return Err(format!("row {r}: column {} has no value", cell.column));
                    }
                    let want = if right.column == POS_INF {
                        Some(NO_VALUE)
                    } else if right.column == cell.column + 1 {
                        Some(right.value - 1)
                    } else {
                        None
                    };
                    if let Some(want) = want.filter(|&w| w != cell.run_start) {
                        return Err(format!(
                            "row {r}: column {} run {} but right neighbour implies {}",
                            cell.column,
                            Column::from_raw(cell.run_start),
                            Column::from_raw(want)
                        ));
                    }
                    if !cell.pinned && at != self.cursor {
                        return Err(format!("row {r}: column {} left unpinned", cell.column));
                    }
                }
                at = next;
            }
            let t = &self.cells[tail as usize];
            if t.column != POS_INF || t.next != NIL || t.secondary != NIL || t.value != NO_VALUE {
                return Err(format!("row {r}: malformed +inf sentinel"));
            }
            let mut link = head;
            for (k, &carrier) in carriers.iter().enumerate() {
                if link != carrier {
                    return Err(format!("row {r}: secondary chain skips carrier #{k}"));
                }
                link = self.cells[carrier as usize].secondary;
            }
            if link != NIL {
                return Err(format!("row {r}: secondary chain has extra links"));
            }
        }
        if row_of.contains(&u32::MAX) {
            return Err("unreachable record in pool".to_owned());
        }
        for (slot, cell) in self.cells.iter().enumerate() {
            let r = row_of[slot];
            if cell.vertical == NIL || r == u32::MAX - 1 {
                continue;
            }
            let r = r as usize;
            let below = (r + 1) % rows;
            if row_of[cell.vertical as usize] != below as u32 {
                return Err(format!("row {r}: vertical link of {slot} leaves row {below}"));
            }
            let target = &self.cells[cell.vertical as usize];
            let want = if cell.is_sentinel() || r + 1 < rows {
                cell.column
            } else {
                cell.column - self.alpha
            };
            if target.column != want {
                return Err(format!(
                    "row {r}: column {} links down to column {}",
                    Column::from_raw(cell.column),
                    Column::from_raw(target.column)
                ));
            }
            if !cell.pinned || !target.pinned {
                return Err(format!("row {r}: unpinned end of a vertical link"));
            }
        }
        let cursor = &self.cells[self.cursor as usize];
        if row_of[self.cursor as usize] != self.cursor_row as u32 || cursor.is_sentinel() {
            return Err("cursor is not a live cell of its row".to_owned());
        }
        let origin = &self.cells[self.origin as usize];
        if row_of[self.origin as usize] != 0 || origin.column != 0 || origin.value != 0 || !origin.pinned {
            return Err("origin moved".to_owned());
        }
        Ok(())
    }
}

pub struct RowRecords<'a> {
    matrix: &'a MappingMatrix,
    row: u64,
    at: u32,
}

impl Iterator for RowRecords<'_> {
    type Item = CellRecord;

    fn next(&mut self) -> Option<CellRecord> {
        if self.at == NIL {
            return None;
        }
        let rec = self.matrix.view(self.at, self.row);
        self.at = self.matrix.cells[self.at as usize].next;
        Some(rec)
    }
}

pub fn ms_step_right(matrix: &mut MappingMatrix, position: u64) -> Option<u64> {
    matrix.step_right(position)
}

pub fn ms_step_down(matrix: &mut MappingMatrix, position: u64) -> Option<u64> {
    matrix.step_down(position)
}

pub fn matrix_stats(matrix: &MappingMatrix) -> MatrixStats {
    matrix.stats()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(a: u64, b: u64) -> Ratio {
        Ratio::new(a, b).unwrap()
    }

    fn row_lines(m: &MappingMatrix, row: u64) -> Vec<String> {
        let prefix = format!("{row} ");
        m.debug_dump()
            .lines()
            .filter(|l| l.starts_with(&prefix))
            .map(str::to_owned)
            .collect()
    }

    #[test]
    fn fresh_matrix() {
        let m = MappingMatrix::new(ratio(5, 8)).unwrap();
        assert_eq!(m.rows(), 3);
        assert_eq!(m.cursor_coord(), LatticeCoord::ORIGIN);
        assert_eq!(m.debug_dump(), "0 0 0 -\n");
        assert_eq!(m.live_records(), 7);
        let head = m.row_records(0).next().unwrap();
        assert_eq!(head.column, Column::NegInfinity);
        assert_eq!(head.cell_value, None);
        assert_eq!(head.run_start_value, None);
        assert!(MappingMatrix::new(Ratio::ONE).is_err());
    }

    #[test]
    fn step_right_into_fresh_cells_extends_one_run() {
        let mut m = MappingMatrix::new(ratio(1, 3)).unwrap();
        assert_eq!(ms_step_right(&mut m, 1), None);
        assert_eq!(ms_step_right(&mut m, 2), None);
        assert_eq!(ms_step_right(&mut m, 3), None);
        // origin pinned, cursor explicit, the middle folded away
        assert_eq!(row_lines(&m, 0), vec!["0 0 0 0", "0 3 3 -"]);
        assert_eq!(m.value_at(LatticeCoord::new(0, 2)), Some(2));
        assert_eq!(m.value_at(LatticeCoord::new(0, 4)), None);
        assert_eq!(m.value_at(LatticeCoord::new(0, -1)), None);
    }

    #[test]
    fn first_down_step_uses_sentinel_links() {
        let mut m = MappingMatrix::new(ratio(1, 3)).unwrap();
        assert_eq!(ms_step_down(&mut m, 1), None);
        assert_eq!(m.cursor_coord(), LatticeCoord::new(1, 0));
        // back to -inf, secondary to +inf, down, back to -inf below
        assert_eq!(m.stats().walk_links_followed, 4);
        let origin = m.record(m.origin());
        assert_eq!(origin.vertical, Some(m.cursor()));
        assert_eq!(origin.secondary, Some(m.tail(0)));
        let head = m.row_records(0).next().unwrap();
        assert_eq!(head.handle, m.head(0));
        assert_eq!(head.secondary, Some(m.origin()));
        m.check_structure().unwrap();
    }

    #[test]
    fn revisits_return_first_visit_value() {
        // 2/3: one row, a zero moves two columns left.
        let mut m = MappingMatrix::new(ratio(2, 3)).unwrap();
        assert_eq!(m.step(true, 1), None); // col 1
        assert_eq!(m.step(true, 2), None); // col 2
        assert_eq!(m.step(false, 3), Some(0)); // col 0
        assert_eq!(m.step(true, 4), Some(1)); // col 1, implicit
        assert_eq!(m.step(true, 5), Some(2)); // col 2
        assert_eq!(m.step(false, 6), Some(0)); // follows existing link
        assert_eq!(m.stats().right_steps + m.stats().down_steps, 6);
    }

    #[test]
    fn all_ones_never_walks() {
        let mut m = MappingMatrix::new(ratio(3, 7)).unwrap();
        for i in 1..=50 {
            assert_eq!(m.step_right(i), None);
        }
        let stats = m.stats();
        assert_eq!(stats.down_steps, 0);
        assert_eq!(stats.walk_links_followed, 0);
        assert_eq!(stats.right_steps, 50);
        assert_eq!(row_lines(&m, 0).len(), 2);
    }

    #[test]
    fn column_order() {
        assert!(Column::NegInfinity < Column::Finite(i64::MIN + 1));
        assert!(Column::Finite(-3) < Column::Finite(2));
        assert!(Column::Finite(i64::MAX - 1) < Column::PosInfinity);
    }
}
