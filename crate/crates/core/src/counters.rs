/// Operation counts collected by the solvers. Each field only grows during a run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolverCounters {
    /// Key comparisons: span tests in the oracle, sort comparisons in the
    /// sorting solver, distance tests in the position sweep.
    pub comparisons: u64,
    /// Lookups plus insertions against the ordered map.
    pub map_operations: u64,
    /// Positions of the distance sequence (or candidate windows) visited.
    pub positions_scanned: u64,
    /// Windows examined by the skipping scan, counting each forward jump.
    pub window_advances: u64,
    /// Largest number of heap bytes held by the solver's working structures.
    pub peak_bytes: u64,
}
