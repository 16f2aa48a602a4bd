use std::ops::AddAssign;

/// Loop counters for the sweep structures.
///
/// `init` counts pointer merges during initialization; the other fields
/// count iterations of the query loops.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SweepCounters {
    pub init: u64,
    /// Cursor steps that narrow the candidate range (`ℓ` or `u` descent).
    pub cursor: u64,
    pub bitonic: u64,
    /// Elements examined while looking up a new bridge.
    pub scan: u64,
}

impl SweepCounters {
    /// Iterations of the query-time loops.
    pub fn query_iterations(&self) -> u64 {
        self.cursor + self.bitonic + self.scan
    }
}

impl AddAssign for SweepCounters {
    fn add_assign(&mut self, o: Self) {
        self.init += o.init;
        self.cursor += o.cursor;
        self.bitonic += o.bitonic;
        self.scan += o.scan;
    }
}
