//! Maximum-density segment search.
//!
//! Given a sequence of `(value, weight)` items and width bounds `[L, U]`,
//! find the contiguous segment whose total value divided by total width is
//! largest among all segments with `L <= width <= U`.
//!
//! All arithmetic is exact: inputs are fixed-point integers and densities
//! are compared by cross-multiplication, so ties are decided the same way on
//! every platform.
//!
//! The entry point is [`solve`]. The individual algorithms and the sweep
//! structures they are built from are exposed for testing and benchmarking.

pub mod bio;
pub mod bounds;
mod counters;
mod error;
pub mod fixed;
pub mod oracle;
pub mod sequence;
pub mod solvers;
pub mod sweep_left;
pub mod sweep_right;

pub use bounds::{compute_bounds, FeasibilityBounds};
pub use counters::SweepCounters;
pub use error::{Error, Result};
pub use fixed::Decimal;
pub use sequence::{DensityValue, Segment, WeightedItem, WeightedSequence};
pub use solvers::{solve, Algorithm, Solution, SolveRequest, SolveStats};
pub use sweep_left::MinWidthSweep;
pub use sweep_right::MaxWidthSweep;
