//! Exact invariants of normal-crossings surfaces whose singular locus is a
//! trivalent graph of rational curves.
//!
//! The crate works with the combinatorial shadow of such a surface `X`:
//!
//! * [`graph`]: the decorated trivalent ribbon graph `G(X)`, its index
//!   categories, the dual pants surface and the orientation class `w1`.
//! * [`local`]: autoequivalence groups of the vertex and edge local models and
//!   their actions on 2-periodic structures.
//! * [`descent`]: the descent diagram over `G(X)`, gauge action, Picard
//!   invariants of the twisting line bundle and the 2-periodicity test.
//! * [`toric`]: fans of smooth toric threefolds, wall self-intersections,
//!   defects and the tetrahedral quartic-mirror example.
//! * [`topology`]: first homology of the twisted graph manifold, the Dehn
//!   twist record and pencil localization to a nodal curve.
//!
//! All arithmetic is exact ([`algebra`]).

pub mod algebra;
pub mod descent;
pub mod error;
pub mod examples;
pub mod graph;
pub mod local;
pub mod report;
pub mod toric;
pub mod topology;

pub use error::{Error, Result};
