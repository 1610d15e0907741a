//! Autoequivalence groups of the local models and their actions on
//! 2-periodic structures.
//!
//! The edge model is `k[x^±1, u^±1]` with `deg u = 2`; its autoequivalences
//! up to isotopy are graded ring automorphisms times a shift bit. The vertex
//! model has `((k^×)^3 ⋊ S_3) × Z/2`. The pair of pants presentation records
//! the six scalars of its two exact triangles.

mod edge;
mod pants;
mod vertex;

pub use edge::{Discrete, EdgeAut, Monomial, TwoPerE};
pub use pants::PantsPresentation;
pub use vertex::{Permutation, TwoPerV, VertexAut};
