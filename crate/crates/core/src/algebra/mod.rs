//! Exact scalars and integer linear algebra.

mod cycles;
mod matrix;
mod rational;
mod snf;

pub use cycles::{cycle_basis, Cycle};
pub use matrix::IntMatrix;
pub use rational::{NonzeroRational, Rational};
pub use snf::{cokernel, snf, AbelianGroup, SmithForm};
