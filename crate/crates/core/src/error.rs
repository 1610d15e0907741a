use thiserror::Error;

use crate::graph::Violation;
use crate::toric::FanViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("invalid graph: {}", join(.0))]
    InvalidGraph(Vec<Violation>),
    #[error("NonOrientable: reversing flags cannot be gauged away (w1 != 0)")]
    NonOrientable,
    #[error("TwistMismatch: edge {edge} expects n = {expected}, transition has n = {found}")]
    TwistMismatch { edge: usize, expected: i64, found: i64 },
    #[error("transition on edge {edge} has eps = +1; discrete part must lie in the coset of diag(-1, 1)")]
    TransitionNotInCoset { edge: usize },
    #[error("transition on edge {edge} lacks the shift [1]")]
    MissingShift { edge: usize },
    #[error("malformed transition list: {0}")]
    MalformedTransitions(String),
    #[error("expected {expected} vertex charts, got {found}")]
    ChartCount { expected: usize, found: usize },
    #[error("diagrams are built on different graphs")]
    GraphMismatch,
    #[error("NegativeDefect: edge {edge} has n_e = {twist} < 0, no section with simple zeros exists")]
    NegativeDefect { edge: usize, twist: i64 },
    #[error("triangle constraint violated: scalar product over triangle {triangle} is {product}")]
    TriangleConstraintViolated { triangle: usize, product: String },
    #[error("composition closure did not saturate within {0} passes")]
    SaturationLimit(usize),
    #[error("invalid fan: {}", join(.0))]
    InvalidFan(Vec<FanViolation>),
    #[error("rays {0:?} do not span a wall of the fan")]
    NotAWall([usize; 2]),
    #[error("wall {wall:?} lies in the single cone {cone}; its curve is not compact")]
    BoundaryWall { wall: [usize; 2], cone: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
