//! The graph manifold `S({n_e})`, its Dehn twist record, and pencil
//! localization to a nodal curve.
//!
//! `S({n_e})` is assembled from one copy of (pair of pants) × S¹ per vertex,
//! glued along the torus of each compact edge by the shear `[[-1, n_e], [0, 1]]`
//! on the framing (base class `b`, fiber class `f`).

mod dehn;
mod pencil;
mod plumbing;

pub use dehn::{dehn_twist_record, DehnTwist};
pub use pencil::{pencil_localization, Component, ComponentKind, NodalCurveReport, NodeCount};
pub use plumbing::{h1_graph_manifold, plumbing_presentation, plumbing_presentation_directed, H1Result, PlumbingPresentation, ShearMatrix};
