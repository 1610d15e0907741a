use serde::Serialize;

use crate::graph::DecoratedGraph;

/// A curve of `Σ` (dual to a compact edge) along which the global twist acts
/// as a `multiplicity`-fold Dehn twist; negative means inverse twists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DehnTwist {
    pub edge: usize,
    pub multiplicity: i64,
}

pub fn dehn_twist_record(g: &DecoratedGraph) -> Vec<DehnTwist> {
    g.compact_edges()
        .filter(|(_, c)| c.twist != 0)
        .map(|(edge, c)| DehnTwist {
            edge,
            multiplicity: c.twist,
        })
        .collect()
}
