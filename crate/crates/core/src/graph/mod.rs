//! Decorated trivalent ribbon graphs.
//!
//! A [`DecoratedGraph`] records the singular locus: one vertex per triple
//! point, one compact edge per rational curve through two triple points and
//! one leg per affine line through a single triple point. Half-edges carry
//! arbitrary integer labels; each vertex lists its three half-edges in cyclic
//! order, which is the ribbon structure.

mod category;
mod orient;
mod surface;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{cycle_basis, Cycle, NonzeroRational};
use crate::error::{Error, Result};

pub use category::{build_i, build_j, collapse_functor, Arrow, FiniteCategory, Functor};
pub use orient::{orientability, orientation_gauge, Orientability};
pub use surface::{dual_surface, DualSurface};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Vertex {
    pub half_edges: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CompactEdge {
    pub ends: [usize; 2],
    #[serde(default)]
    pub twist: i64,
    #[serde(default = "NonzeroRational::one")]
    pub holonomy: NonzeroRational,
    #[serde(default = "NonzeroRational::one")]
    pub base_scalar: NonzeroRational,
    #[serde(default)]
    pub reversing: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub self_intersections: Option<[i64; 2]>,
}

impl CompactEdge {
    /// An undecorated edge: twist 0, scalars 1, not reversing.
    pub fn plain(a: usize, b: usize) -> Self {
        CompactEdge {
            ends: [a, b],
            twist: 0,
            holonomy: NonzeroRational::one(),
            base_scalar: NonzeroRational::one(),
            reversing: false,
            self_intersections: None,
        }
    }

    pub fn with_twist(mut self, n: i64) -> Self {
        self.twist = n;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Edge {
    Compact(CompactEdge),
    Leg { end: usize },
}

impl Edge {
    pub fn as_compact(&self) -> Option<&CompactEdge> {
        match self {
            Edge::Compact(c) => Some(c),
            Edge::Leg { .. } => None,
        }
    }

    fn half_edges(&self) -> Vec<usize> {
        match self {
            Edge::Compact(c) => c.ends.to_vec(),
            Edge::Leg { end } => vec![*end],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecoratedGraph {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

/// A failed structural invariant of a [`DecoratedGraph`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NotTrivalent { vertex: usize, count: usize },
    RepeatedHalfEdge { vertex: usize, half_edge: usize },
    HalfEdgeInSeveralVertices { half_edge: usize },
    HalfEdgeWithoutVertex { half_edge: usize },
    HalfEdgeWithoutEdge { half_edge: usize },
    HalfEdgeInSeveralEdges { half_edge: usize },
    TriplePointFormula { edge: usize, expected: i64, found: i64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotTrivalent { vertex, count } => {
                write!(f, "vertex not trivalent: vertex {vertex} has {count} half-edges")
            }
            Violation::RepeatedHalfEdge { vertex, half_edge } => {
                write!(f, "vertex {vertex} lists half-edge {half_edge} more than once")
            }
            Violation::HalfEdgeInSeveralVertices { half_edge } => {
                write!(f, "half-edge {half_edge} belongs to several vertices")
            }
            Violation::HalfEdgeWithoutVertex { half_edge } => {
                write!(f, "half-edge {half_edge} is used by an edge but belongs to no vertex")
            }
            Violation::HalfEdgeWithoutEdge { half_edge } => {
                write!(f, "half-edge {half_edge} belongs to no edge")
            }
            Violation::HalfEdgeInSeveralEdges { half_edge } => {
                write!(f, "half-edge {half_edge} is used by several edge ends")
            }
            Violation::TriplePointFormula { edge, expected, found } => write!(
                f,
                "triple point formula: expected n_e = {expected} on edge {edge}, found {found}"
            ),
        }
    }
}

impl Serialize for Violation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Dense view of a valid graph. Half-edge `3v + p` is position `p` at vertex `v`.
#[derive(Clone, Debug)]
pub(crate) struct Ribbon {
    pub num_vertices: usize,
    /// opposite dense half-edge across a compact edge, `None` for legs
    pub partner: Vec<Option<usize>>,
    /// edge index owning each dense half-edge
    pub edge_of: Vec<usize>,
    /// dense ends `[a, b]` of each compact edge, in canonical direction
    pub ends: BTreeMap<usize, [usize; 2]>,
}

impl Ribbon {
    pub fn vertex(h: usize) -> usize {
        h / 3
    }

    /// Cyclic successor (`d = 1`) or predecessor (`d = -1`) at the same vertex.
    pub fn rotate(h: usize, d: i8) -> usize {
        let step = if d > 0 { 1 } else { 2 };
        3 * (h / 3) + (h % 3 + step) % 3
    }
}

impl DecoratedGraph {
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
        let mut shared = Vec::new();
        for (v, vert) in self.vertices.iter().enumerate() {
            if vert.half_edges.len() != 3 {
                out.push(Violation::NotTrivalent {
                    vertex: v,
                    count: vert.half_edges.len(),
                });
            }
            for (i, &h) in vert.half_edges.iter().enumerate() {
                if vert.half_edges[..i].contains(&h) {
                    out.push(Violation::RepeatedHalfEdge { vertex: v, half_edge: h });
                } else if owner.insert(h, v).is_some() && !shared.contains(&h) {
                    shared.push(h);
                }
            }
        }
        out.extend(shared.into_iter().map(|h| Violation::HalfEdgeInSeveralVertices { half_edge: h }));

        let mut used: BTreeMap<usize, usize> = BTreeMap::new();
        for edge in &self.edges {
            for h in edge.half_edges() {
                *used.entry(h).or_default() += 1;
            }
        }
        for (&h, &count) in &used {
            if count > 1 {
                out.push(Violation::HalfEdgeInSeveralEdges { half_edge: h });
            }
            if !owner.contains_key(&h) {
                out.push(Violation::HalfEdgeWithoutVertex { half_edge: h });
            }
        }
        for &h in owner.keys() {
            if !used.contains_key(&h) {
                out.push(Violation::HalfEdgeWithoutEdge { half_edge: h });
            }
        }

        for (e, edge) in self.edges.iter().enumerate() {
            if let Edge::Compact(c) = edge {
                if let Some([a, b]) = c.self_intersections {
                    let expected = a + b + 2;
                    if c.twist != expected {
                        out.push(Violation::TriplePointFormula {
                            edge: e,
                            expected,
                            found: c.twist,
                        });
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub(crate) fn ribbon(&self) -> Result<Ribbon> {
        let violations = self.validate();
        if !violations.is_empty() {
            return Err(Error::InvalidGraph(violations));
        }
        let mut dense = BTreeMap::new();
        for (v, vert) in self.vertices.iter().enumerate() {
            for (p, &h) in vert.half_edges.iter().enumerate() {
                dense.insert(h, 3 * v + p);
            }
        }
        let n = 3 * self.vertices.len();
        let mut partner = vec![None; n];
        let mut edge_of = vec![0; n];
        let mut ends = BTreeMap::new();
        for (e, edge) in self.edges.iter().enumerate() {
            match edge {
                Edge::Compact(c) => {
                    let (a, b) = (dense[&c.ends[0]], dense[&c.ends[1]]);
                    partner[a] = Some(b);
                    partner[b] = Some(a);
                    edge_of[a] = e;
                    edge_of[b] = e;
                    // lower vertex first; a loop keeps its stored order
                    let canonical = if Ribbon::vertex(b) < Ribbon::vertex(a) { [b, a] } else { [a, b] };
                    ends.insert(e, canonical);
                }
                Edge::Leg { end } => edge_of[dense[end]] = e,
            }
        }
        Ok(Ribbon {
            num_vertices: self.vertices.len(),
            partner,
            edge_of,
            ends,
        })
    }

    /// Indices of the compact edges, in edge order.
    pub fn compact_edge_indices(&self) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter_map(|(e, edge)| edge.as_compact().map(|_| e))
            .collect()
    }

    pub fn compact_edges(&self) -> impl Iterator<Item = (usize, &CompactEdge)> {
        self.edges
            .iter()
            .enumerate()
            .filter_map(|(e, edge)| edge.as_compact().map(|c| (e, c)))
    }

    pub fn compact_edge_mut(&mut self, e: usize) -> Option<&mut CompactEdge> {
        match self.edges.get_mut(e) {
            Some(Edge::Compact(c)) => Some(c),
            _ => None,
        }
    }

    pub fn num_legs(&self) -> usize {
        self.edges.len() - self.compact_edge_indices().len()
    }

    /// Vertex owning the half-edge label `h`.
    pub fn vertex_of(&self, h: usize) -> Option<usize> {
        self.vertices.iter().position(|v| v.half_edges.contains(&h))
    }

    /// Endpoint vertices of every compact edge in canonical direction: lower
    /// vertex index first, a loop in its stored order.
    pub fn endpoints(&self) -> Result<BTreeMap<usize, [usize; 2]>> {
        let r = self.ribbon()?;
        Ok(r.ends
            .iter()
            .map(|(&e, &[a, b])| (e, [Ribbon::vertex(a), Ribbon::vertex(b)]))
            .collect())
    }

    /// Fundamental cycles over the compact edges, with graph edge indices and
    /// signs relative to the canonical direction of each edge.
    pub fn cycle_basis(&self) -> Result<Vec<Cycle>> {
        let ends = self.endpoints()?;
        let order: Vec<usize> = ends.keys().copied().collect();
        let pairs: Vec<(usize, usize)> = ends.values().map(|&[a, b]| (a, b)).collect();
        let cycles = cycle_basis(self.vertices.len(), &pairs)?;
        Ok(cycles
            .into_iter()
            .map(|c| c.into_iter().map(|(i, s)| (order[i], s)).collect())
            .collect())
    }

    pub fn is_connected(&self) -> bool {
        match self.endpoints() {
            Ok(ends) => {
                let pairs: Vec<(usize, usize)> = ends.values().map(|&[a, b]| (a, b)).collect();
                cycle_basis(self.vertices.len(), &pairs).is_ok()
            }
            Err(_) => false,
        }
    }

    /// First Betti number `E_c - V + 1` of a connected graph.
    pub fn cycle_rank(&self) -> usize {
        (self.compact_edge_indices().len() + 1).saturating_sub(self.vertices.len())
    }

    /// Reverses the cyclic order at `v` and toggles the reversing flag of
    /// every compact edge end at `v`. Leaves all invariants unchanged.
    pub fn flip_vertex(&mut self, v: usize) {
        self.vertices[v].half_edges.swap(1, 2);
        let hs = self.vertices[v].half_edges.clone();
        for edge in &mut self.edges {
            if let Edge::Compact(c) = edge {
                let hits = c.ends.iter().filter(|h| hs.contains(h)).count();
                if hits % 2 == 1 {
                    c.reversing = !c.reversing;
                }
            }
        }
    }

    /// Same graph with decorations ignored except those fixing the topology.
    pub(crate) fn same_structure(&self, other: &DecoratedGraph) -> bool {
        if self.vertices != other.vertices || self.edges.len() != other.edges.len() {
            return false;
        }
        self.edges.iter().zip(&other.edges).all(|(a, b)| match (a, b) {
            (Edge::Compact(x), Edge::Compact(y)) => {
                x.ends == y.ends
                    && x.twist == y.twist
                    && x.reversing == y.reversing
                    && x.self_intersections == y.self_intersections
            }
            (Edge::Leg { end: x }, Edge::Leg { end: y }) => x == y,
            _ => false,
        })
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    #[test]
    fn theta_is_valid() {
        assert!(examples::theta().validate().is_empty());
    }

    #[test]
    fn two_half_edge_vertex() {
        let g = DecoratedGraph {
            vertices: vec![Vertex { half_edges: vec![0, 1] }],
            edges: vec![Edge::Leg { end: 0 }, Edge::Leg { end: 1 }],
        };
        let v = g.validate();
        assert!(v.iter().any(|x| x.to_string().contains("vertex not trivalent")));
    }

    #[test]
    fn triple_point_formula_violation() {
        let mut g = examples::theta();
        let e = g.compact_edge_mut(0).unwrap();
        e.self_intersections = Some([0, 0]);
        e.twist = 1;
        let v = g.validate();
        assert_eq!(v.len(), 1);
        assert!(v[0].to_string().contains("triple point formula: expected n_e = 2"));
    }

    #[test]
    fn ownership_violations() {
        let g = DecoratedGraph {
            vertices: vec![Vertex { half_edges: vec![0, 1, 2] }, Vertex { half_edges: vec![2, 3, 4] }],
            edges: vec![
                Edge::Leg { end: 0 },
                Edge::Leg { end: 0 },
                Edge::Compact(CompactEdge::plain(1, 9)),
            ],
        };
        let v = g.validate();
        assert!(v.contains(&Violation::HalfEdgeInSeveralVertices { half_edge: 2 }));
        assert!(v.contains(&Violation::HalfEdgeInSeveralEdges { half_edge: 0 }));
        assert!(v.contains(&Violation::HalfEdgeWithoutVertex { half_edge: 9 }));
        assert!(v.contains(&Violation::HalfEdgeWithoutEdge { half_edge: 3 }));
    }

    #[test]
    fn json_round_trip_and_defaults() {
        let s = r#"{"vertices":[{"halfEdges":[0,1,2]}],
                    "edges":[{"kind":"compact","ends":[0,1],"twist":2,"holonomy":"3/4"},
                             {"kind":"leg","end":2}]}"#;
        let g = DecoratedGraph::from_json(s).unwrap();
        let c = g.edges[0].as_compact().unwrap();
        assert_eq!(c.holonomy, NonzeroRational::ratio(3, 4).unwrap());
        assert!(c.base_scalar.is_one());
        assert!(!c.reversing);
        assert_eq!(DecoratedGraph::from_json(&g.to_json()).unwrap(), g);
        assert!(g.to_json().contains(r#""baseScalar":"1/1""#));
    }

    #[test]
    fn theta_cycles_pair_edge_zero() {
        let c = examples::theta().cycle_basis().unwrap();
        assert_eq!(c, vec![vec![(0, 1), (1, -1)], vec![(0, 1), (2, -1)]]);
    }

    #[test]
    fn flip_vertex_toggles_incident_flags() {
        let mut g = examples::theta();
        g.flip_vertex(0);
        assert!(g.compact_edges().all(|(_, c)| c.reversing));
        g.flip_vertex(1);
        assert!(g.compact_edges().all(|(_, c)| !c.reversing));
    }
}
