//! Worked fixtures: small graphs and the fans of a few smooth toric threefolds.

use crate::graph::{CompactEdge, DecoratedGraph, Edge, Vertex};
use crate::toric::{quartic_mirror_fan, Fan};

/// Names accepted by [`graph`] and [`fan`].
pub const NAMES: [&str; 4] = ["theta", "p3", "conifold", "quartic-mirror"];

/// Two vertices joined by three edges, cyclic orders reversed at the second
/// vertex so the thickening is planar.
pub fn theta() -> DecoratedGraph {
    DecoratedGraph {
        vertices: vec![
            Vertex { half_edges: vec![0, 1, 2] },
            Vertex { half_edges: vec![3, 5, 4] },
        ],
        edges: vec![
            Edge::Compact(CompactEdge::plain(0, 3)),
            Edge::Compact(CompactEdge::plain(1, 4)),
            Edge::Compact(CompactEdge::plain(2, 5)),
        ],
    }
}

/// A single triple point with three legs.
pub fn pants() -> DecoratedGraph {
    DecoratedGraph {
        vertices: vec![Vertex { half_edges: vec![0, 1, 2] }],
        edges: (0..3).map(|end| Edge::Leg { end }).collect(),
    }
}

/// One vertex carrying a loop and a leg.
pub fn loop_with_leg() -> DecoratedGraph {
    DecoratedGraph {
        vertices: vec![Vertex { half_edges: vec![0, 1, 2] }],
        edges: vec![Edge::Compact(CompactEdge::plain(0, 1)), Edge::Leg { end: 2 }],
    }
}

/// Closed trivalent graph on `2k` vertices: `k` bigons joined in a ring.
/// Its dual surface has genus `k + 1`; `k = 1` is the theta graph.
pub fn ring_of_bigons(k: usize) -> DecoratedGraph {
    assert!(k >= 1);
    let n = 2 * k;
    let vertices = (0..n)
        .map(|v| Vertex {
            half_edges: vec![3 * v, 3 * v + 1, 3 * v + 2],
        })
        .collect();
    let mut edges = Vec::new();
    for i in 0..k {
        let (a, b) = (2 * i, 2 * i + 1);
        edges.push(Edge::Compact(CompactEdge::plain(3 * a, 3 * b)));
        edges.push(Edge::Compact(CompactEdge::plain(3 * a + 1, 3 * b + 1)));
        let next = (b + 1) % n;
        edges.push(Edge::Compact(CompactEdge::plain(3 * b + 2, 3 * next + 2)));
    }
    DecoratedGraph { vertices, edges }
}

pub fn p3_fan() -> Fan {
    Fan {
        rays: vec![[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]],
        cones: vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]],
    }
}

/// Total space of `O(-1) ⊕ O(-1)` over `P¹`.
pub fn conifold_fan() -> Fan {
    Fan {
        rays: vec![[0, 0, 1], [1, 0, 1], [0, 1, 1], [1, 1, 1]],
        cones: vec![[0, 1, 3], [0, 2, 3]],
    }
}

pub fn p1p1p1_fan() -> Fan {
    let rays = vec![[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]];
    let mut cones = Vec::new();
    for x in 0..2 {
        for y in 2..4 {
            for z in 4..6 {
                cones.push([x, y, z]);
            }
        }
    }
    Fan { rays, cones }
}

/// Built-in fan by name.
pub fn fan(name: &str) -> Option<Fan> {
    match name {
        "p3" => Some(p3_fan()),
        "conifold" => Some(conifold_fan()),
        "quartic-mirror" => Some(quartic_mirror_fan()),
        "p1p1p1" => Some(p1p1p1_fan()),
        _ => None,
    }
}

/// Built-in graph by name; fans are converted through their toric boundary.
pub fn graph(name: &str) -> Option<DecoratedGraph> {
    match name {
        "theta" => Some(theta()),
        "pants" => Some(pants()),
        other => fan(other).map(|f| crate::toric::boundary_graph(&f).expect("built-in fans are valid")),
    }
}
