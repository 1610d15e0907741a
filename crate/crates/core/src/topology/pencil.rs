use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{orientation_gauge, DecoratedGraph, Edge};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum ComponentKind {
    /// A piece of `Σ` cut along the vanishing circles.
    Main,
    /// An annulus between two parallel circles, collapsed to a sphere.
    Sphere,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Component {
    pub kind: ComponentKind,
    pub genus: usize,
    pub boundary_count: usize,
    /// Vertices of `G` inside a main component; the edge of a sphere.
    pub support: Vec<usize>,
}

impl Component {
    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary_count as i64
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NodeCount {
    /// Component indices, smaller first; equal when a node joins a component to itself.
    pub pair: [usize; 2],
    pub nodes: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct NodalCurveReport {
    pub components: Vec<Component>,
    pub nodes: usize,
    pub incidence: Vec<NodeCount>,
    pub sphere_components: usize,
}

impl NodalCurveReport {
    /// Arithmetic genus `Σ g_i + nodes - components + 1`.
    pub fn arithmetic_genus(&self) -> i64 {
        let g: i64 = self.components.iter().map(|c| c.genus as i64).sum();
        g + self.nodes as i64 - self.components.len() as i64 + 1
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut cur = x;
    while parent[cur] != root {
        let next = parent[cur];
        parent[cur] = root;
        cur = next;
    }
    root
}

/// Cuts `Σ` along `n_e` parallel circles on each compact edge and collapses
/// each circle to a node.
///
/// Main components are the pieces of `G` left after deleting every edge with
/// `n_e > 0`; a piece with `V_i` vertices and `b_i` boundary circles (legs plus
/// cut edge ends) has genus `1 + (V_i - b_i) / 2`. An edge with `n_e > 0`
/// contributes a chain of `n_e - 1` spheres and `n_e` nodes.
pub fn pencil_localization(g: &DecoratedGraph) -> Result<NodalCurveReport> {
    let r = g.ribbon()?;
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    if let Some((edge, c)) = g.compact_edges().find(|(_, c)| c.twist < 0) {
        return Err(Error::NegativeDefect { edge, twist: c.twist });
    }
    if orientation_gauge(g)?.is_none() {
        return Err(Error::NonOrientable);
    }

    let nv = g.vertices.len();
    let mut parent: Vec<usize> = (0..nv).collect();
    for (&e, &[a, b]) in &r.ends {
        if g.edges[e].as_compact().expect("compact").twist == 0 {
            let (x, y) = (find(&mut parent, a / 3), find(&mut parent, b / 3));
            parent[x.max(y)] = x.min(y);
        }
    }
    // main components numbered by their smallest vertex
    let mut index: BTreeMap<usize, usize> = BTreeMap::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for v in 0..nv {
        let root = find(&mut parent, v);
        let i = *index.entry(root).or_insert_with(|| {
            members.push(Vec::new());
            members.len() - 1
        });
        members[i].push(v);
    }
    let comp_of = |v: usize, parent: &mut [usize]| index[&find(parent, v)];

    let mut boundary = vec![0usize; members.len()];
    for (e, edge) in g.edges.iter().enumerate() {
        match edge {
            Edge::Leg { end } => {
                let v = g.vertex_of(*end).expect("valid graph");
                boundary[comp_of(v, &mut parent)] += 1;
            }
            Edge::Compact(c) if c.twist > 0 => {
                let [a, b] = r.ends[&e];
                boundary[comp_of(a / 3, &mut parent)] += 1;
                boundary[comp_of(b / 3, &mut parent)] += 1;
            }
            Edge::Compact(_) => {}
        }
    }

    let mut components: Vec<Component> = members
        .iter()
        .zip(&boundary)
        .map(|(vs, &b)| {
            let twice = 2 + vs.len() as i64 - b as i64;
            debug_assert!(twice >= 0 && twice % 2 == 0);
            Component {
                kind: ComponentKind::Main,
                genus: (twice / 2) as usize,
                boundary_count: b,
                support: vs.clone(),
            }
        })
        .collect();

    let mut incidence: BTreeMap<[usize; 2], usize> = BTreeMap::new();
    let mut link = |x: usize, y: usize| *incidence.entry([x.min(y), x.max(y)]).or_default() += 1;
    let mut nodes = 0usize;
    for (&e, &[a, b]) in &r.ends {
        let n = g.edges[e].as_compact().expect("compact").twist as usize;
        if n == 0 {
            continue;
        }
        nodes += n;
        // chain A - S_1 - ... - S_{n-1} - B
        let mut prev = comp_of(a / 3, &mut parent);
        for _ in 1..n {
            components.push(Component {
                kind: ComponentKind::Sphere,
                genus: 0,
                boundary_count: 2,
                support: vec![e],
            });
            let s = components.len() - 1;
            link(prev, s);
            prev = s;
        }
        link(prev, comp_of(b / 3, &mut parent));
    }

    let sphere_components = components.iter().filter(|c| c.kind == ComponentKind::Sphere).count();
    Ok(NodalCurveReport {
        components,
        nodes,
        incidence: incidence.into_iter().map(|(pair, nodes)| NodeCount { pair, nodes }).collect(),
        sphere_components,
    })
}
