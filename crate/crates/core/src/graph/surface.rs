//! The surface `Σ` dual to the singular locus.
//!
//! `Σ` is a union of pairs of pants, one per vertex, glued along the compact
//! edges; legs stay open as boundary circles. So `χ(Σ) = -V` and there are `L`
//! boundary circles. The face walks reported alongside are the boundary walks
//! of the ribbon thickening `F` of the graph: `Σ` is the double of `F`.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{orientation_gauge, DecoratedGraph, Ribbon};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DualSurface {
    /// Orientable genus, or the crosscap number when `orientable` is false.
    pub genus: usize,
    pub boundary_circles: usize,
    pub orientable: bool,
    /// Boundary walks of the ribbon thickening, as half-edge labels.
    pub face_walks: Vec<Vec<usize>>,
}

impl DualSurface {
    pub fn euler_characteristic(&self) -> i64 {
        let k = self.genus as i64;
        let b = self.boundary_circles as i64;
        if self.orientable {
            2 - 2 * k - b
        } else {
            2 - k - b
        }
    }
}

type State = (usize, i8);

/// One step of a boundary walk: cross the edge at `h` (reflecting the travel
/// direction on a reversing edge), then turn to the cyclic neighbour.
fn step(g: &DecoratedGraph, r: &Ribbon, (h, d): State) -> State {
    let (far, rev) = match r.partner[h] {
        Some(p) => (p, g.edges[r.edge_of[h]].as_compact().is_some_and(|c| c.reversing)),
        None => (h, false),
    };
    let d2 = if rev { -d } else { d };
    (Ribbon::rotate(far, d2), d2)
}

/// The same side of the ribbon traversed backwards.
fn reverse((h, d): State) -> State {
    (Ribbon::rotate(h, -d), -d)
}

pub(crate) fn face_orbits(g: &DecoratedGraph, r: &Ribbon) -> Vec<Vec<State>> {
    let n = 3 * r.num_vertices;
    let mut seen: BTreeSet<State> = BTreeSet::new();
    let mut faces = Vec::new();
    // states ordered with +1 before -1 so each face is read forwards when possible
    let states = (0..n).flat_map(|h| [(h, 1i8), (h, -1i8)]);
    for s in states {
        if seen.contains(&s) {
            continue;
        }
        let mut orbit = Vec::new();
        let mut cur = s;
        loop {
            seen.insert(cur);
            orbit.push(cur);
            cur = step(g, r, cur);
            if cur == s {
                break;
            }
        }
        for &t in &orbit {
            seen.insert(reverse(t));
        }
        faces.push(orbit);
    }
    faces
}

pub fn dual_surface(g: &DecoratedGraph) -> Result<DualSurface> {
    let r = g.ribbon()?;
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let orientable = orientation_gauge(g)?.is_some();
    let faces = face_orbits(g, &r);
    let face_walks = faces
        .iter()
        .map(|orbit| orbit.iter().map(|&(h, _)| g.vertices[h / 3].half_edges[h % 3]).collect())
        .collect();
    let v = g.vertices.len();
    let legs = g.num_legs();
    // closed-up surface has χ = -V + L
    let closed_chi = legs as i64 - v as i64;
    let genus = if orientable { (2 - closed_chi) / 2 } else { 2 - closed_chi };
    Ok(DualSurface {
        genus: usize::try_from(genus).expect("non-negative genus"),
        boundary_circles: legs,
        orientable,
        face_walks,
    })
}
