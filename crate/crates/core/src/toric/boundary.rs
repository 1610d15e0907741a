use std::collections::BTreeMap;

use serde::Serialize;

use super::{wall_reports, Fan};
use crate::error::Result;
use crate::graph::{CompactEdge, DecoratedGraph, Edge, Vertex};

/// The decorated graph of the toric boundary.
///
/// Vertex `c` is maximal cone `c`. With the cone's rays ordered
/// `(r0, r1, r2)` so that `det > 0`, half-edge `3c + p` is the wall opposite
/// `r_p`; this cyclic order is the ribbon structure, and it is the
/// counterclockwise order seen from outside the fan. Interior walls become
/// compact edges with twist equal to the defect, boundary walls become legs.
pub fn boundary_graph(f: &Fan) -> Result<DecoratedGraph> {
    let reports = wall_reports(f)?;
    let oriented: Vec<[usize; 3]> = (0..f.cones.len())
        .map(|c| {
            let [a, b, d] = f.cones[c];
            if f.cone_det(c) > 0 {
                [a, b, d]
            } else {
                [a, d, b]
            }
        })
        .collect();
    let half_edge = |c: usize, wall: [usize; 2]| -> usize {
        let p = (0..3).find(|&p| !wall.contains(&oriented[c][p])).expect("wall of this cone");
        3 * c + p
    };
    let vertices = (0..f.cones.len())
        .map(|c| Vertex {
            half_edges: vec![3 * c, 3 * c + 1, 3 * c + 2],
        })
        .collect();
    let edges = reports
        .iter()
        .map(|r| match (r.adjacent_cones.as_slice(), r.self_intersections) {
            ([a, b], Some(si)) => {
                let mut e = CompactEdge::plain(half_edge(*a, r.wall), half_edge(*b, r.wall));
                e.twist = r.defect.expect("interior wall has a defect");
                e.self_intersections = Some(si);
                Edge::Compact(e)
            }
            (cones, _) => Edge::Leg {
                end: half_edge(cones[0], r.wall),
            },
        })
        .collect();
    Ok(DecoratedGraph { vertices, edges })
}

/// The toric surface `D_ρ` of a ray, described by the self-intersections of
/// its boundary curves in their cyclic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DivisorSurface {
    pub ray: usize,
    /// The star of the ray is a complete 2D fan, so `D_ρ` is compact.
    pub complete: bool,
    /// Minimal rotation/reflection of the cycle of self-intersections; for a
    /// noncompact divisor, the self-intersections along each chain of compact
    /// curves, each chain minimal under reversal, chains sorted.
    pub cycle: Vec<Vec<i64>>,
}

fn normalize_cycle(c: &[i64]) -> Vec<i64> {
    let n = c.len();
    let mut best: Option<Vec<i64>> = None;
    for s in 0..n {
        for rev in [false, true] {
            let cand: Vec<i64> = (0..n)
                .map(|t| if rev { c[(s + n - t) % n] } else { c[(s + t) % n] })
                .collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

pub fn divisor_classification(f: &Fan) -> Result<Vec<DivisorSurface>> {
    let reports = wall_reports(f)?;
    let self_int: BTreeMap<(usize, usize), i64> = reports
        .iter()
        .filter_map(|r| r.self_intersections.map(|[a, b]| (r.wall, a, b)))
        .flat_map(|([i, j], a, b)| [((i, j), a), ((j, i), b)])
        .collect();

    let mut out = Vec::with_capacity(f.rays.len());
    for ray in 0..f.rays.len() {
        // link of the ray: an edge j - k for every cone {ray, j, k}
        let mut link: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for cone in f.cones.iter().filter(|c| c.contains(&ray)) {
            let others: Vec<usize> = cone.iter().copied().filter(|&r| r != ray).collect();
            link.entry(others[0]).or_default().push(others[1]);
            link.entry(others[1]).or_default().push(others[0]);
        }
        let complete = !link.is_empty() && link.values().all(|n| n.len() == 2);
        let mut visited: Vec<usize> = Vec::new();
        let mut chains: Vec<Vec<usize>> = Vec::new();
        // open chains start at link endpoints; closed ones anywhere
        let starts: Vec<usize> = link
            .iter()
            .filter(|(_, n)| n.len() == 1)
            .map(|(&j, _)| j)
            .chain(link.keys().copied())
            .collect();
        for s in starts {
            if visited.contains(&s) {
                continue;
            }
            let mut chain = vec![s];
            visited.push(s);
            let mut cur = s;
            while let Some(&next) = link[&cur].iter().find(|n| !visited.contains(n)) {
                chain.push(next);
                visited.push(next);
                cur = next;
            }
            chains.push(chain);
        }
        let cycle = if complete {
            let values: Vec<i64> = chains[0].iter().map(|&j| self_int[&(ray, j)]).collect();
            vec![normalize_cycle(&values)]
        } else {
            let mut cs: Vec<Vec<i64>> = chains
                .iter()
                .map(|ch| {
                    let values: Vec<i64> = ch.iter().filter_map(|&j| self_int.get(&(ray, j)).copied()).collect();
                    let rev: Vec<i64> = values.iter().rev().copied().collect();
                    values.min(rev)
                })
                .collect();
            cs.sort();
            cs
        };
        out.push(DivisorSurface { ray, complete, cycle });
    }
    Ok(out)
}

/// Multiplicity of each distinct divisor descriptor.
pub fn divisor_class_counts(classes: &[DivisorSurface]) -> BTreeMap<(bool, Vec<Vec<i64>>), usize> {
    let mut counts = BTreeMap::new();
    for d in classes {
        *counts.entry((d.complete, d.cycle.clone())).or_default() += 1;
    }
    counts
}
