use std::collections::VecDeque;

use serde::Serialize;

use super::{DecoratedGraph, Ribbon};
use crate::error::Result;

/// Whether the reversing flags are a coboundary, with the class `w1`
/// evaluated on each fundamental cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Orientability {
    pub orientable: bool,
    #[serde(rename = "w1")]
    pub w1_on_cycles: Vec<u8>,
}

pub fn orientability(g: &DecoratedGraph) -> Result<Orientability> {
    let cycles = g.cycle_basis()?;
    let w1_on_cycles: Vec<u8> = cycles
        .iter()
        .map(|c| {
            let odd = c
                .iter()
                .filter(|&&(e, _)| g.edges[e].as_compact().is_some_and(|x| x.reversing))
                .count();
            (odd % 2) as u8
        })
        .collect();
    Ok(Orientability {
        orientable: w1_on_cycles.iter().all(|&w| w == 0),
        w1_on_cycles,
    })
}

/// Vertex flips `f` with `f(u) xor f(v) = reversing(e)` on every compact edge,
/// found by breadth-first propagation from vertex 0. `None` if no such
/// assignment exists.
pub fn orientation_gauge(g: &DecoratedGraph) -> Result<Option<Vec<bool>>> {
    let r = g.ribbon()?;
    let n = r.num_vertices;
    let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n];
    for (&e, &[a, b]) in &r.ends {
        let rev = g.edges[e].as_compact().is_some_and(|c| c.reversing);
        let (u, v) = (Ribbon::vertex(a), Ribbon::vertex(b));
        adj[u].push((v, rev));
        adj[v].push((u, rev));
    }
    let mut flip: Vec<Option<bool>> = vec![None; n];
    for start in 0..n {
        if flip[start].is_some() {
            continue;
        }
        flip[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let fu = flip[u].expect("visited");
            for &(v, rev) in &adj[u] {
                match flip[v] {
                    None => {
                        flip[v] = Some(fu ^ rev);
                        queue.push_back(v);
                    }
                    Some(fv) if fv != fu ^ rev => return Ok(None),
                    Some(_) => {}
                }
            }
        }
    }
    Ok(Some(flip.into_iter().map(|f| f.unwrap_or(false)).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    #[test]
    fn theta_plain_is_orientable() {
        let o = orientability(&examples::theta()).unwrap();
        assert!(o.orientable);
        assert_eq!(o.w1_on_cycles, vec![0, 0]);
    }

    #[test]
    fn one_reversing_edge() {
        let mut g = examples::theta();
        g.compact_edge_mut(2).unwrap().reversing = true;
        let o = orientability(&g).unwrap();
        assert!(!o.orientable);
        // edge 2 only sits in the second fundamental cycle
        assert_eq!(o.w1_on_cycles, vec![0, 1]);
        assert_eq!(orientation_gauge(&g).unwrap(), None);
    }

    #[test]
    fn gauge_flips_cancel_reversals() {
        let mut g = examples::theta();
        g.flip_vertex(1);
        let flips = orientation_gauge(&g).unwrap().unwrap();
        assert_eq!(flips, vec![false, true]);
        assert!(orientability(&g).unwrap().orientable);
    }

    #[test]
    fn reversing_loop_is_nonorientable() {
        let mut g = examples::loop_with_leg();
        let e = g.compact_edge_indices()[0];
        g.compact_edge_mut(e).unwrap().reversing = true;
        assert!(!orientability(&g).unwrap().orientable);
        assert_eq!(orientation_gauge(&g).unwrap(), None);
    }
}
