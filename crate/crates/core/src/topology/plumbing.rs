use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::{cokernel, AbelianGroup, IntMatrix};
use crate::error::{Error, Result};
use crate::graph::{orientation_gauge, DecoratedGraph};

/// The gluing `[[-1, n], [0, 1]]` in the basis (base, fiber).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShearMatrix {
    pub n: i64,
}

impl ShearMatrix {
    pub fn matrix(self) -> [[i64; 2]; 2] {
        [[-1, self.n], [0, 1]]
    }

    pub fn apply(self, [b, f]: [i64; 2]) -> [i64; 2] {
        [-b + self.n * f, f]
    }
}

/// Generators `b1, b2, f` per vertex (rows `3v`, `3v + 1`, `3v + 2`) and two
/// relation columns per compact edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlumbingPresentation {
    pub generators: usize,
    pub relations: IntMatrix,
}

/// First homology `Z^free ⊕ ⊕ Z/t_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct H1Result {
    #[serde(rename = "free")]
    pub free_rank: usize,
    #[serde(serialize_with = "crate::report::serialize_bigints")]
    pub torsion: Vec<BigInt>,
}

impl H1Result {
    pub fn torsion_i64(&self) -> Vec<i64> {
        self.torsion.iter().map(|t| i64::try_from(t).expect("small torsion")).collect()
    }
}

/// Boundary class at cyclic position `p` of vertex `v`, as a generator vector.
///
/// Over a pair of pants the three boundary lifts sum to `-f` (the Euler
/// number of the pants' unit tangent circle bundle relative to the boundary),
/// so `b3 = -b1 - b2 - f`.
fn boundary_class(v: usize, p: usize) -> Vec<(usize, i64)> {
    match p {
        0 => vec![(3 * v, 1)],
        1 => vec![(3 * v + 1, 1)],
        _ => vec![(3 * v, -1), (3 * v + 1, -1), (3 * v + 2, -1)],
    }
}

pub fn plumbing_presentation(g: &DecoratedGraph) -> Result<PlumbingPresentation> {
    plumbing_presentation_directed(g, &[])
}

/// As [`plumbing_presentation`], reading the edges listed in `reversed`
/// from their higher vertex to their lower one.
pub fn plumbing_presentation_directed(g: &DecoratedGraph, reversed: &[usize]) -> Result<PlumbingPresentation> {
    let flips = orientation_gauge(g)?.ok_or(Error::NonOrientable)?;
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let r = g.ribbon()?;
    // a flipped vertex reads its cyclic order backwards
    let position = |h: usize| -> (usize, usize) {
        let v = h / 3;
        let p = h % 3;
        (v, if flips[v] { (3 - p) % 3 } else { p })
    };
    let rows = 3 * g.vertices.len();
    let mut m = IntMatrix::zeros(rows, 2 * r.ends.len());
    for (col, (&e, &[a, b])) in r.ends.iter().enumerate() {
        let (a, b) = if reversed.contains(&e) { (b, a) } else { (a, b) };
        let n = g.edges[e].as_compact().expect("compact").twist;
        let (v, i) = position(a);
        let (w, j) = position(b);
        let bv = boundary_class(v, i);
        let bw = boundary_class(w, j);
        // b_w = -b_v
        for &(row, c) in bv.iter().chain(&bw) {
            m[(row, 2 * col)] += c;
        }
        // f_w = f_v + n b_v
        m[(3 * w + 2, 2 * col + 1)] += 1;
        m[(3 * v + 2, 2 * col + 1)] -= 1;
        for &(row, c) in &bv {
            m[(row, 2 * col + 1)] -= n * c;
        }
    }
    Ok(PlumbingPresentation {
        generators: rows,
        relations: m,
    })
}

/// `H1(S({n_e})) = coker(relations) ⊕ Z^{b1(G)}`.
pub fn h1_graph_manifold(g: &DecoratedGraph) -> Result<H1Result> {
    let p = plumbing_presentation(g)?;
    let AbelianGroup { free_rank, torsion } = cokernel(&p.relations);
    Ok(H1Result {
        free_rank: free_rank + g.cycle_rank(),
        torsion,
    })
}
