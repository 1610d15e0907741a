#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use nclocus::algebra::{IntMatrix, NonzeroRational};
use nclocus::graph::{CompactEdge, DecoratedGraph, Edge, Vertex};

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn nonzero(r: &mut impl Rng) -> NonzeroRational {
    let mut p: i64 = r.gen_range(1..=7);
    if r.gen_bool(0.5) {
        p = -p;
    }
    NonzeroRational::ratio(p, r.gen_range(1..=7)).unwrap()
}

/// Random connected trivalent graph on `v` vertices with `legs` legs:
/// a uniform pairing of the non-leg half-edges, redrawn until connected.
pub fn random_graph(r: &mut impl Rng, v: usize, legs: usize) -> DecoratedGraph {
    assert!(v >= 1 && (3 * v - legs).is_multiple_of(2));
    loop {
        let mut slots: Vec<usize> = (0..3 * v).collect();
        slots.shuffle(r);
        let (leg_slots, paired) = slots.split_at(legs);
        let mut edges: Vec<Edge> = paired
            .chunks(2)
            .map(|p| Edge::Compact(CompactEdge::plain(p[0], p[1])))
            .collect();
        edges.extend(leg_slots.iter().map(|&end| Edge::Leg { end }));
        let g = DecoratedGraph {
            vertices: (0..v)
                .map(|i| Vertex {
                    half_edges: vec![3 * i, 3 * i + 1, 3 * i + 2],
                })
                .collect(),
            edges,
        };
        if g.is_connected() {
            return g;
        }
    }
}

pub fn random_closed_graph(r: &mut impl Rng, v: usize) -> DecoratedGraph {
    random_graph(r, v, 0)
}

/// Same abstract ribbon graph under new names: vertices and edges are
/// reordered, half-edge labels are scrambled into a sparse range, each
/// vertex's cyclic list is rotated and non-loop edge ends may be swapped.
pub fn relabel(g: &DecoratedGraph, r: &mut impl Rng) -> DecoratedGraph {
    let total: usize = g.vertices.iter().map(|v| v.half_edges.len()).sum();
    let mut labels: Vec<usize> = (0..4 * total + 8).collect();
    labels.shuffle(r);
    let all: Vec<usize> = g.vertices.iter().flat_map(|v| v.half_edges.clone()).collect();
    let rename = |h: usize| labels[all.iter().position(|&x| x == h).unwrap()];

    let mut vertices: Vec<Vertex> = g
        .vertices
        .iter()
        .map(|v| {
            let mut hs: Vec<usize> = v.half_edges.iter().map(|&h| rename(h)).collect();
            let k = r.gen_range(0..hs.len());
            hs.rotate_left(k);
            Vertex { half_edges: hs }
        })
        .collect();
    vertices.shuffle(r);

    let mut edges: Vec<Edge> = g
        .edges
        .iter()
        .map(|e| match e {
            Edge::Leg { end } => Edge::Leg { end: rename(*end) },
            Edge::Compact(c) => {
                let mut c = c.clone();
                let loop_edge = g.vertex_of(c.ends[0]) == g.vertex_of(c.ends[1]);
                c.ends = c.ends.map(rename);
                if !loop_edge && r.gen_bool(0.5) {
                    c.ends.swap(0, 1);
                    if let Some(s) = c.self_intersections.as_mut() {
                        s.swap(0, 1);
                    }
                }
                Edge::Compact(c)
            }
        })
        .collect();
    edges.shuffle(r);
    DecoratedGraph { vertices, edges }
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

pub fn random_matrix(r: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let entries = (0..rows * cols).map(|_| big(r.gen_range(-bound..=bound))).collect();
    IntMatrix::from_entries(rows, cols, entries)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Cofactor expansion, independent of the library's elimination.
pub fn det_by_expansion(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return big(1);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * det_by_expansion(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Determinantal divisors `d_k = gcd of k x k minors`; the invariant factors
/// are `d_k / d_{k-1}` until the first vanishing `d_k`.
pub fn invariant_factors_by_minors(m: &IntMatrix) -> Vec<BigInt> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut out = Vec::new();
    let mut prev = big(1);
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<BigInt>> = rs.iter().map(|&i| cs.iter().map(|&j| m[(i, j)].clone()).collect()).collect();
                g = g.gcd(&det_by_expansion(&sub));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

/// Orders of all elements of `Z^rows / image(m)`, found by breadth-first
/// enumeration of cosets. Lattice membership is tested against a triangular
/// basis computed here. `None` if the cokernel is infinite or has more than
/// `limit` elements.
pub fn element_orders_by_enumeration(m: &IntMatrix, limit: usize) -> Option<Vec<usize>> {
    let n = m.rows();
    let basis = triangular_basis(m);
    if basis.len() < n {
        return None;
    }
    let reduce = |x: &mut Vec<i64>| {
        for (i, b) in basis.iter().enumerate() {
            let q = x[i].div_euclid(b[i]);
            if q != 0 {
                for (xj, bj) in x.iter_mut().zip(b) {
                    *xj -= q * bj;
                }
            }
        }
    };
    let zero = vec![0i64; n];
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::from([zero.clone()]);
    let mut frontier = vec![zero];
    while let Some(x) = frontier.pop() {
        for i in 0..n {
            let mut y = x.clone();
            y[i] += 1;
            reduce(&mut y);
            if seen.insert(y.clone()) {
                if seen.len() > limit {
                    return None;
                }
                frontier.push(y);
            }
        }
    }
    let orders = seen
        .iter()
        .map(|x| {
            let mut k = 1;
            let mut y = x.clone();
            while y.iter().any(|&c| c != 0) {
                k += 1;
                y = x.iter().map(|&c| c * k as i64).collect();
                reduce(&mut y);
            }
            k
        })
        .collect();
    Some(orders)
}

/// Number of elements killed by `d` in `⊕ Z/t_i`.
pub fn killed_by(torsion: &[BigInt], d: usize) -> usize {
    torsion
        .iter()
        .map(|t| usize::try_from(t.gcd(&BigInt::from(d))).unwrap())
        .product()
}

/// Triangular basis `b_0, ..., b_{n-1}` of the column lattice of `m` with
/// `b_i[j] = 0` for `j < i` and `b_i[i] > 0`, by integer row reduction on the
/// transposed generators. Fewer than `n` vectors means infinite index.
fn triangular_basis(m: &IntMatrix) -> Vec<Vec<i64>> {
    let n = m.rows();
    let mut gens: Vec<Vec<i64>> = (0..m.cols())
        .map(|j| (0..n).map(|i| i64::try_from(&m[(i, j)]).unwrap()).collect())
        .collect();
    let mut basis = Vec::new();
    for i in 0..n {
        loop {
            let nz: Vec<usize> = (0..gens.len()).filter(|&k| gens[k][i] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            let p = *nz.iter().min_by_key(|&&k| gens[k][i].abs()).unwrap();
            for &k in &nz {
                if k != p {
                    let q = gens[k][i] / gens[p][i];
                    let pv = gens[p].clone();
                    for (a, b) in gens[k].iter_mut().zip(&pv) {
                        *a -= q * b;
                    }
                }
            }
        }
        match (0..gens.len()).find(|&k| gens[k][i] != 0) {
            Some(k) => {
                let mut b = gens.swap_remove(k);
                if b[i] < 0 {
                    b.iter_mut().for_each(|x| *x = -*x);
                }
                basis.push(b);
            }
            None => return basis,
        }
    }
    basis
}

pub fn random_edge_aut(r: &mut impl Rng) -> nclocus::local::EdgeAut {
    let eps = if r.gen_bool(0.5) { 1 } else { -1 };
    nclocus::local::EdgeAut::new(eps, r.gen_range(-5..=5), nonzero(r), nonzero(r), r.gen_bool(0.5))
}

pub fn random_vertex_aut(r: &mut impl Rng) -> nclocus::local::VertexAut {
    let perms = nclocus::local::Permutation::all();
    nclocus::local::VertexAut::new(
        [nonzero(r), nonzero(r), nonzero(r)],
        perms[r.gen_range(0..6)],
        r.gen_bool(0.5),
    )
}

pub fn random_monomial(r: &mut impl Rng) -> nclocus::local::Monomial {
    nclocus::local::Monomial {
        coeff: nonzero(r),
        x_exp: r.gen_range(-4..=4),
        u_exp: r.gen_range(-3..=3),
    }
}

/// Random decorations on an orientable graph: twists drawn from `twists`
/// (kept when `None`), random holonomies and base scalars, random vertex
/// flips, random charts and random stored directions.
pub fn random_diagram(
    r: &mut impl Rng,
    mut g: DecoratedGraph,
    twists: Option<std::ops::RangeInclusive<i64>>,
) -> nclocus::descent::DescentDiagram {
    for e in g.compact_edge_indices() {
        let c = g.compact_edge_mut(e).unwrap();
        if let Some(t) = &twists {
            c.twist = r.gen_range(t.clone());
        }
        c.holonomy = nonzero(r);
        c.base_scalar = nonzero(r);
    }
    for v in 0..g.vertices.len() {
        if r.gen_bool(0.5) {
            g.flip_vertex(v);
        }
    }
    let charts = (0..g.vertices.len()).map(|_| nclocus::local::TwoPerV(nonzero(r))).collect();
    let mut d = nclocus::descent::assemble(&g, charts).unwrap();
    for e in g.compact_edge_indices() {
        if r.gen_bool(0.5) {
            if let Ok(rev) = d.reverse_stored_direction(e) {
                d = rev;
            }
        }
    }
    d
}

pub fn random_gauge(r: &mut impl Rng, n: usize) -> Vec<NonzeroRational> {
    (0..n).map(|_| nonzero(r)).collect()
}

/// Smooth complete fan from `P³` by `steps` random blow-ups at torus-fixed
/// points (star subdivision of a cone) or along torus-invariant curves (of a
/// wall).
pub fn random_blown_up_fan(r: &mut impl Rng, steps: usize) -> nclocus::toric::Fan {
    let mut f = nclocus::examples::p3_fan();
    for _ in 0..steps {
        if r.gen_bool(0.5) {
            let c = r.gen_range(0..f.cones.len());
            let [a, b, d] = f.cones.swap_remove(c);
            let v = [0, 1, 2].map(|k| f.rays[a][k] + f.rays[b][k] + f.rays[d][k]);
            f.rays.push(v);
            let n = f.rays.len() - 1;
            f.cones.extend([[a, b, n], [b, d, n], [d, a, n]]);
        } else {
            let walls: Vec<_> = f.walls().into_iter().filter(|w| w.cones.len() == 2).collect();
            let w = &walls[r.gen_range(0..walls.len())];
            let [a, b] = w.rays;
            let v = [0, 1, 2].map(|k| f.rays[a][k] + f.rays[b][k]);
            f.rays.push(v);
            let n = f.rays.len() - 1;
            for &c in &w.cones {
                let cone = f.cones[c];
                let other = *cone.iter().find(|x| **x != a && **x != b).unwrap();
                f.cones[c] = [a, n, other];
                f.cones.push([n, b, other]);
            }
        }
    }
    f
}

/// `(α, β)` with `v_k + v_l + α v_i + β v_j = 0`, by exhaustive search.
pub fn wall_relation_by_search(f: &nclocus::toric::Fan, i: usize, j: usize, k: usize, l: usize) -> Option<(i64, i64)> {
    let s = [0, 1, 2].map(|m| f.rays[k][m] + f.rays[l][m]);
    for alpha in -40..=40 {
        for beta in -40..=40 {
            if (0..3).all(|m| s[m] + alpha * f.rays[i][m] + beta * f.rays[j][m] == 0) {
                return Some((alpha, beta));
            }
        }
    }
    None
}

/// `-K · C` and the two self-intersections of the curve of an interior wall,
/// from the wall relation: `D_i · C = α`, `D_j · C = β`, `D_k · C = D_l · C = 1`.
pub fn wall_oracle(f: &nclocus::toric::Fan, wall: [usize; 2], cones: &[usize]) -> (i64, [i64; 2]) {
    let [i, j] = wall;
    let other = |c: usize| *f.cones[c].iter().find(|x| !wall.contains(x)).unwrap();
    let (k, l) = (other(cones[0]), other(cones[1]));
    let (alpha, beta) = wall_relation_by_search(f, i, j, k, l).expect("wall relation with small coefficients");
    // the normal bundle of C in D_i is O(D_j)|_C
    (2 + alpha + beta, [beta, alpha])
}
