use crate::error::{Error, Result};

/// A closed walk as `(edge index, sign)` pairs; sign `+1` traverses the edge
/// from its first to its second vertex.
pub type Cycle = Vec<(usize, i8)>;

/// Fundamental cycle basis of a connected multigraph.
///
/// The spanning tree grows from vertex 0, always taking the lowest-index edge
/// that leaves the current tree. Each non-tree edge `(u, v)`, in index order,
/// yields the cycle "tree path `u -> v`, then the edge back from `v` to `u`".
/// Self-loops and parallel edges are allowed. Returns `E - V + 1` cycles.
pub fn cycle_basis(num_vertices: usize, edges: &[(usize, usize)]) -> Result<Vec<Cycle>> {
    if num_vertices == 0 {
        return if edges.is_empty() {
            Ok(Vec::new())
        } else {
            Err(Error::DisconnectedGraph)
        };
    }
    let mut parent_edge: Vec<Option<usize>> = vec![None; num_vertices];
    let mut in_tree = vec![false; num_vertices];
    let mut depth = vec![0usize; num_vertices];
    let mut tree_edge = vec![false; edges.len()];
    in_tree[0] = true;
    let mut reached = 1;
    loop {
        let next = edges
            .iter()
            .enumerate()
            .find(|(_, &(a, b))| in_tree[a] != in_tree[b]);
        let Some((e, &(a, b))) = next else { break };
        let (from, to) = if in_tree[a] { (a, b) } else { (b, a) };
        in_tree[to] = true;
        parent_edge[to] = Some(e);
        depth[to] = depth[from] + 1;
        tree_edge[e] = true;
        reached += 1;
    }
    if reached != num_vertices {
        return Err(Error::DisconnectedGraph);
    }

    let parent = |v: usize| -> (usize, usize) {
        let e = parent_edge[v].expect("non-root vertex has a parent edge");
        let (a, b) = edges[e];
        (e, if a == v { b } else { a })
    };
    // sign for traversing edge e starting at `from`
    let sign = |e: usize, from: usize| -> i8 {
        if edges[e].0 == from {
            1
        } else {
            -1
        }
    };

    let mut cycles = Vec::new();
    for (e, &(u, v)) in edges.iter().enumerate() {
        if tree_edge[e] {
            continue;
        }
        let (mut x, mut y) = (u, v);
        let mut up = Vec::new();
        let mut down = Vec::new();
        while x != y {
            if depth[x] >= depth[y] {
                let (pe, px) = parent(x);
                up.push((pe, sign(pe, x)));
                x = px;
            } else {
                let (pe, py) = parent(y);
                down.push((pe, sign(pe, py)));
                y = py;
            }
        }
        let mut cycle: Cycle = up;
        cycle.extend(down.into_iter().rev());
        cycle.push((e, -1));
        cycles.push(cycle);
    }
    Ok(cycles)
}
