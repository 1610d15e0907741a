use std::collections::BTreeMap;

use super::{det3, widen, Fan};

/// Vertices of the tetrahedron `Δ` whose boundary triangulation gives the fan.
const TETRAHEDRON: [[i64; 3]; 4] = [[-1, -1, -1], [3, -1, -1], [-1, 3, -1], [-1, -1, 3]];

/// Fan over the unit triangulation of the boundary of `Δ`: each face is cut
/// into 16 triangles by lines parallel to its sides, giving 34 rays and 64
/// smooth cones.
pub fn quartic_mirror_fan() -> Fan {
    let mut triangles: Vec<[[i64; 3]; 3]> = Vec::new();
    for skip in 0..4 {
        let face: Vec<[i64; 3]> = (0..4).filter(|&v| v != skip).map(|v| TETRAHEDRON[v]).collect();
        let (o, a, b) = (face[0], face[1], face[2]);
        let step = |p: [i64; 3], q: [i64; 3]| [0, 1, 2].map(|t| (q[t] - p[t]) / 4);
        let (da, db) = (step(o, a), step(o, b));
        let at = |i: i64, j: i64| [0, 1, 2].map(|t| o[t] + i * da[t] + j * db[t]);
        for i in 0..4 {
            for j in 0..4 - i {
                triangles.push([at(i, j), at(i + 1, j), at(i, j + 1)]);
                if i + j <= 2 {
                    triangles.push([at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)]);
                }
            }
        }
    }

    let mut points: Vec<[i64; 3]> = triangles.iter().flatten().copied().collect();
    points.sort_unstable();
    points.dedup();
    let index: BTreeMap<[i64; 3], usize> = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();

    let mut cones: Vec<[usize; 3]> = triangles
        .iter()
        .map(|t| {
            let [a, b, c] = *t;
            let (a, b, c) = if det3(widen(a), widen(b), widen(c)) > 0 { (a, b, c) } else { (a, c, b) };
            let mut cone = [index[&a], index[&b], index[&c]];
            // rotate so the smallest index leads; keeps the orientation
            let lead = (0..3).min_by_key(|&p| cone[p]).unwrap();
            cone.rotate_left(lead);
            cone
        })
        .collect();
    cones.sort_unstable();
    Fan { rays: points, cones }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let f = quartic_mirror_fan();
        assert_eq!(f.rays.len(), 34);
        assert_eq!(f.cones.len(), 64);
        assert_eq!(f.walls().len(), 96);
        assert!(f.validate().is_empty());
    }

    #[test]
    fn cones_are_positively_oriented() {
        let f = quartic_mirror_fan();
        assert!((0..f.cones.len()).all(|c| f.cone_det(c) == 1));
    }
}
