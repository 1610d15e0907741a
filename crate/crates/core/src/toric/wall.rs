use num_traits::ToPrimitive;
use serde::Serialize;

use super::{det3, Fan, FanViolation, V3};
use crate::algebra::{snf, IntMatrix};
use crate::error::{Error, Result};

/// Intersection data of the curve of a wall.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct WallReport {
    pub wall: [usize; 2],
    pub adjacent_cones: Vec<usize>,
    /// `(C²` in `D_i`, `C²` in `D_j)` for the wall `(i, j)`; absent on boundary walls
    pub self_intersections: Option<[i64; 2]>,
    pub defect: Option<i64>,
    pub anticanonical_degree: Option<i64>,
}

/// Unimodular `U` with `U v = ±e_0`; rows 1 and 2 project along `v`.
fn projection_along(v: V3) -> [[i128; 3]; 2] {
    let col = IntMatrix::from_rows(&[[v[0] as i64], [v[1] as i64], [v[2] as i64]]);
    let left = snf(&col).left;
    let row = |i: usize| [0, 1, 2].map(|j| left[(i, j)].to_i128().expect("small transform"));
    [row(1), row(2)]
}

fn project(p: &[[i128; 3]; 2], x: V3) -> [i128; 2] {
    p.map(|r| r[0] * x[0] + r[1] * x[1] + r[2] * x[2])
}

/// Self-intersection `c` of the curve `C = D_i ∩ D_j` inside `D_i`, read from
/// the star of `v_i`: the neighbours of `C` satisfy `p_k + p_l = -c p_j`.
fn self_intersection_in(f: &Fan, i: usize, j: usize, k: usize, l: usize) -> Option<i64> {
    let proj = projection_along(f.ray(i));
    let pj = project(&proj, f.ray(j));
    let pk = project(&proj, f.ray(k));
    let pl = project(&proj, f.ray(l));
    let sum = [pk[0] + pl[0], pk[1] + pl[1]];
    let t = if pj[0] != 0 { 0 } else { 1 };
    if pj[t] == 0 || sum[t] % pj[t] != 0 {
        return None;
    }
    let c = -sum[t] / pj[t];
    (sum[0] == -c * pj[0] && sum[1] == -c * pj[1]).then_some(c as i64)
}

/// `-K · C` from the linear relation among the four rays of the two cones
/// through the wall: the Cramer kernel `κ` of `[v_i v_j v_k v_l]`, scaled so
/// the coefficients of `v_k` and `v_l` are 1, sums to the degree.
fn anticanonical_degree(f: &Fan, i: usize, j: usize, k: usize, l: usize) -> Option<i64> {
    let v = [i, j, k, l].map(|r| f.ray(r));
    let minor = |skip: usize| {
        let cols: Vec<V3> = (0..4).filter(|&m| m != skip).map(|m| v[m]).collect();
        det3(cols[0], cols[1], cols[2])
    };
    let kappa: Vec<i128> = (0..4).map(|m| if m % 2 == 0 { minor(m) } else { -minor(m) }).collect();
    let scale = kappa[2];
    if scale == 0 || kappa[3] != scale {
        return None;
    }
    let total: i128 = kappa.iter().sum();
    (total % scale == 0).then(|| (total / scale) as i64)
}

fn other_ray(f: &Fan, cone: usize, wall: [usize; 2]) -> usize {
    *f.cones[cone]
        .iter()
        .find(|r| !wall.contains(r))
        .expect("a cone has a ray off each of its walls")
}

fn interior_report(f: &Fan, rays: [usize; 2], cones: &[usize]) -> Result<WallReport> {
    let [i, j] = rays;
    let k = other_ray(f, cones[0], rays);
    let l = other_ray(f, cones[1], rays);
    let broken = || Error::InvalidFan(vec![FanViolation::ImproperIntersection { cones: [cones[0], cones[1]] }]);
    let a = self_intersection_in(f, i, j, k, l).ok_or_else(broken)?;
    let b = self_intersection_in(f, j, i, k, l).ok_or_else(broken)?;
    let degree = anticanonical_degree(f, i, j, k, l).ok_or_else(broken)?;
    Ok(WallReport {
        wall: rays,
        adjacent_cones: cones.to_vec(),
        self_intersections: Some([a, b]),
        defect: Some(a + b + 2),
        anticanonical_degree: Some(degree),
    })
}

/// Intersection data of the wall spanned by rays `a` and `b`.
pub fn wall_data(f: &Fan, wall: [usize; 2]) -> Result<WallReport> {
    f.check()?;
    let rays = [wall[0].min(wall[1]), wall[0].max(wall[1])];
    let w = f
        .walls()
        .into_iter()
        .find(|w| w.rays == rays)
        .ok_or(Error::NotAWall(wall))?;
    match w.cones.as_slice() {
        [single] => Err(Error::BoundaryWall { wall: rays, cone: *single }),
        cones => interior_report(f, rays, cones),
    }
}

/// Reports for every wall, boundary walls with empty intersection data.
pub fn wall_reports(f: &Fan) -> Result<Vec<WallReport>> {
    f.check()?;
    f.walls()
        .into_iter()
        .map(|w| match w.cones.as_slice() {
            [_] => Ok(WallReport {
                wall: w.rays,
                adjacent_cones: w.cones.clone(),
                self_intersections: None,
                defect: None,
                anticanonical_degree: None,
            }),
            cones => interior_report(f, w.rays, cones),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    #[test]
    fn p3_line() {
        let f = examples::p3_fan();
        for w in f.walls() {
            let r = wall_data(&f, w.rays).unwrap();
            assert_eq!(r.self_intersections, Some([1, 1]));
            assert_eq!(r.defect, Some(4));
            assert_eq!(r.anticanonical_degree, Some(4));
        }
    }

    #[test]
    fn conifold_zero_section() {
        let f = examples::conifold_fan();
        let r = wall_data(&f, [0, 3]).unwrap();
        assert_eq!(r.self_intersections, Some([-1, -1]));
        assert_eq!(r.defect, Some(0));
        assert_eq!(r.anticanonical_degree, Some(0));
        assert_eq!(wall_data(&f, [0, 1]), Err(Error::BoundaryWall { wall: [0, 1], cone: 0 }));
        assert_eq!(wall_data(&f, [1, 2]), Err(Error::NotAWall([1, 2])));
    }

    #[test]
    fn p1_cubed() {
        let f = examples::p1p1p1_fan();
        for w in f.walls() {
            let r = wall_data(&f, w.rays).unwrap();
            assert_eq!((r.self_intersections, r.defect), (Some([0, 0]), Some(2)));
        }
    }

    #[test]
    fn wall_order_is_irrelevant() {
        let f = examples::p3_fan();
        assert_eq!(wall_data(&f, [2, 0]).unwrap().wall, [0, 2]);
    }
}
