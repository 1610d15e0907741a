//! Fans of smooth toric threefolds and the decorated graphs of their toric
//! boundaries.
//!
//! A maximal cone is a triple point of the anticanonical boundary, a 2-cone
//! (wall) is a curve, and a wall lying in two maximal cones is a compact
//! rational curve whose defect is `2 + a + b`, with `a`, `b` its
//! self-intersections in the two divisors containing it.

mod boundary;
mod quartic;
mod wall;

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use boundary::{boundary_graph, divisor_class_counts, divisor_classification, DivisorSurface};
pub use quartic::quartic_mirror_fan;
pub use wall::{wall_data, wall_reports, WallReport};

/// Largest absolute ray coordinate accepted; keeps every determinant and
/// cross product used here inside `i128`.
pub const MAX_COORDINATE: i64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fan {
    pub rays: Vec<[i64; 3]>,
    pub cones: Vec<[usize; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FanViolation {
    CoordinateTooLarge { ray: usize },
    ZeroRay { ray: usize },
    NonPrimitiveRay { ray: usize },
    DuplicateRay { first: usize, second: usize },
    RayIndexOutOfRange { cone: usize },
    RepeatedRayInCone { cone: usize },
    DuplicateCone { first: usize, second: usize },
    NonUnimodular { cone: usize, det: i128 },
    ImproperIntersection { cones: [usize; 2] },
    WallInManyCones { wall: [usize; 2], count: usize },
}

impl fmt::Display for FanViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FanViolation::CoordinateTooLarge { ray } => {
                write!(f, "ray {ray} has a coordinate beyond ±{MAX_COORDINATE}")
            }
            FanViolation::ZeroRay { ray } => write!(f, "ray {ray} is zero"),
            FanViolation::NonPrimitiveRay { ray } => write!(f, "non-primitive ray {ray}"),
            FanViolation::DuplicateRay { first, second } => write!(f, "duplicate ray: {first} and {second}"),
            FanViolation::RayIndexOutOfRange { cone } => write!(f, "cone {cone} refers to a missing ray"),
            FanViolation::RepeatedRayInCone { cone } => write!(f, "cone {cone} repeats a ray"),
            FanViolation::DuplicateCone { first, second } => write!(f, "duplicate cone: {first} and {second}"),
            FanViolation::NonUnimodular { cone, det } => {
                write!(f, "non-unimodular cone {cone} (det = {det})")
            }
            FanViolation::ImproperIntersection { cones: [a, b] } => {
                write!(f, "cones {a} and {b} do not meet in a common face")
            }
            FanViolation::WallInManyCones { wall: [i, j], count } => {
                write!(f, "wall ({i}, {j}) lies in {count} maximal cones")
            }
        }
    }
}

impl Serialize for FanViolation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A 2-cone spanned by two rays (`rays[0] < rays[1]`) with the maximal cones containing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Wall {
    pub rays: [usize; 2],
    pub cones: Vec<usize>,
}

pub(crate) type V3 = [i128; 3];

pub(crate) fn widen(v: [i64; 3]) -> V3 {
    v.map(i128::from)
}

pub(crate) fn det3(a: V3, b: V3, c: V3) -> i128 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0])
}

pub(crate) fn cross(a: V3, b: V3) -> V3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

pub(crate) fn dot(a: V3, b: V3) -> i128 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

impl Fan {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("fan serializes")
    }

    pub(crate) fn ray(&self, i: usize) -> V3 {
        widen(self.rays[i])
    }

    pub(crate) fn cone_det(&self, c: usize) -> i128 {
        let [a, b, d] = self.cones[c];
        det3(self.ray(a), self.ray(b), self.ray(d))
    }

    /// Walls in order of their sorted ray pairs.
    pub fn walls(&self) -> Vec<Wall> {
        let mut map: BTreeMap<[usize; 2], Vec<usize>> = BTreeMap::new();
        for (c, cone) in self.cones.iter().enumerate() {
            for p in 0..3 {
                let (a, b) = (cone[(p + 1) % 3], cone[(p + 2) % 3]);
                map.entry([a.min(b), a.max(b)]).or_default().push(c);
            }
        }
        map.into_iter().map(|(rays, cones)| Wall { rays, cones }).collect()
    }

    /// Lists every violated smoothness or fan condition; empty iff valid.
    pub fn validate(&self) -> Vec<FanViolation> {
        let mut out = Vec::new();
        for (i, r) in self.rays.iter().enumerate() {
            if r.iter().any(|c| c.abs() > MAX_COORDINATE) {
                out.push(FanViolation::CoordinateTooLarge { ray: i });
            } else if r.iter().all(|&c| c == 0) {
                out.push(FanViolation::ZeroRay { ray: i });
            } else if r[0].gcd(&r[1]).gcd(&r[2]) != 1 {
                out.push(FanViolation::NonPrimitiveRay { ray: i });
            }
        }
        for i in 0..self.rays.len() {
            for j in i + 1..self.rays.len() {
                if self.rays[i] == self.rays[j] {
                    out.push(FanViolation::DuplicateRay { first: i, second: j });
                }
            }
        }
        if !out.is_empty() {
            return out;
        }

        let mut well_formed = vec![true; self.cones.len()];
        for (c, cone) in self.cones.iter().enumerate() {
            if cone.iter().any(|&r| r >= self.rays.len()) {
                out.push(FanViolation::RayIndexOutOfRange { cone: c });
                well_formed[c] = false;
            } else if cone[0] == cone[1] || cone[1] == cone[2] || cone[0] == cone[2] {
                out.push(FanViolation::RepeatedRayInCone { cone: c });
                well_formed[c] = false;
            }
        }
        let mut seen: BTreeMap<[usize; 3], usize> = BTreeMap::new();
        for (c, cone) in self.cones.iter().enumerate() {
            let mut key = *cone;
            key.sort_unstable();
            if let Some(&first) = seen.get(&key) {
                out.push(FanViolation::DuplicateCone { first, second: c });
                well_formed[c] = false;
            } else {
                seen.insert(key, c);
            }
        }
        let mut nonsingular = vec![false; self.cones.len()];
        for c in (0..self.cones.len()).filter(|&c| well_formed[c]) {
            let det = self.cone_det(c);
            nonsingular[c] = det != 0;
            if det.abs() != 1 {
                out.push(FanViolation::NonUnimodular { cone: c, det });
            }
        }
        for a in 0..self.cones.len() {
            for b in a + 1..self.cones.len() {
                if nonsingular[a] && nonsingular[b] && !self.meet_properly(a, b) {
                    out.push(FanViolation::ImproperIntersection { cones: [a, b] });
                }
            }
        }
        if well_formed.iter().all(|&w| w) {
            for w in self.walls() {
                if w.cones.len() > 2 {
                    out.push(FanViolation::WallInManyCones {
                        wall: w.rays,
                        count: w.cones.len(),
                    });
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub(crate) fn check(&self) -> Result<()> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidFan(v))
        }
    }

    /// Inward facet normals `n_p` of a nonsingular cone: `x` lies in the cone
    /// iff `n_p · x >= 0` for all `p`, and `n_p · x = 0` iff the coordinate of
    /// `x` along ray `p` vanishes.
    fn facet_normals(&self, c: usize) -> [V3; 3] {
        let [a, b, d] = self.cones[c].map(|r| self.ray(r));
        let s = self.cone_det(c).signum();
        [cross(b, d), cross(d, a), cross(a, b)].map(|n| n.map(|x| x * s))
    }

    /// Two nonsingular simplicial cones meet properly iff every extreme ray of
    /// their intersection lies in the face spanned by their common rays. The
    /// extreme rays are among the cross products of pairs of facet normals.
    fn meet_properly(&self, a: usize, b: usize) -> bool {
        let na = self.facet_normals(a);
        let nb = self.facet_normals(b);
        let normals: Vec<V3> = na.iter().chain(nb.iter()).copied().collect();
        let shared: Vec<bool> = self.cones[a].iter().map(|r| self.cones[b].contains(r)).collect();
        let inside = |x: V3| normals.iter().all(|&n| dot(n, x) >= 0);
        let in_common_face = |x: V3| (0..3).all(|p| shared[p] || dot(na[p], x) == 0);
        for i in 0..normals.len() {
            for j in i + 1..normals.len() {
                let r = cross(normals[i], normals[j]);
                if r == [0, 0, 0] {
                    continue;
                }
                for x in [r, r.map(|c| -c)] {
                    if inside(x) && !in_common_face(x) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    #[test]
    fn p3_is_valid() {
        assert!(examples::p3_fan().validate().is_empty());
        assert_eq!(examples::p3_fan().walls().len(), 6);
    }

    #[test]
    fn det_two_cone() {
        let f = Fan {
            rays: vec![[1, 0, 0], [0, 1, 0], [1, 1, 2]],
            cones: vec![[0, 1, 2]],
        };
        let v = f.validate();
        assert_eq!(v, vec![FanViolation::NonUnimodular { cone: 0, det: 2 }]);
        assert!(v[0].to_string().contains("non-unimodular cone"));
    }

    #[test]
    fn duplicate_ray() {
        let f = Fan {
            rays: vec![[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 0, 0]],
            cones: vec![[0, 1, 2]],
        };
        assert!(f.validate().contains(&FanViolation::DuplicateRay { first: 0, second: 3 }));
    }

    #[test]
    fn overlapping_cones() {
        // second cone shares the positive octant's interior
        let f = Fan {
            rays: vec![[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]],
            cones: vec![[0, 1, 2], [0, 1, 3]],
        };
        assert!(f
            .validate()
            .contains(&FanViolation::ImproperIntersection { cones: [0, 1] }));
    }

    #[test]
    fn non_primitive_and_zero() {
        let f = Fan {
            rays: vec![[2, 0, 0], [0, 0, 0]],
            cones: vec![],
        };
        assert_eq!(
            f.validate(),
            vec![FanViolation::NonPrimitiveRay { ray: 0 }, FanViolation::ZeroRay { ray: 1 }]
        );
    }

    #[test]
    fn conifold_walls() {
        let w = examples::conifold_fan().walls();
        assert_eq!(w.len(), 5);
        assert_eq!(w.iter().filter(|w| w.cones.len() == 2).count(), 1);
    }
}
