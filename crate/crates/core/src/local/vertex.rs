use serde::{Deserialize, Serialize};

use super::edge::shift_bit;
use crate::algebra::NonzeroRational;

/// A permutation of `{0, 1, 2}`, `j ↦ images[j]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation(pub [usize; 3]);

impl Permutation {
    pub const IDENTITY: Permutation = Permutation([0, 1, 2]);

    pub fn new(images: [usize; 3]) -> Option<Self> {
        let mut sorted = images;
        sorted.sort_unstable();
        (sorted == [0, 1, 2]).then_some(Permutation(images))
    }

    pub fn all() -> [Permutation; 6] {
        [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]].map(Permutation)
    }

    pub fn apply(self, j: usize) -> usize {
        self.0[j]
    }

    /// `self ∘ inner`.
    pub fn compose(self, inner: Permutation) -> Permutation {
        Permutation(inner.0.map(|j| self.0[j]))
    }

    pub fn inverse(self) -> Permutation {
        let mut inv = [0; 3];
        for j in 0..3 {
            inv[self.0[j]] = j;
        }
        Permutation(inv)
    }

    /// Moves the entry at position `j` to position `σ(j)`.
    pub fn permute<T: Clone>(self, items: &[T; 3]) -> [T; 3] {
        let mut out = items.clone();
        for j in 0..3 {
            out[self.0[j]] = items[j].clone();
        }
        out
    }
}

/// `(λ, σ, shift)` in `((k^×)^3 ⋊ S_3) × Z/2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexAut {
    pub lams: [NonzeroRational; 3],
    pub perm: Permutation,
    #[serde(with = "shift_bit")]
    pub shift: bool,
}

/// A point of the `k^×`-torsor of 2-periodic structures on the vertex model.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TwoPerV(pub NonzeroRational);

impl TwoPerV {
    pub fn one() -> Self {
        TwoPerV(NonzeroRational::one())
    }

    pub fn scale(&self, c: &NonzeroRational) -> Self {
        TwoPerV(&self.0 * c)
    }

    /// The unique `c` with `other = c · self`.
    pub fn ratio_to(&self, other: &TwoPerV) -> NonzeroRational {
        &other.0 / &self.0
    }
}

impl VertexAut {
    pub fn new(lams: [NonzeroRational; 3], perm: Permutation, shift: bool) -> Self {
        VertexAut { lams, perm, shift }
    }

    pub fn identity() -> Self {
        VertexAut::new(
            [NonzeroRational::one(), NonzeroRational::one(), NonzeroRational::one()],
            Permutation::IDENTITY,
            false,
        )
    }

    /// `(λ, σ)(μ, τ) = (λ · σ(μ), στ)`, shifts added.
    pub fn compose(&self, inner: &VertexAut) -> VertexAut {
        let moved = self.perm.permute(&inner.lams);
        let lams = [0, 1, 2].map(|j| &self.lams[j] * &moved[j]);
        VertexAut::new(lams, self.perm.compose(inner.perm), self.shift ^ inner.shift)
    }

    pub fn inverse(&self) -> VertexAut {
        let inv = self.perm.inverse();
        let lams = inv.permute(&self.lams.clone().map(|l| l.inv()));
        VertexAut::new(lams, inv, self.shift)
    }

    pub fn scalar_product(&self) -> NonzeroRational {
        &(&self.lams[0] * &self.lams[1]) * &self.lams[2]
    }

    /// `t ↦ (λ1 λ2 λ3)^-1 · t`; permutation and shift act trivially.
    pub fn act(&self, t: &TwoPerV) -> TwoPerV {
        t.scale(&self.scalar_product().inv())
    }

    pub fn stabilizes(&self, t: &TwoPerV) -> bool {
        self.act(t) == *t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> NonzeroRational {
        NonzeroRational::ratio(n, d).unwrap()
    }

    #[test]
    fn action_examples() {
        let t = TwoPerV(q(3, 1));
        assert_eq!(VertexAut::identity().act(&t), t);
        let a = VertexAut::new([q(2, 1), q(3, 1), q(1, 6)], Permutation::IDENTITY, false);
        assert!(a.stabilizes(&t));
        let b = VertexAut::new([q(1, 1), q(1, 1), q(2, 1)], Permutation::IDENTITY, false);
        assert_eq!(b.act(&t), TwoPerV(q(3, 2)));
    }

    #[test]
    fn semidirect_convention() {
        let sigma = Permutation([1, 2, 0]);
        let a = VertexAut::new([q(1, 1), q(1, 1), q(1, 1)], sigma, false);
        let b = VertexAut::new([q(2, 1), q(3, 1), q(5, 1)], Permutation::IDENTITY, false);
        // μ_j lands at position σ(j)
        assert_eq!(a.compose(&b).lams, [q(5, 1), q(2, 1), q(3, 1)]);
        assert_eq!(a.compose(&a.inverse()), VertexAut::identity());
    }

    #[test]
    fn permutations() {
        assert!(Permutation::new([0, 0, 1]).is_none());
        for s in Permutation::all() {
            assert_eq!(s.compose(s.inverse()), Permutation::IDENTITY);
        }
    }
}
