use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::NonzeroRational;

/// `coeff · x^x_exp · u^u_exp`, of degree `2 · u_exp`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Monomial {
    pub coeff: NonzeroRational,
    pub x_exp: i64,
    pub u_exp: i64,
}

impl Monomial {
    pub fn degree(&self) -> i64 {
        2 * self.u_exp
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})·x^{}·u^{}", self.coeff, self.x_exp, self.u_exp)
    }
}

/// A 2-periodic structure `c · x^m · u` of the edge model.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TwoPerE {
    pub coeff: NonzeroRational,
    pub x_exp: i64,
}

impl TwoPerE {
    pub fn new(coeff: NonzeroRational, x_exp: i64) -> Self {
        TwoPerE { coeff, x_exp }
    }

    /// The structure `u`.
    pub fn u() -> Self {
        TwoPerE::new(NonzeroRational::one(), 0)
    }

    pub fn monomial(&self) -> Monomial {
        Monomial {
            coeff: self.coeff.clone(),
            x_exp: self.x_exp,
            u_exp: 1,
        }
    }

    /// Multiplication by the unit `c · x^n`.
    pub fn scale(&self, c: &NonzeroRational, n: i64) -> Self {
        TwoPerE::new(&self.coeff * c, self.x_exp + n)
    }

    /// The unique unit `(c, n)` with `other = c · x^n · self`.
    pub fn ratio_to(&self, other: &TwoPerE) -> (NonzeroRational, i64) {
        (&other.coeff / &self.coeff, other.x_exp - self.x_exp)
    }
}

/// Discrete part `[[eps, n], [0, 1]]` of an edge autoequivalence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Discrete {
    pub eps: i8,
    pub n: i64,
}

impl Discrete {
    pub fn compose(self, inner: Discrete) -> Discrete {
        Discrete {
            eps: self.eps * inner.eps,
            n: i64::from(self.eps) * inner.n + self.n,
        }
    }

    pub fn matrix(self) -> [[i64; 2]; 2] {
        [[i64::from(self.eps), self.n], [0, 1]]
    }
}

/// Graded automorphism `x ↦ lam_x · x^eps`, `u ↦ lam_u · x^n · u`, with a shift bit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EdgeAut {
    pub eps: i8,
    pub n: i64,
    pub lam_x: NonzeroRational,
    pub lam_u: NonzeroRational,
    #[serde(with = "shift_bit")]
    pub shift: bool,
}

pub(crate) mod shift_bit {
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(b: &bool, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u8(u8::from(*b))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<bool, D::Error> {
        match u8::deserialize(d)? {
            0 => Ok(false),
            1 => Ok(true),
            other => Err(de::Error::custom(format!("shift must be 0 or 1, got {other}"))),
        }
    }
}

impl EdgeAut {
    /// Panics unless `eps` is `±1`.
    pub fn new(eps: i8, n: i64, lam_x: NonzeroRational, lam_u: NonzeroRational, shift: bool) -> Self {
        assert!(eps == 1 || eps == -1, "eps must be ±1");
        EdgeAut { eps, n, lam_x, lam_u, shift }
    }

    pub fn identity() -> Self {
        EdgeAut::new(1, 0, NonzeroRational::one(), NonzeroRational::one(), false)
    }

    /// `φ_n = (x ↦ x^-1, u ↦ x^n u)` with the shift; an involution.
    pub fn phi(n: i64) -> Self {
        EdgeAut::new(-1, n, NonzeroRational::one(), NonzeroRational::one(), true)
    }

    pub fn discrete(&self) -> Discrete {
        Discrete { eps: self.eps, n: self.n }
    }

    /// `self ∘ inner` as ring maps: apply `inner` first.
    pub fn compose(&self, inner: &EdgeAut) -> EdgeAut {
        let d = self.discrete().compose(inner.discrete());
        EdgeAut {
            eps: d.eps,
            n: d.n,
            lam_x: &inner.lam_x * &self.lam_x.pow(i64::from(inner.eps)),
            lam_u: &(&inner.lam_u * &self.lam_x.pow(inner.n)) * &self.lam_u,
            shift: self.shift ^ inner.shift,
        }
    }

    pub fn inverse(&self) -> EdgeAut {
        let lam_x = self.lam_x.pow(-i64::from(self.eps));
        let n = -i64::from(self.eps) * self.n;
        let lam_u = (&self.lam_u * &lam_x.pow(self.n)).inv();
        EdgeAut {
            eps: self.eps,
            n,
            lam_x,
            lam_u,
            shift: self.shift,
        }
    }

    pub fn act_on_monomial(&self, m: &Monomial) -> Monomial {
        let coeff = &(&m.coeff * &self.lam_x.pow(m.x_exp)) * &self.lam_u.pow(m.u_exp);
        Monomial {
            coeff,
            x_exp: i64::from(self.eps) * m.x_exp + self.n * m.u_exp,
            u_exp: m.u_exp,
        }
    }

    /// Image of a 2-periodic structure; the shift bit acts trivially.
    pub fn act(&self, t: &TwoPerE) -> TwoPerE {
        let m = self.act_on_monomial(&t.monomial());
        TwoPerE::new(m.coeff, m.x_exp)
    }

    pub fn stabilizes(&self, t: &TwoPerE) -> bool {
        self.act(t) == *t
    }
}

impl fmt::Display for EdgeAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(eps={}, n={}, lamX={}, lamU={}, shift={})",
            self.eps,
            self.n,
            self.lam_x,
            self.lam_u,
            u8::from(self.shift)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> NonzeroRational {
        NonzeroRational::ratio(n, d).unwrap()
    }

    #[test]
    fn phi_two_is_an_involution() {
        assert_eq!(EdgeAut::phi(2).compose(&EdgeAut::phi(2)), EdgeAut::identity());
    }

    #[test]
    fn discrete_products() {
        let a = Discrete { eps: -1, n: 3 };
        let b = Discrete { eps: -1, n: 1 };
        assert_eq!(a.compose(b), Discrete { eps: 1, n: 2 });
        assert_eq!(a.compose(b).matrix(), [[1, 2], [0, 1]]);
    }

    #[test]
    fn actions() {
        let u = TwoPerE::u();
        assert_eq!(EdgeAut::identity().act(&u), u);
        let a = EdgeAut::new(-1, 5, q(1, 1), q(1, 1), false);
        assert_eq!(a.act(&u), TwoPerE::new(q(1, 1), 5));
        let b = EdgeAut::new(1, 0, q(2, 1), q(3, 1), false);
        assert_eq!(b.act(&TwoPerE::new(q(5, 1), 2)), TwoPerE::new(q(60, 1), 2));
    }

    #[test]
    fn stabilizers() {
        let u = TwoPerE::u();
        assert!(EdgeAut::new(-1, 0, q(7, 1), q(1, 1), true).stabilizes(&u));
        assert!(!EdgeAut::new(1, 1, q(1, 1), q(1, 1), false).stabilizes(&u));
        let a = EdgeAut::new(1, -2, q(2, 1), q(1, 4), false);
        let t = TwoPerE::new(q(1, 1), 2);
        assert_eq!(a.act(&t), u);
        assert!(!a.stabilizes(&t));
    }

    #[test]
    fn inverse_of_coset_element() {
        let a = EdgeAut::new(-1, 3, q(2, 1), q(5, 7), true);
        let inv = a.inverse();
        assert_eq!((inv.eps, inv.n), (-1, 3));
        assert_eq!(inv.lam_u, q(7, 40));
        assert_eq!(a.compose(&inv), EdgeAut::identity());
        assert_eq!(inv.compose(&a), EdgeAut::identity());
    }

    #[test]
    fn serde_shape() {
        let s = serde_json::to_string(&EdgeAut::phi(1)).unwrap();
        assert_eq!(s, r#"{"eps":-1,"n":1,"lamX":"1/1","lamU":"1/1","shift":1}"#);
    }
}
