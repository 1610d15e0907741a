use serde::Serialize;

use crate::algebra::NonzeroRational;
use crate::error::{Error, Result};

/// Scalars of the six generating morphisms of the pair of pants, two exact
/// triangles with opposite orientation between three objects `O1, O2, O3`:
///
/// ```text
/// c1: O1 -> O2   c2: O2 -> O3   c3: O3 -> O1
/// c4: O2 -> O1   c5: O3 -> O2   c6: O1 -> O3
/// ```
///
/// Puncture `p` sits between the two morphisms joining the same pair of
/// objects, so the puncture scalars are `(c1 c4, c2 c5, c3 c6)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PantsPresentation {
    scalars: [NonzeroRational; 6],
}

/// `(source, target)` object of each generator.
const ENDPOINTS: [(usize, usize); 6] = [(0, 1), (1, 2), (2, 0), (1, 0), (2, 1), (0, 2)];

impl PantsPresentation {
    pub fn new(scalars: [NonzeroRational; 6]) -> Result<Self> {
        for (t, tri) in [[0, 1, 2], [3, 4, 5]].iter().enumerate() {
            let product = tri.iter().fold(NonzeroRational::one(), |acc, &i| &acc * &scalars[i]);
            if !product.is_one() {
                return Err(Error::TriangleConstraintViolated {
                    triangle: t,
                    product: product.to_string(),
                });
            }
        }
        Ok(PantsPresentation { scalars })
    }

    /// The normal form `(p1, p2, p3, 1, 1, 1)`; requires `p1 p2 p3 = 1`.
    pub fn from_punctures(p: [NonzeroRational; 3]) -> Result<Self> {
        let [a, b, c] = p;
        let one = NonzeroRational::one;
        PantsPresentation::new([a, b, c, one(), one(), one()])
    }

    pub fn scalars(&self) -> &[NonzeroRational; 6] {
        &self.scalars
    }

    pub fn puncture_scalars(&self) -> [NonzeroRational; 3] {
        let c = &self.scalars;
        [&c[0] * &c[3], &c[1] * &c[4], &c[2] * &c[5]]
    }

    /// Rescale the objects by `d`: a morphism `a -> b` is multiplied by `d_b / d_a`.
    pub fn rescale(&self, d: &[NonzeroRational; 3]) -> Self {
        let scalars = std::array::from_fn(|i| {
            let (s, t) = ENDPOINTS[i];
            &self.scalars[i] * &(&d[t] / &d[s])
        });
        PantsPresentation { scalars }
    }

    /// The rescaling making `c4 = c5 = c6 = 1`.
    pub fn normal_form(&self) -> Self {
        let c = &self.scalars;
        let d2 = c[3].clone();
        let d3 = &c[4] * &c[3];
        self.rescale(&[NonzeroRational::one(), d2, d3])
    }
}
