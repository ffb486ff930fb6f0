use alloc::sync::Arc;
use alloc::vec::Vec;

use super::group::{same_group, AbGroup, GroupElement};
use crate::{Error, Result};

/// A validated homomorphism of presented abelian groups, given by the images
/// of the domain generators.
#[derive(Clone, Debug)]
pub struct Hom {
    domain: Arc<AbGroup>,
    codomain: Arc<AbGroup>,
    images: Vec<GroupElement>,
}

impl Hom {
    /// Fails with the first relator of `domain` whose image is nonzero.
    pub fn new(
        domain: &Arc<AbGroup>,
        codomain: &Arc<AbGroup>,
        images: Vec<GroupElement>,
    ) -> Result<Self> {
        if images.len() != domain.n_gens() {
            return Err(Error::Length {
                expected: domain.n_gens(),
                found: images.len(),
            });
        }
        if images.iter().any(|im| !same_group(im.group(), codomain)) {
            return Err(Error::GroupMismatch);
        }
        let hom = Hom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            images,
        };
        for (r, row) in domain.relators().row_vecs().into_iter().enumerate() {
            let image = hom.apply_coeffs(&row);
            if !image.is_zero() {
                return Err(Error::NotAHomomorphism {
                    relator: r,
                    image: image.symbolic(),
                });
            }
        }
        Ok(hom)
    }

    pub fn identity(group: &Arc<AbGroup>) -> Self {
        let images = (0..group.n_gens())
            .map(|i| GroupElement::generator(group, i))
            .collect();
        Hom {
            domain: group.clone(),
            codomain: group.clone(),
            images,
        }
    }

    pub fn domain(&self) -> &Arc<AbGroup> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<AbGroup> {
        &self.codomain
    }

    pub fn images(&self) -> &[GroupElement] {
        &self.images
    }

    fn apply_coeffs(&self, x: &[num_bigint::BigInt]) -> GroupElement {
        let mut acc = GroupElement::zero(&self.codomain);
        for (c, im) in x.iter().zip(&self.images) {
            acc = &acc + &im.scale(c);
        }
        acc
    }

    pub fn apply(&self, x: &GroupElement) -> Result<GroupElement> {
        if !same_group(x.group(), &self.domain) {
            return Err(Error::GroupMismatch);
        }
        Ok(self.apply_coeffs(x.coeffs()))
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Hom) -> Result<Hom> {
        if !same_group(&self.codomain, &next.domain) {
            return Err(Error::GroupMismatch);
        }
        let images = self
            .images
            .iter()
            .map(|im| next.apply(im))
            .collect::<Result<Vec<_>>>()?;
        Ok(Hom {
            domain: self.domain.clone(),
            codomain: next.codomain.clone(),
            images,
        })
    }

    /// True when every domain generator maps to itself.
    pub fn is_identity(&self) -> bool {
        same_group(&self.domain, &self.codomain)
            && self
                .images
                .iter()
                .enumerate()
                .all(|(i, im)| *im == GroupElement::generator(&self.domain, i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::{String, ToString};
    use alloc::vec;
    use num_bigint::BigInt;

    fn names(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn lambda_a2_to_bigrading() {
        let lam = AbGroup::presented(
            names(&["f_s", "g_s", "f_t", "g_t"]),
            vec![[1, 1, -1, -1].iter().map(|&x| BigInt::from(x)).collect()],
        )
        .unwrap();
        let z2 = AbGroup::free(names(&["m", "n"]));
        let f = GroupElement::from_i64(&z2, &[1, 0]).unwrap();
        let g = GroupElement::from_i64(&z2, &[0, 1]).unwrap();
        let h = Hom::new(&lam, &z2, vec![f.clone(), g.clone(), f, g]).unwrap();
        let vertex = GroupElement::from_i64(&lam, &[0, 1, 0, -1]).unwrap();
        assert!(h.apply(&vertex).unwrap().is_zero());
    }

    #[test]
    fn sum_map_and_composition() {
        let z2 = AbGroup::free(names(&["m", "n"]));
        let z = AbGroup::free(names(&["d"]));
        let one = GroupElement::from_i64(&z, &[1]).unwrap();
        let sum = Hom::new(&z2, &z, vec![one.clone(), one]).unwrap();
        let x = GroupElement::from_i64(&z2, &[1, -1]).unwrap();
        assert!(sum.apply(&x).unwrap().is_zero());
        let y = GroupElement::from_i64(&z2, &[3, 4]).unwrap();
        assert_eq!(sum.apply(&y).unwrap(), GroupElement::from_i64(&z, &[7]).unwrap());

        let id = Hom::identity(&z2);
        assert!(id.is_identity());
        let composite = id.then(&sum).unwrap();
        assert_eq!(composite.apply(&y).unwrap(), sum.apply(&y).unwrap());
    }

    #[test]
    fn relator_not_killed() {
        let z2 = AbGroup::presented(names(&["x"]), vec![vec![BigInt::from(2)]]).unwrap();
        let z = AbGroup::free(names(&["d"]));
        let err = Hom::new(&z2, &z, vec![GroupElement::from_i64(&z, &[1]).unwrap()]).unwrap_err();
        assert!(matches!(err, Error::NotAHomomorphism { relator: 0, .. }));
    }
}
