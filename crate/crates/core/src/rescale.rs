//! Characters `χ: G → Q^×` and the rescalings `Θ_χ(f) = χ(deg f) · f`.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};

use crate::abgroup::{generates_whole_group, AbGroup, GroupElement, Hom};
use crate::diagram::Diagram;
use crate::grading::{degree, expanded_degrees, DegreeAssignment, DegreeModel};
use crate::relations::Relation;
use crate::{Error, Rational, Result};

fn rational_pow(base: &Rational, e: &BigInt) -> Rational {
    let (sign, mag) = (e.sign(), e.magnitude());
    let mut acc = Rational::one();
    let mut sq = base.clone();
    for i in 0..mag.bits() {
        if mag.bit(i) {
            acc *= &sq;
        }
        sq = &sq * &sq;
    }
    if sign == Sign::Minus {
        acc.recip()
    } else {
        acc
    }
}

/// A homomorphism from a presented abelian group to the nonzero rationals.
#[derive(Clone, Debug)]
pub struct Character {
    domain: Arc<AbGroup>,
    images: Vec<Rational>,
}

impl Character {
    pub fn new(domain: &Arc<AbGroup>, images: Vec<Rational>) -> Result<Self> {
        if images.len() != domain.n_gens() {
            return Err(Error::Length {
                expected: domain.n_gens(),
                found: images.len(),
            });
        }
        if let Some(i) = images.iter().position(Zero::is_zero) {
            return Err(Error::ZeroImage(domain.gen_names()[i].clone()));
        }
        let chi = Character {
            domain: domain.clone(),
            images,
        };
        for (r, row) in domain.relators().row_vecs().iter().enumerate() {
            let v = chi.eval_coeffs(row);
            if !v.is_one() {
                return Err(Error::NotACharacter {
                    relator: r,
                    value: crate::coxeter::rational_to_string(&v),
                });
            }
        }
        Ok(chi)
    }

    pub fn trivial(domain: &Arc<AbGroup>) -> Self {
        Character {
            domain: domain.clone(),
            images: alloc::vec![Rational::one(); domain.n_gens()],
        }
    }

    /// `χ ∘ h`.
    pub fn pullback(&self, h: &Hom) -> Result<Character> {
        if **h.codomain() != *self.domain {
            return Err(Error::GroupMismatch);
        }
        let images = h
            .images()
            .iter()
            .map(|x| self.eval(x))
            .collect::<Result<Vec<_>>>()?;
        Character::new(h.domain(), images)
    }

    pub fn domain(&self) -> &Arc<AbGroup> {
        &self.domain
    }

    pub fn images(&self) -> &[Rational] {
        &self.images
    }

    fn eval_coeffs(&self, x: &[BigInt]) -> Rational {
        x.iter()
            .zip(&self.images)
            .filter(|(c, _)| !c.is_zero())
            .fold(Rational::one(), |acc, (c, v)| acc * rational_pow(v, c))
    }

    pub fn eval(&self, x: &GroupElement) -> Result<Rational> {
        if **x.group() != *self.domain {
            return Err(Error::GroupMismatch);
        }
        Ok(self.eval_coeffs(x.coeffs()))
    }

    /// Trivial on the whole group, i.e. on every generator.
    pub fn is_trivial(&self) -> bool {
        self.images.iter().all(One::is_one)
    }
}

/// A diagram with a nonzero scalar in front.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledMorphism {
    pub scalar: Rational,
    pub diagram: Diagram,
}

pub fn theta_apply<M: DegreeModel + ?Sized>(
    chi: &Character,
    d: &Diagram,
    model: &M,
) -> Result<ScaledMorphism> {
    if **model.group() != *chi.domain {
        return Err(Error::GroupMismatch);
    }
    Ok(ScaledMorphism {
        scalar: chi.eval(&degree(d, model)?)?,
        diagram: d.clone(),
    })
}

/// Every term of `rel`, and every monomial of its polynomial boxes,
/// acquires the same scalar under `Θ_χ`.
pub fn relation_preserved<M: DegreeModel + ?Sized>(
    chi: &Character,
    rel: &Relation,
    model: &M,
) -> Result<bool> {
    if **model.group() != *chi.domain {
        return Err(Error::GroupMismatch);
    }
    let mut seen: Option<Rational> = None;
    for (_, d) in &rel.terms {
        for x in expanded_degrees(d, model)? {
            let v = chi.eval(&x)?;
            match &seen {
                None => seen = Some(v),
                Some(w) if *w != v => return Ok(false),
                _ => {}
            }
        }
    }
    Ok(true)
}

/// For `χ` with `χ(f_s) = 1` for every `s` and `χ = 1` on `gamma`, decides
/// whether `χ` is trivial.
pub fn identity_criterion(
    a: &DegreeAssignment,
    gamma: &[GroupElement],
    chi: &Character,
) -> Result<bool> {
    if **a.group() != *chi.domain {
        return Err(Error::GroupMismatch);
    }
    for s in a.system().colors() {
        if !chi.eval(a.f(s))?.is_one() {
            return Err(Error::Hypothesis(alloc::format!(
                "χ(f_{}) ≠ 1",
                a.system().label(s)
            )));
        }
    }
    for x in gamma {
        if !chi.eval(x)?.is_one() {
            return Err(Error::Hypothesis(alloc::format!("χ({}) ≠ 1", x.symbolic())));
        }
    }
    Ok(chi.is_trivial())
}

/// Whether every character satisfying the hypotheses of
/// [`identity_criterion`] is trivial: the `f_s` and `gamma` generate.
pub fn identity_criterion_universal(a: &DegreeAssignment, gamma: &[GroupElement]) -> Result<bool> {
    let mut elems: Vec<GroupElement> = a.system().colors().map(|s| a.f(s).clone()).collect();
    elems.extend(gamma.iter().cloned());
    Ok(generates_whole_group(a.group(), &elems)?.generates)
}

/// The group of rational characters of `G ≅ Z^ρ ⊕ ⊕ Z/d_i`: `ρ` free
/// parameters, and `χ` on `Z/d_i` is `±1` if `d_i` is even, `1` otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterClassification {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
    /// Characters of each `Z/d_i`.
    pub torsion_counts: Vec<u32>,
    /// `χ(e_j) = Π_k p_k^{exponents[j][k]}` for parameters `p_k`, torsion
    /// slots first.
    pub exponents: Vec<Vec<BigInt>>,
}

impl CharacterClassification {
    pub fn torsion_characters(&self) -> u64 {
        self.torsion_counts.iter().map(|&c| u64::from(c)).product()
    }

    pub fn describe(&self) -> String {
        let mut out = alloc::format!(
            "free rank {}; rational characters: {} free parameters",
            self.free_rank,
            self.free_rank
        );
        for (d, c) in self.torsion.iter().zip(&self.torsion_counts) {
            out.push_str(&alloc::format!("; Z/{d}: {c} choice{}", if *c == 1 { "" } else { "s" }));
        }
        out
    }
}

pub fn classify_characters(g: &Arc<AbGroup>) -> CharacterClassification {
    let torsion = g.torsion();
    let two = BigInt::from(2);
    let torsion_counts = torsion
        .iter()
        .map(|d| if (d % &two).is_zero() { 2 } else { 1 })
        .collect();
    let exponents = (0..g.n_gens())
        .map(|j| GroupElement::generator(g, j).coordinates())
        .collect();
    CharacterClassification {
        free_rank: g.free_rank_of(),
        torsion,
        torsion_counts,
        exponents,
    }
}

/// The character with the given parameters, one per slot of
/// [`CharacterClassification::exponents`]. Torsion parameters must be `±1`
/// with `p^d = 1`.
pub fn character_from_parameters(g: &Arc<AbGroup>, params: &[Rational]) -> Result<Character> {
    let c = classify_characters(g);
    let slots = c.torsion.len() + c.free_rank;
    if params.len() != slots {
        return Err(Error::Length {
            expected: slots,
            found: params.len(),
        });
    }
    let images = c
        .exponents
        .iter()
        .map(|row| {
            row.iter()
                .zip(params)
                .fold(Rational::one(), |acc, (e, p)| acc * rational_pow(p, e))
        })
        .collect();
    Character::new(g, images)
}
