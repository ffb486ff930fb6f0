use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{smith_normal_form, IntMatrix, SmithForm};
use crate::{Error, Result};

/// A finitely presented abelian group: named generators modulo the row
/// lattice of an integer relator matrix.
///
/// The Smith normal form of the relators is computed once at construction and
/// gives every element a unique canonical form.
#[derive(Clone)]
pub struct AbGroup {
    gens: Vec<String>,
    rels: IntMatrix,
    snf: SmithForm,
}

impl AbGroup {
    pub fn new(gens: Vec<String>, rels: IntMatrix) -> Result<Arc<Self>> {
        if rels.cols() != gens.len() {
            return Err(Error::Length {
                expected: gens.len(),
                found: rels.cols(),
            });
        }
        let snf = smith_normal_form(&rels);
        Ok(Arc::new(AbGroup { gens, rels, snf }))
    }

    /// `n` generators, relators given as rows.
    pub fn presented(gens: Vec<String>, rels: Vec<Vec<BigInt>>) -> Result<Arc<Self>> {
        let m = IntMatrix::from_rows(gens.len(), rels)?;
        Self::new(gens, m)
    }

    pub fn free(gens: Vec<String>) -> Arc<Self> {
        let n = gens.len();
        Self::new(gens, IntMatrix::zeros(0, n)).expect("free group presentation")
    }

    /// The group `Z^n` with generators `e1..en`.
    pub fn free_rank(n: usize) -> Arc<Self> {
        Self::free((1..=n).map(|i| alloc::format!("e{i}")).collect())
    }

    pub fn n_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn gen_names(&self) -> &[String] {
        &self.gens
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g == name)
    }

    pub fn relators(&self) -> &IntMatrix {
        &self.rels
    }

    pub fn smith(&self) -> &SmithForm {
        &self.snf
    }

    /// Invariant factors greater than one, in divisibility order.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.snf
            .diagonal()
            .into_iter()
            .filter(|d| !d.is_one())
            .collect()
    }

    pub fn free_rank_of(&self) -> usize {
        self.gens.len() - self.snf.rank
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank_of() == 0 && self.torsion().is_empty()
    }

    /// Same generators and same relator matrix.
    pub fn same_presentation(&self, other: &AbGroup) -> bool {
        self.gens == other.gens && self.rels == other.rels
    }

    /// Canonical representative of `x` in SNF coordinates: `x·V` with torsion
    /// coordinates reduced modulo their invariant factor.
    pub fn canonical(&self, x: &[BigInt]) -> Vec<BigInt> {
        let mut y = self.snf.v.apply_row(x);
        for (i, yi) in y.iter_mut().enumerate().take(self.snf.rank) {
            let d = &self.snf.d[(i, i)];
            *yi = yi.mod_floor(d);
        }
        y
    }

    /// Canonical coordinates with the always-zero unit-factor slots dropped:
    /// torsion coordinates first, then free coordinates.
    pub fn coordinates(&self, x: &[BigInt]) -> Vec<BigInt> {
        let y = self.canonical(x);
        y.into_iter()
            .enumerate()
            .filter(|(i, _)| *i >= self.snf.rank || !self.snf.d[(*i, *i)].is_one())
            .map(|(_, v)| v)
            .collect()
    }

    /// Direct sum `self × other`, generators concatenated.
    pub fn product(&self, other: &AbGroup) -> Arc<AbGroup> {
        let (n1, n2) = (self.n_gens(), other.n_gens());
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        let mut rows = Vec::new();
        for r in self.rels.row_vecs() {
            let mut row = r;
            row.resize(n1 + n2, BigInt::zero());
            rows.push(row);
        }
        for r in other.rels.row_vecs() {
            let mut row = vec![BigInt::zero(); n1];
            row.extend(r);
            rows.push(row);
        }
        AbGroup::presented(gens, rows).expect("product presentation")
    }

    /// Describes the isomorphism type, e.g. `Z^3`, `Z/2 x Z`, `0`.
    pub fn structure(&self) -> String {
        let mut parts: Vec<String> = self
            .torsion()
            .iter()
            .map(|d| alloc::format!("Z/{d}"))
            .collect();
        match self.free_rank_of() {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(alloc::format!("Z^{r}")),
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" x ")
        }
    }
}

impl PartialEq for AbGroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_presentation(other)
    }
}

impl Eq for AbGroup {}

impl fmt::Debug for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbGroup<{:?} / {:?}>", self.gens, self.rels)
    }
}

pub(crate) fn same_group(a: &Arc<AbGroup>, b: &Arc<AbGroup>) -> bool {
    Arc::ptr_eq(a, b) || a.same_presentation(b)
}

/// An element of an [`AbGroup`], stored as an integer combination of generators.
#[derive(Clone)]
pub struct GroupElement {
    group: Arc<AbGroup>,
    coeffs: Vec<BigInt>,
}

impl GroupElement {
    pub fn new(group: &Arc<AbGroup>, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != group.n_gens() {
            return Err(Error::Length {
                expected: group.n_gens(),
                found: coeffs.len(),
            });
        }
        Ok(GroupElement {
            group: group.clone(),
            coeffs,
        })
    }

    pub fn from_i64(group: &Arc<AbGroup>, coeffs: &[i64]) -> Result<Self> {
        Self::new(group, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(group: &Arc<AbGroup>) -> Self {
        GroupElement {
            group: group.clone(),
            coeffs: vec![BigInt::zero(); group.n_gens()],
        }
    }

    pub fn generator(group: &Arc<AbGroup>, i: usize) -> Self {
        let mut e = Self::zero(group);
        e.coeffs[i] = BigInt::one();
        e
    }

    pub fn named(group: &Arc<AbGroup>, name: &str) -> Option<Self> {
        group.gen_index(name).map(|i| Self::generator(group, i))
    }

    pub fn group(&self) -> &Arc<AbGroup> {
        &self.group
    }

    /// The stored (non-canonical) coefficients.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn canonical(&self) -> Vec<BigInt> {
        self.group.canonical(&self.coeffs)
    }

    pub fn coordinates(&self) -> Vec<BigInt> {
        self.group.coordinates(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.canonical().iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        GroupElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn checked_add(&self, other: &GroupElement) -> Result<GroupElement> {
        if !same_group(&self.group, &other.group) {
            return Err(Error::GroupMismatch);
        }
        Ok(GroupElement {
            group: self.group.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Writes the stored coefficients in terms of generator names, e.g.
    /// `g_s - g_t`.
    pub fn symbolic(&self) -> String {
        let mut out = String::new();
        for (c, name) in self.coeffs.iter().zip(self.group.gen_names()) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            out.push_str(name);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group) && self.canonical() == other.canonical()
    }
}

impl Eq for GroupElement {}

impl fmt::Display for GroupElement {
    /// Canonical coordinates as a tuple, e.g. `(1,-1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coordinates().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self, self.symbolic())
    }
}

impl Add for &GroupElement {
    type Output = GroupElement;

    fn add(self, rhs: &GroupElement) -> GroupElement {
        self.checked_add(rhs).expect("adding elements of different groups")
    }
}

impl Add for GroupElement {
    type Output = GroupElement;

    fn add(self, rhs: GroupElement) -> GroupElement {
        &self + &rhs
    }
}

impl Neg for &GroupElement {
    type Output = GroupElement;

    fn neg(self) -> GroupElement {
        GroupElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for GroupElement {
    type Output = GroupElement;

    fn neg(self) -> GroupElement {
        -&self
    }
}

impl Sub for &GroupElement {
    type Output = GroupElement;

    fn sub(self, rhs: &GroupElement) -> GroupElement {
        self + &(-rhs)
    }
}

impl Sub for GroupElement {
    type Output = GroupElement;

    fn sub(self, rhs: GroupElement) -> GroupElement {
        &self - &rhs
    }
}

/// The quotient of `group` by the subgroup generated by `sub`, together with
/// the projection (generators map to generators).
pub fn quotient(
    group: &Arc<AbGroup>,
    sub: &[GroupElement],
) -> Result<(Arc<AbGroup>, super::Hom)> {
    let mut rows = group.relators().row_vecs();
    for e in sub {
        if !same_group(e.group(), group) {
            return Err(Error::GroupMismatch);
        }
        rows.push(e.coeffs().to_vec());
    }
    let q = AbGroup::presented(group.gen_names().to_vec(), rows)?;
    let images = (0..group.n_gens())
        .map(|i| GroupElement::generator(&q, i))
        .collect();
    let proj = super::Hom::new(group, &q, images)?;
    Ok((q, proj))
}

/// Answer of [`generates_whole_group`]: whether the elements generate, plus
/// the structure of the quotient by their span as certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationCertificate {
    pub generates: bool,
    pub quotient_torsion: Vec<BigInt>,
    pub quotient_free_rank: usize,
}

/// Decides whether `elems` generate `group`, via the Smith normal form of the
/// relators stacked with the element rows.
pub fn generates_whole_group(
    group: &Arc<AbGroup>,
    elems: &[GroupElement],
) -> Result<GenerationCertificate> {
    let (q, _) = quotient(group, elems)?;
    Ok(GenerationCertificate {
        generates: q.is_trivial(),
        quotient_torsion: q.torsion(),
        quotient_free_rank: q.free_rank_of(),
    })
}
