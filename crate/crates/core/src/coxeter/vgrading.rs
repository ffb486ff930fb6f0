use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{Polynomial, Realization};
use crate::abgroup::{AbGroup, GroupElement};
use crate::{Color, Error, Result};

/// A grading of `V` by an abelian group `Γ`: one degree per basis vector.
#[derive(Clone, Debug)]
pub struct VGrading {
    pub group: Arc<AbGroup>,
    pub deg_basis: Vec<GroupElement>,
}

impl VGrading {
    pub fn new(group: &Arc<AbGroup>, deg_basis: Vec<GroupElement>) -> Self {
        VGrading {
            group: group.clone(),
            deg_basis,
        }
    }

    /// Every basis vector in degree `d`.
    pub fn constant(group: &Arc<AbGroup>, dim: usize, d: GroupElement) -> Self {
        VGrading::new(group, alloc::vec![d; dim])
    }

    /// Degree of a single monomial.
    pub fn monomial_degree(&self, exponents: &[u32]) -> GroupElement {
        let mut acc = GroupElement::zero(&self.group);
        for (e, d) in exponents.iter().zip(&self.deg_basis) {
            if *e > 0 {
                acc = &acc + &d.scale(&(*e).into());
            }
        }
        acc
    }

    /// Degree of a homogeneous nonzero polynomial.
    pub fn degree_of(&self, p: &Polynomial) -> Result<GroupElement> {
        let mut found: Option<GroupElement> = None;
        for (e, _) in p.terms() {
            let d = self.monomial_degree(e);
            match &found {
                None => found = Some(d),
                Some(f) if *f != d => {
                    return Err(Error::Inhomogeneous {
                        first: f.symbolic(),
                        second: d.symbolic(),
                    })
                }
                _ => {}
            }
        }
        found.ok_or(Error::ZeroPolynomial)
    }

    /// Degree of the vector with the given coordinates, if homogeneous.
    pub fn vector_degree(&self, coords: &[crate::Rational]) -> Result<GroupElement> {
        self.degree_of(&Polynomial::linear(coords))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VInvariant {
    /// Every simple root is homogeneous.
    RootsHomogeneous,
    /// `deg α_s = deg α_t` whenever `m_st ≠ 2`.
    EqualRootDegrees,
    /// `s(v)` is homogeneous of degree `deg v` for each `s` and basis vector `v`.
    WInvariant,
}

#[derive(Clone, Debug)]
pub struct VGradingCheck {
    pub invariant: VInvariant,
    pub passed: bool,
    pub witnesses: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct VGradingReport {
    pub checks: Vec<VGradingCheck>,
}

impl VGradingReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<String> {
        self.checks
            .iter()
            .flat_map(|c| c.witnesses.iter().cloned())
            .collect()
    }
}

/// Checks the three conditions that let a grading of `V` extend to the
/// Hecke category.
pub fn validate_v_grading(real: &Realization, vg: &VGrading) -> VGradingReport {
    let sys = real.system();
    let mut checks = Vec::new();

    if vg.deg_basis.len() != real.dim() {
        let w = alloc::format!(
            "grading has {} basis degrees, realization has dimension {}",
            vg.deg_basis.len(),
            real.dim()
        );
        for invariant in [
            VInvariant::RootsHomogeneous,
            VInvariant::EqualRootDegrees,
            VInvariant::WInvariant,
        ] {
            checks.push(VGradingCheck {
                invariant,
                passed: false,
                witnesses: alloc::vec![w.clone()],
            });
        }
        return VGradingReport { checks };
    }

    let root_deg: Vec<Option<GroupElement>> = sys
        .colors()
        .map(|s| vg.vector_degree(real.alpha(s)).ok())
        .collect();

    let mut w = Vec::new();
    for s in sys.colors() {
        if root_deg[s].is_none() {
            w.push(alloc::format!("α_{} is not homogeneous", sys.label(s)));
        }
    }
    checks.push(VGradingCheck {
        invariant: VInvariant::RootsHomogeneous,
        passed: w.is_empty(),
        witnesses: w,
    });

    let mut w = Vec::new();
    for s in sys.colors() {
        for t in s + 1..sys.rank() {
            if sys.m(s, t).is_two() {
                continue;
            }
            if let (Some(a), Some(b)) = (&root_deg[s], &root_deg[t]) {
                if a != b {
                    w.push(alloc::format!(
                        "m_{{{},{}}} = {} but deg α_{} = {} ≠ deg α_{} = {}",
                        sys.label(s),
                        sys.label(t),
                        sys.m(s, t),
                        sys.label(s),
                        a.symbolic(),
                        sys.label(t),
                        b.symbolic()
                    ));
                }
            }
        }
    }
    checks.push(VGradingCheck {
        invariant: VInvariant::EqualRootDegrees,
        passed: w.is_empty(),
        witnesses: w,
    });

    let mut w = Vec::new();
    for s in sys.colors() {
        for (i, name) in real.basis().iter().enumerate() {
            let pairing = &real.coroot(s)[i];
            if pairing.is_zero() {
                continue;
            }
            // s(v) = v - <α_s^∨, v> α_s
            let ok = matches!(&root_deg[s], Some(d) if *d == vg.deg_basis[i]);
            if !ok {
                w.push(alloc::format!(
                    "{}({}) is not homogeneous of degree {}",
                    sys.label(s),
                    name,
                    vg.deg_basis[i].symbolic()
                ));
            }
        }
    }
    checks.push(VGradingCheck {
        invariant: VInvariant::WInvariant,
        passed: w.is_empty(),
        witnesses: w,
    });

    VGradingReport { checks }
}

/// Degree of `α_s` under a valid grading.
pub(crate) fn root_degree(real: &Realization, vg: &VGrading, s: Color) -> Result<GroupElement> {
    vg.vector_degree(real.alpha(s))
}
