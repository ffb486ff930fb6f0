use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{CoxeterEntry, CoxeterSystem, Polynomial};
use crate::{Color, Error, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RealizationKind {
    /// Basis is the simple roots, pairing is a Cartan matrix.
    Root,
    /// Arbitrary basis with roots and coroots given in coordinates.
    General,
    /// Root basis with a Cartan matrix that has the right zero pattern but is
    /// not an actual realization. Good for degree bookkeeping only; the
    /// reflections need not satisfy the braid relations.
    DegreeSkeleton,
}

/// A realization `V` of a Coxeter system over the rationals.
///
/// Roots `α_s` are stored as coordinate vectors in the basis, coroots as the
/// values `<α_s^∨, b>` on each basis vector `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    system: CoxeterSystem,
    basis: Vec<String>,
    alpha: Vec<Vec<Rational>>,
    coroot: Vec<Vec<Rational>>,
    kind: RealizationKind,
}

fn int(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

/// Standard crystallographic Cartan entries `(a_st, a_ts)` for `s` before `t`.
fn standard_pair(m: CoxeterEntry) -> Option<(Rational, Rational)> {
    match m {
        CoxeterEntry::Finite(2) => Some((int(0), int(0))),
        CoxeterEntry::Finite(3) => Some((int(-1), int(-1))),
        CoxeterEntry::Finite(4) => Some((int(-1), int(-2))),
        CoxeterEntry::Finite(6) => Some((int(-1), int(-3))),
        CoxeterEntry::Infinite => Some((int(-2), int(-2))),
        _ => None,
    }
}

fn supported(m: CoxeterEntry) -> bool {
    standard_pair(m).is_some()
}

impl Realization {
    /// The root realization. Without a Cartan matrix, standard entries are
    /// filled in for `m ∈ {2, 3, 4, 6, ∞}`; for `m = 4, 6` the longer
    /// coroot pairing goes on the later label (`a_st = -1`, `a_ts = -2` or `-3`).
    pub fn root(system: &CoxeterSystem, cartan: Option<Vec<Vec<Rational>>>) -> Result<Self> {
        let n = system.rank();
        for (s, t) in pairs(n) {
            if !supported(system.m(s, t)) {
                return Err(Error::Unsupported(
                    system.label(s).into(),
                    system.label(t).into(),
                    alloc::format!("{}", system.m(s, t)),
                ));
            }
        }
        let cartan = match cartan {
            Some(c) => c,
            None => {
                let mut c = alloc::vec![alloc::vec![int(0); n]; n];
                for (s, row) in c.iter_mut().enumerate() {
                    row[s] = int(2);
                }
                for (s, t) in pairs(n) {
                    let (ast, ats) = standard_pair(system.m(s, t)).expect("checked above");
                    c[s][t] = ast;
                    c[t][s] = ats;
                }
                c
            }
        };
        if cartan.len() != n || cartan.iter().any(|r| r.len() != n) {
            return Err(Error::Shape {
                expected: alloc::format!("{n}x{n}"),
                found: alloc::format!("{} rows", cartan.len()),
            });
        }
        for s in 0..n {
            if cartan[s][s] != int(2) {
                return Err(Error::CartanDiagonal(system.label(s).into()));
            }
        }
        let real = Realization {
            system: system.clone(),
            basis: system.labels().iter().map(|l| alloc::format!("a_{l}")).collect(),
            alpha: (0..n).map(|s| unit(n, s)).collect(),
            coroot: cartan,
            kind: RealizationKind::Root,
        };
        real.check_zero_pattern()?;
        Ok(real)
    }

    /// A general realization: basis names, root coordinates and coroot values.
    pub fn general(
        system: &CoxeterSystem,
        basis: Vec<String>,
        alpha: Vec<Vec<Rational>>,
        coroot: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        let n = system.rank();
        let d = basis.len();
        for b in &basis {
            if !super::valid_label(b) {
                return Err(Error::InvalidLabel(b.clone()));
            }
        }
        for (s, t) in pairs(n) {
            if !supported(system.m(s, t)) {
                return Err(Error::Unsupported(
                    system.label(s).into(),
                    system.label(t).into(),
                    alloc::format!("{}", system.m(s, t)),
                ));
            }
        }
        for v in alpha.iter().chain(&coroot) {
            if v.len() != d {
                return Err(Error::Length {
                    expected: d,
                    found: v.len(),
                });
            }
        }
        if alpha.len() != n || coroot.len() != n {
            return Err(Error::Length {
                expected: n,
                found: alpha.len().min(coroot.len()),
            });
        }
        let real = Realization {
            system: system.clone(),
            basis,
            alpha,
            coroot,
            kind: RealizationKind::General,
        };
        for s in 0..n {
            if real.pairing(s, &real.alpha[s]) != int(2) {
                return Err(Error::RootPairing(system.label(s).into()));
            }
        }
        real.check_zero_pattern()?;
        Ok(real)
    }

    /// Root basis with `a_st = -1` whenever `m_st ≠ 2`. Works for every
    /// Coxeter matrix, including `m ∈ {5, 7, ...}`, because only which
    /// pairings vanish matters for degrees.
    pub fn degree_skeleton(system: &CoxeterSystem) -> Self {
        let n = system.rank();
        let coroot = (0..n)
            .map(|s| {
                (0..n)
                    .map(|t| {
                        if s == t {
                            int(2)
                        } else if system.m(s, t).is_two() {
                            int(0)
                        } else {
                            int(-1)
                        }
                    })
                    .collect()
            })
            .collect();
        Realization {
            system: system.clone(),
            basis: system.labels().iter().map(|l| alloc::format!("a_{l}")).collect(),
            alpha: (0..n).map(|s| unit(n, s)).collect(),
            coroot,
            kind: RealizationKind::DegreeSkeleton,
        }
    }

    /// Root realization when the polynomial engine supports the system,
    /// otherwise the degree skeleton.
    pub fn root_or_skeleton(system: &CoxeterSystem) -> Self {
        Self::root(system, None).unwrap_or_else(|_| Self::degree_skeleton(system))
    }

    fn check_zero_pattern(&self) -> Result<()> {
        let n = self.system.rank();
        for s in 0..n {
            for t in 0..n {
                if s == t {
                    continue;
                }
                let zero = self.pairing(s, &self.alpha[t]).is_zero();
                if zero != self.system.m(s, t).is_two() {
                    return Err(Error::CartanZeroPattern(
                        self.system.label(s).into(),
                        self.system.label(t).into(),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn kind(&self) -> RealizationKind {
        self.kind
    }

    /// `<α_s^∨, v>` for `v` in basis coordinates.
    pub fn pairing(&self, s: Color, v: &[Rational]) -> Rational {
        self.coroot[s]
            .iter()
            .zip(v)
            .map(|(a, b)| a * b)
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    /// Coordinates of `α_s`.
    pub fn alpha(&self, s: Color) -> &[Rational] {
        &self.alpha[s]
    }

    /// Values of `α_s^∨` on the basis.
    pub fn coroot(&self, s: Color) -> &[Rational] {
        &self.coroot[s]
    }

    /// The Cartan matrix `a_st = <α_s^∨, α_t>`.
    pub fn cartan(&self) -> Vec<Vec<Rational>> {
        let n = self.system.rank();
        (0..n)
            .map(|s| (0..n).map(|t| self.pairing(s, &self.alpha[t])).collect())
            .collect()
    }

    pub fn alpha_poly(&self, s: Color) -> Polynomial {
        Polynomial::linear(&self.alpha[s])
    }

    pub fn parse_poly(&self, text: &str) -> Result<Polynomial> {
        Polynomial::parse(text, &self.basis)
    }

    pub fn show_poly(&self, p: &Polynomial) -> String {
        p.display(&self.basis)
    }

    fn check_poly(&self, p: &Polynomial) -> Result<()> {
        if p.nvars() != self.dim() {
            return Err(Error::Length {
                expected: self.dim(),
                found: p.nvars(),
            });
        }
        Ok(())
    }

    /// `s(v) = v - <α_s^∨, v> α_s` on basis vectors, extended multiplicatively.
    pub fn reflect(&self, s: Color, p: &Polynomial) -> Result<Polynomial> {
        self.check_poly(p)?;
        let d = self.dim();
        let alpha = self.alpha_poly(s);
        let images: Vec<Polynomial> = (0..d)
            .map(|i| Polynomial::var(d, i).sub(&alpha.scale(&self.coroot[s][i])))
            .collect();
        Ok(p.substitute(&images))
    }

    /// Demazure operator `∂_s(p) = (p - s(p)) / α_s`.
    pub fn demazure(&self, s: Color, p: &Polynomial) -> Result<Polynomial> {
        let diff = p.sub(&self.reflect(s, p)?);
        diff.div_linear(&self.alpha_poly(s))
    }
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    (0..n)
        .map(|j| if i == j { Rational::one() } else { Rational::zero() })
        .collect()
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |s| (s + 1..n).map(move |t| (s, t)))
}
