//! Degree assignments for the generating morphisms and the degree of a
//! diagram.
//!
//! Only the dot degrees `f_s`, `g_s` and the degrees of the basis of `V` are
//! stored. Trivalent vertices and `2m`-valent vertices get derived degrees:
//!
//! | generator        | degree                                  |
//! |------------------|-----------------------------------------|
//! | `dot_in(s)`      | `f_s`                                   |
//! | `dot_out(s)`     | `g_s`                                   |
//! | `split(s)`       | `-g_s`                                  |
//! | `merge(s)`       | `-f_s`                                  |
//! | `vertex(s,t)`    | `0` for even `m_st`, `g_s - g_t` for odd |

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::abgroup::{quotient, AbGroup, GroupElement, Hom};
use crate::coxeter::{validate_v_grading, CoxeterSystem, Polynomial, Realization, VGrading};
use crate::diagram::{Atom, Diagram};
use crate::{Color, Error, Result};

/// A generator kind whose degree a [`DegreeModel`] must supply. `Basis(i)`
/// is the `i`-th basis vector of `V` as a polynomial of degree one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    DotIn(Color),
    DotOut(Color),
    Split(Color),
    Merge(Color),
    Vertex(Color, Color),
    Basis(usize),
}

impl Generator {
    pub fn describe(&self, sys: &CoxeterSystem, basis: &[String]) -> String {
        match self {
            Generator::DotIn(s) => alloc::format!("dot_in({})", sys.label(*s)),
            Generator::DotOut(s) => alloc::format!("dot_out({})", sys.label(*s)),
            Generator::Split(s) => alloc::format!("split({})", sys.label(*s)),
            Generator::Merge(s) => alloc::format!("merge({})", sys.label(*s)),
            Generator::Vertex(s, t) => {
                alloc::format!("vertex({},{})", sys.label(*s), sys.label(*t))
            }
            Generator::Basis(i) => basis[*i].clone(),
        }
    }

    /// Every generator of a realization: dots and trivalents per color,
    /// vertices per ordered pair with finite `m`, and the basis of `V`.
    pub fn all(real: &Realization) -> Vec<Generator> {
        let sys = real.system();
        let mut out = Vec::new();
        for s in sys.colors() {
            out.extend([
                Generator::DotIn(s),
                Generator::DotOut(s),
                Generator::Split(s),
                Generator::Merge(s),
            ]);
        }
        for (s, t) in sys.finite_pairs() {
            out.push(Generator::Vertex(s, t));
        }
        out.extend((0..real.dim()).map(Generator::Basis));
        out
    }
}

/// Anything that assigns a group element to each generator.
pub trait DegreeModel {
    fn group(&self) -> &Arc<AbGroup>;
    fn generator_degree(&self, g: &Generator) -> GroupElement;
}

/// Degrees of the dots and of `V`, valued in a presented abelian group.
#[derive(Clone, Debug)]
pub struct DegreeAssignment {
    realization: Realization,
    group: Arc<AbGroup>,
    f: Vec<GroupElement>,
    g: Vec<GroupElement>,
    deg_basis: Vec<GroupElement>,
    /// Index of the first generator coming from `Γ`, for `(Λ × Γ) / I`.
    gamma_offset: Option<usize>,
}

impl DegreeAssignment {
    pub fn new(
        realization: &Realization,
        group: &Arc<AbGroup>,
        f: Vec<GroupElement>,
        g: Vec<GroupElement>,
        deg_basis: Vec<GroupElement>,
    ) -> Result<Self> {
        let n = realization.system().rank();
        for (v, want) in [(&f, n), (&g, n), (&deg_basis, realization.dim())] {
            if v.len() != want {
                return Err(Error::Length {
                    expected: want,
                    found: v.len(),
                });
            }
        }
        if f.iter()
            .chain(&g)
            .chain(&deg_basis)
            .any(|x| **x.group() != **group)
        {
            return Err(Error::GroupMismatch);
        }
        Ok(DegreeAssignment {
            realization: realization.clone(),
            group: group.clone(),
            f,
            g,
            deg_basis,
            gamma_offset: None,
        })
    }

    /// `Z²` on generators `m, n`: `f_s = (1,0)`, `g_s = (0,1)` and all of `V`
    /// in degree `(1,1)`.
    pub fn bigrading(real: &Realization) -> Self {
        let grp = AbGroup::free(alloc::vec!["m".into(), "n".into()]);
        let e = |a: i64, b: i64| GroupElement::from_i64(&grp, &[a, b]).expect("two coordinates");
        let n = real.system().rank();
        Self::new(
            real,
            &grp,
            alloc::vec![e(1, 0); n],
            alloc::vec![e(0, 1); n],
            alloc::vec![e(1, 1); real.dim()],
        )
        .expect("consistent bigrading")
    }

    /// The usual `Z`-grading: dots in degree 1, `V` in degree 2.
    pub fn original(real: &Realization) -> Self {
        let grp = AbGroup::free(alloc::vec!["deg".into()]);
        let e = |a: i64| GroupElement::from_i64(&grp, &[a]).expect("one coordinate");
        let n = real.system().rank();
        Self::new(
            real,
            &grp,
            alloc::vec![e(1); n],
            alloc::vec![e(1); n],
            alloc::vec![e(2); real.dim()],
        )
        .expect("consistent grading")
    }

    /// The universal group `Λ` on generators `f_s, g_s` with `f_s + g_s =
    /// f_t + g_t` whenever `m_st ≠ 2`. `V` is the root realization (or its
    /// degree skeleton), so the basis vector `α_s` has degree `f_s + g_s`.
    pub fn universal_lambda(sys: &CoxeterSystem) -> Self {
        let real = Realization::root_or_skeleton(sys);
        let grp = lambda_group(sys);
        let n = sys.rank();
        let f: Vec<_> = (0..n).map(|s| GroupElement::generator(&grp, 2 * s)).collect();
        let g: Vec<_> = (0..n)
            .map(|s| GroupElement::generator(&grp, 2 * s + 1))
            .collect();
        let deg_basis = (0..n).map(|s| &f[s] + &g[s]).collect();
        Self::new(&real, &grp, f, g, deg_basis).expect("consistent universal grading")
    }

    /// `(Λ × Γ) / I` where `I` is generated by `f_s + g_s - deg(α_s)`.
    pub fn general_grading(real: &Realization, vg: &VGrading) -> Result<Self> {
        let report = validate_v_grading(real, vg);
        if !report.is_valid() {
            return Err(Error::InvalidVGrading(report.failures().join("; ")));
        }
        let sys = real.system();
        let n = sys.rank();
        let lambda = lambda_group(sys);
        let prod = lambda.product(&vg.group);
        let embed = |x: &GroupElement| -> GroupElement {
            let mut c = alloc::vec![BigInt::from(0); 2 * n];
            c.extend(x.coeffs().iter().cloned());
            GroupElement::new(&prod, c).expect("product coordinates")
        };
        let gen = |i: usize| GroupElement::generator(&prod, i);
        let mut ideal = Vec::with_capacity(n);
        for s in 0..n {
            let alpha = crate::coxeter::root_degree(real, vg, s)?;
            ideal.push(&(&gen(2 * s) + &gen(2 * s + 1)) - &embed(&alpha));
        }
        let (q, proj) = quotient(&prod, &ideal)?;
        let push = |x: &GroupElement| proj.apply(x).expect("same group");
        let f = (0..n).map(|s| push(&gen(2 * s))).collect();
        let g = (0..n).map(|s| push(&gen(2 * s + 1))).collect();
        let deg_basis = vg.deg_basis.iter().map(|d| push(&embed(d))).collect();
        let mut out = Self::new(real, &q, f, g, deg_basis)?;
        out.gamma_offset = Some(2 * n);
        Ok(out)
    }

    /// Images of the generators of `Γ` when built by [`Self::general_grading`].
    pub fn gamma_generators(&self) -> Vec<GroupElement> {
        match self.gamma_offset {
            Some(off) => (off..self.group.n_gens())
                .map(|i| GroupElement::generator(&self.group, i))
                .collect(),
            None => Vec::new(),
        }
    }

    pub fn realization(&self) -> &Realization {
        &self.realization
    }

    pub fn system(&self) -> &CoxeterSystem {
        self.realization.system()
    }

    pub fn group(&self) -> &Arc<AbGroup> {
        &self.group
    }

    pub fn f(&self, s: Color) -> &GroupElement {
        &self.f[s]
    }

    pub fn g(&self, s: Color) -> &GroupElement {
        &self.g[s]
    }

    pub fn basis_degrees(&self) -> &[GroupElement] {
        &self.deg_basis
    }

    /// Degree of `B_s`-vertex from the `s`-alternating word to the
    /// `t`-alternating one.
    pub fn vertex_degree(&self, s: Color, t: Color) -> GroupElement {
        match self.system().vertex_m(s, t) {
            Some(m) if m % 2 == 1 => &self.g[s] - &self.g[t],
            _ => GroupElement::zero(&self.group),
        }
    }

    /// Degree of the root `α_s` as a polynomial.
    pub fn alpha_degree(&self, s: Color) -> Result<GroupElement> {
        polynomial_degree(&self.realization.alpha_poly(s), self)
    }

    /// Push-forward along `h`.
    pub fn specialize(&self, h: &Hom) -> Result<Self> {
        if **h.domain() != *self.group {
            return Err(Error::GroupMismatch);
        }
        let map = |v: &[GroupElement]| v.iter().map(|x| h.apply(x)).collect::<Result<Vec<_>>>();
        Self::new(
            &self.realization,
            h.codomain(),
            map(&self.f)?,
            map(&self.g)?,
            map(&self.deg_basis)?,
        )
    }
}

impl DegreeModel for DegreeAssignment {
    fn group(&self) -> &Arc<AbGroup> {
        &self.group
    }

    fn generator_degree(&self, gen: &Generator) -> GroupElement {
        match *gen {
            Generator::DotIn(s) => self.f[s].clone(),
            Generator::DotOut(s) => self.g[s].clone(),
            Generator::Split(s) => -&self.g[s],
            Generator::Merge(s) => -&self.f[s],
            Generator::Vertex(s, t) => self.vertex_degree(s, t),
            Generator::Basis(i) => self.deg_basis[i].clone(),
        }
    }
}

/// `Λ` for a Coxeter system, generators ordered `f_s, g_s, f_t, g_t, ...`.
pub fn lambda_group(sys: &CoxeterSystem) -> Arc<AbGroup> {
    let n = sys.rank();
    let mut names = Vec::with_capacity(2 * n);
    for l in sys.labels() {
        names.push(alloc::format!("f_{l}"));
        names.push(alloc::format!("g_{l}"));
    }
    let mut rows = Vec::new();
    for s in 0..n {
        for t in s + 1..n {
            if sys.m(s, t).is_two() {
                continue;
            }
            let mut row = alloc::vec![BigInt::from(0); 2 * n];
            row[2 * s] = 1.into();
            row[2 * s + 1] = 1.into();
            row[2 * t] = (-1).into();
            row[2 * t + 1] = (-1).into();
            rows.push(row);
        }
    }
    AbGroup::presented(names, rows).expect("well-formed relators")
}

/// Degree of a single monomial with the given exponents.
pub fn monomial_degree<M: DegreeModel + ?Sized>(exponents: &[u32], model: &M) -> GroupElement {
    let mut acc = GroupElement::zero(model.group());
    for (i, &e) in exponents.iter().enumerate() {
        if e > 0 {
            acc = &acc + &model.generator_degree(&Generator::Basis(i)).scale(&e.into());
        }
    }
    acc
}

/// Degree of a homogeneous nonzero polynomial.
pub fn polynomial_degree<M: DegreeModel + ?Sized>(p: &Polynomial, model: &M) -> Result<GroupElement> {
    let degs = monomial_degrees(p, model);
    match degs.as_slice() {
        [] => Err(Error::ZeroPolynomial),
        [d] => Ok(d.clone()),
        [a, b, ..] => Err(Error::Inhomogeneous {
            first: a.symbolic(),
            second: b.symbolic(),
        }),
    }
}

/// Distinct degrees of the monomials of `p`, in monomial order.
pub fn monomial_degrees<M: DegreeModel + ?Sized>(p: &Polynomial, model: &M) -> Vec<GroupElement> {
    let mut out: Vec<GroupElement> = Vec::new();
    for (e, _) in p.terms() {
        let d = monomial_degree(e, model);
        if !out.contains(&d) {
            out.push(d);
        }
    }
    out
}

/// Degree of a non-polynomial atom; `None` for polynomial boxes.
pub fn atom_degree<M: DegreeModel + ?Sized>(atom: &Atom, model: &M) -> Option<GroupElement> {
    let gen = match *atom {
        Atom::Id(_) => return Some(GroupElement::zero(model.group())),
        Atom::DotIn(s) => Generator::DotIn(s),
        Atom::DotOut(s) => Generator::DotOut(s),
        Atom::Split(s) => Generator::Split(s),
        Atom::Merge(s) => Generator::Merge(s),
        Atom::Vertex(s, t) => Generator::Vertex(s, t),
        Atom::Poly(_) => return None,
    };
    Some(model.generator_degree(&gen))
}

/// All degrees a diagram takes once each polynomial box is expanded into
/// monomials. A diagram is homogeneous when this has exactly one entry.
pub fn expanded_degrees<M: DegreeModel + ?Sized>(d: &Diagram, model: &M) -> Result<Vec<GroupElement>> {
    let mut base = GroupElement::zero(model.group());
    let mut acc = alloc::vec![GroupElement::zero(model.group())];
    for atom in d.atoms() {
        match atom_degree(atom, model) {
            Some(x) => base = &base + &x,
            None => {
                let Atom::Poly(p) = atom else { unreachable!() };
                let ms = monomial_degrees(p, model);
                if ms.is_empty() {
                    return Err(Error::ZeroPolynomial);
                }
                let mut next: Vec<GroupElement> = Vec::new();
                for a in &acc {
                    for m in &ms {
                        let x = a + m;
                        if !next.contains(&x) {
                            next.push(x);
                        }
                    }
                }
                acc = next;
            }
        }
    }
    Ok(acc.iter().map(|a| a + &base).collect())
}

/// Degree of a diagram: the sum of its atom degrees.
pub fn degree<M: DegreeModel + ?Sized>(d: &Diagram, model: &M) -> Result<GroupElement> {
    let mut acc = GroupElement::zero(model.group());
    for atom in d.atoms() {
        let x = match atom_degree(atom, model) {
            Some(x) => x,
            None => {
                let Atom::Poly(p) = atom else { unreachable!() };
                polynomial_degree(p, model)?
            }
        };
        acc = &acc + &x;
    }
    Ok(acc)
}

/// `φ(word) = Σ g_c` over the letters of the word.
pub fn phi<M: DegreeModel + ?Sized>(word: &[Color], model: &M) -> GroupElement {
    word.iter().fold(GroupElement::zero(model.group()), |acc, &c| {
        &acc + &model.generator_degree(&Generator::DotOut(c))
    })
}

/// Replaces the degree of one generator and leaves all others alone.
/// Derived degrees (trivalents, vertices) are not recomputed.
pub struct Perturbed<'a, M: DegreeModel + ?Sized> {
    pub base: &'a M,
    pub target: Generator,
    pub shift: GroupElement,
}

impl<M: DegreeModel + ?Sized> DegreeModel for Perturbed<'_, M> {
    fn group(&self) -> &Arc<AbGroup> {
        self.base.group()
    }

    fn generator_degree(&self, g: &Generator) -> GroupElement {
        let d = self.base.generator_degree(g);
        if *g == self.target {
            &d + &self.shift
        } else {
            d
        }
    }
}
