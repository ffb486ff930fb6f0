use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::catalog::{build_catalog, Relation};
use super::check::term_degrees;
use crate::abgroup::{same_row_space, AbGroup, GroupElement, Hom, IntMatrix};
use crate::coxeter::{Realization, RealizationKind, VGrading};
use crate::diagram::Atom;
#[cfg(test)]
use crate::Rational;
use crate::grading::{lambda_group, DegreeAssignment, DegreeModel, Generator};
use crate::{Error, Result};

/// Integer relations among formal degree unknowns, one row per pair of
/// terms (or monomials) of a relation that must share a degree.
#[derive(Clone, Debug)]
pub struct ConstraintSystem {
    pub unknowns: Vec<String>,
    pub rows: IntMatrix,
    /// Relation each row came from.
    pub sources: Vec<String>,
}

impl ConstraintSystem {
    /// `Z^unknowns` modulo the constraint rows.
    pub fn group(&self) -> Result<Arc<AbGroup>> {
        AbGroup::new(self.unknowns.clone(), self.rows.clone())
    }
}

/// Layout of the unknowns: `f_s, g_s` interleaved, then the generators of
/// `Γ` if any, then trivalents, vertices and basis degrees.
struct Layout {
    names: Vec<String>,
    index: BTreeMap<Generator, usize>,
    /// Number of leading unknowns that survive elimination.
    kept: usize,
}

fn layout(real: &Realization, gamma: Option<&Arc<AbGroup>>) -> Layout {
    let sys = real.system();
    let mut names = Vec::new();
    let mut index = BTreeMap::new();
    let mut add = |names: &mut Vec<String>, g: Option<Generator>, name: String| {
        if let Some(g) = g {
            index.insert(g, names.len());
        }
        names.push(name);
    };
    for s in sys.colors() {
        let l = sys.label(s);
        add(&mut names, Some(Generator::DotIn(s)), alloc::format!("f_{l}"));
        add(&mut names, Some(Generator::DotOut(s)), alloc::format!("g_{l}"));
    }
    if let Some(g) = gamma {
        for n in g.gen_names() {
            add(&mut names, None, n.clone());
        }
    }
    let kept = names.len();
    for s in sys.colors() {
        let l = sys.label(s);
        add(&mut names, Some(Generator::Split(s)), alloc::format!("split_{l}"));
        add(&mut names, Some(Generator::Merge(s)), alloc::format!("merge_{l}"));
    }
    for (s, t) in sys.finite_pairs() {
        add(
            &mut names,
            Some(Generator::Vertex(s, t)),
            alloc::format!("h_{}_{}", sys.label(s), sys.label(t)),
        );
    }
    if gamma.is_none() {
        for (i, b) in real.basis().iter().enumerate() {
            add(&mut names, Some(Generator::Basis(i)), alloc::format!("deg_{b}"));
        }
    }
    Layout { names, index, kept }
}

/// Every generator has its own free degree, except basis vectors of `V`
/// when a grading of `V` is supplied.
struct Symbolic {
    group: Arc<AbGroup>,
    index: BTreeMap<Generator, usize>,
    basis: Option<Vec<GroupElement>>,
}

impl DegreeModel for Symbolic {
    fn group(&self) -> &Arc<AbGroup> {
        &self.group
    }

    fn generator_degree(&self, g: &Generator) -> GroupElement {
        if let (Generator::Basis(i), Some(b)) = (g, &self.basis) {
            return b[*i].clone();
        }
        GroupElement::generator(&self.group, self.index[g])
    }
}

fn symbolic(real: &Realization, vg: Option<&VGrading>) -> (Layout, Symbolic) {
    let lay = layout(real, vg.map(|v| &v.group));
    let group = AbGroup::free(lay.names.clone());
    let basis = vg.map(|v| {
        let off = 2 * real.system().rank();
        v.deg_basis
            .iter()
            .map(|d| {
                let mut c = alloc::vec![BigInt::zero(); lay.names.len()];
                for (k, x) in d.coeffs().iter().enumerate() {
                    c[off + k] = x.clone();
                }
                GroupElement::new(&group, c).expect("layout length")
            })
            .collect()
    });
    let model = Symbolic {
        group,
        index: lay.index.clone(),
        basis,
    };
    (lay, model)
}

fn push_row(rows: &mut Vec<Vec<BigInt>>, sources: &mut Vec<String>, row: Vec<BigInt>, src: &str) {
    if row.iter().all(Zero::is_zero) || rows.contains(&row) {
        return;
    }
    rows.push(row);
    sources.push(src.into());
}

fn degree_constraints(
    catalog: &[Relation],
    lay: &Layout,
    model: &Symbolic,
    extra: &[Vec<BigInt>],
) -> Result<ConstraintSystem> {
    let mut rows = Vec::new();
    let mut sources = Vec::new();
    for r in extra {
        push_row(&mut rows, &mut sources, r.clone(), "gamma");
    }
    for rel in catalog {
        let degs = term_degrees(rel, model)?;
        if let Some((_, first)) = degs.first() {
            for (_, d) in &degs[1..] {
                let row: Vec<BigInt> = d.coeffs().iter().zip(first.coeffs()).map(|(a, b)| a - b).collect();
                push_row(&mut rows, &mut sources, row, &rel.name);
            }
        }
    }
    Ok(ConstraintSystem {
        unknowns: lay.names.clone(),
        rows: IntMatrix::from_rows(lay.names.len(), rows)?,
        sources,
    })
}

/// Tietze elimination of the columns at and beyond `keep`. Each eliminated
/// unknown must occur with coefficient `±1` in some remaining row.
fn eliminate(rows: &IntMatrix, names: &[String], keep: usize) -> Result<IntMatrix> {
    let mut rows = rows.row_vecs();
    for x in (keep..names.len()).rev() {
        let Some(p) = rows.iter().position(|r| r[x].abs().is_one()) else {
            if rows.iter().all(|r| r[x].is_zero()) {
                return Err(Error::Contradiction(alloc::format!(
                    "{} is unconstrained",
                    names[x]
                )));
            }
            return Err(Error::Contradiction(alloc::format!(
                "{} has no unit coefficient in any constraint",
                names[x]
            )));
        };
        let pivot = rows.swap_remove(p);
        for r in rows.iter_mut() {
            if r[x].is_zero() {
                continue;
            }
            let k = &r[x] * &pivot[x];
            for (a, b) in r.iter_mut().zip(&pivot) {
                *a -= &k * b;
            }
        }
    }
    let trimmed = rows
        .into_iter()
        .map(|mut r| {
            r.truncate(keep);
            r
        })
        .filter(|r| !r.iter().all(Zero::is_zero))
        .collect();
    IntMatrix::from_rows(keep, trimmed)
}

/// An identity that must hold in the derived group.
#[derive(Clone, Debug)]
pub struct DerivedEquation {
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

/// Mutually inverse homomorphisms between the derived group and the
/// expected one, both the identity on generator names.
#[derive(Clone, Debug)]
pub struct IsoCertificate {
    pub forward: Hom,
    pub backward: Hom,
    pub invariants_match: bool,
    pub mutually_inverse: bool,
}

impl IsoCertificate {
    pub fn is_valid(&self) -> bool {
        self.invariants_match && self.mutually_inverse
    }
}

#[derive(Clone, Debug)]
pub struct UniversalGrading {
    pub constraints: ConstraintSystem,
    /// The group on the full set of unknowns before elimination.
    pub full_group: Arc<AbGroup>,
    pub group: Arc<AbGroup>,
    pub assignment: DegreeAssignment,
    pub derived: Vec<DerivedEquation>,
    pub certificate: IsoCertificate,
    with_gamma: bool,
}

impl UniversalGrading {
    /// The unique homomorphism carrying the derived assignment to `a`.
    /// Fails when `a` is not a specialization.
    pub fn hom_to(&self, a: &DegreeAssignment) -> Result<Hom> {
        if self.with_gamma {
            return Err(Error::Hypothesis(
                "maps out of a group with a V-grading factor need images of its generators".into(),
            ));
        }
        let n = a.system().rank();
        if n != self.assignment.system().rank() {
            return Err(Error::Length {
                expected: self.assignment.system().rank(),
                found: n,
            });
        }
        let mut images = Vec::with_capacity(2 * n);
        for s in 0..n {
            images.push(a.f(s).clone());
            images.push(a.g(s).clone());
        }
        let h = Hom::new(&self.group, a.group(), images)?;
        let pushed = self.assignment.specialize(&h)?;
        if pushed.basis_degrees() != a.basis_degrees() {
            return Err(Error::Hypothesis(
                "degrees of V are not the image of the derived ones".into(),
            ));
        }
        Ok(h)
    }
}

/// Extracts homogeneity constraints from the catalog with every generator
/// degree unknown, checks the derived identities, eliminates trivalent,
/// vertex and basis unknowns, and certifies the result against `Λ` (or
/// `(Λ × Γ) / I` when a grading of `V` is given).
pub fn derive_universal(real: &Realization, vg: Option<&VGrading>) -> Result<UniversalGrading> {
    derive_universal_from(&build_catalog(real)?, real, vg)
}

/// [`derive_universal`] over an explicit catalog.
pub fn derive_universal_from(
    catalog: &[Relation],
    real: &Realization,
    vg: Option<&VGrading>,
) -> Result<UniversalGrading> {
    if vg.is_none() && real.kind() == RealizationKind::General {
        return Err(Error::Hypothesis(
            "without a grading of V the realization must have the simple roots as basis".into(),
        ));
    }
    let sys = real.system();
    let n = sys.rank();
    let (lay, model) = symbolic(real, vg);
    let extra: Vec<Vec<BigInt>> = match vg {
        Some(v) => v
            .group
            .relators()
            .row_vecs()
            .into_iter()
            .map(|r| {
                let mut row = alloc::vec![BigInt::zero(); lay.names.len()];
                for (k, x) in r.into_iter().enumerate() {
                    row[2 * n + k] = x;
                }
                row
            })
            .collect(),
        None => Vec::new(),
    };
    let constraints = degree_constraints(catalog, &lay, &model, &extra)?;
    let full = constraints.group()?;

    if vg.is_none() {
        // The usual Z-grading must satisfy every constraint.
        let mut orig = alloc::vec![BigInt::zero(); lay.names.len()];
        for (g, &i) in &lay.index {
            orig[i] = match g {
                Generator::DotIn(_) | Generator::DotOut(_) => 1.into(),
                Generator::Split(_) | Generator::Merge(_) => (-1).into(),
                Generator::Vertex(..) => 0.into(),
                Generator::Basis(_) => 2.into(),
            };
        }
        for (row, src) in constraints.rows.row_vecs().iter().zip(&constraints.sources) {
            let v: BigInt = row.iter().zip(&orig).map(|(a, b)| a * b).sum();
            if !v.is_zero() {
                return Err(Error::Contradiction(src.clone()));
            }
        }
    }

    let in_full = |g: &Generator| GroupElement::generator(&full, lay.index[g]);
    let reembed = |x: &GroupElement| GroupElement::new(&full, x.coeffs().to_vec()).expect("same layout");
    let mut derived = Vec::new();
    let mut record = |lhs: String, rhs: String, a: GroupElement, b: GroupElement| {
        derived.push(DerivedEquation {
            lhs,
            rhs,
            holds: a == b,
        });
    };
    for s in sys.colors() {
        let l = sys.label(s);
        let (f, g) = (in_full(&Generator::DotIn(s)), in_full(&Generator::DotOut(s)));
        record(
            alloc::format!("split_{l}"),
            alloc::format!("-g_{l}"),
            in_full(&Generator::Split(s)),
            -&g,
        );
        record(
            alloc::format!("merge_{l}"),
            alloc::format!("-f_{l}"),
            in_full(&Generator::Merge(s)),
            -&f,
        );
        let alpha = crate::grading::polynomial_degree(&real.alpha_poly(s), &model)?;
        record(
            alloc::format!("deg(alpha_{l})"),
            alloc::format!("f_{l} + g_{l}"),
            reembed(&alpha),
            &f + &g,
        );
    }
    for (s, t) in sys.finite_pairs() {
        let m = sys.vertex_m(s, t).expect("finite pair");
        let (ls, lt) = (sys.label(s), sys.label(t));
        let h = in_full(&Generator::Vertex(s, t));
        if m % 2 == 0 {
            record(alloc::format!("h_{ls}_{lt}"), "0".into(), h, GroupElement::zero(&full));
        } else {
            let rhs = &in_full(&Generator::DotOut(s)) - &in_full(&Generator::DotOut(t));
            record(alloc::format!("h_{ls}_{lt}"), alloc::format!("g_{ls} - g_{lt}"), h, rhs);
        }
    }

    let reduced = eliminate(&constraints.rows, &lay.names, lay.kept)?;
    let group = AbGroup::new(lay.names[..lay.kept].to_vec(), reduced)?;

    let target = match vg {
        None => lambda_group(sys),
        Some(v) => DegreeAssignment::general_grading(real, v)?.group().clone(),
    };
    let gens = |g: &Arc<AbGroup>| -> Vec<GroupElement> {
        (0..g.n_gens()).map(|i| GroupElement::generator(g, i)).collect()
    };
    let forward = Hom::new(&group, &target, gens(&target))?;
    let backward = Hom::new(&target, &group, gens(&group))?;
    let certificate = IsoCertificate {
        invariants_match: group.torsion() == target.torsion()
            && group.free_rank_of() == target.free_rank_of(),
        mutually_inverse: forward.then(&backward)?.is_identity()
            && backward.then(&forward)?.is_identity(),
        forward,
        backward,
    };

    let f: Vec<_> = (0..n).map(|s| GroupElement::generator(&group, 2 * s)).collect();
    let g: Vec<_> = (0..n).map(|s| GroupElement::generator(&group, 2 * s + 1)).collect();
    let deg_basis = match vg {
        None => (0..real.dim()).map(|i| &f[i] + &g[i]).collect(),
        Some(v) => v
            .deg_basis
            .iter()
            .map(|d| {
                let mut c = alloc::vec![BigInt::zero(); 2 * n];
                c.extend(d.coeffs().iter().cloned());
                GroupElement::new(&group, c)
            })
            .collect::<Result<Vec<_>>>()?,
    };
    let assignment = DegreeAssignment::new(real, &group, f, g, deg_basis)?;

    Ok(UniversalGrading {
        constraints,
        full_group: full,
        group,
        assignment,
        derived,
        certificate,
        with_gamma: vg.is_some(),
    })
}

/// A Laurent monomial in the rescaling parameters, as exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Laurent(BTreeMap<usize, BigInt>);

impl Laurent {
    fn var(i: usize) -> Self {
        Laurent(BTreeMap::from([(i, BigInt::one())]))
    }

    fn pow(i: usize, e: u32) -> Self {
        Laurent(BTreeMap::from([(i, BigInt::from(e))]))
    }

    fn mul(&self, o: &Laurent) -> Laurent {
        let mut out = self.0.clone();
        for (k, v) in &o.0 {
            let e = out.entry(*k).or_insert_with(BigInt::zero);
            *e += v;
        }
        out.retain(|_, v| !v.is_zero());
        Laurent(out)
    }

    fn inverse(&self) -> Laurent {
        Laurent(self.0.iter().map(|(k, v)| (*k, -v)).collect())
    }

    fn exponents(&self, n: usize) -> Vec<BigInt> {
        (0..n)
            .map(|i| self.0.get(&i).cloned().unwrap_or_else(BigInt::zero))
            .collect()
    }
}

/// Constraints on the scalars by which an object-fixing autoequivalence may
/// rescale each generator: `κ_s` on start dots, `λ_s` on end dots, one
/// scalar per trivalent and vertex, and a diagonal rescaling of `V`. Each
/// relation forces all its terms (after expanding polynomial boxes into
/// monomials) to acquire the same product of scalars; rows are the
/// exponent vectors of the ratios. Unknowns line up with
/// [`derive_universal`]'s: `κ_s ↔ f_s`, `λ_s ↔ g_s`.
pub fn derive_scalar_constraints(real: &Realization) -> Result<ConstraintSystem> {
    let sys = real.system();
    let catalog = build_catalog(real)?;
    let lay = layout(real, None);
    let mut names = Vec::with_capacity(lay.names.len());
    for s in sys.colors() {
        let l = sys.label(s);
        names.push(alloc::format!("kappa_{l}"));
        names.push(alloc::format!("lambda_{l}"));
    }
    for s in sys.colors() {
        let l = sys.label(s);
        names.push(alloc::format!("sigma_{l}"));
        names.push(alloc::format!("mu_{l}"));
    }
    for (s, t) in sys.finite_pairs() {
        names.push(alloc::format!("nu_{}_{}", sys.label(s), sys.label(t)));
    }
    for b in real.basis() {
        names.push(alloc::format!("c_{b}"));
    }
    let idx = |g: Generator| lay.index[&g];
    let mut rows = Vec::new();
    let mut sources = Vec::new();
    for rel in &catalog {
        let mut scalings: Vec<Laurent> = Vec::new();
        for (_, d) in &rel.terms {
            let mut partial = alloc::vec![Laurent::default()];
            for atom in d.atoms() {
                let factor = match *atom {
                    Atom::Id(_) => continue,
                    Atom::DotIn(s) => Laurent::var(idx(Generator::DotIn(s))),
                    Atom::DotOut(s) => Laurent::var(idx(Generator::DotOut(s))),
                    Atom::Split(s) => Laurent::var(idx(Generator::Split(s))),
                    Atom::Merge(s) => Laurent::var(idx(Generator::Merge(s))),
                    Atom::Vertex(s, t) => Laurent::var(idx(Generator::Vertex(s, t))),
                    Atom::Poly(ref p) => {
                        let mut next = Vec::new();
                        for (e, _) in p.terms() {
                            let mono = e
                                .iter()
                                .enumerate()
                                .fold(Laurent::default(), |acc, (i, &k)| {
                                    acc.mul(&Laurent::pow(idx(Generator::Basis(i)), k))
                                });
                            for q in &partial {
                                next.push(q.mul(&mono));
                            }
                        }
                        partial = next;
                        continue;
                    }
                };
                for q in partial.iter_mut() {
                    *q = q.mul(&factor);
                }
            }
            scalings.extend(partial);
        }
        if let Some(first) = scalings.first() {
            let inv = first.inverse();
            for x in &scalings[1..] {
                let row = x.mul(&inv).exponents(names.len());
                push_row(&mut rows, &mut sources, row, &rel.name);
            }
        }
    }
    Ok(ConstraintSystem {
        rows: IntMatrix::from_rows(names.len(), rows)?,
        unknowns: names,
        sources,
    })
}

/// Outcome of comparing the scalar lattice with the degree lattice.
#[derive(Clone, Debug)]
pub struct LatticeComparison {
    pub same_invariants: bool,
    pub same_row_space: bool,
}

pub fn compare_lattices(a: &ConstraintSystem, b: &ConstraintSystem) -> Result<LatticeComparison> {
    let (ga, gb) = (a.group()?, b.group()?);
    Ok(LatticeComparison {
        same_invariants: ga.torsion() == gb.torsion() && ga.free_rank_of() == gb.free_rank_of(),
        same_row_space: a.unknowns.len() == b.unknowns.len() && same_row_space(&a.rows, &b.rows)?,
    })
}
