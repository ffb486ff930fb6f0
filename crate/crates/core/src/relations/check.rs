use alloc::string::String;
use alloc::vec::Vec;

use super::catalog::{build_catalog, Relation};
use crate::abgroup::GroupElement;
use crate::coxeter::{CoxeterSystem, Realization};
use crate::diagram::{crossingless_matchings, shapes, Matching};
use crate::grading::{degree, expanded_degrees, phi, DegreeModel};
use crate::{Color, Error, Result};

/// A term whose degree differs from the first term's.
#[derive(Clone, Debug)]
pub struct Witness {
    pub term: usize,
    pub degree: GroupElement,
}

#[derive(Clone, Debug)]
pub struct RelationReport {
    pub relation: String,
    pub family: String,
    pub homogeneous: bool,
    pub degree: Option<GroupElement>,
    /// One entry per distinct degree, with the first term attaining it.
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, Default)]
pub struct HomogeneityReport {
    pub entries: Vec<RelationReport>,
}

impl HomogeneityReport {
    pub fn all_homogeneous(&self) -> bool {
        self.entries.iter().all(|e| e.homogeneous)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationReport> {
        self.entries.iter().filter(|e| !e.homogeneous)
    }

    pub fn get(&self, relation: &str) -> Option<&RelationReport> {
        self.entries.iter().find(|e| e.relation == relation)
    }
}

/// Degrees of every term of a relation, with polynomial boxes expanded into
/// monomials, flattened with their term index.
pub fn term_degrees<M: DegreeModel + ?Sized>(
    rel: &Relation,
    model: &M,
) -> Result<Vec<(usize, GroupElement)>> {
    let mut out = Vec::new();
    for (i, (_, d)) in rel.terms.iter().enumerate() {
        for x in expanded_degrees(d, model)? {
            out.push((i, x));
        }
    }
    Ok(out)
}

pub fn check_homogeneity<M: DegreeModel + ?Sized>(
    rel: &Relation,
    model: &M,
) -> Result<RelationReport> {
    let mut witnesses: Vec<Witness> = Vec::new();
    for (term, deg) in term_degrees(rel, model)? {
        if !witnesses.iter().any(|w| w.degree == deg) {
            witnesses.push(Witness { term, degree: deg });
        }
    }
    let homogeneous = witnesses.len() <= 1;
    Ok(RelationReport {
        relation: rel.name.clone(),
        family: rel.family.clone(),
        homogeneous,
        degree: if homogeneous {
            witnesses.first().map(|w| w.degree.clone())
        } else {
            None
        },
        witnesses,
    })
}

/// Homogeneity of every relation in `catalog`, then the Jones–Wenzl
/// obligations and the telescoping law for each pair with finite `m`.
/// Entries are sorted by relation name.
pub fn verify_catalog<M: DegreeModel + ?Sized>(
    catalog: &[Relation],
    sys: &CoxeterSystem,
    model: &M,
) -> Result<HomogeneityReport> {
    let mut entries = Vec::with_capacity(catalog.len());
    for rel in catalog {
        entries.push(check_homogeneity(rel, model)?);
    }
    for s in sys.colors() {
        for t in s + 1..sys.rank() {
            let Some(m) = sys.vertex_m(s, t) else { continue };
            let name = alloc::format!("jones_wenzl({},{})", sys.label(s), sys.label(t));
            let (ok, witnesses) = match jw_terms(sys, s, t, m as usize, model) {
                Ok(terms) => {
                    let bad: Vec<Witness> = terms
                        .iter()
                        .enumerate()
                        .filter(|(_, x)| !x.degree.is_zero())
                        .map(|(i, x)| Witness {
                            term: i,
                            degree: x.degree.clone(),
                        })
                        .collect();
                    (bad.is_empty(), bad)
                }
                Err(Error::PitchforkDegree { .. }) => (false, Vec::new()),
                Err(e) => return Err(e),
            };
            entries.push(RelationReport {
                relation: name,
                family: "jones_wenzl".into(),
                homogeneous: ok,
                degree: ok.then(|| GroupElement::zero(model.group())),
                witnesses,
            });
        }
    }
    for (s, t) in sys.finite_pairs() {
        let v = shapes::vertex(sys, s, t)?;
        let d = degree(&v, model)?;
        let expected = &phi(v.bottom(), model) - &phi(v.top(), model);
        let ok = d == expected;
        entries.push(RelationReport {
            relation: alloc::format!("telescoping({},{})", sys.label(s), sys.label(t)),
            family: "telescoping".into(),
            homogeneous: ok,
            degree: ok.then_some(d.clone()),
            witnesses: if ok {
                Vec::new()
            } else {
                alloc::vec![Witness { term: 0, degree: d }, Witness { term: 1, degree: expected }]
            },
        });
    }
    entries.sort_by(|a, b| a.relation.cmp(&b.relation));
    Ok(HomogeneityReport { entries })
}

/// [`verify_catalog`] over the built-in catalog of `real`.
pub fn verify_all<M: DegreeModel + ?Sized>(real: &Realization, model: &M) -> Result<HomogeneityReport> {
    verify_catalog(&build_catalog(real)?, real.system(), model)
}

/// One term of the Jones–Wenzl projector on `m` strands.
#[derive(Clone, Debug)]
pub struct JwTerm {
    pub matching: Matching,
    pub cups: usize,
    pub caps: usize,
    pub degree: GroupElement,
}

/// Degrees of the pitchforks that cups and caps retract to: `(up, down)`.
/// Both colors must give the same values.
pub fn pitchfork_degrees<M: DegreeModel + ?Sized>(
    sys: &CoxeterSystem,
    s: Color,
    t: Color,
    model: &M,
) -> Result<(GroupElement, GroupElement)> {
    let mut out = Vec::with_capacity(2);
    for (build, dir) in [
        (shapes::pitchfork_up as fn(&CoxeterSystem, Color, Color) -> Result<_>, "up"),
        (shapes::pitchfork_down, "down"),
    ] {
        let left = degree(&build(sys, s, t)?, model)?;
        let right = degree(&build(sys, t, s)?, model)?;
        if left != right {
            return Err(Error::PitchforkDegree {
                s: alloc::format!("{} ({dir})", sys.label(s)),
                t: sys.label(t).into(),
                left: left.symbolic(),
                right: right.symbolic(),
            });
        }
        out.push(left);
    }
    let down = out.pop().expect("two entries");
    let up = out.pop().expect("two entries");
    Ok((up, down))
}

/// One term per crossingless matching for `m_st = m`, with degree
/// `#cups · deg(pitchfork up) + #caps · deg(pitchfork down)`.
pub fn jw_terms<M: DegreeModel + ?Sized>(
    sys: &CoxeterSystem,
    s: Color,
    t: Color,
    m: usize,
    model: &M,
) -> Result<Vec<JwTerm>> {
    let matchings = crossingless_matchings(m);
    if m <= 2 {
        return Ok(matchings
            .into_iter()
            .map(|x| JwTerm {
                cups: 0,
                caps: 0,
                matching: x,
                degree: GroupElement::zero(model.group()),
            })
            .collect());
    }
    let (up, down) = pitchfork_degrees(sys, s, t, model)?;
    Ok(matchings
        .into_iter()
        .map(|x| {
            let (cups, caps) = (x.cups(), x.caps());
            let degree = &up.scale(&cups.into()) + &down.scale(&caps.into());
            JwTerm {
                matching: x,
                cups,
                caps,
                degree,
            }
        })
        .collect())
}

/// All projector terms have degree zero.
pub fn jw_degree_check<M: DegreeModel + ?Sized>(
    sys: &CoxeterSystem,
    s: Color,
    t: Color,
    m: usize,
    model: &M,
) -> Result<bool> {
    Ok(jw_terms(sys, s, t, m, model)?
        .iter()
        .all(|x| x.degree.is_zero()))
}
