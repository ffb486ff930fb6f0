//! JSON input and output formats.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use hecke_core::coxeter::{parse_rational, rational_to_string, VGrading};
use hecke_core::diagram::parse_diagram;
use hecke_core::relations::{derive_universal, RelationReport};
use hecke_core::{
    AbGroup, Character, CoxeterEntry, CoxeterSystem, DegreeAssignment, GroupElement, Rational,
    Realization, Relation,
};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: String,
        source: serde_json::Error,
    },
    #[error(transparent)]
    Core(#[from] hecke_core::Error),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, ConfigError>;

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(ConfigError::Invalid(msg.into()))
}

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    serde_json::from_str(&read_text(path)?).map_err(|source| ConfigError::Json {
        path: path.display().to_string(),
        source,
    })
}

/// An integer that serializes as a JSON number when it fits in `i64` and
/// as a decimal string otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Int(pub BigInt);

impl Serialize for Int {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(x) => s.serialize_i64(x),
            Err(_) => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error;
        match Value::deserialize(d)? {
            Value::Number(n) => n
                .as_i64()
                .map(|x| Int(x.into()))
                .ok_or_else(|| D::Error::custom("expected an integer")),
            Value::String(s) => s
                .parse()
                .map(Int)
                .map_err(|_| D::Error::custom(format!("not an integer: {s:?}"))),
            other => Err(D::Error::custom(format!("expected an integer, found {other}"))),
        }
    }
}

fn ints(v: &[Int]) -> Vec<BigInt> {
    v.iter().map(|x| x.0.clone()).collect()
}

pub fn coordinates(x: &GroupElement) -> Vec<Int> {
    x.coordinates().into_iter().map(Int).collect()
}

fn rational(s: &str) -> Result<Rational> {
    parse_rational(s).ok_or_else(|| ConfigError::Invalid(format!("not a rational number: {s:?}")))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MEntry {
    Finite(u32),
    Named(String),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RealizationSpec {
    /// `"root"` or `"skeleton"`.
    Named(String),
    General {
        basis: Vec<String>,
        alpha: Vec<Vec<String>>,
        coroot: Vec<Vec<String>>,
    },
}

/// `{"labels", "m", "cartan"?}`, or `{"type": "A2"}`, with an optional
/// `"realization"`.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoxeterSpec {
    #[serde(default, rename = "type", skip_serializing_if = "Option::is_none")]
    pub type_name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<Vec<Vec<MEntry>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cartan: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub realization: Option<RealizationSpec>,
}

impl CoxeterSpec {
    pub fn system(&self) -> Result<CoxeterSystem> {
        match (&self.type_name, &self.labels, &self.m) {
            (Some(t), None, None) => Ok(CoxeterSystem::of_type(t)?),
            (None, Some(labels), Some(m)) => {
                let rows = m
                    .iter()
                    .map(|row| row.iter().map(m_entry).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                Ok(CoxeterSystem::new(labels.clone(), rows)?)
            }
            _ => invalid("give either \"type\" or both \"labels\" and \"m\""),
        }
    }

    pub fn realization(&self) -> Result<Realization> {
        let sys = self.system()?;
        let cartan = match &self.cartan {
            Some(c) => Some(
                c.iter()
                    .map(|row| row.iter().map(|x| rational(x)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?,
            ),
            None => None,
        };
        match &self.realization {
            None if cartan.is_some() => Ok(Realization::root(&sys, cartan)?),
            None => Ok(Realization::root_or_skeleton(&sys)),
            Some(RealizationSpec::Named(n)) if n == "root" => Ok(Realization::root(&sys, cartan)?),
            Some(RealizationSpec::Named(n)) if n == "skeleton" && cartan.is_none() => {
                Ok(Realization::degree_skeleton(&sys))
            }
            Some(RealizationSpec::Named(n)) => {
                invalid(format!("unknown realization {n:?} (expected \"root\" or \"skeleton\" without \"cartan\")"))
            }
            Some(RealizationSpec::General { .. }) if cartan.is_some() => {
                invalid("\"cartan\" and a general realization are mutually exclusive")
            }
            Some(RealizationSpec::General {
                basis,
                alpha,
                coroot,
            }) => {
                let vecs = |v: &Vec<Vec<String>>| {
                    v.iter()
                        .map(|row| row.iter().map(|x| rational(x)).collect::<Result<Vec<_>>>())
                        .collect::<Result<Vec<_>>>()
                };
                Ok(Realization::general(&sys, basis.clone(), vecs(alpha)?, vecs(coroot)?)?)
            }
        }
    }
}

fn m_entry(e: &MEntry) -> Result<CoxeterEntry> {
    match e {
        MEntry::Finite(m) => Ok(CoxeterEntry::Finite(*m)),
        MEntry::Named(s) if s == "inf" || s == "∞" => Ok(CoxeterEntry::Infinite),
        MEntry::Named(s) => invalid(format!("bad Coxeter matrix entry {s:?}")),
    }
}

/// `{"gens": [...], "rels": [[...], ...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub gens: Vec<String>,
    #[serde(default)]
    pub rels: Vec<Vec<Int>>,
}

impl GroupSpec {
    pub fn build(&self) -> Result<Arc<AbGroup>> {
        Ok(AbGroup::presented(
            self.gens.clone(),
            self.rels.iter().map(|r| ints(r)).collect(),
        )?)
    }

    pub fn of(g: &AbGroup) -> Self {
        GroupSpec {
            gens: g.gen_names().to_vec(),
            rels: g
                .relators()
                .row_vecs()
                .into_iter()
                .map(|r| r.into_iter().map(Int).collect())
                .collect(),
        }
    }
}

fn element(g: &Arc<AbGroup>, v: &[Int]) -> Result<GroupElement> {
    Ok(GroupElement::new(g, ints(v))?)
}

/// Looks up one entry per name, all required, no extras.
fn by_name<'a, T>(map: &'a BTreeMap<String, T>, names: &[String], what: &str) -> Result<Vec<&'a T>> {
    if let Some(k) = map.keys().find(|k| !names.contains(k)) {
        return invalid(format!("{what}: unknown name {k:?}"));
    }
    names
        .iter()
        .map(|n| {
            map.get(n)
                .ok_or_else(|| ConfigError::Invalid(format!("{what}: missing entry for {n:?}")))
        })
        .collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum GradingSpec {
    Bigrading,
    Original,
    Universal,
    /// A grading of `V` by `gamma`, given per basis vector or per simple
    /// root when the basis is the root basis.
    General {
        gamma: GroupSpec,
        #[serde(default)]
        deg_alpha: Option<BTreeMap<String, Vec<Int>>>,
        #[serde(default)]
        deg_basis: Option<BTreeMap<String, Vec<Int>>>,
    },
    /// Dot and basis degrees in an arbitrary group.
    Explicit {
        group: GroupSpec,
        f: BTreeMap<String, Vec<Int>>,
        g: BTreeMap<String, Vec<Int>>,
        deg_basis: BTreeMap<String, Vec<Int>>,
    },
}

impl GradingSpec {
    /// A literal kind name, or else a path to a JSON file.
    pub fn load(arg: &str) -> Result<Self> {
        match arg {
            "bigrading" => Ok(GradingSpec::Bigrading),
            "original" => Ok(GradingSpec::Original),
            "universal" => Ok(GradingSpec::Universal),
            path => read_json(Path::new(path)),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            GradingSpec::Bigrading => "bigrading",
            GradingSpec::Original => "original",
            GradingSpec::Universal => "universal",
            GradingSpec::General { .. } => "general",
            GradingSpec::Explicit { .. } => "explicit",
        }
    }

    /// The grading of `V` carried by a `general` spec.
    pub fn v_grading(&self, real: &Realization) -> Result<Option<VGrading>> {
        let GradingSpec::General {
            gamma,
            deg_alpha,
            deg_basis,
        } = self
        else {
            return Ok(None);
        };
        let grp = gamma.build()?;
        let sys = real.system();
        let from_alpha = match deg_alpha {
            Some(map) => {
                if real.basis().len() != sys.rank()
                    || (0..sys.rank()).any(|s| {
                        real.alpha(s)
                            .iter()
                            .enumerate()
                            .any(|(i, c)| *c != Rational::from_integer(BigInt::from(i32::from(i == s))))
                    })
                {
                    return invalid("\"deg_alpha\" needs the root basis; give \"deg_basis\" instead");
                }
                let v = by_name(map, sys.labels(), "deg_alpha")?;
                Some(v.into_iter().map(|x| element(&grp, x)).collect::<Result<Vec<_>>>()?)
            }
            None => None,
        };
        let from_basis = match deg_basis {
            Some(map) => {
                let v = by_name(map, real.basis(), "deg_basis")?;
                Some(v.into_iter().map(|x| element(&grp, x)).collect::<Result<Vec<_>>>()?)
            }
            None => None,
        };
        let degs = match (from_alpha, from_basis) {
            (Some(a), Some(b)) if a != b => return invalid("\"deg_alpha\" and \"deg_basis\" disagree"),
            (Some(a), _) => a,
            (None, Some(b)) => b,
            (None, None) => return invalid("a general grading needs \"deg_basis\" or \"deg_alpha\""),
        };
        Ok(Some(VGrading::new(&grp, degs)))
    }

    pub fn assignment(&self, real: &Realization) -> Result<DegreeAssignment> {
        match self {
            GradingSpec::Bigrading => Ok(DegreeAssignment::bigrading(real)),
            GradingSpec::Original => Ok(DegreeAssignment::original(real)),
            GradingSpec::Universal => Ok(derive_universal(real, None)?.assignment),
            GradingSpec::General { .. } => {
                let vg = self.v_grading(real)?.expect("general spec");
                Ok(DegreeAssignment::general_grading(real, &vg)?)
            }
            GradingSpec::Explicit {
                group,
                f,
                g,
                deg_basis,
            } => {
                let grp = group.build()?;
                let sys = real.system();
                let elems = |map: &BTreeMap<String, Vec<Int>>, names: &[String], what| -> Result<Vec<GroupElement>> {
                    by_name(map, names, what)?
                        .into_iter()
                        .map(|x| element(&grp, x))
                        .collect()
                };
                Ok(DegreeAssignment::new(
                    real,
                    &grp,
                    elems(f, sys.labels(), "f")?,
                    elems(g, sys.labels(), "g")?,
                    elems(deg_basis, real.basis(), "deg_basis")?,
                )?)
            }
        }
    }
}

/// `{"group": "...", "images": {"gen": "p/q", ...}}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterSpec {
    #[serde(default)]
    pub group: Option<String>,
    pub images: BTreeMap<String, String>,
}

impl CharacterSpec {
    pub fn build(&self, grading_kind: &str, grp: &Arc<AbGroup>) -> Result<Character> {
        if let Some(g) = &self.group {
            if g != grading_kind {
                return invalid(format!(
                    "character is for the {g} grading, but the {grading_kind} grading was selected"
                ));
            }
        }
        let images = by_name(&self.images, grp.gen_names(), "images")?
            .into_iter()
            .map(|s| rational(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Character::new(grp, images)?)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub scalar: String,
    pub diagram: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationSpec {
    pub name: String,
    #[serde(default)]
    pub family: Option<String>,
    pub terms: Vec<TermSpec>,
}

pub fn load_catalog(path: &Path, real: &Realization) -> Result<Vec<Relation>> {
    let specs: Vec<RelationSpec> = read_json(path)?;
    specs
        .into_iter()
        .map(|r| {
            let terms = r
                .terms
                .iter()
                .enumerate()
                .map(|(i, t)| {
                    let d = parse_diagram(&t.diagram, real).map_err(|e| {
                        ConfigError::Invalid(format!("relation {}, term {i}: {e}", r.name))
                    })?;
                    Ok((rational(&t.scalar)?, d))
                })
                .collect::<Result<Vec<_>>>()?;
            Relation::new(r.name, r.family.unwrap_or_else(|| "user".into()), terms)
                .map_err(|e| ConfigError::Invalid(format!("relation: {e}")))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub term: usize,
    pub degree: Vec<Int>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportJson {
    pub relation: String,
    pub homogeneous: bool,
    pub degree: Option<Vec<Int>>,
    pub witnesses: Vec<WitnessJson>,
}

impl From<&RelationReport> for ReportJson {
    fn from(r: &RelationReport) -> Self {
        ReportJson {
            relation: r.relation.clone(),
            homogeneous: r.homogeneous,
            degree: r.degree.as_ref().map(coordinates),
            witnesses: r
                .witnesses
                .iter()
                .map(|w| WitnessJson {
                    term: w.term,
                    degree: coordinates(&w.degree),
                })
                .collect(),
        }
    }
}

pub fn rational_json(q: &Rational) -> String {
    rational_to_string(q)
}
