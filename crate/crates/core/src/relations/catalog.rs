use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::coxeter::{CoxeterSystem, Polynomial, Realization};
use crate::diagram::{parse_diagram, Atom, Diagram};
use crate::{Color, Error, Rational, Result};

/// The built-in relation templates.
pub const PRESENTATION: &str = include_str!("../../data/presentation.rel");

/// A linear relation `Σ scalar · diagram = 0` between diagrams with a common
/// boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub family: String,
    pub terms: Vec<(Rational, Diagram)>,
}

impl Relation {
    pub fn new(name: String, family: String, terms: Vec<(Rational, Diagram)>) -> Result<Self> {
        if let Some((_, first)) = terms.first() {
            for (_, d) in &terms[1..] {
                if d.bottom() != first.bottom() || d.top() != first.top() {
                    return Err(Error::ComposeMismatch {
                        top: alloc::format!("{:?} -> {:?}", first.bottom(), first.top()),
                        bottom: alloc::format!("{:?} -> {:?}", d.bottom(), d.top()),
                    });
                }
            }
        }
        Ok(Relation {
            name,
            family,
            terms,
        })
    }

    pub fn is_vertex_only(&self) -> bool {
        self.terms.iter().all(|(_, d)| {
            d.atoms()
                .all(|a| matches!(a, Atom::Id(_) | Atom::Vertex(..)))
        })
    }
}

#[derive(Clone, Debug)]
struct TermTemplate {
    line: usize,
    scalar: Rational,
    body: Vec<(usize, String)>,
}

#[derive(Clone, Debug)]
struct RelationTemplate {
    family: String,
    line: usize,
    name: String,
    terms: Vec<TermTemplate>,
}

fn terr(line: usize, msg: impl Into<String>) -> Error {
    Error::Template {
        line,
        msg: msg.into(),
    }
}

fn parse_templates(text: &str) -> Result<Vec<RelationTemplate>> {
    let mut out = Vec::new();
    let mut family: Option<String> = None;
    let mut current: Option<RelationTemplate> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let (word, rest) = content.split_once(' ').unwrap_or((content, ""));
        let rest = rest.trim();
        match word {
            "family" if current.is_none() => family = Some(rest.to_string()),
            "relation" => {
                if current.is_some() {
                    return Err(terr(line, "`relation` inside an open relation"));
                }
                let family = family
                    .clone()
                    .ok_or_else(|| terr(line, "`relation` before any `family`"))?;
                current = Some(RelationTemplate {
                    family,
                    line,
                    name: rest.to_string(),
                    terms: Vec::new(),
                });
            }
            "term" => {
                let rel = current
                    .as_mut()
                    .ok_or_else(|| terr(line, "`term` outside a relation"))?;
                let scalar = crate::coxeter::parse_rational(rest)
                    .ok_or_else(|| terr(line, alloc::format!("bad scalar {rest:?}")))?;
                rel.terms.push(TermTemplate {
                    line,
                    scalar,
                    body: Vec::new(),
                });
            }
            "end" => {
                let rel = current
                    .take()
                    .ok_or_else(|| terr(line, "`end` outside a relation"))?;
                if rel.terms.is_empty() {
                    return Err(terr(line, "relation without terms"));
                }
                out.push(rel);
            }
            _ => {
                let term = current
                    .as_mut()
                    .and_then(|r| r.terms.last_mut())
                    .ok_or_else(|| terr(line, alloc::format!("unexpected line {content:?}")))?;
                term.body.push((line, content.to_string()));
            }
        }
    }
    if let Some(rel) = current {
        return Err(terr(rel.line, "relation is never closed with `end`"));
    }
    Ok(out)
}

/// Placeholder values for one instantiation of a template.
struct Binding<'a> {
    sys: &'a CoxeterSystem,
    vars: Vec<(String, String)>,
    /// `(s, t, m)` for two-color families.
    pair: Option<(Color, Color, usize)>,
    /// Placeholders whose value is the zero polynomial; terms mentioning
    /// them are dropped.
    zero: Vec<String>,
}

impl Binding<'_> {
    fn expand(&self, line: usize, text: &str) -> Result<String> {
        let mut s = String::new();
        let mut rest = text;
        while let Some(open) = rest.find('[') {
            s.push_str(&rest[..open]);
            let close = rest[open..]
                .find(']')
                .ok_or_else(|| terr(line, "unterminated `[`"))?
                + open;
            s.push_str(&self.macro_word(line, &rest[open + 1..close])?);
            rest = &rest[close + 1..];
        }
        s.push_str(rest);
        for (k, v) in &self.vars {
            s = s.replace(&alloc::format!("{{{k}}}"), v);
        }
        Ok(s)
    }

    fn macro_word(&self, line: usize, body: &str) -> Result<String> {
        let (s, t, m) = self
            .pair
            .ok_or_else(|| terr(line, "word macros need a two-color family"))?;
        let parts: Vec<&str> = body.split_whitespace().collect();
        let [kind, start, len] = parts.as_slice() else {
            return Err(terr(line, alloc::format!("bad macro [{body}]")));
        };
        let (a, b) = match *start {
            "s" => (s, t),
            "t" => (t, s),
            other => return Err(terr(line, alloc::format!("bad macro color {other:?}"))),
        };
        let n = match *len {
            "m" => m,
            "m-1" => m - 1,
            other => return Err(terr(line, alloc::format!("bad macro length {other:?}"))),
        };
        let w = CoxeterSystem::alternating(a, b, n);
        let labels = w.iter().map(|&c| self.sys.label(c));
        Ok(match *kind {
            "word" => labels.collect::<Vec<_>>().join(" "),
            "ids" => labels
                .map(|l| alloc::format!("id({l})"))
                .collect::<Vec<_>>()
                .join(" "),
            other => return Err(terr(line, alloc::format!("unknown macro {other:?}"))),
        })
    }
}

fn instantiate(t: &RelationTemplate, b: &Binding<'_>, real: &Realization) -> Result<Relation> {
    let mut terms = Vec::new();
    for term in &t.terms {
        if term
            .body
            .iter()
            .any(|(_, l)| b.zero.iter().any(|z| l.contains(&alloc::format!("{{{z}}}"))))
        {
            continue;
        }
        let mut text = String::new();
        for (line, l) in &term.body {
            text.push_str(&b.expand(*line, l)?);
            text.push('\n');
        }
        let d = parse_diagram(&text, real).map_err(|e| terr(term.line, e.to_string()))?;
        terms.push((term.scalar.clone(), d));
    }
    let name = b.expand(t.line, &t.name)?;
    Relation::new(name, t.family.clone(), terms).map_err(|e| terr(t.line, e.to_string()))
}

/// Probe polynomials for the forcing relation of `s`: the basis of `V`,
/// every root and `α_s²`, without repeats.
pub fn forcing_probes(real: &Realization, s: Color) -> Vec<Polynomial> {
    let d = real.dim();
    let mut out: Vec<Polynomial> = Vec::new();
    let mut push = |p: Polynomial| {
        if !out.contains(&p) {
            out.push(p);
        }
    };
    for i in 0..d {
        push(Polynomial::var(d, i));
    }
    for t in real.system().colors() {
        push(real.alpha_poly(t));
    }
    push(real.alpha_poly(s).pow(2));
    out
}

/// Ordered triples `(a, b, c)` of distinct colors with `m_ab = m_bc = 3`
/// and `m_ac = 2`.
fn a3_triples(sys: &CoxeterSystem) -> Vec<[Color; 3]> {
    let mut out = Vec::new();
    let three = |x, y| sys.m(x, y) == 3.into();
    for a in sys.colors() {
        for b in sys.colors() {
            for c in sys.colors() {
                if a != c && three(a, b) && three(b, c) && sys.m(a, c).is_two() {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Expands relation templates over a realization. Unknown families are
/// rejected.
pub fn expand_templates(text: &str, real: &Realization) -> Result<Vec<Relation>> {
    let sys = real.system();
    let label = |c: Color| sys.label(c).to_string();
    let mut out = Vec::new();
    for t in parse_templates(text)? {
        match t.family.as_str() {
            "one_color" => {
                for s in sys.colors() {
                    let b = Binding {
                        sys,
                        vars: alloc::vec![
                            ("s".into(), label(s)),
                            ("alpha".into(), real.show_poly(&real.alpha_poly(s))),
                        ],
                        pair: None,
                        zero: Vec::new(),
                    };
                    out.push(instantiate(&t, &b, real)?);
                }
            }
            "forcing" => {
                for s in sys.colors() {
                    for f in forcing_probes(real, s) {
                        let sf = real.reflect(s, &f)?;
                        let df = real.demazure(s, &f)?;
                        let mut zero = Vec::new();
                        for (k, p) in [("f", &f), ("sf", &sf), ("df", &df)] {
                            if p.is_zero() {
                                zero.push(k.to_string());
                            }
                        }
                        let b = Binding {
                            sys,
                            vars: alloc::vec![
                                ("s".into(), label(s)),
                                ("f".into(), real.show_poly(&f)),
                                ("sf".into(), real.show_poly(&sf)),
                                ("df".into(), real.show_poly(&df)),
                            ],
                            pair: None,
                            zero,
                        };
                        out.push(instantiate(&t, &b, real)?);
                    }
                }
            }
            "two_color" => {
                for (s, t2) in sys.finite_pairs() {
                    let m = sys.vertex_m(s, t2).expect("finite pair") as usize;
                    let last_t = *CoxeterSystem::alternating(t2, s, m).last().expect("m >= 2");
                    let b = Binding {
                        sys,
                        vars: alloc::vec![
                            ("s".into(), label(s)),
                            ("t".into(), label(t2)),
                            ("last_t".into(), label(last_t)),
                        ],
                        pair: Some((s, t2, m)),
                        zero: Vec::new(),
                    };
                    out.push(instantiate(&t, &b, real)?);
                }
            }
            "zamolodchikov_a3" => {
                for [a, b2, c] in a3_triples(sys) {
                    let b = Binding {
                        sys,
                        vars: alloc::vec![
                            ("1".into(), label(a)),
                            ("2".into(), label(b2)),
                            ("3".into(), label(c)),
                        ],
                        pair: None,
                        zero: Vec::new(),
                    };
                    out.push(instantiate(&t, &b, real)?);
                }
            }
            other => {
                return Err(terr(t.line, alloc::format!("unknown family {other:?}")));
            }
        }
    }
    Ok(out)
}

/// The relation catalog of a realization: one-color relations, polynomial
/// forcing on the probe set, two-color relations for each pair with finite
/// `m`, and the `A3` Zamolodchikov relation for each `A3`-type triple.
pub fn build_catalog(real: &Realization) -> Result<Vec<Relation>> {
    expand_templates(PRESENTATION, real)
}
