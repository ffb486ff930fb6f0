//! Line-oriented text format for diagrams.
//!
//! ```text
//! # comments and blank lines are ignored
//! bottom: s t s
//! slice: vertex(s,t)
//! slice: id(t) dot_out(s) id(t)
//! top: t t
//! ```
//!
//! Atoms are `id(c)`, `dot_in(c)`, `dot_out(c)`, `split(c)`, `merge(c)`,
//! `vertex(c,d)` and `poly{EXPR}`. The `top:` line is optional; when present
//! it must agree with the word produced by the slices.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{Atom, Diagram};
use crate::coxeter::Realization;
use crate::{Color, Error, Result};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_diagram(text: &str, real: &Realization) -> Result<Diagram> {
    let sys = real.system();
    let mut bottom: Option<Vec<Color>> = None;
    let mut slices = Vec::new();
    let mut top: Option<(usize, Vec<Color>)> = None;

    let word = |line: usize, rest: &str| -> Result<Vec<Color>> {
        rest.split_whitespace()
            .map(|l| sys.color(l).map_err(|_| perr(line, alloc::format!("unknown color {l:?}"))))
            .collect()
    };

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, rest) = content
            .split_once(':')
            .ok_or_else(|| perr(line, "expected `bottom:`, `slice:` or `top:`"))?;
        match key.trim() {
            "bottom" => {
                if bottom.is_some() {
                    return Err(perr(line, "duplicate `bottom:` line"));
                }
                if !slices.is_empty() {
                    return Err(perr(line, "`bottom:` must precede the slices"));
                }
                bottom = Some(word(line, rest)?);
            }
            "slice" => {
                if bottom.is_none() {
                    return Err(perr(line, "`slice:` before `bottom:`"));
                }
                if top.is_some() {
                    return Err(perr(line, "`slice:` after `top:`"));
                }
                slices.push((line, parse_slice(line, rest, real)?));
            }
            "top" => {
                if top.is_some() {
                    return Err(perr(line, "duplicate `top:` line"));
                }
                top = Some((line, word(line, rest)?));
            }
            other => return Err(perr(line, alloc::format!("unknown directive {other:?}"))),
        }
    }

    let bottom = bottom.ok_or_else(|| perr(0, "missing `bottom:` line"))?;
    let lines: Vec<usize> = slices.iter().map(|(l, _)| *l).collect();
    let d = Diagram::new(sys, bottom, slices.into_iter().map(|(_, s)| s).collect()).map_err(
        |e| match e {
            Error::Boundary { slice, .. } => perr(lines[slice], e.to_string()),
            other => other,
        },
    )?;
    if let Some((line, t)) = top {
        if t != d.top() {
            return Err(perr(
                line,
                alloc::format!(
                    "declared top [{}] differs from computed top [{}]",
                    sys.word_to_string(&t),
                    sys.word_to_string(d.top())
                ),
            ));
        }
    }
    Ok(d)
}

fn parse_slice(line: usize, text: &str, real: &Realization) -> Result<Vec<Atom>> {
    let sys = real.system();
    let color = |name: &str| {
        let name = name.trim();
        sys.color(name)
            .map_err(|_| perr(line, alloc::format!("unknown color {name:?}")))
    };
    let mut atoms = Vec::new();
    let mut rest = text.trim_start();
    while !rest.is_empty() {
        if let Some(body) = rest.strip_prefix("poly{") {
            let close = body
                .find('}')
                .ok_or_else(|| perr(line, "unterminated `poly{`"))?;
            let p = real
                .parse_poly(&body[..close])
                .map_err(|e| perr(line, e.to_string()))?;
            atoms.push(Atom::Poly(p));
            rest = body[close + 1..].trim_start();
            continue;
        }
        let open = rest
            .find('(')
            .ok_or_else(|| perr(line, alloc::format!("expected an atom at {rest:?}")))?;
        let name = rest[..open].trim();
        let after = &rest[open + 1..];
        let close = after
            .find(')')
            .ok_or_else(|| perr(line, alloc::format!("unterminated `{name}(`")))?;
        let args: Vec<&str> = after[..close].split(',').collect();
        let one = || -> Result<Color> {
            match args.as_slice() {
                [c] => color(c),
                _ => Err(perr(line, alloc::format!("`{name}` takes one color"))),
            }
        };
        let atom = match name {
            "id" => Atom::Id(one()?),
            "dot_in" => Atom::DotIn(one()?),
            "dot_out" => Atom::DotOut(one()?),
            "split" => Atom::Split(one()?),
            "merge" => Atom::Merge(one()?),
            "vertex" => match args.as_slice() {
                [a, b] => Atom::Vertex(color(a)?, color(b)?),
                _ => return Err(perr(line, "`vertex` takes two colors")),
            },
            other => return Err(perr(line, alloc::format!("unknown atom {other:?}"))),
        };
        atoms.push(atom);
        rest = after[close + 1..].trim_start();
    }
    Ok(atoms)
}

pub fn serialize_diagram(d: &Diagram, real: &Realization) -> String {
    let sys = real.system();
    let mut out = String::new();
    out.push_str("bottom:");
    push_word(&mut out, sys, d.bottom());
    out.push('\n');
    for slice in d.slices() {
        out.push_str("slice:");
        for atom in slice {
            out.push(' ');
            let l = |c: &Color| sys.label(*c);
            match atom {
                Atom::Id(c) => out.push_str(&alloc::format!("id({})", l(c))),
                Atom::DotIn(c) => out.push_str(&alloc::format!("dot_in({})", l(c))),
                Atom::DotOut(c) => out.push_str(&alloc::format!("dot_out({})", l(c))),
                Atom::Split(c) => out.push_str(&alloc::format!("split({})", l(c))),
                Atom::Merge(c) => out.push_str(&alloc::format!("merge({})", l(c))),
                Atom::Vertex(a, b) => {
                    out.push_str(&alloc::format!("vertex({},{})", l(a), l(b)))
                }
                Atom::Poly(p) => out.push_str(&alloc::format!("poly{{{}}}", real.show_poly(p))),
            }
        }
        out.push('\n');
    }
    out.push_str("top:");
    push_word(&mut out, sys, d.top());
    out.push('\n');
    out
}

fn push_word(out: &mut String, sys: &crate::CoxeterSystem, w: &[Color]) {
    for &c in w {
        out.push(' ');
        out.push_str(sys.label(c));
    }
}
