//! Coxeter systems, realizations and the polynomial ring `R = Sym(V)`.

mod poly;
mod realization;
mod vgrading;

pub use poly::{parse_rational, rational_to_string, Polynomial};
pub use realization::{Realization, RealizationKind};
pub use vgrading::{validate_v_grading, VGrading, VGradingCheck, VGradingReport, VInvariant};
pub(crate) use vgrading::root_degree;

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Color, Error, Result};

/// An entry `m_st` of a Coxeter matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoxeterEntry {
    Finite(u32),
    Infinite,
}

impl CoxeterEntry {
    pub fn finite(self) -> Option<u32> {
        match self {
            CoxeterEntry::Finite(m) => Some(m),
            CoxeterEntry::Infinite => None,
        }
    }

    pub fn is_two(self) -> bool {
        self == CoxeterEntry::Finite(2)
    }
}

impl From<u32> for CoxeterEntry {
    fn from(m: u32) -> Self {
        CoxeterEntry::Finite(m)
    }
}

impl fmt::Display for CoxeterEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterEntry::Finite(m) => write!(f, "{m}"),
            CoxeterEntry::Infinite => f.write_str("inf"),
        }
    }
}

/// A Coxeter system `(W, S)` given by labelled simple reflections and its
/// Coxeter matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterSystem {
    labels: Vec<String>,
    m: Vec<Vec<CoxeterEntry>>,
}

fn valid_label(l: &str) -> bool {
    !l.is_empty() && l.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl CoxeterSystem {
    pub fn new(labels: Vec<String>, m: Vec<Vec<CoxeterEntry>>) -> Result<Self> {
        let n = labels.len();
        for (i, l) in labels.iter().enumerate() {
            if !valid_label(l) {
                return Err(Error::InvalidLabel(l.clone()));
            }
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        if m.len() != n || m.iter().any(|r| r.len() != n) {
            return Err(Error::Shape {
                expected: alloc::format!("{n}x{n}"),
                found: alloc::format!(
                    "{}x{}",
                    m.len(),
                    m.first().map(|r| r.len()).unwrap_or(0)
                ),
            });
        }
        for i in 0..n {
            if m[i][i] != CoxeterEntry::Finite(1) {
                return Err(Error::DiagonalNotOne(labels[i].clone()));
            }
            for j in 0..n {
                if m[i][j] != m[j][i] {
                    return Err(Error::NotSymmetric(i, j));
                }
                if i != j {
                    if let CoxeterEntry::Finite(x) = m[i][j] {
                        if x < 2 {
                            return Err(Error::OffDiagonalTooSmall(
                                labels[i].clone(),
                                labels[j].clone(),
                            ));
                        }
                    }
                }
            }
        }
        Ok(CoxeterSystem { labels, m })
    }

    /// Matrix entries as integers, with `0` standing for `∞`.
    pub fn from_u32(labels: &[&str], m: &[&[u32]]) -> Result<Self> {
        Self::new(
            labels.iter().map(|s| s.to_string()).collect(),
            m.iter()
                .map(|row| {
                    row.iter()
                        .map(|&x| {
                            if x == 0 {
                                CoxeterEntry::Infinite
                            } else {
                                CoxeterEntry::Finite(x)
                            }
                        })
                        .collect()
                })
                .collect(),
        )
    }

    /// Builds a system from a type name such as `A3`, `B2`, `G2`, `I2(5)`,
    /// `A2xA1`. Labels are `s, t, u, v` up to rank four and `s1, s2, ...`
    /// beyond.
    pub fn of_type(name: &str) -> Result<Self> {
        let mut blocks: Vec<Vec<Vec<u32>>> = Vec::new();
        for part in name.split(['x', '×']) {
            blocks.push(irreducible_block(part.trim())?);
        }
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut m = vec![vec![2u32; n]; n];
        let mut off = 0;
        for b in &blocks {
            for (i, row) in b.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    m[off + i][off + j] = x;
                }
            }
            off += b.len();
        }
        let labels: Vec<String> = if n <= 4 {
            ["s", "t", "u", "v"][..n].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=n).map(|i| alloc::format!("s{i}")).collect()
        };
        let rows: Vec<&[u32]> = m.iter().map(Vec::as_slice).collect();
        let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        Self::from_u32(&label_refs, &rows)
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, s: Color) -> &str {
        &self.labels[s]
    }

    pub fn color(&self, label: &str) -> Result<Color> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownColor(label.into()))
    }

    pub fn m(&self, s: Color, t: Color) -> CoxeterEntry {
        self.m[s][t]
    }

    /// `m_st` when `s ≠ t` and it is finite, i.e. when a 2m-valent vertex exists.
    pub fn vertex_m(&self, s: Color, t: Color) -> Option<u32> {
        if s == t {
            return None;
        }
        self.m[s][t].finite()
    }

    pub fn colors(&self) -> core::ops::Range<Color> {
        0..self.rank()
    }

    /// Ordered pairs `(s, t)`, `s ≠ t`, with `m_st` finite.
    pub fn finite_pairs(&self) -> Vec<(Color, Color)> {
        let mut out = Vec::new();
        for s in self.colors() {
            for t in self.colors() {
                if self.vertex_m(s, t).is_some() {
                    out.push((s, t));
                }
            }
        }
        out
    }

    /// The alternating word `s t s t ...` of length `len`.
    pub fn alternating(s: Color, t: Color, len: usize) -> Vec<Color> {
        (0..len).map(|i| if i % 2 == 0 { s } else { t }).collect()
    }

    /// Connected components of the Coxeter graph (edges where `m_st ≥ 3`),
    /// each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<Color>> {
        let n = self.rank();
        let mut comp = vec![usize::MAX; n];
        let mut out: Vec<Vec<Color>> = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for y in 0..n {
                    if y != x && comp[y] == usize::MAX && !self.m[x][y].is_two() {
                        comp[y] = id;
                        members.push(y);
                        stack.push(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn word_to_string(&self, word: &[Color]) -> String {
        word.iter()
            .map(|&c| self.labels[c].as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn irreducible_block(name: &str) -> Result<Vec<Vec<u32>>> {
    let bad = || Error::InvalidLabel(name.into());
    let (kind, rest) = name.split_at(name.find(|c: char| !c.is_ascii_alphabetic()).ok_or_else(bad)?);
    let rank_and_m = |s: &str| -> Result<(usize, Option<u32>)> {
        match s.split_once('(') {
            Some((r, m)) => {
                let m = m.strip_suffix(')').ok_or_else(bad)?;
                Ok((r.parse().map_err(|_| bad())?, Some(m.parse().map_err(|_| bad())?)))
            }
            None => Ok((s.parse().map_err(|_| bad())?, None)),
        }
    };
    let (n, param) = rank_and_m(rest)?;
    let mut m = vec![vec![2u32; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    let link = |m: &mut Vec<Vec<u32>>, i: usize, j: usize, v: u32| {
        m[i][j] = v;
        m[j][i] = v;
    };
    match (kind, n, param) {
        ("A", n, None) if n >= 1 => {
            for i in 1..n {
                link(&mut m, i - 1, i, 3);
            }
        }
        ("B" | "C", n, None) if n >= 2 => {
            for i in 1..n - 1 {
                link(&mut m, i - 1, i, 3);
            }
            link(&mut m, n - 2, n - 1, 4);
        }
        ("G", 2, None) => link(&mut m, 0, 1, 6),
        ("F", 4, None) => {
            link(&mut m, 0, 1, 3);
            link(&mut m, 1, 2, 4);
            link(&mut m, 2, 3, 3);
        }
        ("I", 2, Some(k)) if k >= 2 => link(&mut m, 0, 1, k),
        _ => return Err(bad()),
    }
    Ok(m)
}
