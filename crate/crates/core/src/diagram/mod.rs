//! Soergel diagrams as vertical stacks of horizontal slices.
//!
//! A diagram is read bottom to top. Each slice lists generators left to
//! right; the concatenated source words of a slice must equal the word
//! produced by the slice below it. Diagrams are not taken up to isotopy.

mod dsl;
mod matching;

pub use dsl::{parse_diagram, serialize_diagram};
pub use matching::{crossingless_matchings, Arc as MatchingArc, ArcKind, Matching, Point};

use alloc::vec::Vec;

use crate::coxeter::{CoxeterSystem, Polynomial};
use crate::{Color, Error, Result};

/// A generating morphism (or identity strand) occupying part of a slice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Id(Color),
    /// Start dot `1 → B_s`.
    DotIn(Color),
    /// End dot `B_s → 1`.
    DotOut(Color),
    /// `B_s → B_s B_s`.
    Split(Color),
    /// `B_s B_s → B_s`.
    Merge(Color),
    /// 2m-valent vertex from the alternating word starting with the first
    /// color to the one starting with the second.
    Vertex(Color, Color),
    /// A polynomial box `1 → 1`.
    Poly(Polynomial),
}

impl Atom {
    pub fn source(&self, sys: &CoxeterSystem) -> Result<Vec<Color>> {
        Ok(match self {
            Atom::Id(s) | Atom::DotOut(s) | Atom::Split(s) => alloc::vec![*s],
            Atom::DotIn(_) | Atom::Poly(_) => Vec::new(),
            Atom::Merge(s) => alloc::vec![*s, *s],
            Atom::Vertex(s, t) => {
                let m = vertex_m(sys, *s, *t)?;
                CoxeterSystem::alternating(*s, *t, m)
            }
        })
    }

    pub fn target(&self, sys: &CoxeterSystem) -> Result<Vec<Color>> {
        Ok(match self {
            Atom::Id(s) | Atom::DotIn(s) | Atom::Merge(s) => alloc::vec![*s],
            Atom::DotOut(_) | Atom::Poly(_) => Vec::new(),
            Atom::Split(s) => alloc::vec![*s, *s],
            Atom::Vertex(s, t) => {
                let m = vertex_m(sys, *s, *t)?;
                CoxeterSystem::alternating(*t, *s, m)
            }
        })
    }

    /// Colors mentioned by the atom.
    pub fn colors(&self) -> Vec<Color> {
        match self {
            Atom::Id(s) | Atom::DotIn(s) | Atom::DotOut(s) | Atom::Split(s) | Atom::Merge(s) => {
                alloc::vec![*s]
            }
            Atom::Vertex(s, t) => alloc::vec![*s, *t],
            Atom::Poly(_) => Vec::new(),
        }
    }
}

fn vertex_m(sys: &CoxeterSystem, s: Color, t: Color) -> Result<usize> {
    if s >= sys.rank() || t >= sys.rank() {
        return Err(Error::UnknownColor(alloc::format!("#{}", s.max(t))));
    }
    sys.vertex_m(s, t)
        .map(|m| m as usize)
        .ok_or_else(|| Error::NoVertex(sys.label(s).into(), sys.label(t).into()))
}

/// A morphism between words in the generating objects `B_s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    slices: Vec<Vec<Atom>>,
    /// Word below each slice followed by the top word; never empty.
    words: Vec<Vec<Color>>,
}

impl Diagram {
    /// Validates slice-by-slice boundary matching and derives the top word.
    pub fn new(sys: &CoxeterSystem, bottom: Vec<Color>, slices: Vec<Vec<Atom>>) -> Result<Self> {
        for &c in &bottom {
            if c >= sys.rank() {
                return Err(Error::UnknownColor(alloc::format!("#{c}")));
            }
        }
        let mut word = bottom;
        let mut words = Vec::with_capacity(slices.len() + 1);
        for (k, slice) in slices.iter().enumerate() {
            let mut next = Vec::with_capacity(word.len());
            let mut pos = 0;
            for atom in slice {
                for c in atom.colors() {
                    if c >= sys.rank() {
                        return Err(Error::UnknownColor(alloc::format!("#{c}")));
                    }
                }
                let src = atom.source(sys)?;
                let end = pos + src.len();
                if end > word.len() || word[pos..end] != src[..] {
                    return Err(Error::Boundary {
                        slice: k,
                        position: pos,
                        expected: sys.word_to_string(&src),
                        found: sys.word_to_string(&word[pos.min(word.len())..end.min(word.len())]),
                    });
                }
                next.extend(atom.target(sys)?);
                pos = end;
            }
            if pos != word.len() {
                return Err(Error::Boundary {
                    slice: k,
                    position: pos,
                    expected: "end of slice".into(),
                    found: sys.word_to_string(&word[pos..]),
                });
            }
            words.push(core::mem::replace(&mut word, next));
        }
        words.push(word);
        Ok(Diagram { slices, words })
    }

    /// The identity of a word: no slices at all.
    pub fn identity(word: Vec<Color>) -> Self {
        Diagram {
            slices: Vec::new(),
            words: alloc::vec![word],
        }
    }

    /// One generator on its own.
    pub fn atom(sys: &CoxeterSystem, atom: Atom) -> Result<Self> {
        let bottom = atom.source(sys)?;
        Self::new(sys, bottom, alloc::vec![alloc::vec![atom]])
    }

    pub fn bottom(&self) -> &[Color] {
        &self.words[0]
    }

    pub fn top(&self) -> &[Color] {
        self.words.last().expect("nonempty words")
    }

    /// Word below slice `k`; `words()[slices().len()]` is the top.
    pub fn words(&self) -> &[Vec<Color>] {
        &self.words
    }

    pub fn slices(&self) -> &[Vec<Atom>] {
        &self.slices
    }

    pub fn atoms(&self) -> impl Iterator<Item = &Atom> {
        self.slices.iter().flatten()
    }

    /// Stacks `above` on top of `self`.
    pub fn compose(&self, above: &Diagram) -> Result<Diagram> {
        if self.top() != above.bottom() {
            return Err(Error::ComposeMismatch {
                top: word_debug(self.top()),
                bottom: word_debug(above.bottom()),
            });
        }
        let mut slices = self.slices.clone();
        slices.extend(above.slices.iter().cloned());
        let mut words = self.words.clone();
        words.extend(above.words[1..].iter().cloned());
        Ok(Diagram { slices, words })
    }

    /// Places `right` beside `self`. The shorter stack is padded with
    /// identity strands.
    pub fn tensor(&self, right: &Diagram) -> Diagram {
        let height = self.slices.len().max(right.slices.len());
        let mut slices = Vec::with_capacity(height);
        let mut words = Vec::with_capacity(height + 1);
        for k in 0..=height {
            let mut word = word_at(&self.words, k).clone();
            word.extend(word_at(&right.words, k).iter().copied());
            words.push(word);
            if k < height {
                let mut slice = padded(self, k);
                slice.extend(padded(right, k));
                slices.push(slice);
            }
        }
        Diagram { slices, words }
    }

    /// Drops slices that consist of identity strands only.
    pub fn normal_form(&self) -> Diagram {
        let mut slices = Vec::new();
        let mut words = alloc::vec![self.words[0].clone()];
        for (k, slice) in self.slices.iter().enumerate() {
            if slice.iter().all(|a| matches!(a, Atom::Id(_))) {
                continue;
            }
            slices.push(slice.clone());
            words.push(self.words[k + 1].clone());
        }
        Diagram { slices, words }
    }
}

fn word_at(words: &[Vec<Color>], k: usize) -> &Vec<Color> {
    words.get(k).unwrap_or_else(|| words.last().expect("nonempty words"))
}

fn padded(d: &Diagram, k: usize) -> Vec<Atom> {
    match d.slices.get(k) {
        Some(s) => s.clone(),
        None => d.top().iter().map(|&c| Atom::Id(c)).collect(),
    }
}

fn word_debug(w: &[Color]) -> alloc::string::String {
    w.iter()
        .map(|c| alloc::format!("{c}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Frequently used composite diagrams.
pub mod shapes {
    use super::{Atom, Diagram};
    use crate::coxeter::CoxeterSystem;
    use crate::{Color, Result};
    use alloc::vec;

    /// End dot on start dot: `1 → 1`.
    pub fn barbell(sys: &CoxeterSystem, s: Color) -> Result<Diagram> {
        Diagram::new(sys, vec![], vec![vec![Atom::DotIn(s)], vec![Atom::DotOut(s)]])
    }

    /// The `2m`-valent vertex on its own.
    pub fn vertex(sys: &CoxeterSystem, s: Color, t: Color) -> Result<Diagram> {
        Diagram::atom(sys, Atom::Vertex(s, t))
    }

    /// `1 → B_s B_s` as start dot then split.
    pub fn cup(sys: &CoxeterSystem, s: Color) -> Result<Diagram> {
        Diagram::new(sys, vec![], vec![vec![Atom::DotIn(s)], vec![Atom::Split(s)]])
    }

    /// `B_s B_s → 1` as merge then end dot.
    pub fn cap(sys: &CoxeterSystem, s: Color) -> Result<Diagram> {
        Diagram::new(sys, vec![s, s], vec![vec![Atom::Merge(s)], vec![Atom::DotOut(s)]])
    }

    /// `B_s → B_s B_t B_s`: an `s` split with a `t` strand starting between
    /// the tines.
    pub fn pitchfork_up(sys: &CoxeterSystem, s: Color, t: Color) -> Result<Diagram> {
        Diagram::new(
            sys,
            vec![s],
            vec![vec![Atom::Split(s)], vec![Atom::Id(s), Atom::DotIn(t), Atom::Id(s)]],
        )
    }

    /// `B_s B_t B_s → B_s`: the vertical flip of [`pitchfork_up`].
    pub fn pitchfork_down(sys: &CoxeterSystem, s: Color, t: Color) -> Result<Diagram> {
        Diagram::new(
            sys,
            vec![s, t, s],
            vec![vec![Atom::Id(s), Atom::DotOut(t), Atom::Id(s)], vec![Atom::Merge(s)]],
        )
    }
}
