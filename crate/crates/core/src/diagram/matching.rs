//! Crossingless matchings of `m - 1` bottom points and `m - 1` top points.
//!
//! For `m = m_st` these index the terms of the Jones–Wenzl projector on
//! `m - 1` strands that appears in the `2m`-valent relations. An arc
//! joining two bottom points is a cap, one joining two top points is a cup.

use alloc::vec::Vec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Bottom(usize),
    Top(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArcKind {
    Through,
    Cap,
    Cup,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Arc {
    pub ends: (Point, Point),
    pub kind: ArcKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matching {
    /// Valence parameter; there are `m - 1` points on each side.
    pub m: usize,
    pub arcs: Vec<Arc>,
}

impl Matching {
    pub fn cups(&self) -> usize {
        self.arcs.iter().filter(|a| a.kind == ArcKind::Cup).count()
    }

    pub fn caps(&self) -> usize {
        self.arcs.iter().filter(|a| a.kind == ArcKind::Cap).count()
    }
}

/// Position of a point on the boundary circle: bottom left to right, then
/// top right to left.
fn circle_to_point(m: usize, i: usize) -> Point {
    if i < m {
        Point::Bottom(i)
    } else {
        Point::Top(2 * m - 1 - i)
    }
}

/// All noncrossing perfect matchings of the `2(m - 1)` boundary points,
/// i.e. the Temperley–Lieb diagrams on `m - 1` strands. There are
/// `Catalan(m - 1)` of them.
pub fn crossingless_matchings(m: usize) -> Vec<Matching> {
    let k = m.saturating_sub(1);
    let mut out = Vec::new();
    for pairs in noncrossing(0, 2 * k) {
        let arcs = pairs
            .into_iter()
            .map(|(i, j)| {
                let (a, b) = (circle_to_point(k, i), circle_to_point(k, j));
                let kind = match (a, b) {
                    (Point::Bottom(_), Point::Bottom(_)) => ArcKind::Cap,
                    (Point::Top(_), Point::Top(_)) => ArcKind::Cup,
                    _ => ArcKind::Through,
                };
                Arc { ends: (a, b), kind }
            })
            .collect();
        out.push(Matching { m, arcs });
    }
    out
}

/// Noncrossing perfect matchings of the interval `lo..hi` on a circle.
fn noncrossing(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
    if lo >= hi {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    // `lo` pairs with some `j` leaving an even number of points inside.
    for j in (lo + 1..hi).step_by(2) {
        let inner = noncrossing(lo + 1, j);
        let outer = noncrossing(j + 1, hi);
        for a in &inner {
            for b in &outer {
                let mut v = alloc::vec![(lo, j)];
                v.extend(a.iter().copied());
                v.extend(b.iter().copied());
                out.push(v);
            }
        }
    }
    out
}
