#![allow(dead_code)]

use hecke_core::{Atom, Color, CoxeterSystem, Diagram, Polynomial, Rational, Realization};
use rand::Rng;

pub const SYSTEMS: [&str; 7] = ["A1", "A2", "B2", "G2", "A1xA1", "A2xA1", "A3"];

pub fn root(t: &str) -> Realization {
    Realization::root(&CoxeterSystem::of_type(t).unwrap(), None).unwrap()
}

pub fn random_word<R: Rng>(sys: &CoxeterSystem, rng: &mut R, max_len: usize) -> Vec<Color> {
    let n = rng.gen_range(0..=max_len);
    (0..n).map(|_| rng.gen_range(0..sys.rank())).collect()
}

pub fn random_monomial<R: Rng>(dim: usize, rng: &mut R) -> Polynomial {
    let e = (0..dim).map(|_| rng.gen_range(0..3)).collect();
    let c = Rational::new(rng.gen_range(1..7).into(), rng.gen_range(1..4).into());
    Polynomial::monomial(e, c)
}

pub fn random_polynomial<R: Rng>(dim: usize, rng: &mut R) -> Polynomial {
    let mut p = Polynomial::zero(dim);
    for _ in 0..rng.gen_range(1..4) {
        let m = random_monomial(dim, rng);
        p = if rng.gen_bool(0.3) { p.sub(&m) } else { p.add(&m) };
    }
    if p.is_zero() {
        random_monomial(dim, rng)
    } else {
        p
    }
}

/// One random slice whose source is `word`. Polynomial boxes are monomials
/// when `monomial_boxes` is set, so every diagram is homogeneous.
pub fn random_slice<R: Rng>(
    real: &Realization,
    word: &[Color],
    rng: &mut R,
    monomial_boxes: bool,
) -> Vec<Atom> {
    let sys = real.system();
    let mut out = Vec::new();
    let mut pos = 0;
    let mut len = word.len();
    let insert = |out: &mut Vec<Atom>, len: &mut usize, rng: &mut R| {
        if rng.gen_bool(0.08) {
            out.push(Atom::DotIn(rng.gen_range(0..sys.rank())));
            *len += 1;
        } else if rng.gen_bool(0.05) {
            let p = if monomial_boxes {
                random_monomial(real.dim(), rng)
            } else {
                random_polynomial(real.dim(), rng)
            };
            out.push(Atom::Poly(p));
        }
    };
    while pos < word.len() {
        insert(&mut out, &mut len, rng);
        let s = word[pos];
        let mut options = vec![Atom::Id(s), Atom::Id(s), Atom::Id(s), Atom::DotOut(s)];
        if len < 8 {
            options.push(Atom::Split(s));
        }
        if word.get(pos + 1) == Some(&s) {
            options.push(Atom::Merge(s));
            options.push(Atom::Merge(s));
        }
        for t in sys.colors() {
            if let Some(m) = sys.vertex_m(s, t) {
                let m = m as usize;
                if pos + m <= word.len() && word[pos..pos + m] == CoxeterSystem::alternating(s, t, m)[..] {
                    options.push(Atom::Vertex(s, t));
                    options.push(Atom::Vertex(s, t));
                }
            }
        }
        let atom = options.swap_remove(rng.gen_range(0..options.len()));
        let (src, tgt) = (atom.source(sys).unwrap().len(), atom.target(sys).unwrap().len());
        len = len + tgt - src;
        pos += src;
        out.push(atom);
    }
    insert(&mut out, &mut len, rng);
    out
}

pub fn random_diagram_from<R: Rng>(
    real: &Realization,
    bottom: Vec<Color>,
    height: usize,
    rng: &mut R,
    monomial_boxes: bool,
) -> Diagram {
    let sys = real.system();
    let mut slices = Vec::new();
    let mut d = Diagram::identity(bottom.clone());
    for _ in 0..height {
        let slice = random_slice(real, d.top(), rng, monomial_boxes);
        slices.push(slice);
        d = Diagram::new(sys, bottom.clone(), slices.clone()).unwrap();
    }
    d
}

pub fn random_diagram<R: Rng>(real: &Realization, rng: &mut R, monomial_boxes: bool) -> Diagram {
    let bottom = random_word(real.system(), rng, 5);
    let h = rng.gen_range(0..5);
    random_diagram_from(real, bottom, h, rng, monomial_boxes)
}

/// Vertex-only diagram applying braid moves `(position, a, b)` to `bottom`.
pub fn braid_path(sys: &CoxeterSystem, bottom: &[Color], moves: &[(usize, Color, Color)]) -> Diagram {
    let mut word = bottom.to_vec();
    let mut slices = Vec::new();
    for &(pos, a, b) in moves {
        let m = sys.vertex_m(a, b).unwrap() as usize;
        let mut slice: Vec<Atom> = word[..pos].iter().map(|&c| Atom::Id(c)).collect();
        slice.push(Atom::Vertex(a, b));
        slice.extend(word[pos + m..].iter().map(|&c| Atom::Id(c)));
        let repl = CoxeterSystem::alternating(b, a, m);
        word.splice(pos..pos + m, repl);
        slices.push(slice);
    }
    Diagram::new(sys, bottom.to_vec(), slices).unwrap()
}
