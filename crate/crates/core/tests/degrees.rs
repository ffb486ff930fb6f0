mod common;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use common::{braid_path, random_diagram, random_diagram_from, root, SYSTEMS};
use hecke_core::grading::{degree, phi, Perturbed};
use hecke_core::relations::{build_catalog, verify_all};
use hecke_core::rescale::{theta_apply, Character};
use hecke_core::{
    Atom, Color, CoxeterSystem, DegreeAssignment, Diagram, Generator, GroupElement,
    Rational,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Bigraded degree by counting atoms: dot_in and merge move the first
/// coordinate, dot_out and split the second, a monomial of total degree k
/// adds (k, k), vertices contribute nothing.
fn counted_bidegree(d: &Diagram) -> (i64, i64) {
    let (mut a, mut b) = (0i64, 0i64);
    for atom in d.atoms() {
        match atom {
            Atom::DotIn(_) => a += 1,
            Atom::Merge(_) => a -= 1,
            Atom::DotOut(_) => b += 1,
            Atom::Split(_) => b -= 1,
            Atom::Poly(p) => {
                let (e, _) = p.terms().next().unwrap();
                let k: i64 = e.iter().map(|&x| x as i64).sum();
                a += k;
                b += k;
            }
            _ => {}
        }
    }
    (a, b)
}

fn pair(g: &GroupElement) -> (i64, i64) {
    let c: Vec<i64> = g.coeffs().iter().map(|x| i64::try_from(x).unwrap()).collect();
    (c[0], c[1])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn additive_under_compose_and_tensor(seed in any::<u64>(), which in 0usize..SYSTEMS.len()) {
        let real = root(SYSTEMS[which]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_diagram(&real, &mut rng, true);
        let h = rng.gen_range(1..4);
        let b = random_diagram_from(&real, a.top().to_vec(), h, &mut rng, true);
        let c = random_diagram(&real, &mut rng, true);
        for model in [
            DegreeAssignment::bigrading(&real),
            DegreeAssignment::universal_lambda(real.system()),
        ] {
            let da = degree(&a, &model).unwrap();
            let db = degree(&b, &model).unwrap();
            let dc = degree(&c, &model).unwrap();
            prop_assert_eq!(degree(&a.compose(&b).unwrap(), &model).unwrap(), &da + &db);
            prop_assert_eq!(degree(&a.tensor(&c), &model).unwrap(), &da + &dc);
        }
        let bi = DegreeAssignment::bigrading(&real);
        prop_assert_eq!(pair(&degree(&a, &bi).unwrap()), counted_bidegree(&a));
    }

    #[test]
    fn theta_is_multiplicative(seed in any::<u64>(), which in 0usize..SYSTEMS.len()) {
        let real = root(SYSTEMS[which]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let model = DegreeAssignment::bigrading(&real);
        let mut q = || Rational::new(rng.gen_range(1..9).into(), rng.gen_range(1..9).into());
        let chi = Character::new(model.group(), vec![q(), q()]).unwrap();
        let a = random_diagram(&real, &mut rng, true);
        let b = random_diagram_from(&real, a.top().to_vec(), 2, &mut rng, true);
        let ta = theta_apply(&chi, &a, &model).unwrap();
        let tb = theta_apply(&chi, &b, &model).unwrap();
        let tab = theta_apply(&chi, &a.compose(&b).unwrap(), &model).unwrap();
        prop_assert_eq!(&tab.scalar, &(&ta.scalar * &tb.scalar));
        let tt = theta_apply(&chi, &a.tensor(&b), &model).unwrap();
        prop_assert_eq!(&tt.scalar, &(&ta.scalar * &tb.scalar));
        // Independent evaluation: χ(m)^a χ(n)^b on the counted bidegree.
        let (x, y) = counted_bidegree(&a);
        let pow = |r: &Rational, k: i64| {
            if k >= 0 { num_traits::pow(r.clone(), k as usize) } else { num_traits::pow(r.recip(), (-k) as usize) }
        };
        prop_assert_eq!(ta.scalar, pow(&chi.images()[0], x) * pow(&chi.images()[1], y));
    }

    #[test]
    fn vertex_only_diagrams_telescope(seed in any::<u64>(), which in 0usize..SYSTEMS.len()) {
        let real = root(SYSTEMS[which]);
        let sys = real.system();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut word: Vec<Color> = common::random_word(sys, &mut rng, 7);
        let bottom = word.clone();
        let mut moves = Vec::new();
        for _ in 0..rng.gen_range(0..8) {
            let avail = braid_moves(sys, &word);
            if avail.is_empty() {
                break;
            }
            let mv = avail[rng.gen_range(0..avail.len())];
            word = apply_move(sys, &word, mv);
            moves.push(mv);
        }
        let d = braid_path(sys, &bottom, &moves);
        prop_assert_eq!(d.top(), &word[..]);
        let model = DegreeAssignment::universal_lambda(sys);
        prop_assert_eq!(degree(&d, &model).unwrap(), &phi(&bottom, &model) - &phi(&word, &model));
    }
}

fn braid_moves(sys: &CoxeterSystem, word: &[Color]) -> Vec<(usize, Color, Color)> {
    let mut out = Vec::new();
    for pos in 0..word.len() {
        for (a, b) in sys.finite_pairs() {
            let m = sys.vertex_m(a, b).unwrap() as usize;
            if pos + m <= word.len() && word[pos..pos + m] == CoxeterSystem::alternating(a, b, m)[..] {
                out.push((pos, a, b));
            }
        }
    }
    out
}

fn apply_move(sys: &CoxeterSystem, word: &[Color], (pos, a, b): (usize, Color, Color)) -> Vec<Color> {
    let m = sys.vertex_m(a, b).unwrap() as usize;
    let mut w = word.to_vec();
    w.splice(pos..pos + m, CoxeterSystem::alternating(b, a, m));
    w
}

#[test]
fn a3_reduced_expressions_of_the_longest_element() {
    let real = root("A3");
    let sys = real.system();
    let start = vec![0, 1, 0, 2, 1, 0];
    let target = vec![2, 1, 2, 0, 1, 2];
    // Breadth-first search over braid moves from the bottom boundary.
    let mut seen: BTreeMap<Vec<Color>, Vec<(usize, Color, Color)>> = BTreeMap::new();
    seen.insert(start.clone(), vec![]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(w) = queue.pop_front() {
        for mv in braid_moves(sys, &w) {
            let next = apply_move(sys, &w, mv);
            if !seen.contains_key(&next) {
                let mut path = seen[&w].clone();
                path.push(mv);
                seen.insert(next.clone(), path);
                queue.push_back(next);
            }
        }
    }
    assert_eq!(seen.len(), 16);
    assert!(seen.contains_key(&target));

    let model = DegreeAssignment::universal_lambda(sys);
    let expected = &phi(&start, &model) - &phi(&target, &model);
    // φ(s t s u t s) - φ(u t u s t u) = 2 g_s - 2 g_u
    let mut coords = vec![0i64; model.group().n_gens()];
    coords[1] = 2;
    coords[5] = -2;
    assert_eq!(expected, GroupElement::from_i64(model.group(), &coords).unwrap());
    let d = braid_path(sys, &start, &seen[&target]);
    assert_eq!(degree(&d, &model).unwrap(), expected);

    let catalog = build_catalog(&real).unwrap();
    let zam: Vec<_> = catalog.iter().filter(|r| r.family == "zamolodchikov_a3").collect();
    assert!(!zam.is_empty());
    let mut words = BTreeSet::new();
    for rel in &zam {
        for (_, side) in &rel.terms {
            assert!(side.atoms().all(|a| matches!(a, Atom::Id(_) | Atom::Vertex(..))));
            words.extend(side.words().iter().cloned());
            let d = degree(side, &model).unwrap();
            assert_eq!(d, &phi(side.bottom(), &model) - &phi(side.top(), &model));
        }
    }
    assert!(words.iter().all(|w| seen.contains_key(w)));
}

#[test]
fn perturbing_any_generator_breaks_a_relation() {
    for t in SYSTEMS {
        let real = root(t);
        let base = DegreeAssignment::bigrading(&real);
        for gen in Generator::all(&real) {
            for k in 0..2 {
                let mut c = [0i64, 0];
                c[k] = 1;
                let shift = GroupElement::from_i64(base.group(), &c).unwrap();
                let model = Perturbed { base: &base, target: gen.clone(), shift };
                let report = verify_all(&real, &model).unwrap();
                assert!(
                    !report.all_homogeneous(),
                    "{t}: shifting {} by {:?} keeps every relation homogeneous",
                    gen.describe(real.system(), real.basis()),
                    c
                );
            }
        }
    }
}

#[test]
fn bigraded_degree_of_shapes() {
    let real = root("B2");
    let sys = real.system();
    let model = DegreeAssignment::bigrading(&real);
    let g = |a: i64, b: i64| GroupElement::from_i64(model.group(), &[a, b]).unwrap();
    use hecke_core::diagram::shapes;
    assert_eq!(degree(&shapes::barbell(sys, 0).unwrap(), &model).unwrap(), g(1, 1));
    assert_eq!(degree(&shapes::cup(sys, 0).unwrap(), &model).unwrap(), g(1, -1));
    assert_eq!(degree(&shapes::cap(sys, 0).unwrap(), &model).unwrap(), g(-1, 1));
    assert_eq!(degree(&shapes::vertex(sys, 0, 1).unwrap(), &model).unwrap(), g(0, 0));
}
