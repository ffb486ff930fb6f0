mod common;

use common::{random_diagram, root};
use hecke_core::diagram::{crossingless_matchings, parse_diagram, serialize_diagram, shapes};
use hecke_core::{Atom, Diagram};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn corpus() -> Vec<(&'static str, Diagram)> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let types = ["A1", "A2", "B2", "G2", "A1xA1", "A3", "I2(5)"];
    while out.len() < 50 {
        let t = types[out.len() % types.len()];
        let real = realization(t);
        let d = random_diagram(&real, &mut rng, false);
        out.push((t, d));
    }
    out
}

fn realization(t: &str) -> hecke_core::Realization {
    if t == "I2(5)" {
        hecke_core::Realization::degree_skeleton(&hecke_core::CoxeterSystem::of_type(t).unwrap())
    } else {
        root(t)
    }
}

#[test]
fn corpus_covers_every_atom_kind() {
    let mut kinds = [false; 7];
    for (_, d) in corpus() {
        for a in d.atoms() {
            let k = match a {
                Atom::Id(_) => 0,
                Atom::DotIn(_) => 1,
                Atom::DotOut(_) => 2,
                Atom::Split(_) => 3,
                Atom::Merge(_) => 4,
                Atom::Vertex(..) => 5,
                Atom::Poly(_) => 6,
            };
            kinds[k] = true;
        }
    }
    assert_eq!(kinds, [true; 7]);
}

#[test]
fn corpus_round_trips() {
    for (i, (t, d)) in corpus().into_iter().enumerate() {
        let real = realization(t);
        let text = serialize_diagram(&d, &real);
        let back = parse_diagram(&text, &real).unwrap_or_else(|e| panic!("#{i} ({t}): {e}\n{text}"));
        assert_eq!(back, d, "#{i} ({t})\n{text}");
        assert_eq!(serialize_diagram(&back, &real), text);
    }
}

#[test]
fn shapes_round_trip() {
    let real = root("G2");
    let sys = real.system();
    for d in [
        shapes::barbell(sys, 1).unwrap(),
        shapes::cup(sys, 0).unwrap(),
        shapes::cap(sys, 1).unwrap(),
        shapes::vertex(sys, 1, 0).unwrap(),
        shapes::pitchfork_up(sys, 0, 1).unwrap(),
        shapes::pitchfork_down(sys, 1, 0).unwrap(),
    ] {
        let text = serialize_diagram(&d, &real);
        assert_eq!(parse_diagram(&text, &real).unwrap(), d);
    }
}

/// Perfect matchings of `0..2n` with no two chords `a < b < c < d` paired
/// as `(a, c)` and `(b, d)`.
fn brute_force_noncrossing(n: usize) -> usize {
    fn go(free: &mut Vec<usize>, chords: &mut Vec<(usize, usize)>) -> usize {
        if free.is_empty() {
            let crossing = chords.iter().any(|&(a, c)| {
                chords.iter().any(|&(b, d)| a < b && b < c && c < d)
            });
            return usize::from(!crossing);
        }
        let a = free.remove(0);
        let mut total = 0;
        for i in 0..free.len() {
            let b = free.remove(i);
            chords.push((a, b));
            total += go(free, chords);
            chords.pop();
            free.insert(i, b);
        }
        free.insert(0, a);
        total
    }
    go(&mut (0..2 * n).collect(), &mut Vec::new())
}

#[test]
fn matching_counts_against_brute_force() {
    for m in 2..=8 {
        let k = m - 1;
        let ms = crossingless_matchings(m);
        assert_eq!(ms.len(), brute_force_noncrossing(k), "m = {m}");
        for x in &ms {
            assert_eq!(x.arcs.len(), k);
            assert_eq!(x.cups(), x.caps());
        }
        let distinct: std::collections::BTreeSet<_> = ms.iter().map(|x| format!("{:?}", x.arcs)).collect();
        assert_eq!(distinct.len(), ms.len());
    }
}
