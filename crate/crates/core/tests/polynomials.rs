mod common;

use common::{random_polynomial, root};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn demazure_laws(seed in any::<u64>(), which in 0usize..4) {
        let t = ["A2", "B2", "G2", "A3"][which];
        let real = root(t);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_polynomial(real.dim(), &mut rng);
        let g = random_polynomial(real.dim(), &mut rng);
        for s in real.system().colors() {
            let sf = real.reflect(s, &f).unwrap();
            prop_assert_eq!(real.reflect(s, &sf).unwrap(), f.clone());
            prop_assert_eq!(real.reflect(s, &f.mul(&g)).unwrap(), sf.mul(&real.reflect(s, &g).unwrap()));
            let df = real.demazure(s, &f).unwrap();
            prop_assert!(real.demazure(s, &df).unwrap().is_zero());
            // ∂(fg) = ∂(f) g + s(f) ∂(g)
            let lhs = real.demazure(s, &f.mul(&g)).unwrap();
            let rhs = df.mul(&g).add(&sf.mul(&real.demazure(s, &g).unwrap()));
            prop_assert_eq!(lhs, rhs);
            // f = s(f) + ∂(f) α_s
            prop_assert_eq!(f.clone(), sf.add(&df.mul(&real.alpha_poly(s))));
        }
    }

    #[test]
    fn display_round_trip(seed in any::<u64>()) {
        let real = root("A3");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_polynomial(real.dim(), &mut rng);
        prop_assert_eq!(real.parse_poly(&real.show_poly(&f)).unwrap(), f);
    }
}

#[test]
fn braid_relation_on_linear_forms() {
    // (st)^m acts trivially on V for the root realizations.
    for (t, m) in [("A2", 3), ("B2", 4), ("G2", 6)] {
        let real = root(t);
        for i in 0..real.dim() {
            let v = hecke_core::Polynomial::var(real.dim(), i);
            let mut w = v.clone();
            for _ in 0..m {
                w = real.reflect(1, &real.reflect(0, &w).unwrap()).unwrap();
            }
            assert_eq!(w, v, "{t}");
        }
    }
}
