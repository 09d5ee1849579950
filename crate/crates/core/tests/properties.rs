use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use superz::centralizer::{center_of, graded_centralizer};
use superz::orbits::algebra_and_orbit;
use superz::report::grading_identity_applies;
use superz::reachability::{classify, generated_subalgebra_steps};
use superz::sample::{random_instance, Classical};
use superz::{BuildOptions, Field, Scalar, Subspace};

const PRIMES: [u64; 6] = [2, 3, 5, 7, 13, 2_147_483_647];

fn fp() -> impl Strategy<Value = (Field, Scalar, Scalar, Scalar)> {
    (prop::sample::select(&PRIMES[..]), any::<i64>(), any::<i64>(), any::<i64>()).prop_map(|(p, a, b, c)| {
        let f = Field::prime(p).unwrap();
        (f, f.from_i64(a), f.from_i64(b), f.from_i64(c))
    })
}

fn q() -> impl Strategy<Value = (Field, Scalar, Scalar, Scalar)> {
    let r = (-1000i64..1000, 1i64..50);
    (r.clone(), r.clone(), r).prop_map(|(a, b, c)| {
        let f = Field::rationals();
        let s = |(n, d): (i64, i64)| f.from_ratio(n, d).unwrap();
        (f, s(a), s(b), s(c))
    })
}

fn axioms(f: Field, a: &Scalar, b: &Scalar, c: &Scalar) {
    assert_eq!(&(a + b) + c, a + &(b + c));
    assert_eq!(&(a * b) * c, a * &(b * c));
    assert_eq!(a + b, b + a);
    assert_eq!(a * b, b * a);
    assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    assert_eq!(a + &f.zero(), a.clone());
    assert_eq!(a * &f.one(), a.clone());
    assert!((a - a).is_zero());
    assert!((a + &-a).is_zero());
    if !a.is_zero() {
        assert!((a * &a.inv().unwrap()).is_one());
    } else {
        assert!(a.inv().is_err());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn prime_field_axioms((f, a, b, c) in fp()) {
        axioms(f, &a, &b, &c);
    }

    #[test]
    fn rational_field_axioms((f, a, b, c) in q()) {
        axioms(f, &a, &b, &c);
    }

    #[test]
    fn residues_reduce(p in prop::sample::select(&PRIMES[..]), a in -(1i64 << 40)..(1i64 << 40)) {
        let f = Field::prime(p).unwrap();
        prop_assert_eq!(f.from_i64(a + p as i64), f.from_i64(a));
        prop_assert_eq!(f.from_i64(a).to_string().parse::<u64>().unwrap() < p, true);
    }
}

fn vectors(f: Field, raw: &[Vec<i64>]) -> Vec<Vec<Scalar>> {
    raw.iter().map(|v| v.iter().map(|&x| f.from_i64(x)).collect()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn span_is_canonical(
        raw in prop::collection::vec(prop::collection::vec(-3i64..4, 6), 0..6),
        perm_seed in any::<u64>(),
        k in 1i64..7,
    ) {
        let f = Field::prime(7).unwrap();
        let vs = vectors(f, &raw);
        let a = Subspace::span(f, 6, &vs).unwrap();
        let mut shuffled: Vec<Vec<Scalar>> = vs.iter().map(|v| v.iter().map(|x| x * &f.from_i64(k)).collect()).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(perm_seed);
        rand::seq::SliceRandom::shuffle(&mut shuffled[..], &mut rng);
        if shuffled.len() > 1 {
            let (x, y) = (shuffled[0].clone(), shuffled[1].clone());
            shuffled[0] = x.iter().zip(&y).map(|(s, t)| s + t).collect();
        }
        let b = Subspace::span(f, 6, &shuffled).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn sum_and_intersection_dims(
        u in prop::collection::vec(prop::collection::vec(-2i64..3, 5), 0..4),
        w in prop::collection::vec(prop::collection::vec(-2i64..3, 5), 0..4),
    ) {
        let f = Field::prime(5).unwrap();
        let u = Subspace::span(f, 5, &vectors(f, &u)).unwrap();
        let w = Subspace::span(f, 5, &vectors(f, &w)).unwrap();
        let s = u.sum(&w).unwrap();
        let i = u.intersect(&w).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(s.contains(&u).unwrap() && u.contains(&i).unwrap() && w.contains(&i).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// Grading identities, the degree-two center and reachability sanity on
    /// random classical orbits.
    #[test]
    fn classical_orbit_identities(
        seed in any::<u64>(),
        fam in prop::sample::select(&Classical::ALL[..]),
        p in prop::sample::select(&[3u64, 5, 7][..]),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let Some(i) = random_instance(&mut rng, fam, p, 50) else { return Ok(()) };
        let f = Field::prime(p).unwrap();
        let (alg, o) = algebra_and_orbit(&i.kind, f, BuildOptions::default(), None, Some(&i.partition)).unwrap();
        if !grading_identity_applies(&alg) {
            return Ok(());
        }
        let graded = graded_centralizer(&alg, &o).unwrap();
        let degrees = o.degrees();
        let g = |j: i64| degrees.get(&j).map_or(0, Vec::len);
        let ge = |j: i64| graded.get(&j).map_or(0, Subspace::dim);
        for (&j, s) in &graded {
            if j < 0 {
                prop_assert!(s.is_zero());
            } else {
                prop_assert_eq!(ge(j), g(j) - g(j + 2));
            }
        }
        let mut all = Subspace::zero(f, alg.dim());
        for s in graded.values() {
            all = all.sum(s).unwrap();
        }
        prop_assert_eq!(all.dim(), g(0) + g(1));
        let z = center_of(&alg, &all).unwrap();
        let g2 = Subspace::coordinate(f, alg.dim(), degrees.get(&2).cloned().unwrap_or_default());
        let e = Subspace::span(f, alg.dim(), &[o.representative.coeffs().to_vec()]).unwrap();
        prop_assert_eq!(z.intersect(&g2).unwrap(), e);

        let v = classify(&alg, &o).unwrap();
        prop_assert!(!v.strongly_reachable || v.reachable);
        let mut pos = Subspace::zero(f, alg.dim());
        for (_, s) in graded.range(1..) {
            pos = pos.sum(s).unwrap();
        }
        let seed_space = graded.get(&1).cloned().unwrap_or_else(|| Subspace::zero(f, alg.dim()));
        let (_, steps) = generated_subalgebra_steps(&alg, &seed_space, &pos).unwrap();
        prop_assert!(steps <= pos.dim());
    }
}
