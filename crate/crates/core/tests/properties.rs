use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use prymcheck::cover::{build_cover, cover_homology, lifted_twist, simple_curve_family, standard_surface};
use prymcheck::finite::F2Class;
use prymcheck::report::{Parameters, SuiteReport};
use prymcheck::siegel::{act, antiholomorphic_check, composition_residual, random_siegel_point, residual, ModularElement};
use prymcheck::symplectic::{
    eval_word, lambda_p_generators, phi_p, standard_form, transvection_matrix, BaseRepresentation, Ring,
    SymplecticSpace, TwistConvention, WordSampler,
};
use prymcheck::IntMatrix;

fn vector(genus: usize) -> impl Strategy<Value = Vec<i128>> {
    prop::collection::vec(-3i128..=3, 2 * genus).prop_filter("nonzero", |v| v.iter().any(|&x| x != 0))
}

fn basis_element(h: usize, seed: u64, len: usize) -> ModularElement {
    let space = SymplecticSpace::new(h).unwrap();
    let rep = BaseRepresentation::new(space, Ring::Integer, TwistConvention::Positive).with_basis_curves();
    let names: Vec<String> = (1..=h).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect();
    let w = WordSampler::new(names, len, seed).sample();
    let q = space.interleaved_to_block();
    ModularElement::new(q.mul(eval_word(&w, &rep).unwrap().entries()).mul(&q.transpose())).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn transvections_are_symplectic(c in (1usize..=3).prop_flat_map(vector)) {
        let j = standard_form(c.len() / 2);
        let t = transvection_matrix(&j, &c, TwistConvention::Positive);
        let inv = transvection_matrix(&j, &c, TwistConvention::Negative);
        prop_assert_eq!(t.transpose().mul(&j).mul(&t), j.clone());
        prop_assert!(t.mul(&inv).is_identity());
    }

    #[test]
    fn twist_fixes_orthogonal_vectors(c in vector(2), x in vector(2)) {
        let j = standard_form(2);
        let t = transvection_matrix(&j, &c, TwistConvention::Positive);
        let pairing: i128 = x.iter().zip(j.mul_vec(&c)).map(|(a, b)| a * b).sum();
        let moved = t.mul_vec(&x) != x;
        prop_assert_eq!(moved, pairing != 0);
    }

    #[test]
    fn phi_is_additive(p in prop::sample::select(vec![2i128, 3, 5, 7]), seed in any::<u64>()) {
        let space = SymplecticSpace::new(2).unwrap();
        let gens = lambda_p_generators(&space, p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let word = |rng: &mut ChaCha8Rng| {
            use rand::Rng;
            let n = rng.gen_range(1..=4);
            (0..n).fold(gens[0].pow(0), |acc, _| acc.mul(&gens[rng.gen_range(0..gens.len())]))
        };
        let (a, b) = (word(&mut rng), word(&mut rng));
        let lhs = phi_p(&space, &a.mul(&b), p).unwrap();
        let rhs = phi_p(&space, &a, p).unwrap() + phi_p(&space, &b, p).unwrap();
        prop_assert_eq!(lhs.rem_euclid(p), rhs.rem_euclid(p));
    }

    #[test]
    fn siegel_action_composes(h in 1usize..=3, seed in any::<u64>()) {
        let m = basis_element(h, seed, 4);
        let n = basis_element(h, seed.wrapping_add(1), 4);
        let tau = random_siegel_point(h, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert!(act(&m, &tau, 1e-10).is_ok());
        prop_assert!(composition_residual(&m, &n, &tau, 1e-10).unwrap() <= 1e-10);
        prop_assert!(antiholomorphic_check(&m, &tau, 1e-10).unwrap() <= 1e-10);
    }

    #[test]
    fn reflection_is_an_involution(h in 1usize..=4, seed in any::<u64>()) {
        let tau = random_siegel_point(h, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(residual(tau.reflect().reflect().matrix(), tau.matrix()), 0.0);
    }

    #[test]
    fn report_json_is_deterministic(genus in 1usize..=6, seed in any::<u64>(), trials in 1usize..500) {
        let params = Parameters { genus, seed, trials, ..Parameters::default() };
        let a = SuiteReport::new("orbits", params.clone(), vec![]).unwrap();
        let b = SuiteReport::new("orbits", params, vec![]).unwrap();
        prop_assert_eq!(a.to_json().unwrap(), b.to_json().unwrap());
    }
}

#[test]
fn lifted_twists_commute_with_sigma() {
    for (g, bits) in [(2, 0b10u64), (3, 0b1001), (3, 0b111111)] {
        let surface = standard_surface(g).unwrap();
        let cover = build_cover(&surface, F2Class::new(g, bits).unwrap()).unwrap();
        let hom = cover_homology(&cover).unwrap();
        let s = hom.sigma();
        for (name, l) in simple_curve_family(&surface, 2) {
            let t: IntMatrix = lifted_twist(&cover, &hom, &l, TwistConvention::Positive).unwrap().matrix;
            assert_eq!(t.mul(s), s.mul(&t), "g={g} {name}");
            assert_eq!(t.transpose().mul(hom.gram()).mul(&t), *hom.gram(), "g={g} {name}");
        }
    }
}
