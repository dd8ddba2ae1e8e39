use parastat::analysis::{check_simple_general, s_rank, s_rank_bruteforce, SymmetryClass};
use parastat::measures::pure_measure;
use parastat::tensor::{inner, permute, tensor_product_all};
use parastat::{Complex64, ComplexTensor, Permutation, RankOptions, Statistics};
use proptest::prelude::*;

fn complex() -> impl Strategy<Value = Complex64> {
    (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(re, im)| Complex64::new(re, im))
}

fn tensor(n: usize, k: usize) -> impl Strategy<Value = ComplexTensor> {
    prop::collection::vec(complex(), n.pow(k as u32)).prop_map(move |c| ComplexTensor::new(n, k, c).unwrap())
}

fn shaped() -> impl Strategy<Value = ComplexTensor> {
    (1usize..=3, 1usize..=3).prop_flat_map(|(n, k)| tensor(n, k))
}

fn permutation(k: usize) -> impl Strategy<Value = Permutation> {
    Just((0..k).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::new(images).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn permutation_action_is_unitary(
        (u, v, sigma) in (1usize..=3, 1usize..=4).prop_flat_map(|(n, k)| (tensor(n, k), tensor(n, k), permutation(k)))
    ) {
        let a = inner(&u, &v).unwrap();
        let b = inner(&permute(&u, &sigma).unwrap(), &permute(&v, &sigma).unwrap()).unwrap();
        prop_assert!((a - b).norm() <= 1e-12 * (1.0 + a.norm()));
    }

    #[test]
    fn action_composes_in_reverse(
        (u, s, t) in (2usize..=3, 2usize..=4).prop_flat_map(|(n, k)| (tensor(n, k), permutation(k), permutation(k)))
    ) {
        // U_σ ∘ U_τ = U_{τσ}
        let lhs = permute(&permute(&u, &t).unwrap(), &s).unwrap();
        let rhs = permute(&u, &t.compose(&s)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn s_rank_matches_oracle(u in shaped()) {
        prop_assume!(!u.is_zero());
        let opts = RankOptions::default();
        prop_assert_eq!(s_rank(&u, &opts).unwrap(), s_rank_bruteforce(&u, &opts).unwrap());
    }

    #[test]
    fn products_are_simple(
        factors in (1usize..=3, 1usize..=4).prop_flat_map(|(n, k)| prop::collection::vec(tensor(n, 1), k))
    ) {
        prop_assume!(factors.iter().all(|f| f.norm() > 1e-3));
        let u = tensor_product_all(&factors).unwrap();
        let rep = check_simple_general(&u, &RankOptions::default()).unwrap();
        prop_assert!(rep.simple);
        prop_assert!(!rep.criteria_disagree());
        prop_assert!(pure_measure(&u, Statistics::Distinguishable).unwrap() < 1e-20);
    }

    #[test]
    fn measure_is_scale_and_phase_invariant(u in shaped(), c in complex()) {
        prop_assume!(u.norm() > 1e-3 && c.norm() > 1e-2);
        let a = pure_measure(&u, Statistics::Distinguishable).unwrap();
        let b = pure_measure(&u.scale(c), Statistics::Distinguishable).unwrap();
        prop_assert!((a - b).abs() <= 1e-10 * (1.0 + a));
    }

    #[test]
    fn verdicts_agree_on_random_tensors(u in shaped()) {
        prop_assume!(u.norm() > 1e-3);
        let rep = parastat::analysis::check_simple(&u, &SymmetryClass::Distinguishable, &RankOptions::default()).unwrap();
        prop_assert!(!rep.criteria_disagree());
    }
}
