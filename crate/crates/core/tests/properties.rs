use eulerclass::catalog;
use eulerclass::crystal::CrystGroup;
use eulerclass::euler::{
    euler_character, exact_order, has_finite_order, has_finite_order_via_exterior_traces, lower_bound, order_divisor,
    upper_bound_p_part, Characteristic, Rule, Verdict,
};
use eulerclass::fingroup::{element_order, is_power_of, p_decompose};
use eulerclass::intmat::{
    apply, charpoly, charpoly_via_exterior_traces, det_one_minus, exterior_power, fixed_lattice, IntMatrix,
};
use eulerclass::{closure, make_cryst, DEFAULT_CAP};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn matrix(max_n: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec(-bound..=bound, n), n)
            .prop_map(|rows| IntMatrix::from_rows(rows).unwrap())
    })
}

fn same_dim_triple(bound: i64) -> impl Strategy<Value = (IntMatrix, IntMatrix, IntMatrix)> {
    (1..=4usize).prop_flat_map(move |n| {
        let m = move || {
            prop::collection::vec(prop::collection::vec(-bound..=bound, n), n)
                .prop_map(|rows| IntMatrix::from_rows(rows).unwrap())
        };
        (m(), m(), m())
    })
}

fn signed_permutation(n: usize) -> impl Strategy<Value = IntMatrix> {
    (Just((0..n).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n)).prop_map(
        move |(perm, signs)| {
            let mut rows = vec![vec![0i64; n]; n];
            for (col, &row) in perm.iter().enumerate() {
                rows[row][col] = if signs[col] { -1 } else { 1 };
            }
            IntMatrix::from_rows(rows).unwrap()
        },
    )
}

/// Point groups generated by signed permutation matrices; always finite.
fn signed_permutation_group(max_n: usize, max_gens: usize) -> impl Strategy<Value = CrystGroup> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(signed_permutation(n), 0..=max_gens)
            .prop_map(move |gens| make_cryst(n, &gens, DEFAULT_CAP).unwrap())
    })
}

fn characteristic() -> impl Strategy<Value = Characteristic> {
    prop::sample::select(vec![0u64, 2, 3, 5]).prop_map(|p| Characteristic::new(p).unwrap())
}

/// Every finite-order element of GL_2(Z) up to conjugacy shows up in p4m or p6m.
fn rank_two_pool() -> Vec<IntMatrix> {
    let mut pool = Vec::new();
    for name in ["p4m", "p6m", "p3m1"] {
        let g = catalog::lookup(name).unwrap().cryst(DEFAULT_CAP).unwrap();
        pool.extend(g.point_group().elements().iter().cloned());
    }
    pool
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn charpoly_matches_exterior_traces(m in matrix(5, 3)) {
        let direct = charpoly(&m);
        prop_assert!(direct.is_monic());
        prop_assert_eq!(direct.degree(), m.dim());
        prop_assert_eq!(&direct, &charpoly_via_exterior_traces(&m));
        prop_assert_eq!(direct.eval(&BigInt::from(1)), det_one_minus(&m));
    }

    #[test]
    fn top_exterior_power_is_determinant(m in matrix(5, 3)) {
        let top = exterior_power(&m, m.dim()).unwrap();
        prop_assert_eq!(top.dim(), 1);
        prop_assert_eq!(top.get(0, 0), &m.det());
    }

    #[test]
    fn fixed_vectors_exist_iff_one_is_an_eigenvalue(m in matrix(4, 2)) {
        let lattice = fixed_lattice(m.dim(), std::slice::from_ref(&m)).unwrap();
        prop_assert_eq!(lattice.is_zero(), !det_one_minus(&m).is_zero());
        for v in lattice.basis() {
            prop_assert_eq!(&apply(&m, v), v);
        }
    }

    #[test]
    fn products_associate_and_determinants_multiply((a, b, c) in same_dim_triple(4)) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(ab.det(), a.det() * b.det());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closure_is_a_group(gamma in signed_permutation_group(3, 3)) {
        let g = gamma.point_group();
        for a in g.elements() {
            prop_assert!(g.elements().iter().any(|b| a.mul(b).unwrap().is_identity()));
            for b in g.elements() {
                prop_assert!(g.contains(&a.mul(b).unwrap()));
            }
        }
        for h in g.all_subgroups() {
            prop_assert_eq!(g.order() % h.order(), 0);
        }
    }

    #[test]
    fn p_parts_commute_and_split_the_order(gamma in signed_permutation_group(4, 2), p in prop::sample::select(vec![2u64, 3, 5])) {
        for x in gamma.point_group().elements() {
            let d = p_decompose(x, p, DEFAULT_CAP).unwrap();
            let (a, b) = (&d.p_part, &d.p_prime_part);
            prop_assert_eq!(&a.mul(b).unwrap(), x);
            prop_assert_eq!(a.mul(b).unwrap(), b.mul(a).unwrap());
            prop_assert!(is_power_of(element_order(a, DEFAULT_CAP).unwrap(), p));
            prop_assert!(!element_order(b, DEFAULT_CAP).unwrap().is_multiple_of(p));
        }
    }

    #[test]
    fn rank_two_orders_are_crystallographic(picks in prop::collection::vec(any::<prop::sample::Index>(), 0..4)) {
        let pool = rank_two_pool();
        let gens: Vec<IntMatrix> = picks.iter().map(|i| i.get(&pool).clone()).collect();
        // Mixing the square and hexagonal pools can generate infinite groups.
        if let Ok(g) = closure(2, &gens, 200) {
            for &o in g.element_orders() {
                prop_assert!([1, 2, 3, 4, 6].contains(&o));
            }
        }
    }

    #[test]
    fn analyzer_invariants(gamma in signed_permutation_group(3, 3), ch in characteristic()) {
        let finite = has_finite_order(&gamma, ch);
        prop_assert_eq!(finite, has_finite_order_via_exterior_traces(&gamma, ch));
        let result = exact_order(&gamma, ch);
        prop_assert!(!result.provenance.is_empty());
        prop_assert_eq!(result.verdict.is_finite(), finite);
        prop_assert_ne!(result.verdict, Verdict::Known(1));
        if gamma.maps_onto_z() {
            prop_assert_eq!(result.verdict, Verdict::Trivial);
        }
        let p = ch.value();
        let size = gamma.point_group().order() as u64;
        if p > 0 {
            let lo = lower_bound(&gamma, p).unwrap();
            let hi = upper_bound_p_part(&gamma, p).unwrap();
            if finite {
                prop_assert_eq!(hi % lo, 0);
            }
            if let Verdict::Known(m) = result.verdict {
                prop_assert!(lo <= m && m <= size && m % lo == 0);
            }
            if let Verdict::Bounded { lower, upper_p_part } = result.verdict {
                prop_assert_eq!(upper_p_part % lower, 0);
            }
            if result.last_rule() == Rule::FixedPointFree {
                prop_assert_eq!(result.verdict, Verdict::known(size));
                prop_assert_eq!(order_divisor(size, 1), size);
                prop_assert_eq!(lo, size);
                prop_assert_eq!(hi, size);
            }
        }
    }

    #[test]
    fn transfer_rule_on_rank_four(gamma in signed_permutation_group(4, 2), ch in characteristic()) {
        if gamma.maps_onto_z() {
            prop_assert_eq!(exact_order(&gamma, ch).verdict, Verdict::Trivial);
        }
    }

    #[test]
    fn centralizer_tests_agree(gamma in signed_permutation_group(4, 2)) {
        for g in gamma.point_group().elements() {
            let infinite = gamma.centralizer_is_infinite(g).unwrap();
            let fixed = fixed_lattice(gamma.rank(), std::slice::from_ref(g)).unwrap();
            prop_assert_eq!(infinite, !fixed.is_zero());
            prop_assert_eq!(infinite, det_one_minus(g).is_zero());
        }
        for v in gamma.fixed_sublattice().basis() {
            for g in gamma.point_group().elements() {
                prop_assert_eq!(&apply(g, v), v);
            }
        }
    }

    #[test]
    fn character_is_a_class_function(gamma in signed_permutation_group(4, 2)) {
        let chi = euler_character(&gamma);
        let g = gamma.point_group();
        for a in g.elements() {
            let a_inv = g.elements().iter().find(|b| a.mul(b).unwrap().is_identity()).unwrap();
            for (x, value) in chi.values() {
                let conj = a.mul(x).unwrap().mul(a_inv).unwrap();
                prop_assert_eq!(chi.value(&conj), Some(value));
            }
        }
    }
}
