mod common;

use cuntz_li_core::linalg::{
    cokernel, det, groups_isomorphic, is_unimodular, smith_normal_form, FinAbGroup, IntMatrix,
};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn matrix(max_rows: usize, max_cols: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-bound..=bound, r * c).prop_map(move |v| {
            IntMatrix::new(r, c, v.into_iter().map(BigInt::from).collect()).unwrap()
        })
    })
}

fn square(max: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max).prop_flat_map(move |n| {
        prop::collection::vec(-bound..=bound, n * n).prop_map(move |v| {
            IntMatrix::new(n, n, v.into_iter().map(BigInt::from).collect()).unwrap()
        })
    })
}

fn group() -> impl Strategy<Value = FinAbGroup> {
    prop::collection::vec(0i64..12, 0..5)
        .prop_map(|orders| FinAbGroup::from_cyclic_orders(orders.into_iter().map(BigInt::from)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn smith_contract(m in matrix(6, 6, 9)) {
        let snf = smith_normal_form(&m);
        prop_assert_eq!(snf.u.mul(&m).unwrap().mul(&snf.v).unwrap(), snf.s.clone());
        prop_assert!(is_unimodular(&snf.u).unwrap());
        prop_assert!(is_unimodular(&snf.v).unwrap());
        prop_assert!(snf.s.is_diagonal());
        let f = &snf.invariant_factors;
        prop_assert_eq!(f.len(), m.rows().min(m.cols()));
        for (i, x) in f.iter().enumerate() {
            prop_assert_eq!(x, &snf.s[(i, i)]);
            prop_assert!(!x.is_negative());
        }
        for w in f.windows(2) {
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero(), "zeros must come last: {:?}", f);
            } else {
                prop_assert!((&w[1] % &w[0]).is_zero(), "chain broken: {:?}", f);
            }
        }
        prop_assert_eq!(smith_normal_form(&m), snf, "deterministic");
    }

    #[test]
    fn bareiss_matches_cofactor(m in square(5, 9)) {
        prop_assert_eq!(det(&m).unwrap(), common::cofactor_det(&m));
    }

    #[test]
    fn cokernel_finite_iff_nonsingular(m in square(5, 4)) {
        let g = cokernel(&m).unwrap();
        let d = det(&m).unwrap();
        prop_assert_eq!(g.is_finite(), !d.is_zero());
        if !d.is_zero() {
            prop_assert_eq!(g.torsion_order(), d.abs());
        }
    }

    #[test]
    fn cokernel_invariant_under_unimodular_change(m in square(5, 5), seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let p = common::random_unimodular(&mut rng, m.rows());
        let q = common::random_unimodular(&mut rng, m.rows());
        let moved = p.mul(&m).unwrap().mul(&q).unwrap();
        prop_assert_eq!(cokernel(&moved).unwrap(), cokernel(&m).unwrap());
    }

    #[test]
    fn isomorphism_is_an_equivalence(g in group(), h in group(), k in group()) {
        prop_assert!(groups_isomorphic(&g, &g));
        prop_assert_eq!(groups_isomorphic(&g, &h), groups_isomorphic(&h, &g));
        if groups_isomorphic(&g, &h) && groups_isomorphic(&h, &k) {
            prop_assert!(groups_isomorphic(&g, &k));
        }
        // direct sums commute up to isomorphism
        prop_assert!(groups_isomorphic(&g.direct_sum(&h), &h.direct_sum(&g)));
    }

    #[test]
    fn canonical_torsion_is_a_chain(g in group()) {
        for t in g.torsion() {
            prop_assert!(*t >= BigInt::from(2));
        }
        for w in g.torsion().windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
    }

    #[test]
    fn solve_recovers_image_vectors(m in matrix(4, 4, 6), seed in any::<u64>()) {
        use rand::Rng;
        let mut rng = common::rng(seed);
        let x: Vec<BigInt> = (0..m.cols()).map(|_| BigInt::from(rng.gen_range(-5..=5))).collect();
        let y = m.mul_vec(&x).unwrap();
        let snf = smith_normal_form(&m);
        let sol = snf.solve(&y).unwrap().expect("image vector must be solvable");
        prop_assert_eq!(m.mul_vec(&sol).unwrap(), y);
    }
}

#[test]
fn known_torsion_orders() {
    // coker of 1 - 2I in dimension 3 is trivial; coker of diag(2, 4, 0) is Z + Z/2 + Z/4
    let m = IntMatrix::diagonal([2, 4, 0]);
    let g = cokernel(&m).unwrap();
    assert_eq!(g.free_rank(), 1);
    assert_eq!(g.torsion(), [BigInt::from(2), BigInt::from(4)]);
    let m = IntMatrix::diagonal([-1, -1, -1]);
    assert!(cokernel(&m).unwrap().is_trivial());
}
