mod common;

use cuntz_li_core::exterior::{b_matrix, exterior_power};
use cuntz_li_core::ktheory::{
    bezout_witness, cokernel_table, gamma_group, gamma_membership, group_algebra_k, reports_agree,
    stabilization_check, tau_action, CertifiedDilation, KSlot,
};
use cuntz_li_core::linalg::{det, invariant_factors, FinAbGroup, IntMatrix};
use cuntz_li_core::DetSign;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;

fn suite() -> Vec<CertifiedDilation> {
    let mut rng = common::rng(0x7e575_u64);
    (0..50)
        .map(|_| common::random_dilation(&mut rng, 4))
        .collect()
}

#[test]
fn suite_covers_all_four_cases() {
    let cases: std::collections::HashSet<(bool, DetSign)> = suite()
        .iter()
        .map(|c| (c.dimension() % 2 == 0, c.det_sign()))
        .collect();
    assert_eq!(cases.len(), 4, "{cases:?}");
}

#[test]
fn presentations_agree() {
    for c in suite() {
        let a_form = c.k_groups().unwrap();
        let b_form = c.k_groups_via_b().unwrap();
        assert!(reports_agree(&a_form, &b_form), "a = {}", c.matrix());
        assert_eq!(a_form.per_degree.len(), c.dimension() + 1);
    }
}

#[test]
fn stabilization_holds_in_every_degree() {
    for c in suite() {
        for n in 0..=c.dimension() {
            assert!(
                stabilization_check(&c, n, c.det_sign()).unwrap(),
                "a = {}, n = {n}",
                c.matrix()
            );
        }
    }
}

#[test]
fn relations_are_injective_in_positive_degree() {
    for c in suite() {
        let e = c.det_sign().to_bigint();
        for n in 1..=c.dimension() {
            let m = exterior_power(c.matrix(), n)
                .unwrap()
                .one_minus_scaled(&e)
                .unwrap();
            assert!(!det(&m).unwrap().is_zero(), "a = {}, n = {n}", c.matrix());
        }
    }
}

#[test]
fn bezout_identity_up_to_level_eight() {
    for c in suite() {
        for n in 0..=c.dimension() {
            for r in 0..=8 {
                let p = bezout_witness(&c, n, r).unwrap();
                assert_eq!(p.degree(), r.checked_sub(1).map(|x| x as usize));
            }
        }
    }
}

#[test]
fn cokernel_transfer() {
    // coker(1 - eps A_n) = coker(eps A_n - 1), and A_n (1 - eps A_n^{-1}) = A_n - eps
    // has the same torsion order as 1 - eps A_n
    for c in suite() {
        let e = c.det_sign().to_bigint();
        for n in 0..=c.dimension() {
            let an = exterior_power(c.matrix(), n).unwrap();
            let lhs = an.one_minus_scaled(&e).unwrap();
            let rhs = lhs.scale(&BigInt::from(-1));
            assert_eq!(invariant_factors(&lhs), invariant_factors(&rhs));
            let mut shifted = an.clone();
            for i in 0..an.rows() {
                shifted[(i, i)] -= &e;
            }
            assert_eq!(det(&shifted).unwrap().abs(), det(&lhs).unwrap().abs());
        }
    }
}

#[test]
fn b_matrices_match_complementary_exterior_powers() {
    for c in suite() {
        let d = c.dimension();
        let e = c.det_sign().to_bigint();
        let one = BigInt::from(1);
        for n in 0..=d {
            let b = b_matrix(c.matrix(), n)
                .unwrap()
                .one_minus_scaled(&one)
                .unwrap();
            let a = exterior_power(c.matrix(), d - n)
                .unwrap()
                .one_minus_scaled(&e)
                .unwrap();
            assert_eq!(invariant_factors(&b), invariant_factors(&a));
        }
    }
}

#[test]
fn k_groups_invariant_under_unimodular_conjugation() {
    let mut rng = common::rng(0x1a55);
    for c in suite().into_iter().take(25) {
        let d = c.dimension();
        let p = common::random_unimodular(&mut rng, d);
        let moved = p
            .mul(c.matrix())
            .unwrap()
            .mul(&common::unimodular_inverse(&p))
            .unwrap();
        let moved = CertifiedDilation::new(moved).unwrap();
        let (r1, r2) = (c.k_groups().unwrap(), moved.k_groups().unwrap());
        assert_eq!((r1.k0, r1.k1), (r2.k0, r2.k1), "a = {}", c.matrix());
        for (t1, t2) in r1.per_degree.iter().zip(&r2.per_degree) {
            assert_eq!(t1.cokernel, t2.cokernel);
        }
    }
}

#[test]
fn degree_zero_bookkeeping() {
    for c in suite() {
        let d = c.dimension();
        let r = c.k_groups().unwrap();
        match c.det_sign() {
            DetSign::Positive => {
                assert_eq!(r.per_degree[0].cokernel, FinAbGroup::free(1));
                let slot = if d % 2 == 0 { KSlot::K1 } else { KSlot::K0 };
                assert_eq!(r.extra_free_summand, Some(slot));
                // the two free summands land in different K-groups
                assert_eq!((r.k0.free_rank(), r.k1.free_rank()), (1, 1));
            }
            DetSign::Negative => {
                assert_eq!(r.per_degree[0].cokernel, FinAbGroup::cyclic(2));
                assert_eq!(r.extra_free_summand, None);
                assert_eq!((r.k0.free_rank(), r.k1.free_rank()), (0, 0));
            }
        }
    }
}

#[test]
fn diagnostic_table_with_opposite_sign() {
    for c in suite().into_iter().take(10) {
        let flipped = cokernel_table(&c, c.det_sign().flip()).unwrap();
        assert_eq!(flipped.len(), c.dimension() + 1);
        let expected0 = match c.det_sign().flip() {
            DetSign::Positive => FinAbGroup::free(1),
            DetSign::Negative => FinAbGroup::cyclic(2),
        };
        assert_eq!(flipped[0].1, expected0);
    }
}

#[test]
fn tau_inverts_the_transition() {
    for c in suite().into_iter().take(20) {
        for n in 0..=c.dimension() {
            let an = exterior_power(c.matrix(), n).unwrap();
            let t = tau_action(&c, n).unwrap();
            let prod = t.mul_int(&an).unwrap().to_integer().unwrap();
            assert_eq!(prod, IntMatrix::identity(an.rows()));
        }
    }
}

#[test]
fn membership_finds_preimages() {
    let mut rng = common::rng(0x9a);
    for c in suite().into_iter().take(20) {
        let (even, odd) = group_algebra_k(&c).unwrap();
        assert_eq!(even.len() + odd.len(), c.dimension() + 1);
        let n = rng.gen_range(0..=c.dimension());
        let g = gamma_group(&c, n).unwrap();
        let r = rng.gen_range(0..4u32);
        let w: Vec<BigInt> = (0..g.rank())
            .map(|_| BigInt::from(rng.gen_range(-9..=9)))
            .collect();
        // v = T^{-r} w
        let inv = tau_action(&c, n).unwrap();
        let mut v: Vec<BigRational> = w.iter().cloned().map(BigRational::from_integer).collect();
        for _ in 0..r {
            v = (0..g.rank())
                .map(|i| (0..g.rank()).map(|j| &inv[(i, j)] * &v[j]).sum())
                .collect();
        }
        let (level, image) = gamma_membership(&g, &v, 64).unwrap().expect("reachable");
        assert!(level <= r as usize);
        // T^(r - level) applied to the returned vector gives back w
        let mut back = image;
        for _ in level..r as usize {
            back = g.transition().mul_vec(&back).unwrap();
        }
        assert_eq!(back, w);
    }
}
