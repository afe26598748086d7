mod common;

use cuntz_li_core::exterior::exterior_power;
use cuntz_li_core::linalg::{det, IntMatrix};
use cuntz_li_core::spectral::{certify_dilation, char_poly, RejectionReason};
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;

/// Eigenvalue moduli of `a` computed in floating point. Test oracle only.
/// `None` when the QR iteration fails to converge (it can stall on some
/// defective integer matrices), in which case the sample is skipped.
fn float_moduli(a: &IntMatrix) -> Option<Vec<f64>> {
    let d = a.rows();
    let m = DMatrix::from_fn(d, d, |i, j| a[(i, j)].to_f64().unwrap());
    let schur = nalgebra::Schur::try_new(m, f64::EPSILON, 10_000)?;
    Some(
        schur
            .complex_eigenvalues()
            .iter()
            .map(|z| z.norm())
            .collect(),
    )
}

#[test]
fn agrees_with_float_oracle() {
    let mut rng = common::rng(0xd11a7e);
    let mut checked = 0;
    let mut accepted = 0;
    while checked < 100 {
        let d = rng.gen_range(1..=4);
        let a = common::random_matrix(&mut rng, d, d, 4);
        let Some(moduli) = float_moduli(&a) else {
            continue;
        };
        if moduli.iter().any(|r| (r - 1.0).abs() < 1e-3) {
            continue;
        }
        let oracle = moduli.iter().all(|&r| r > 1.0);
        let report = certify_dilation(&a).unwrap();
        assert_eq!(report.is_dilation, oracle, "a = {a}, moduli = {moduli:?}");
        checked += 1;
        accepted += usize::from(oracle);
    }
    assert!(accepted > 0, "suite should contain some dilations");
}

#[test]
fn agrees_with_float_oracle_near_the_boundary() {
    // shifted diagonals put many spectra close to the unit circle
    let mut rng = common::rng(0xb0da);
    let mut checked = 0;
    let mut accepted = 0;
    while checked < 2000 {
        let d = rng.gen_range(2..=6);
        let mut a = common::random_matrix(&mut rng, d, d, 2);
        let shift = rng.gen_range(-2..=2);
        for i in 0..d {
            a[(i, i)] += shift;
        }
        let Some(moduli) = float_moduli(&a) else {
            continue;
        };
        if moduli.iter().any(|r| (r - 1.0).abs() < 1e-6) {
            continue;
        }
        let oracle = moduli.iter().all(|&r| r > 1.0);
        assert_eq!(certify_dilation(&a).unwrap().is_dilation, oracle, "a = {a}");
        checked += 1;
        accepted += usize::from(oracle);
    }
    assert!(accepted > 20, "only {accepted} dilations sampled");
}

#[test]
fn accepted_dilations_have_large_determinant_and_invertible_relations() {
    let mut rng = common::rng(0xacce97);
    for _ in 0..100 {
        let c = common::random_dilation(&mut rng, 4);
        let a = c.matrix();
        assert!(c.report().det.abs() >= BigInt::from(2), "a = {a}");
        for n in 1..=a.rows() {
            let an = exterior_power(a, n).unwrap();
            for eps in [1, -1] {
                let m = an.one_minus_scaled(&BigInt::from(eps)).unwrap();
                assert!(!det(&m).unwrap().is_zero(), "a = {a}, n = {n}, eps = {eps}");
            }
        }
    }
}

#[test]
fn verdict_invariant_under_unimodular_conjugation() {
    let mut rng = common::rng(0xc0ff);
    for _ in 0..100 {
        let d = rng.gen_range(1..=4);
        let mut a = common::random_matrix(&mut rng, d, d, 3);
        if rng.gen_bool(0.5) {
            for i in 0..d {
                a[(i, i)] += 3;
            }
        }
        let p = common::random_unimodular(&mut rng, d);
        let moved = p
            .mul(&a)
            .unwrap()
            .mul(&common::unimodular_inverse(&p))
            .unwrap();
        let (r1, r2) = (
            certify_dilation(&a).unwrap(),
            certify_dilation(&moved).unwrap(),
        );
        assert_eq!(r1.char_poly, r2.char_poly);
        assert_eq!(r1.is_dilation, r2.is_dilation);
        assert_eq!(r1.rejection_reason, r2.rejection_reason);
    }
}

#[test]
fn char_poly_is_monic_with_trace_and_det() {
    let mut rng = common::rng(11);
    for _ in 0..100 {
        let d = rng.gen_range(1..=6);
        let a = common::random_matrix(&mut rng, d, d, 7);
        let p = char_poly(&a).unwrap();
        assert_eq!(p.degree(), Some(d));
        assert!(p.is_monic());
        assert_eq!(p.coefficient(d - 1), -a.trace());
        let sign = if d % 2 == 0 { 1 } else { -1 };
        assert_eq!(p.coefficient(0) * sign, det(&a).unwrap());
        // Cayley-Hamilton
        assert_eq!(p.eval_matrix(&a).unwrap(), IntMatrix::zeros(d, d));
    }
}

#[test]
fn rejection_reasons() {
    let cases: [(&[&[i64]], RejectionReason); 5] = [
        (
            &[&[2, 1], &[1, 1]],
            RejectionReason::UnitCircleOrReciprocalPair,
        ),
        (
            &[&[1, 0], &[0, 2]],
            RejectionReason::UnitCircleOrReciprocalPair,
        ),
        (
            &[&[0, -1], &[1, 0]],
            RejectionReason::UnitCircleOrReciprocalPair,
        ),
        (&[&[1, 2], &[2, 4]], RejectionReason::Singular),
        (&[&[4, 1], &[1, 1]], RejectionReason::EigenvalueInsideDisk),
    ];
    for (rows, reason) in cases {
        let r = certify_dilation(&IntMatrix::from_i64(rows)).unwrap();
        assert!(!r.is_dilation);
        assert_eq!(r.rejection_reason, Some(reason), "{rows:?}");
    }
}

#[test]
fn large_entries_do_not_overflow() {
    // 10^12 on the diagonal plus a cyclic shift
    let big = 1_000_000_000_000i64;
    let a = IntMatrix::from_i64(&[&[big, 1, 0], &[0, big, 1], &[1, 0, big]]);
    let r = certify_dilation(&a).unwrap();
    assert!(r.is_dilation);
    assert!(r.det > BigInt::from(i64::MAX));
}
