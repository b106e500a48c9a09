mod common;

use minflat::algebra::{hermitian_form, j_apply, real_inner, ComplexVector, SignatureForm};
use minflat::ambient::{curvature, horizontality_residual, membership_residual, AmbientSpace};
use minflat::diff::expr::parse_expr;
use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-12;

fn vector(n: usize) -> impl Strategy<Value = ComplexVector> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), n)
        .prop_map(|v| ComplexVector::new(v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect()))
}

fn form() -> impl Strategy<Value = SignatureForm> {
    prop_oneof![
        Just(SignatureForm::standard(1, 2).unwrap()),
        Just(SignatureForm::standard(2, 3).unwrap()),
        Just(SignatureForm::with_negative_slots(3, &[2]).unwrap()),
    ]
}

fn form_and_vectors(k: usize) -> impl Strategy<Value = (SignatureForm, Vec<ComplexVector>)> {
    form().prop_flat_map(move |f| {
        let n = f.dim();
        (Just(f), prop::collection::vec(vector(n), k))
    })
}

fn scalar() -> impl Strategy<Value = Complex64> {
    (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(a, b)| Complex64::new(a, b))
}

proptest! {
    #[test]
    fn hermitian_symmetry_and_sesquilinearity((f, v) in form_and_vectors(3), a in scalar()) {
        let (z, w, u) = (&v[0], &v[1], &v[2]);
        let bzw = hermitian_form(&f, z, w).unwrap();
        let bwz = hermitian_form(&f, w, z).unwrap();
        prop_assert!((bzw - bwz.conj()).norm() < TOL);
        let left = hermitian_form(&f, &z.scale_complex(a), w).unwrap();
        prop_assert!((left - a.conj() * bzw).norm() < TOL);
        let right = hermitian_form(&f, z, &w.scale_complex(a)).unwrap();
        prop_assert!((right - a * bzw).norm() < TOL);
        let sum = hermitian_form(&f, z, &(w + u)).unwrap();
        prop_assert!((sum - bzw - hermitian_form(&f, z, u).unwrap()).norm() < TOL);
    }

    #[test]
    fn real_inner_is_j_invariant((f, v) in form_and_vectors(2)) {
        let (z, w) = (&v[0], &v[1]);
        let g = real_inner(&f, z, w).unwrap();
        prop_assert!((real_inner(&f, &j_apply(z), &j_apply(w)).unwrap() - g).abs() < TOL);
        prop_assert!(real_inner(&f, &j_apply(z), z).unwrap().abs() < TOL);
        prop_assert!((real_inner(&f, w, z).unwrap() - g).abs() < TOL);
    }

    #[test]
    fn curvature_symmetries((f, v) in form_and_vectors(4), c in prop_oneof![Just(1.0), Just(-1.0), Just(0.37)]) {
        let (x, y, z, w) = (&v[0], &v[1], &v[2], &v[3]);
        let r = |a: &ComplexVector, b: &ComplexVector, d: &ComplexVector| curvature(c, a, b, d, &f).unwrap();
        let g = |a: &ComplexVector, b: &ComplexVector| real_inner(&f, a, b).unwrap();
        let rxy = r(x, y, z);
        // antisymmetry in the first pair
        prop_assert!((&rxy + &r(y, x, z)).max_abs_component() < TOL);
        // first Bianchi identity
        let bianchi = &(&rxy + &r(y, z, x)) + &r(z, x, y);
        prop_assert!(bianchi.max_abs_component() < TOL);
        // R(X,Y) commutes with J
        prop_assert!((&r(x, y, &j_apply(z)) - &j_apply(&rxy)).max_abs_component() < TOL);
        // R(X,Y) is skew-adjoint
        prop_assert!((g(&rxy, w) + g(&r(x, y, w), z)).abs() < TOL);
        // pair symmetry
        prop_assert!((g(&rxy, w) - g(&r(z, w, x), y)).abs() < TOL);
    }

    #[test]
    fn membership_and_horizontality_are_fiber_invariant(v in vector(3), t in vector(3), phase in -3.2..3.2f64) {
        let space = AmbientSpace::cp21_lift(1.0, 2).unwrap();
        let u = Complex64::from_polar(1.0, phase);
        let (z, zu) = (&v, v.scale_complex(u));
        let m0 = membership_residual(&space, z).unwrap();
        prop_assert!((membership_residual(&space, &zu).unwrap() - m0).abs() < TOL);
        let h0 = horizontality_residual(&space, z, &t).unwrap();
        let h1 = horizontality_residual(&space, &zu, &t.scale_complex(u)).unwrap();
        prop_assert!((h1 - h0).abs() < TOL);
    }

    #[test]
    fn expression_print_parse_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = common::random_expr(&mut rng, 4);
        let printed = e.to_string();
        let parsed = parse_expr(&printed).unwrap();
        prop_assert_eq!(&parsed, &e, "printed as {}", printed);
    }

    #[test]
    fn dual_derivative_matches_central_difference(seed in any::<u64>(), y in -1.0..1.0f64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = common::random_expr(&mut rng, 3);
        if let Some(rel) = common::dual_vs_central(&e, y) {
            prop_assert!(rel < 1e-6, "{} at y={}: {:e}", e, y, rel);
        }
    }
}
