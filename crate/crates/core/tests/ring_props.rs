use mmpkit::ring::{conjugate, hermitian_inner, is_proportional, normalize_ray};
use mmpkit::{RayVector, Ring, Scalar};
use proptest::prelude::*;

const SQRT3_2: f64 = 0.866_025_403_784_438_6;

fn scalar(ring: Ring, a: i64, b: i64) -> Scalar {
    match ring {
        Ring::Rational => Scalar::integer(a),
        Ring::Quadratic => Scalar::quadratic(a, b),
        Ring::Eisenstein => Scalar::eisenstein(a, b),
    }
}

/// Float model of a + bθ, independent of the exact implementation.
fn model(ring: Ring, a: i64, b: i64) -> (f64, f64) {
    let (a, b) = (a as f64, b as f64);
    match ring {
        Ring::Rational => (a, 0.0),
        Ring::Quadratic => (a + b * std::f64::consts::SQRT_2, 0.0),
        Ring::Eisenstein => (a - b / 2.0, b * SQRT3_2),
    }
}

fn close(x: (f64, f64), y: (f64, f64)) -> bool {
    (x.0 - y.0).abs() < 1e-9 && (x.1 - y.1).abs() < 1e-9
}

fn any_ring() -> impl Strategy<Value = Ring> {
    prop_oneof![Just(Ring::Rational), Just(Ring::Quadratic), Just(Ring::Eisenstein)]
}

fn any_scalar() -> impl Strategy<Value = Scalar> {
    (any_ring(), -6i64..=6, -6i64..=6).prop_map(|(r, a, b)| scalar(r, a, b))
}

fn scalars_in(ring: Ring, len: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec((-3i64..=3, -3i64..=3), len).prop_map(move |v| v.into_iter().map(|(a, b)| scalar(ring, a, b)).collect())
}

fn vector_pair() -> impl Strategy<Value = (RayVector, RayVector)> {
    (any_ring(), 2usize..=4).prop_flat_map(|(r, n)| {
        (scalars_in(r, n), scalars_in(r, n)).prop_filter_map("zero vector", move |(u, v)| {
            Some((RayVector::in_ring(r, u).ok()?, RayVector::in_ring(r, v).ok()?))
        })
    })
}

#[test]
fn conjugate_of_two_omega_squared() {
    // 2ω² = −2 − 2ω
    let x = Scalar::eisenstein(-2, -2);
    assert_eq!(conjugate(&x), Scalar::eisenstein(0, 2));
    let (re, im) = x.to_complex();
    let c = conjugate(&x).to_complex();
    assert!(close(c, (re, -im)));
}

#[test]
fn inner_product_of_one_omega_squared() {
    let u = RayVector::new(vec![Scalar::integer(1), Scalar::eisenstein(-1, -1), Scalar::integer(0)]).unwrap();
    let s = hermitian_inner(&u, &u).unwrap();
    assert_eq!(s, Scalar::integer(2).promote(Ring::Eisenstein).unwrap());
    let float: f64 = u
        .components()
        .iter()
        .map(|c| {
            let (re, im) = c.to_complex();
            re * re + im * im
        })
        .sum();
    assert!((float - 2.0).abs() < 1e-12);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn conjugation_is_an_involution(x in any_scalar()) {
        prop_assert_eq!(conjugate(&conjugate(&x)), x);
    }

    #[test]
    fn arithmetic_matches_float_model(r in any_ring(), a in -6i64..=6, b in -6i64..=6, c in -6i64..=6, d in -6i64..=6) {
        let x = scalar(r, a, b);
        let y = scalar(r, c, d);
        let (xm, ym) = (model(r, a, if r == Ring::Rational { 0 } else { b }), model(r, c, if r == Ring::Rational { 0 } else { d }));
        prop_assert!(close(x.to_complex(), xm));
        prop_assert!(close((&x + &y).to_complex(), (xm.0 + ym.0, xm.1 + ym.1)));
        prop_assert!(close((&x * &y).to_complex(), (xm.0 * ym.0 - xm.1 * ym.1, xm.0 * ym.1 + xm.1 * ym.0)));
        prop_assert!(close(conjugate(&x).to_complex(), (xm.0, -xm.1)));
    }

    #[test]
    fn field_axioms(r in any_ring(), v in prop::collection::vec((-9i64..=9, -9i64..=9), 3)) {
        let x = scalar(r, v[0].0, v[0].1);
        let y = scalar(r, v[1].0, v[1].1);
        let z = scalar(r, v[2].0, v[2].1);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x - &x, Scalar::zero(r));
        if !x.is_zero() {
            let inv = x.inverse().unwrap();
            prop_assert!((&x * &inv).is_one());
        } else {
            prop_assert!(x.inverse().is_none());
        }
    }

    #[test]
    fn self_inner_product_is_positive_rational((u, _) in vector_pair()) {
        let s = hermitian_inner(&u, &u).unwrap();
        // over ℚ(√2) the norm is a positive real such as (1+√2)² = 3+2√2
        if u.ring() != Ring::Quadratic {
            prop_assert_eq!(s.theta_part(), &num_rational_zero());
        }
        let (re, im) = s.to_complex();
        prop_assert!(re > 0.0 && im.abs() < 1e-9);
    }

    #[test]
    fn inner_product_is_conjugate_symmetric((u, v) in vector_pair()) {
        prop_assert_eq!(hermitian_inner(&u, &v).unwrap(), conjugate(&hermitian_inner(&v, &u).unwrap()));
    }

    #[test]
    fn normalization_is_idempotent_and_scale_invariant((u, _) in vector_pair(), a in -4i64..=4, b in -4i64..=4) {
        let r = normalize_ray(&u);
        prop_assert_eq!(normalize_ray(r.vector()), r.clone());
        let lambda = scalar(u.ring(), a, b);
        prop_assume!(!lambda.is_zero());
        prop_assert_eq!(normalize_ray(&u.scaled(&lambda).unwrap()), r);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn proportionality_agrees_with_normalization((u, v) in vector_pair(), a in -3i64..=3, b in -3i64..=3, scale in any::<bool>()) {
        let lambda = scalar(u.ring(), a, b);
        let w = if scale && !lambda.is_zero() { u.scaled(&lambda).unwrap() } else { v };
        prop_assert_eq!(is_proportional(&u, &w), normalize_ray(&u) == normalize_ray(&w));
    }
}

fn num_rational_zero() -> num_rational::BigRational {
    num_rational::BigRational::from_integer(0.into())
}
