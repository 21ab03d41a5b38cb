use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use s3voa_core::series::{BiSeries, Laurent};
use s3voa_core::{Matrix, Scalar};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-40i64..40, 1i64..12, -40i64..40, 1i64..12).prop_map(|(a, b, c, d)| Scalar::new(rat(a, b), rat(c, d)))
}

fn matrix(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(scalar(), n * n)
        .prop_map(move |xs| Matrix::from_rows(xs.chunks(n).map(<[Scalar]>::to_vec).collect()).unwrap())
}

#[test]
fn k_squared_by_hand() {
    // (9/64)^2 * 6 = 486/4096
    let k: Scalar = "9/64*r6".parse().unwrap();
    assert_eq!(&k * &k, Scalar::frac(486, 4096));
    assert_eq!(&k * &k, Scalar::frac(243, 2048));
}

#[test]
fn radical_display_round_trips() {
    for s in ["0", "-3/7", "1/2*r6", "2-5/3*r6", "-1+1*r6"] {
        let x: Scalar = s.parse().unwrap();
        assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
    }
}

proptest! {
    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), Scalar::one());
            prop_assert_eq!(&(&b / &a) * &a, b.clone());
        } else {
            prop_assert!(a.inv().is_err());
        }
    }

    #[test]
    fn norm_is_multiplicative(a in scalar(), b in scalar()) {
        prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
    }

    #[test]
    fn sign_agrees_with_float(a in scalar()) {
        let f = a.to_f64();
        if f.abs() > 1e-9 {
            prop_assert_eq!(a.is_positive(), f > 0.0);
        }
    }

    #[test]
    fn reciprocal_series(lead in 1i64..6, rest in proptest::collection::vec(-5i64..6, 11)) {
        let order = 12;
        let mut coeffs = vec![lead];
        coeffs.extend(rest);
        let f = BiSeries::from_ints(BigRational::zero(), &coeffs);
        let inv = BiSeries::one(order).div(&f).unwrap();
        let prod = f.mul(&inv);
        prop_assert_eq!(prod.first_mismatch(&BiSeries::one(order)).unwrap(), None);
    }

    #[test]
    fn reciprocal_with_z(a in -3i64..4, b in -3i64..4) {
        // lowest term a monomial in z, so still a unit
        let order = 8;
        let mut terms = vec![Laurent::monomial(1, Scalar::from_int(2))];
        terms.extend((1..order).map(|n| Laurent::from_coeffs(-1, vec![Scalar::from_int(a * n as i64), Scalar::zero(), Scalar::from_int(b)])));
        let f = BiSeries::from_terms(rat(1, 3), terms);
        let g = BiSeries::one(order).div(&f).unwrap();
        prop_assert_eq!(f.mul(&g).first_mismatch(&BiSeries::one(order)).unwrap(), None);
    }

    #[test]
    fn det_is_multiplicative(a in matrix(3), b in matrix(3)) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.det().unwrap(), &a.det().unwrap() * &b.det().unwrap());
    }

    #[test]
    fn inverse_when_det_nonzero(a in matrix(3)) {
        if a.det().unwrap().is_zero() {
            prop_assert!(a.inverse().is_err());
            prop_assert!(!a.kernel().is_empty());
        } else {
            prop_assert_eq!(a.mul(&a.inverse().unwrap()).unwrap(), Matrix::identity(3));
        }
    }
}
