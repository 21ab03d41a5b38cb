use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use s3voa_core::checks::CONFORMAL_LIST;
use s3voa_core::fixtures;
use s3voa_core::griess::{self, GriessAlgebra, Presentations};
use s3voa_core::Scalar;

fn presentations() -> Presentations {
    griess::build_presentations(fixtures::GRIESS_P1, fixtures::GRIESS_P2).unwrap()
}

fn parse(xs: &[&str]) -> Vec<Scalar> {
    xs.iter().map(|s| s.parse().unwrap()).collect()
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn listed_vectors_are_idempotents_with_their_charges() {
    let a = presentations().p3;
    for (c, xs) in CONFORMAL_LIST {
        let x = parse(&xs);
        // x·x = 2x and ⟨x,x⟩ = c/2
        assert_eq!(a.mul(&x, &x).unwrap(), griess::scale(&x, &Scalar::from_int(2)), "{xs:?}");
        let c: Scalar = c.parse().unwrap();
        assert_eq!(a.pair(&x, &x), &c / &Scalar::from_int(2));
    }
}

#[test]
fn classification_is_the_listed_set() {
    let a = presentations().p3;
    let cls = griess::conformal_vectors(&a).unwrap();
    assert!(cls.certificate.complete());
    assert_eq!(cls.certificate.quotient_dimension, Some(16));
    let mut got: Vec<Vec<Scalar>> = cls.vectors.iter().map(|v| v.as_vector()).collect();
    let mut want: Vec<Vec<Scalar>> = CONFORMAL_LIST.iter().map(|(_, xs)| parse(xs)).collect();
    got.sort_by_key(|v| format!("{v:?}"));
    want.sort_by_key(|v| format!("{v:?}"));
    assert_eq!(got, want);
}

#[test]
fn complements_pair_the_charges() {
    let a = presentations().p3;
    let omega = a.omega.clone();
    let partner = |c: BigRational| -> BigRational {
        [(rat(1, 2), rat(81, 70)), (rat(4, 5), rat(6, 7)), (rat(58, 35), rat(0, 1))]
            .iter()
            .find_map(|(x, y)| {
                if *x == c {
                    Some(y.clone())
                } else if *y == c {
                    Some(x.clone())
                } else {
                    None
                }
            })
            .unwrap()
    };
    for (c, xs) in CONFORMAL_LIST {
        let x = parse(&xs);
        let y = griess::sub(&omega, &x);
        assert_eq!(a.mul(&y, &y).unwrap(), griess::scale(&y, &Scalar::from_int(2)));
        let cy = if y.iter().all(Scalar::is_zero) {
            BigRational::zero()
        } else {
            griess::central_charge_of(&a, &y).unwrap()
        };
        assert_eq!(cy, partner(c.parse::<Scalar>().unwrap().to_rational().unwrap()));
    }
}

#[test]
fn change_of_basis_respects_all_products() {
    let p = presentations();
    let images = griess::p2_in_p1();
    let n = p.p2.dim();
    let mut products = 0;
    for i in 0..n {
        for j in i..n {
            let lhs = p.p2.mul(&p.p2.basis(i), &p.p2.basis(j)).unwrap();
            let mapped: Vec<Scalar> =
                (0..n).fold(vec![Scalar::zero(); n], |acc, k| griess::add(&acc, &griess::scale(&images[k], &lhs[k])));
            assert_eq!(p.p1.mul(&images[i], &images[j]).unwrap(), mapped);
            assert_eq!(p.p1.pair(&images[i], &images[j]), p.p2.pair(&p.p2.basis(i), &p.p2.basis(j)));
            products += 1;
        }
    }
    assert_eq!(products, 10);
}

#[test]
fn k_is_nine_sixty_fourths_root_six() {
    let p = presentations();
    assert_eq!(p.k, "9/64*r6".parse().unwrap());
}

#[test]
fn corrupted_second_table_is_rejected() {
    let text = fixtures::GRIESS_P2.replacen("1/", "3/", 1);
    assert_ne!(text, fixtures::GRIESS_P2);
    let broken = griess::build_presentations(fixtures::GRIESS_P1, &text);
    assert!(broken.is_err() || broken.unwrap().p2.verify_invariance().is_err());
}

fn small() -> impl Strategy<Value = Scalar> {
    (-6i64..7, 1i64..5).prop_map(|(n, d)| Scalar::frac(n, d))
}

fn vector() -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec(small(), 4)
}

fn half_vectors(a: &GriessAlgebra) -> Vec<Vec<Scalar>> {
    let xs: Vec<Vec<Scalar>> = CONFORMAL_LIST.iter().filter(|(c, _)| *c == "1/2").map(|(_, xs)| parse(xs)).collect();
    assert!(xs.iter().all(|x| x.len() == a.dim()));
    xs
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn invariance_on_random_vectors(x in vector(), y in vector(), z in vector()) {
        let p = presentations();
        for alg in [&p.p1, &p.p2, &p.p3] {
            prop_assert_eq!(alg.pair(&alg.mul(&x, &y).unwrap(), &z), alg.pair(&y, &alg.mul(&x, &z).unwrap()));
            prop_assert_eq!(alg.mul(&x, &y).unwrap(), alg.mul(&y, &x).unwrap());
        }
    }

    #[test]
    fn miyamoto_maps_are_isometric_automorphisms(x in vector(), y in vector(), pick in 0usize..3) {
        let a = presentations().p3;
        let e = &half_vectors(&a)[pick];
        let t = griess::miyamoto(&a, e).unwrap();
        let (tx, ty) = (t.apply(&x).unwrap(), t.apply(&y).unwrap());
        prop_assert_eq!(t.apply(&a.mul(&x, &y).unwrap()).unwrap(), a.mul(&tx, &ty).unwrap());
        prop_assert_eq!(a.pair(&tx, &ty), a.pair(&x, &y));
        prop_assert!(griess::is_identity(&t.mul(&t).unwrap()));
    }
}
