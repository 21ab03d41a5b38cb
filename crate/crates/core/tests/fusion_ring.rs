use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use s3voa_core::fixtures;
use s3voa_core::fusion::{self, FusionRing};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Labels whose product with every label is a single label.
fn invertible_labels(r: &FusionRing) -> Vec<String> {
    (0..r.len())
        .filter(|&i| (0..r.len()).all(|j| r.product(i, j).len() == 1 && r.product(i, j)[0].1 == 1))
        .map(|i| r.name(i).to_string())
        .collect()
}

#[test]
fn ising_from_minimal_fusion() {
    let r = fusion::ising();
    r.verify_axioms().unwrap();
    let sigma = (0..3).find(|&i| r.labels[i].weight == rat(1, 16)).unwrap();
    let got: BTreeSet<BigRational> = r.product(sigma, sigma).iter().map(|&(k, _)| r.labels[k].weight.clone()).collect();
    assert_eq!(got, [rat(0, 1), rat(1, 2)].into_iter().collect());
}

#[test]
fn currents_by_exhaustion() {
    for r in [fusion::w0(), fusion::n0()] {
        assert_eq!(invertible_labels(&r), ["A0", "A1", "A2"]);
        let sc: Vec<String> = r.simple_currents().iter().map(|&i| r.name(i).to_string()).collect();
        assert_eq!(sc, invertible_labels(&r));
    }
}

#[test]
fn tensor_sizes_and_currents() {
    let u = fusion::u0();
    assert_eq!(u.len(), 6 * 9);
    let got: BTreeSet<String> = u.simple_currents().iter().map(|&i| u.name(i).to_string()).collect();
    let want: BTreeSet<String> =
        ["A0", "A1", "A2"].iter().flat_map(|a| ["A0", "A1", "A2"].iter().map(move |b| format!("({a},{b})"))).collect();
    assert_eq!(got, want);
    let bc = u.index("(B0,C0)").unwrap();
    let summands: u32 = u.product(bc, bc).iter().map(|(_, n)| n).sum();
    assert_eq!(summands, 6);
}

#[test]
fn duals_swap_the_split_pairs() {
    let split = [rat(2, 3), rat(1, 15), rat(4, 3), rat(1, 21), rat(10, 21)];
    for r in [fusion::w0(), fusion::n0()] {
        for i in 0..r.len() {
            let l = &r.labels[i];
            let d = r.dual[i];
            if split.contains(&l.weight) {
                assert_ne!(d, i, "{}", l.name);
                assert_eq!(r.labels[d].weight, l.weight);
                assert_eq!(&l.name[..1], &r.name(d)[..1]);
            } else {
                assert_eq!(d, i, "{}", l.name);
            }
            for j in 0..r.len() {
                assert_eq!(r.constant(i, j, r.unit), u32::from(j == d));
            }
        }
    }
}

#[test]
fn gradings_match_every_entry() {
    for r in [fusion::w0(), fusion::n0(), fusion::u0()] {
        for i in 0..r.len() {
            for j in 0..r.len() {
                for &(k, _) in r.product(i, j) {
                    for (g, m) in r.moduli.iter().enumerate() {
                        assert_eq!((r.labels[i].grade[g] + r.labels[j].grade[g]) % m, r.labels[k].grade[g]);
                    }
                }
            }
        }
    }
}

#[test]
fn fixture_text_round_trips() {
    for text in [fixtures::W0_RING, fixtures::N0_RING] {
        let r = FusionRing::from_text(text).unwrap();
        assert_eq!(FusionRing::from_text(&r.to_text()).unwrap(), r);
    }
}

#[test]
fn sigma_is_an_involutive_automorphism() {
    let u = fusion::u0();
    let (s1, s2) = fusion::u0_sigmas(&u);
    for s in [&s1, &s2] {
        u.verify_involution(s).unwrap();
    }
}

fn ring_pick() -> impl Strategy<Value = FusionRing> {
    prop_oneof![Just(fusion::ising()), Just(fusion::w0()), Just(fusion::n0())]
}

/// Dense re-check of unit, commutativity, duality, grading and associativity.
fn is_fusion_ring(r: &FusionRing) -> bool {
    let n = r.len();
    let c = |i: usize, j: usize, k: usize| r.constant(i, j, k) as u64;
    let graded = |i: usize, j: usize, k: usize| {
        r.moduli
            .iter()
            .enumerate()
            .all(|(g, m)| (r.labels[i].grade[g] + r.labels[j].grade[g]) % m == r.labels[k].grade[g])
    };
    (0..n).all(|j| (0..n).all(|k| c(r.unit, j, k) == u64::from(j == k)))
        && (0..n).all(|i| {
            (0..n).all(|j| {
                c(i, j, r.unit) == u64::from(j == r.dual[i])
                    && (0..n).all(|k| c(i, j, k) == c(j, i, k) && (c(i, j, k) == 0 || graded(i, j, k)))
            })
        })
        && (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    (0..n).all(|l| {
                        let left: u64 = (0..n).map(|x| c(i, j, x) * c(x, k, l)).sum();
                        let right: u64 = (0..n).map(|y| c(j, k, y) * c(i, y, l)).sum();
                        left == right
                    })
                })
            })
        })
}

proptest! {
    #[test]
    fn axiom_check_agrees_after_corruption(r in ring_pick(), i in 0usize..9, j in 0usize..9, k in 0usize..9) {
        let (i, j, k) = (i % r.len(), j % r.len(), k % r.len());
        let mut bad = r.clone();
        bad.set_constant(i, j, k, r.constant(i, j, k) + 1);
        prop_assert_eq!(bad.verify_axioms().is_ok(), is_fusion_ring(&bad));
    }

    #[test]
    fn removing_the_unit_term_is_caught(r in ring_pick(), i in 0usize..9) {
        let i = i % r.len();
        let mut bad = r.clone();
        bad.set_constant(i, r.dual[i], r.unit, 0);
        prop_assert!(bad.verify_axioms().is_err());
    }
}

#[test]
fn tensor_currents_are_products() {
    let rings = [fusion::ising(), fusion::w0(), fusion::n0()];
    for a in &rings {
        for b in &rings {
            let t = a.tensor(b);
            assert!(t.verify_axioms().is_ok());
            let got: BTreeSet<String> = t.simple_currents().iter().map(|&i| t.name(i).to_string()).collect();
            let want: BTreeSet<String> = a
                .simple_currents()
                .iter()
                .flat_map(|&x| b.simple_currents().into_iter().map(move |y| (x, y)))
                .map(|(x, y)| format!("({},{})", a.name(x), b.name(y)))
                .collect();
            assert_eq!(got, want);
        }
    }
}
