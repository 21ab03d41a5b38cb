use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use s3voa_core::affine::{self, AffineLabel};
use s3voa_core::minimal::MinimalLabel;
use s3voa_core::Scalar;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn partition_counts(n: usize) -> Vec<i64> {
    let mut p = vec![0i64; n];
    p[0] = 1;
    for part in 1..n {
        for k in part..n {
            p[k] += p[k - part];
        }
    }
    p
}

#[test]
fn charges_from_formula() {
    assert_eq!(affine::affine_central_charge(3).unwrap(), rat(9, 5));
    assert_eq!(affine::affine_central_charge(5).unwrap(), rat(15, 7));
}

#[test]
fn level_three_spin_one_squared() {
    let a = AffineLabel::new(3, 2).unwrap();
    let got = affine::fz_fusion(&a, &a).unwrap();
    assert_eq!(got, vec![AffineLabel::new(3, 0).unwrap(), a]);
}

#[test]
fn level_one_doublet_is_a_lattice_module() {
    // V_{α/2 + A1}: Σ_n z^{2n+1} q^{(2n+1)^2/4} / φ(q)
    let order = 14;
    let ch = affine::affine_character(&AffineLabel::new(1, 1).unwrap(), order).unwrap();
    assert_eq!(ch.offset(), &rat(1, 4));
    let p = partition_counts(order);
    for level in 0..order as i64 {
        for n in -6i64..6 {
            let shift = n * n + n;
            let want = if shift <= level { p[(level - shift) as usize] } else { 0 };
            assert_eq!(
                ch.term(level as usize).coeff(2 * n + 1),
                Scalar::from_int(want),
                "level {level}, z^{}",
                2 * n + 1
            );
        }
        assert_eq!(ch.term(level as usize).coeff(0), Scalar::from_int(0));
    }
    assert_eq!(ch.at_z_one()[0], Scalar::from_int(2));
}

#[test]
fn small_branchings_by_hand() {
    let r = affine::gko_branch(0, 1, 0).unwrap();
    let got: Vec<(BigRational, AffineLabel)> = r.outputs.iter().map(|(v, a)| (v.highest_weight(), *a)).collect();
    assert_eq!(got, vec![(rat(0, 1), AffineLabel::new(2, 0).unwrap()), (rat(1, 2), AffineLabel::new(2, 2).unwrap())]);
    let r = affine::gko_branch(1, 1, 1).unwrap();
    let got: Vec<(BigRational, AffineLabel)> = r.outputs.iter().map(|(v, a)| (v.highest_weight(), *a)).collect();
    assert_eq!(got, vec![(rat(1, 2), AffineLabel::new(2, 0).unwrap()), (rat(0, 1), AffineLabel::new(2, 2).unwrap())]);
    assert!(r.outputs.iter().all(|(v, _)| *v == MinimalLabel::with_weight(1, &v.highest_weight()).unwrap()));
}

#[test]
fn fz_ring_axioms() {
    for m in 1..=5 {
        let labels: Vec<AffineLabel> = (0..=m).map(|j| AffineLabel::new(m, j).unwrap()).collect();
        let mul = |a: &AffineLabel, b: &AffineLabel| affine::fz_fusion(a, b).unwrap();
        for a in &labels {
            assert_eq!(mul(a, &labels[0]), vec![*a]);
            // self-dual: the unit occurs once in a × a
            assert_eq!(mul(a, a).iter().filter(|x| **x == labels[0]).count(), 1);
            for b in &labels {
                assert_eq!(mul(a, b), mul(b, a));
                if a != b {
                    assert!(!mul(a, b).contains(&labels[0]));
                }
                for c in &labels {
                    let mut left: Vec<AffineLabel> = mul(a, b).iter().flat_map(|x| mul(x, c)).collect();
                    let mut right: Vec<AffineLabel> = mul(b, c).iter().flat_map(|x| mul(a, x)).collect();
                    left.sort();
                    right.sort();
                    assert_eq!(left, right);
                }
            }
        }
    }
}

#[test]
fn every_branching_up_to_level_four() {
    for m in 0..=4 {
        for n in 0..=m {
            for eps in 0..2 {
                let rule = affine::gko_branch(eps, m, n).unwrap();
                assert_eq!(affine::verify_branch(&rule, 16).unwrap(), None, "({eps},{m},{n})");
            }
        }
    }
}

#[test]
fn chain_to_q12() {
    let outcomes = affine::verify_chain_decomposition(13).unwrap();
    assert!(outcomes.iter().all(|o| o.passed()));
    assert!(outcomes.iter().take(2).all(|o| o.max_multiplicity == 1));
}

proptest! {
    #[test]
    fn characters_are_integral_and_symmetric(m in 1u32..6, j in 0u32..6) {
        prop_assume!(j <= m);
        let ch = affine::affine_character(&AffineLabel::new(m, j).unwrap(), 10).unwrap();
        prop_assert_eq!(ch.offset(), &AffineLabel::new(m, j).unwrap().top_weight());
        for t in ch.terms() {
            for (p, c) in t.terms() {
                let q = c.to_rational().unwrap();
                prop_assert!(q.is_integer() && q > rat(0, 1));
                prop_assert_eq!(t.coeff(-p), c.clone());
            }
        }
        // top component is the (j+1)-dimensional module
        prop_assert_eq!(ch.at_z_one()[0].clone(), Scalar::from_int(j as i64 + 1));
    }

    #[test]
    fn branching_holds_for_random_rules(eps in 0u32..2, m in 0u32..5, n in 0u32..5) {
        prop_assume!(n <= m);
        let rule = affine::gko_branch(eps, m, n).unwrap();
        prop_assert_eq!(affine::verify_branch(&rule, 10).unwrap(), None);
    }
}
