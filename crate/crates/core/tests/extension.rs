use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use s3voa_core::cocycle::{self, AbelianGroup, Cocycle, Phased};
use s3voa_core::extension;
use s3voa_core::fusion;
use s3voa_core::Scalar;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn splits(c: &Cocycle) -> bool {
    let t = cocycle::split_cocycle(c).unwrap();
    let n = c.group.order();
    (0..n).all(|a| (0..n).all(|b| t[c.group.add(a, b)].mul(&t[a].inv()).mul(&t[b].inv()) == *c.value(a, b)))
}

#[test]
fn z3_quadratic_phase() {
    let g = AbelianGroup::new(vec![3]).unwrap();
    let c = Cocycle::from_fn(g.clone(), |a, b| Phased::root_of_unity((a[0] * b[0]) as i64, 3));
    assert!(splits(&c));
    // ζ^{2α²} is one splitting
    let t: Vec<Phased> = (0..3).map(|a| Phased::root_of_unity(2 * a * a, 3)).collect();
    assert_eq!(Cocycle::coboundary(g, &t), c);
    assert_eq!(*c.value(1, 2), Phased::root_of_unity(2, 3));
}

#[test]
fn z2_modulus_four() {
    let g = AbelianGroup::new(vec![2]).unwrap();
    let c = Cocycle::from_fn(g, |a, b| {
        Phased::from_scalar(Scalar::from_int(if a[0] == 1 && b[0] == 1 { 4 } else { 1 })).unwrap()
    });
    let t = cocycle::split_cocycle(&c).unwrap();
    assert_eq!(*t[1].modulus(), Scalar::frac(1, 2));
    assert!(splits(&c));
}

#[test]
fn orbit_integrality_by_top_weights() {
    let p = extension::u_problem();
    let all = p.orbits();
    assert_eq!(all.len(), 18);
    for o in &all {
        let w: Vec<BigRational> = o.members.iter().map(|&i| p.base.labels[i].weight.clone()).collect();
        let integral = w.iter().all(|x| (x - &w[0]).is_integer());
        assert_eq!(o.integral, integral, "{}", o.name);
        assert_eq!(o.members.len(), 3);
    }
    let bb = p.base.index("(B0,B0)").unwrap();
    let bb1 = p.base.index("(B1,B1)").unwrap();
    assert_eq!(p.base.labels[bb].weight, rat(19, 35));
    assert_eq!(p.base.labels[bb1].weight, rat(19, 35));
    let accepted = |name: &str| all.iter().find(|o| o.members.contains(&p.base.index(name).unwrap())).unwrap().integral;
    assert!(accepted("(B0,B0)"));
    assert!(!accepted("(A1,A0)"));
}

#[test]
fn induced_table_is_a_symmetric_ring_with_duals() {
    let p = extension::u_problem();
    let orbits = p.classify_modules();
    let r = p.induced_fusion(&orbits).unwrap();
    r.verify_axioms().unwrap();
    let n = r.len();
    assert_eq!(n, 6);
    assert_eq!(r.name(r.unit), "Ind(A0,A0)");
    for i in 0..n {
        for j in 0..n {
            assert_eq!(r.product(i, j), r.product(j, i));
        }
        let with_unit: Vec<usize> = (0..n).filter(|&j| r.constant(i, j, r.unit) == 1).collect();
        assert_eq!(with_unit.len(), 1);
    }
}

#[test]
fn spot_products_from_component_tables() {
    let p = extension::u_problem();
    let r = p.induced_fusion(&p.classify_modules()).unwrap();
    let w0 = fusion::w0();
    let n0 = fusion::n0();
    let names = |ring: &fusion::FusionRing, a: &str| -> Vec<String> {
        let i = ring.index(a).unwrap();
        ring.product(i, i).iter().map(|&(k, _)| ring.name(k).to_string()).collect()
    };
    // B0 × B0 in w0, C0 × C0 in n0
    assert_eq!(names(&w0, "B0"), ["A0", "B0"]);
    assert_eq!(names(&n0, "C0"), ["A0", "B0", "C0"]);
    assert_eq!(names(&r, "Ind(B0,A0)"), ["Ind(A0,A0)", "Ind(B0,A0)"]);
    let mut cc = names(&r, "Ind(A0,C0)");
    cc.sort();
    assert_eq!(cc, ["Ind(A0,A0)", "Ind(A0,B0)", "Ind(A0,C0)"]);
}

#[test]
fn sigma_maps_one_extension_to_the_other() {
    let u = fusion::u0();
    let (pp, pm) = extension::current_sets(&u);
    let (s1, s2) = fusion::u0_sigmas(&u);
    for s in [&s1, &s2] {
        let image: std::collections::BTreeSet<String> =
            pp.iter().map(|x| u.name(s[u.index(x).unwrap()]).to_string()).collect();
        assert_eq!(image, pm);
    }
    let p = extension::u_problem();
    let orbits = p.classify_modules();
    let both: Vec<usize> = (0..s1.len()).map(|i| s1[s2[i]]).collect();
    assert!(extension::table_invariant(&p, &orbits, &both).unwrap());
}

fn group() -> impl Strategy<Value = AbelianGroup> {
    prop_oneof![Just(vec![2]), Just(vec![3]), Just(vec![2, 2]), Just(vec![6]), Just(vec![3, 3]), Just(vec![4])]
        .prop_map(|m| AbelianGroup::new(m).unwrap())
}

proptest! {
    #[test]
    fn random_symmetric_cocycles_split(g in group(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = cocycle::random_symmetric_cocycle(&g, &mut rng);
        prop_assert!(c.validate().is_ok());
        prop_assert!(splits(&c));
    }

    #[test]
    fn asymmetric_input_is_rejected(seed in any::<u64>()) {
        let g = AbelianGroup::new(vec![3]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut c = cocycle::random_symmetric_cocycle(&g, &mut rng);
        let v = c.value(1, 2).mul(&Phased::root_of_unity(1, 3));
        c.set_value(1, 2, v);
        prop_assert!(cocycle::split_cocycle(&c).is_err());
    }
}
