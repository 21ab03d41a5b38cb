//! Named checks behind one trait, looked up at run time.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::affine;
use crate::cocycle;
use crate::error::{Error, Result};
use crate::extension::{self, ModuleOrbit};
use crate::fixtures;
use crate::fusion::{self, FusionRing};
use crate::griess::{self, Presentations};
use crate::minimal::{self, MinimalLabel};
use crate::modecalc::{self, Case, ModeCalculus, ModeMonomial, ModeState};
use crate::report::{Report, Status};
use crate::scalar::Scalar;

pub const DEFAULT_SEED: u64 = 1729;
pub const DEFAULT_BRANCH_ORDER: usize = 20;
pub const DEFAULT_CHAIN_ORDER: usize = 13;

/// Inputs shared by all checks.
#[derive(Clone, Debug)]
pub struct Context {
    /// Series truncation; each check has its own default.
    pub order: Option<usize>,
    pub seed: u64,
    pub max_m: u32,
    pub cases: usize,
    pub griess_p1: String,
    pub griess_p2: String,
    pub strategy: String,
}

impl Default for Context {
    fn default() -> Self {
        Context {
            order: None,
            seed: DEFAULT_SEED,
            max_m: 4,
            cases: 100,
            griess_p1: fixtures::GRIESS_P1.into(),
            griess_p2: fixtures::GRIESS_P2.into(),
            strategy: "gram-coordinates".into(),
        }
    }
}

impl Context {
    fn presentations(&self) -> Result<Presentations> {
        griess::build_presentations(&self.griess_p1, &self.griess_p2)
    }

    fn calculus(&self, max_weight: i64) -> Result<ModeCalculus> {
        let alg = self.presentations()?.p1;
        alg.verify_invariance().map_err(|e| Error::Inconsistent(format!("table is not invariant: {e}")))?;
        ModeCalculus::new(&alg, "v1", max_weight)
    }

    fn strategy(&self) -> Result<Box<dyn modecalc::InnerStrategy>> {
        modecalc::inner_strategy(&self.strategy)
            .ok_or_else(|| Error::InvalidInput(format!("unknown inner-product strategy {}", self.strategy)))
    }
}

/// Result of a check before it is wrapped into a report.
pub struct Outcome {
    pub status: Status,
    pub data: Value,
}

impl Outcome {
    fn judged(pass: bool, data: Value) -> Self {
        Outcome { status: if pass { Status::Pass } else { Status::Fail }, data }
    }
}

pub trait Check: Send + Sync {
    fn id(&self) -> String;
    /// Key into the anchor table.
    fn family(&self) -> &'static str;
    fn run(&self, ctx: &Context) -> Result<Outcome>;
}

fn anchor_of(family: &str) -> String {
    fixtures::ANCHORS
        .lines()
        .filter(|l| !l.starts_with('#'))
        .filter_map(|l| l.split_once(' '))
        .find(|(k, _)| *k == family)
        .map(|(_, v)| v.trim().to_string())
        .unwrap_or_else(|| "plumbing".into())
}

/// Runs a check; errors become failing reports.
pub fn run_check(check: &dyn Check, ctx: &Context) -> Report {
    let (status, data) = match check.run(ctx) {
        Ok(o) => (o.status, o.data),
        Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
    };
    Report { check: check.id(), anchor: anchor_of(check.family()), status, data }
}

/// Runs checks on separate threads; reports keep the input order.
pub fn run_all(checks: &[Box<dyn Check>], ctx: &Context) -> Vec<Report> {
    std::thread::scope(|s| {
        let handles: Vec<_> = checks.iter().map(|c| s.spawn(move || run_check(c.as_ref(), ctx))).collect();
        handles.into_iter().map(|h| h.join().expect("check thread panicked")).collect()
    })
}

pub const ACCEPTANCE: [&str; 12] = [
    "weights",
    "fusion-rings",
    "branching",
    "chain",
    "conformal-vectors",
    "griess-identities",
    "miyamoto-group",
    "modules",
    "induced-fusion",
    "completion",
    "dimensions",
    "properties",
];

/// The acceptance checks, in order.
pub fn registry() -> Vec<Box<dyn Check>> {
    ACCEPTANCE.iter().map(|id| lookup(id).expect("registered")).collect()
}

/// Finds a check by id; `gram:SET` and `dims:CASE:WEIGHT` are parametric.
pub fn lookup(id: &str) -> Option<Box<dyn Check>> {
    if let Some(set) = id.strip_prefix("gram:") {
        return modecalc::builtin_set(set).map(|_| Box::new(GramCheck { set: set.into() }) as Box<dyn Check>);
    }
    if let Some(rest) = id.strip_prefix("dims:") {
        let (case, weight) = rest.split_once(':')?;
        return Some(Box::new(DimsCheck { case: case.parse().ok()?, weight: weight.parse().ok()? }));
    }
    let c: Box<dyn Check> = match id {
        "weights" => Box::new(Weights),
        "fusion-rings" => Box::new(FusionRings),
        "branching" => Box::new(Branching),
        "chain" => Box::new(Chain),
        "conformal-vectors" => Box::new(ConformalVectors),
        "griess-identities" => Box::new(GriessIdentities),
        "miyamoto-group" => Box::new(MiyamotoGroup),
        "modules" => Box::new(Modules),
        "induced-fusion" => Box::new(InducedFusion),
        "completion" => Box::new(Completion),
        "dimensions" => Box::new(Dimensions),
        "properties" => Box::new(Properties),
        _ => return None,
    };
    Some(c)
}

fn q(s: &str) -> BigRational {
    s.parse::<Scalar>().expect("literal").to_rational().expect("rational literal")
}

fn strs<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(T::to_string).collect()
}

pub struct Weights;

impl Check for Weights {
    fn id(&self) -> String {
        "weights".into()
    }

    fn family(&self) -> &'static str {
        "weights"
    }

    fn run(&self, _: &Context) -> Result<Outcome> {
        let charges = (1..=4).map(minimal::central_charge).collect::<Result<Vec<_>>>()?;
        let charges_ok = strs(&charges) == ["1/2", "7/10", "4/5", "6/7"];
        let listed: [(u32, &[&str]); 2] =
            [(3, &["2/3", "3", "1/15", "2/5"]), (4, &["4/3", "5", "1/7", "5/7", "1/21", "10/21"])];
        let mut missing = Vec::new();
        for (m, hs) in listed {
            for h in hs {
                if MinimalLabel::with_weight(m, &q(h)).is_err() {
                    missing.push(format!("{h} at m={m}"));
                }
            }
        }
        let tops = |r: &FusionRing| r.labels.iter().map(|l| l.weight.to_string()).collect::<Vec<_>>();
        let w0 = tops(&fusion::w0());
        let n0 = tops(&fusion::n0());
        let w0_ok = w0 == ["0", "2/3", "2/3", "2/5", "1/15", "1/15"];
        let n0_ok = n0 == ["0", "4/3", "4/3", "1/7", "10/21", "10/21", "5/7", "1/21", "1/21"];
        // each top weight is a Kac weight of its model
        let kac_ok = fusion::w0().labels.iter().all(|l| MinimalLabel::with_weight(3, &l.weight).is_ok())
            && fusion::n0().labels.iter().all(|l| MinimalLabel::with_weight(4, &l.weight).is_ok());
        Ok(Outcome::judged(
            charges_ok && missing.is_empty() && w0_ok && n0_ok && kac_ok,
            json!({
                "central_charges": strs(&charges),
                "w0_top_weights": w0,
                "n0_top_weights": n0,
                "not_in_kac_table": missing,
            }),
        ))
    }
}

pub struct FusionRings;

impl Check for FusionRings {
    fn id(&self) -> String {
        "fusion-rings".into()
    }

    fn family(&self) -> &'static str {
        "fusion-rings"
    }

    fn run(&self, _: &Context) -> Result<Outcome> {
        let rings = [("ising", fusion::ising()), ("w0", fusion::w0()), ("n0", fusion::n0()), ("u0", fusion::u0())];
        let mut pass = true;
        let mut rows = Vec::new();
        for (name, ring) in &rings {
            let axioms = ring.verify_axioms();
            pass &= axioms.is_ok();
            let currents: Vec<String> = ring.simple_currents().iter().map(|&i| ring.name(i).to_string()).collect();
            if *name == "w0" || *name == "n0" {
                pass &= currents == ["A0", "A1", "A2"];
            }
            rows.push(json!({
                "ring": name,
                "labels": ring.len(),
                "axioms": axioms.err().map_or("ok".to_string(), |f| f.to_string()),
                "simple_currents": if ring.len() <= 9 { json!(currents) } else { json!(currents.len()) },
            }));
        }
        let sizes: Vec<usize> = rings.iter().map(|(_, r)| r.len()).collect();
        pass &= sizes == [3, 6, 9, 54];
        let fixtures_ok = FusionRing::from_text(fixtures::W0_RING)? == fusion::w0()
            && FusionRing::from_text(fixtures::N0_RING)? == fusion::n0();
        pass &= fixtures_ok;
        Ok(Outcome::judged(pass, json!({ "rings": rows, "fixtures_match": fixtures_ok })))
    }
}

pub struct Branching;

impl Check for Branching {
    fn id(&self) -> String {
        "branching".into()
    }

    fn family(&self) -> &'static str {
        "branching"
    }

    fn run(&self, ctx: &Context) -> Result<Outcome> {
        let order = ctx.order.unwrap_or(DEFAULT_BRANCH_ORDER);
        let mut count = 0;
        let mut failures = Vec::new();
        for m in 0..=ctx.max_m {
            for n in 0..=m {
                for eps in 0..2 {
                    let rule = affine::gko_branch(eps, m, n)?;
                    count += 1;
                    if let Some(mm) = affine::verify_branch(&rule, order)? {
                        failures.push(format!("(eps,m,n)=({eps},{m},{n}): {mm:?}"));
                    }
                }
            }
        }
        Ok(Outcome::judged(
            failures.is_empty(),
            json!({ "identities": count, "order": order, "max_m": ctx.max_m, "failures": failures }),
        ))
    }
}

pub struct Chain;

impl Check for Chain {
    fn id(&self) -> String {
        "chain".into()
    }

    fn family(&self) -> &'static str {
        "chain"
    }

    fn run(&self, ctx: &Context) -> Result<Outcome> {
        let order = ctx.order.unwrap_or(DEFAULT_CHAIN_ORDER);
        let outcomes = affine::verify_chain_decomposition(order)?;
        // the first two displays list every summand once
        let pass = outcomes.iter().all(|o| o.passed()) && outcomes.iter().take(2).all(|o| o.max_multiplicity == 1);
        let rows: Vec<Value> = outcomes
            .iter()
            .map(|o| {
                json!({
                    "display": o.name,
                    "summands_match": o.summands_match,
                    "max_multiplicity": o.max_multiplicity,
                    "characters": o.mismatch.as_ref().map_or("agree".to_string(), |m| format!("{m:?}")),
                })
            })
            .collect();
        Ok(Outcome::judged(pass, json!({ "order": order, "displays": rows })))
    }
}

/// The fifteen vectors in `ω, e, f, f′` coordinates, by charge.
pub const CONFORMAL_LIST: [(&str, [&str; 4]); 15] = [
    ("1/2", ["0", "1", "0", "0"]),
    ("1/2", ["0", "0", "1", "0"]),
    ("1/2", ["0", "0", "0", "1"]),
    ("81/70", ["1", "-1", "0", "0"]),
    ("81/70", ["1", "0", "-1", "0"]),
    ("81/70", ["1", "0", "0", "-1"]),
    ("58/35", ["1", "0", "0", "0"]),
    ("4/5", ["14/9", "-32/27", "-32/27", "-32/27"]),
    ("4/5", ["-7/18", "14/27", "32/27", "32/27"]),
    ("4/5", ["-7/18", "32/27", "14/27", "32/27"]),
    ("4/5", ["-7/18", "32/27", "32/27", "14/27"]),
    ("6/7", ["-5/9", "32/27", "32/27", "32/27"]),
    ("6/7", ["25/18", "-14/27", "-32/27", "-32/27"]),
    ("6/7", ["25/18", "-32/27", "-14/27", "-32/27"]),
    ("6/7", ["25/18", "-32/27", "-32/27", "-14/27"]),
];

fn listed_vectors() -> Vec<(String, Vec<String>)> {
    let mut v: Vec<(String, Vec<String>)> =
        CONFORMAL_LIST.iter().map(|(c, xs)| (c.to_string(), xs.iter().map(|x| x.to_string()).collect())).collect();
    v.sort();
    v
}

pub struct ConformalVectors;

impl Check for ConformalVectors {
    fn id(&self) -> String {
        "conformal-vectors".into()
    }

    fn family(&self) -> &'static str {
        "conformal-vectors"
    }

    fn run(&self, ctx: &Context) -> Result<Outcome> {
        let p = ctx.presentations()?;
        let cls = griess::conformal_vectors(&p.p3)?;
        let mut found: Vec<(String, Vec<String>)> =
            cls.vectors.iter().map(|v| (v.charge.to_string(), strs(&v.coords))).collect();
        found.sort();
        let mut counts: BTreeMap<String, usize> = BTreeMap::new();
        for (c, _) in &found {
            *counts.entry(c.clone()).or_default() += 1;
        }
        let cert = &cls.certificate;
        let pass = found == listed_vectors() && cert.complete();
        let vectors: Vec<Value> =
            cls.vectors.iter().map(|v| json!({ "charge": v.charge.to_string(), "coords": strs(&v.coords) })).collect();
        Ok(Outcome::judged(
            pass,
            json!({
                "basis": p.p3.names,
                "count": cls.vectors.len(),
                "charges": counts,
                "vectors": vectors,
                "certificate": {
                    "quotient_dimension": cert.quotient_dimension,
                    "solutions_with_zero": cert.solutions_with_zero,
                    "groebner_basis_size": cert.basis_size,
                    "irrational_roots": cert.irrational_roots,
                    "complete": cert.complete(),
                },
            }),
        ))
    }
}

pub struct GriessIdentities;

impl Check for GriessIdentities {
    fn id(&self) -> String {
        "griess-identities".into()
    }

    fn family(&self) -> &'static str {
        "griess-identities"
    }

    fn run(&self, ctx: &Context) -> Result<Outcome> {
        let p = ctx.presentations()?;
        let a = &p.p3;
        let x = |i: usize| a.basis(i);
        let v = |xs: [&str; 4]| xs.iter().map(|s| s.parse::<Scalar>().expect("literal")).collect::<Vec<_>>();
        let products = [
            ("e*f", a.mul(&x(1), &x(2))?, v(["-105/512", "9/32", "9/32", "7/32"])),
            ("e*f'", a.mul(&x(1), &x(3))?, v(["-105/512", "9/32", "7/32", "9/32"])),
            ("f*f'", a.mul(&x(2), &x(3))?, v(["-105/512", "7/32", "9/32", "9/32"])),
        ];
        let pairs = [a.pair(&x(1), &x(2)), a.pair(&x(1), &x(3)), a.pair(&x(2), &x(3))];
        let target = Scalar::frac(13, 1024);
        let mut pass = products.iter().all(|(_, got, want)| got == want) && pairs.iter().all(|s| *s == target);
        let invariance = [("p1", &p.p1), ("p2", &p.p2), ("p3", &p.p3)]
            .iter()
            .map(|(n, alg)| (n.to_string(), alg.verify_invariance().err().unwrap_or_else(|| "ok".into())))
            .collect::<BTreeMap<_, _>>();
        pass &= invariance.values().all(|s| s == "ok");
        let iso = griess::verify_isomorphism(&p.p2, &p.p1, &p.p2_to_p1).err().unwrap_or_else(|| "ok".into());
        pass &= iso == "ok";
        let kk = &p.k * &p.k;
        pass &= kk == Scalar::frac(243, 2048);
        Ok(Outcome::judged(
            pass,
            json!({
                "products": products.iter().map(|(n, got, _)| json!({ "product": n, "value": strs(got) })).collect::<Vec<_>>(),
                "pairings": strs(&pairs),
                "invariance": invariance,
                "isomorphism": iso,
                "k": p.k.to_string(),
                "k_squared": kk.to_string(),
                "derived": p.derived,
            }),
        ))
    }
}

pub struct MiyamotoGroup;

impl Check for MiyamotoGroup {
    fn id(&self) -> String {
        "miyamoto-group".into()
    }

    fn family(&self) -> &'static str {
        "miyamoto-group"
    }

    fn run(&self, ctx: &Context) -> Result<Outcome> {
        let p = ctx.presentations()?;
        let a = &p.p3;
        let te = griess::miyamoto(a, &a.basis(1))?;
        let tf = griess::miyamoto(a, &a.basis(2))?;
        let te_f = te.apply(&a.basis(2))? == a.basis(3);
        let cube = griess::is_identity(&griess::power(&te.mul(&tf)?, 3)?);
        let group = griess::automorphism_group(&[te.clone(), tf.clone()])?;
        let perms = group.permutations(&[a.basis(1), a.basis(2), a.basis(3)])?;
        let mut distinct = perms.clone();
        distinct.sort();
        distinct.dedup();
        let (w3, w4) = p.virasoro_parts()?;
        let fixes = group
            .elements
            .iter()
            .all(|g| g.apply(&w3).ok() == Some(w3.clone()) && g.apply(&w4).ok() == Some(w4.clone()));
        let automorphisms = group.elements.iter().all(|g| griess::verify_automorphism(a, g).is_ok());
        let fixed = griess::fixed_subspace(&[te.clone(), tf.clone()])?;
        let pass = te_f
            && cube
            && group.order() == 6
            && distinct.len() == 6
            && !group.is_abelian()
            && fixes
            && fixed.len() == 2
            && automorphisms;
        Ok(Outcome::judged(
            pass,
            json!({
                "tau_e(f) = f'": te_f,
                "(tau_e tau_f)^3 = 1": cube,
                "order": group.order(),
                "abelian": group.is_abelian(),
                "permutations_of_e_f_f'": perms,
                "fixes_omega3_omega4": fixes,
                "omega3": strs(&w3),
                "omega4": strs(&w4),
                "all_automorphisms": automorphisms,
                "fixed_subspace_dimension": fixed.len(),
            }),
        ))
    }
}

fn orbit_json(o: &ModuleOrbit, ring: &FusionRing) -> Value {
    json!({
        "orbit": o.name,
        "members": o.members.iter().map(|&i| ring.name(i)).collect::<Vec<_>>(),
        "stable": o.is_stable(),
        "integral": o.integral,
    })
}

pub struct Modules;

impl Check for Modules {
    fn id(&self) -> String {
        "modules".into()
    }

    fn family(&self) -> &'static str {
        "modules"
    }

    fn run(&self, _: &Context) -> Result<Outcome> {
        let p = extension::u_problem();
        let all = p.orbits();
        let accepted = p.classify_modules();
        let names: Vec<&str> = accepted.iter().map(|o| o.name.as_str()).collect();
        let expected = ["Ind(A0,A0)", "Ind(A0,B0)", "Ind(A0,C0)", "Ind(B0,A0)", "Ind(B0,B0)", "Ind(B0,C0)"];
        let rejected: Vec<&ModuleOrbit> = all.iter().filter(|o| !o.integral).collect();
        let pass = names == expected
            && all.len() == 18
            && all.iter().all(ModuleOrbit::is_stable)
            && rejected.len() == all.len() - accepted.len();
        Ok(Outcome::judged(
            pass,
            json!({
                "orbits": all.len(),
                "accepted": accepted.iter().map(|o| orbit_json(o, &p.base)).collect::<Vec<_>>(),
                "rejected": rejected.iter().map(|o| o.name.clone()).collect::<Vec<_>>(),
            }),
        ))
    }
}

pub struct InducedFusion;

impl Check for InducedFusion {
    fn id(&self) -> String {
        "induced-fusion".into()
    }

    fn family(&self) -> &'static str {
        "induced-fusion"
    }

    fn run(&self, _: &Context) -> Result<Outcome> {
        let p = extension::u_problem();
        let orbits = p.classify_modules();
        let ring = p.induced_fusion(&orbits)?;
        let axioms = ring.verify_axioms();
        let idx = |n: &str| ring.index(n).ok_or_else(|| Error::Inconsistent(format!("{n} missing")));
        let names = |xs: &[(usize, u32)]| -> Vec<String> {
            xs.iter().flat_map(|&(k, c)| std::iter::repeat_n(ring.name(k).to_string(), c as usize)).collect()
        };
        let mb = idx("Ind(B0,A0)")?;
        let mc = idx("Ind(A0,C0)")?;
        let mut want_b = vec![ring.name(0).to_string(), "Ind(B0,A0)".to_string()];
        want_b.sort();
        let mut want_c = vec![ring.name(0).to_string(), "Ind(A0,B0)".to_string(), "Ind(A0,C0)".to_string()];
        want_c.sort();
        let mut got_b = names(ring.product(mb, mb));
        got_b.sort();
        let mut got_c = names(ring.product(mc, mc));
        got_c.sort();
        let (s1, s2) = fusion::u0_sigmas(&p.base);
        let both: Vec<usize> = (0..s1.len()).map(|i| s1[s2[i]]).collect();
        let invariant = extension::table_invariant(&p, &orbits, &both)?;
        let table: Vec<Vec<String>> =
            (0..ring.len()).map(|i| (0..ring.len()).map(|j| names(ring.product(i, j)).join("+")).collect()).collect();
        let unit_ok = ring.name(0) == "Ind(A0,A0)";
        let pass = axioms.is_ok() && ring.len() == 6 && got_b == want_b && got_c == want_c && invariant && unit_ok;
        Ok(Outcome::judged(
            pass,
            json!({
                "labels": (0..ring.len()).map(|i| ring.name(i)).collect::<Vec<_>>(),
                "table": table,
                "axioms": axioms.err().map_or("ok".to_string(), |f| f.to_string()),
                "M_B x M_B": got_b,
                "M_C x M_C": got_c,
                "sigma_invariant": invariant,
                "assumptions": [
                    "restricting an intertwiner of induced modules to the base is injective",
                    "every intertwiner of base modules lifts to the induced modules",
                ],
            }),
        ))
    }
}

fn gram_json(g: &crate::Matrix, det: &Scalar) -> Result<Value> {
    Ok(json!({
        "matrix": g.to_rows().iter().map(|r| strs(r)).collect::<Vec<_>>(),
        "determinant": det.to_string(),
        "rank": g.rank(),
        "leading_minors": strs(&g.leading_minors()?),
        "positive_definite": g.is_positive_definite()?,
    }))
}

/// Gram matrix of a builtin state set.
pub struct GramCheck {
    pub set: String,
}

impl Check for GramCheck {
    fn id(&self) -> String {
        format!("gram:{}", self.set)
    }

    fn family(&self) -> &'static str {
        "gram"
    }

    fn run(&self, ctx: &Context) -> Result<Outcome> {
        let states =
            modecalc::builtin_set(&self.set).ok_or_else(|| Error::InvalidInput(format!("unknown set {}", self.set)))?;
        let calc = ctx.calculus(states[0].weight)?;
        let strategy = ctx.strategy()?;
        let (g, det) = modecalc::gram_with(&calc, strategy.as_ref(), &states)?;
        let pass = !det.is_zero() && g.is_symmetric() && g.is_positive_definite()?;
        let mut data = gram_json(&g, &det)?;
        data["strategy"] = json!(strategy.name());
        data["states"] = json!(states.iter().map(|s| s.to_string()).collect::<Vec<_>>());
        Ok(Outcome::judged(pass, data))
    }
}

/// Graded dimension of a case at one weight.
pub struct DimsCheck {
    pub case: Case,
    pub weight: i64,
}

impl Check for DimsCheck {
    fn id(&self) -> String {
        format!("dims:{}:{}", self.case, self.weight)
    }

    fn family(&self) -> &'static str {
        "dims"
    }

    fn run(&self, _: &Context) -> Result<Outcome> {
        let d = modecalc::case_dimension(self.case, self.weight)?;
        let summands: Vec<String> =
            modecalc::case_summands(self.case).iter().map(|(a, b, m)| format!("{m}*L(4/5,{a})xL(6/7,{b})")).collect();
        Ok(Outcome {
            status: Status::Finding,
            data: json!({ "case": self.case.to_string(), "weight": self.weight, "dimension": d, "summands": summands }),
        })
    }
}

pub struct Completion;

impl Check for Completion {
    fn id(&self) -> String {
        "completion".into()
    }

    fn family(&self) -> &'static str {
        "completion"
    }

    fn run(&self, ctx: &Context) -> Result<Outcome> {
        let calc = ctx.calculus(5)?;
        let strategy = ctx.strategy()?;
        let x = modecalc::builtin_set("weight3").expect("builtin");
        let y = modecalc::builtin_set("weight5").expect("builtin");
        let (g3, d3) = modecalc::gram_with(&calc, strategy.as_ref(), &x)?;
        let (g5, d5) = modecalc::gram_with(&calc, strategy.as_ref(), &y)?;
        let case_i = modecalc::case_dimension(Case::I, 5)?;
        let w = modecalc::hw_state();
        let hw3 = calc.highest_weight_check(&w, "w3", &BigRational::from_integer(3.into()))?;
        let hw4 = calc.highest_weight_check(&w, "w4", &BigRational::zero())?;
        let ww = calc.inner(&w, &w)?;
        let pd3 = g3.is_positive_definite()?;
        let pd5 = g5.is_positive_definite()?;
        let rank5 = g5.rank();
        let pass = !d3.is_zero()
            && !d5.is_zero()
            && pd3
            && pd5
            && rank5 == 12
            && case_i == 11
            && rank5 as u64 > case_i
            && hw3.pass
            && hw4.pass
            && !ww.is_zero();
        Ok(Outcome::judged(
            pass,
            json!({
                "strategy": strategy.name(),
                "weight3": gram_json(&g3, &d3)?,
                "weight5": gram_json(&g5, &d5)?,
                "case_i_dimension_at_5": case_i,
                "highest_weight": [hw3, hw4],
                "norm_of_w": ww.to_string(),
                "weight_spaces": calc.levels(),
            }),
        ))
    }
}

pub struct Dimensions;

impl Check for Dimensions {
    fn id(&self) -> String {
        "dimensions".into()
    }

    fn family(&self) -> &'static str {
        "dimensions"
    }

    fn run(&self, _: &Context) -> Result<Outcome> {
        let dims = (0..=5).map(|w| modecalc::case_dimension(Case::Iv, w)).collect::<Result<Vec<_>>>()?;
        Ok(Outcome::judged(dims[2] == 4 && dims[1] == 0, json!({ "U_graded_dimensions_0_to_5": dims })))
    }
}

pub struct Properties;

impl Properties {
    fn norm_oracles(ctx: &Context) -> Result<(bool, Vec<Value>)> {
        let calc = ctx.calculus(5)?;
        let alg = ctx.presentations()?.p1;
        let strategy = ctx.strategy()?;
        let bases = [
            ("v1", ModeState::monomial(ModeMonomial::new(&[], "v1")), ["2/3", "4/3"]),
            ("w", modecalc::hw_state(), ["3", "0"]),
        ];
        let mut ok = true;
        let mut rows = Vec::new();
        for (name, v, hs) in &bases {
            let vv = strategy.inner(&calc, v, v)?;
            for (d, h) in ["w3", "w4"].iter().zip(hs) {
                let i = alg.index(d).ok_or_else(|| Error::InvalidInput(format!("{d} missing")))?;
                let c = &alg.form[(i, i)] * &Scalar::from_int(2);
                let h: Scalar = h.parse()?;
                let l1 = v.apply(d, 0);
                let l2 = v.apply(d, -1);
                let got1 = strategy.inner(&calc, &l1, &l1)?;
                let got2 = strategy.inner(&calc, &l2, &l2)?;
                let want1 = &(&h * &Scalar::from_int(2)) * &vv;
                let want2 = &(&(&h * &Scalar::from_int(4)) + &(&c / &Scalar::from_int(2))) * &vv;
                ok &= got1 == want1 && got2 == want2;
                rows.push(json!({
                    "state": name, "virasoro": d,
                    "L(-1)": [got1.to_string(), want1.to_string()],
                    "L(-2)": [got2.to_string(), want2.to_string()],
                }));
            }
        }
        Ok((ok, rows))
    }
}

impl Check for Properties {
    fn id(&self) -> String {
        "properties".into()
    }

    fn family(&self) -> &'static str {
        "properties"
    }

    fn run(&self, ctx: &Context) -> Result<Outcome> {
        let batch = cocycle::split_random_batch(&cocycle::standard_groups(), ctx.cases, ctx.seed);
        let p = ctx.presentations()?;
        let cls = griess::conformal_vectors(&p.p3)?;
        let pairs = griess::complement_pairs(&p.p3, &cls.vectors)?;
        let involutive = pairs.iter().all(|&(i, j)| match j {
            Some(j) => pairs[j].1 == Some(i),
            None => cls.vectors[i].as_vector() == p.p3.omega,
        });
        let (norms_ok, norms) = Self::norm_oracles(ctx)?;
        let pass = batch.failures.is_empty() && batch.cases == ctx.cases && involutive && pairs.len() == 15 && norms_ok;
        Ok(Outcome::judged(
            pass,
            json!({
                "cocycles": { "cases": batch.cases, "seed": ctx.seed, "failures": batch.failures },
                "complements": pairs.iter().map(|&(i, j)| json!([i, j])).collect::<Vec<_>>(),
                "virasoro_norms": norms,
            }),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anchors_cover_registry() {
        for c in registry() {
            assert_ne!(anchor_of(c.family()), "plumbing", "{}", c.id());
        }
        assert_eq!(anchor_of("nothing"), "plumbing");
    }

    #[test]
    fn parametric_lookup() {
        assert_eq!(lookup("gram:weight3").unwrap().id(), "gram:weight3");
        assert_eq!(lookup("dims:iv:2").unwrap().id(), "dims:iv:2");
        assert!(lookup("gram:nope").is_none());
        assert!(lookup("dims:v:2").is_none());
    }

    #[test]
    fn corrupted_table_fails_gram() {
        let ctx = Context {
            griess_p1: fixtures::GRIESS_P1.replace("mul w3 v0 : 2/3 v0", "mul w3 v0 : 1/3 v0"),
            ..Context::default()
        };
        let r = run_check(&GramCheck { set: "weight3".into() }, &ctx);
        assert_eq!(r.status, Status::Fail);
    }
}
