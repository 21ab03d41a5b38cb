//! Simple-current extensions of a fusion ring by a group of currents:
//! orbits, stabilizers, the top-weight integrality test and induced fusion.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;

use crate::cocycle::AbelianGroup;
use crate::error::{Error, Result};
use crate::fusion::{self, FusionRing, RingLabel};

/// A base ring together with simple currents `U^α` indexed by a group.
#[derive(Clone, Debug)]
pub struct ExtensionProblem {
    pub base: FusionRing,
    pub group: AbelianGroup,
    pub currents: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleOrbit {
    pub name: String,
    pub representative: usize,
    /// `members[α] = U^α × P`.
    pub members: Vec<usize>,
    pub stabilizer: Vec<usize>,
    pub integral: bool,
}

impl ModuleOrbit {
    pub fn is_stable(&self) -> bool {
        self.stabilizer == [0]
    }
}

impl ExtensionProblem {
    pub fn new(base: FusionRing, group: AbelianGroup, currents: Vec<usize>) -> Result<Self> {
        if currents.len() != group.order() {
            return Err(Error::Shape("one current per group element".into()));
        }
        if currents[0] != base.unit {
            return Err(Error::InvalidInput("the identity must map to the unit".into()));
        }
        let simple = base.simple_currents();
        for &c in &currents {
            if !simple.contains(&c) {
                return Err(Error::InvalidInput(format!("{} is not a simple current", base.name(c))));
            }
        }
        for a in 0..currents.len() {
            for b in 0..currents.len() {
                if base.current_times(currents[a], currents[b]) != Some(currents[group.add(a, b)]) {
                    return Err(Error::InvalidInput(format!(
                        "{} x {} is not the current of the sum",
                        base.name(currents[a]),
                        base.name(currents[b])
                    )));
                }
            }
        }
        Ok(ExtensionProblem { base, group, currents })
    }

    fn act(&self, alpha: usize, p: usize) -> usize {
        self.base.current_times(self.currents[alpha], p).expect("simple current")
    }

    pub fn stabilizer(&self, p: usize) -> Vec<usize> {
        (0..self.currents.len()).filter(|&a| self.act(a, p) == p).collect()
    }

    fn weight(&self, x: usize) -> &BigRational {
        &self.base.labels[x].weight
    }

    /// `h_{U^α} + h_{P^β} − h_{P^{α+β}} ∈ Z` for all `α, β`.
    pub fn integral(&self, p: usize) -> bool {
        let n = self.currents.len();
        (0..n).all(|a| {
            (0..n).all(|b| {
                let pb = self.act(b, p);
                let pab = self.act(self.group.add(a, b), p);
                (self.weight(self.currents[a]) + self.weight(pb) - self.weight(pab)).is_integer()
            })
        })
    }

    /// All orbits, in order of their representatives' names.
    pub fn orbits(&self) -> Vec<ModuleOrbit> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for p in 0..self.base.len() {
            if seen.contains(&p) {
                continue;
            }
            let members: Vec<usize> = (0..self.currents.len()).map(|a| self.act(a, p)).collect();
            seen.extend(members.iter().copied());
            let rep = *members.iter().min_by_key(|&&x| self.base.name(x)).expect("nonempty orbit");
            let members: Vec<usize> = (0..self.currents.len()).map(|a| self.act(a, rep)).collect();
            out.push(ModuleOrbit {
                name: orbit_name(self.base.name(rep)),
                representative: rep,
                members,
                stabilizer: self.stabilizer(rep),
                integral: self.integral(rep),
            });
        }
        out.sort_by(|a, b| self.base.name(a.representative).cmp(self.base.name(b.representative)));
        out
    }

    /// Orbits passing the integrality test.
    pub fn classify_modules(&self) -> Vec<ModuleOrbit> {
        self.orbits().into_iter().filter(|o| o.integral).collect()
    }

    /// Fusion of the extension on the given orbits:
    /// `N(M1, M2 → M3) = Σ_α N_{P1,P2}^{U^α × P3}`.
    pub fn induced_fusion(&self, orbits: &[ModuleOrbit]) -> Result<FusionRing> {
        if let Some(o) = orbits.iter().find(|o| !o.is_stable()) {
            return Err(Error::InvalidInput(format!("{} has a nontrivial stabilizer", o.name)));
        }
        let find = |x: usize| orbits.iter().position(|o| o.members.contains(&x));
        let unit = find(self.base.unit).ok_or_else(|| Error::InvalidInput("unit orbit missing".into()))?;
        let mut order: Vec<usize> = (0..orbits.len()).collect();
        order.swap(0, unit);
        let pos = |i: usize| order.iter().position(|&x| x == i).expect("permutation");
        let labels = order
            .iter()
            .map(|&i| {
                let o = &orbits[i];
                let weight = o.members.iter().map(|&x| self.weight(x).clone()).min().expect("nonempty");
                RingLabel { name: o.name.clone(), weight, grade: vec![] }
            })
            .collect();
        let mut dual = Vec::new();
        for &i in &order {
            let d = self.base.dual[orbits[i].representative];
            dual.push(pos(find(d).ok_or_else(|| Error::InvalidInput("orbit set not closed under duality".into()))?));
        }
        let mut table = BTreeMap::new();
        for (a, &i) in order.iter().enumerate() {
            for (b, &j) in order.iter().enumerate() {
                let (p1, p2) = (orbits[i].representative, orbits[j].representative);
                let mut row = BTreeMap::new();
                for &(k, c) in self.base.product(p1, p2) {
                    let target = find(k).ok_or_else(|| {
                        Error::InvalidInput(format!("{} lies outside the orbit set", self.base.name(k)))
                    })?;
                    *row.entry(pos(target)).or_insert(0) += c;
                }
                table.insert((a, b), row);
            }
        }
        FusionRing::new(labels, vec![], dual, table)
    }
}

fn orbit_name(rep: &str) -> String {
    let inner = rep.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(rep);
    format!("Ind({inner})")
}

/// The Z3 extension of `W(0) ⊗ N(0)` by `U^i = (A^i, A^i)`.
pub fn u_problem() -> ExtensionProblem {
    let base = fusion::u0();
    let currents = (0..3).map(|i| base.index(&format!("(A{i},A{i})")).expect("current label")).collect();
    ExtensionProblem::new(base, AbelianGroup::new(vec![3]).expect("Z3"), currents).expect("valid problem")
}

/// The current label sets of the `(++)` and `(+−)` extensions.
pub fn current_sets(ring: &FusionRing) -> (BTreeSet<String>, BTreeSet<String>) {
    let pp = ["(A0,A0)", "(A1,A1)", "(A2,A2)"];
    let pm = ["(A0,A0)", "(A1,A2)", "(A2,A1)"];
    let set = |xs: [&str; 3]| xs.iter().map(|s| ring.index(s).map(|i| ring.name(i).to_string())).collect::<Option<_>>();
    (set(pp).expect("labels"), set(pm).expect("labels"))
}

/// Whether a label permutation maps the induced table to itself.
pub fn table_invariant(problem: &ExtensionProblem, orbits: &[ModuleOrbit], perm: &[usize]) -> Result<bool> {
    let ring = problem.induced_fusion(orbits)?;
    let find = |x: usize| orbits.iter().find(|o| o.members.contains(&x)).map(|o| o.name.clone());
    let mut map = Vec::new();
    for i in 0..ring.len() {
        let o = orbits.iter().find(|o| o.name == ring.name(i)).expect("orbit");
        let image = match find(perm[o.representative]) {
            Some(n) => n,
            None => return Ok(false),
        };
        map.push(ring.index(&image).expect("orbit label"));
    }
    let n = ring.len();
    Ok((0..n).all(|i| (0..n).all(|j| (0..n).all(|k| ring.constant(i, j, k) == ring.constant(map[i], map[j], map[k])))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_orbits_accepted() {
        let p = u_problem();
        let all = p.orbits();
        assert_eq!(all.len(), 18);
        let acc = p.classify_modules();
        let names: Vec<_> = acc.iter().map(|o| o.name.as_str()).collect();
        assert_eq!(names, ["Ind(A0,A0)", "Ind(A0,B0)", "Ind(A0,C0)", "Ind(B0,A0)", "Ind(B0,B0)", "Ind(B0,C0)"]);
        assert!(all.iter().all(ModuleOrbit::is_stable));
    }

    #[test]
    fn rejected_example() {
        let p = u_problem();
        let x = p.base.index("(A1,A0)").unwrap();
        assert!(!p.integral(x));
    }

    #[test]
    fn spot_values() {
        let p = u_problem();
        let orbits = p.classify_modules();
        let r = p.induced_fusion(&orbits).unwrap();
        r.verify_axioms().unwrap();
        let i = |n: &str| r.index(n).unwrap();
        let mb = i("Ind(B0,A0)");
        assert_eq!(r.product(mb, mb), &[(0, 1), (mb, 1)]);
        let mc = i("Ind(A0,C0)");
        let mut want = vec![(0, 1), (i("Ind(A0,B0)"), 1), (mc, 1)];
        want.sort();
        assert_eq!(r.product(mc, mc), want.as_slice());
    }

    #[test]
    fn sigma_symmetry() {
        let p = u_problem();
        let orbits = p.classify_modules();
        let (s1, s2) = fusion::u0_sigmas(&p.base);
        let both: Vec<usize> = (0..s1.len()).map(|i| s1[s2[i]]).collect();
        assert!(table_invariant(&p, &orbits, &both).unwrap());
        let (pp, pm) = current_sets(&p.base);
        let image: BTreeSet<String> =
            pp.iter().map(|n| p.base.name(s1[p.base.index(n).unwrap()]).to_string()).collect();
        assert_eq!(image, pm);
    }

    #[test]
    fn unstable_orbit_rejected() {
        let p = u_problem();
        let mut o = p.classify_modules();
        o[1].stabilizer = vec![0, 1, 2];
        assert!(p.induced_fusion(&o).is_err());
    }
}
