//! Finite fusion rings with optional abelian grading, and the concrete rings
//! of the Potts-type extensions.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::minimal::{wang_fusion, MinimalLabel};
use crate::scalar::rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingLabel {
    pub name: String,
    pub weight: BigRational,
    pub grade: Vec<u32>,
}

/// Sparse structure constants: `products[i][j]` lists `(k, N_ij^k)` with
/// `N_ij^k > 0`, sorted by `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRing {
    pub labels: Vec<RingLabel>,
    pub moduli: Vec<u32>,
    pub dual: Vec<usize>,
    pub unit: usize,
    products: Vec<Vec<Vec<(usize, u32)>>>,
}

/// The first violated axiom, with the labels involved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomFailure {
    pub axiom: String,
    pub labels: Vec<String>,
}

impl std::fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} fails at ({})", self.axiom, self.labels.join(", "))
    }
}

type Sparse = BTreeMap<usize, u32>;

impl FusionRing {
    pub fn new(
        labels: Vec<RingLabel>,
        moduli: Vec<u32>,
        dual: Vec<usize>,
        table: BTreeMap<(usize, usize), Sparse>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 || dual.len() != n {
            return Err(Error::Shape("label and dual lists must be nonempty and aligned".into()));
        }
        if labels.iter().any(|l| l.grade.len() != moduli.len()) {
            return Err(Error::Shape("grade vector length differs from the grading group".into()));
        }
        let mut products = vec![vec![Vec::new(); n]; n];
        for ((i, j), row) in table {
            if i >= n || j >= n || row.keys().any(|&k| k >= n) {
                return Err(Error::Shape("structure constant index out of range".into()));
            }
            products[i][j] = row.into_iter().filter(|&(_, c)| c > 0).collect();
        }
        Ok(FusionRing { labels, moduli, dual, unit: 0, products })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.name == name)
    }

    pub fn name(&self, i: usize) -> &str {
        &self.labels[i].name
    }

    pub fn product(&self, i: usize, j: usize) -> &[(usize, u32)] {
        &self.products[i][j]
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> u32 {
        self.products[i][j].iter().find(|&&(x, _)| x == k).map_or(0, |&(_, c)| c)
    }

    /// Overwrites one structure constant and its mirror image.
    pub fn set_constant(&mut self, i: usize, j: usize, k: usize, value: u32) {
        for (a, b) in [(i, j), (j, i)] {
            let row = &mut self.products[a][b];
            row.retain(|&(x, _)| x != k);
            if value > 0 {
                row.push((k, value));
                row.sort();
            }
        }
    }

    fn mul_sparse(&self, lhs: &Sparse, j: usize) -> Sparse {
        let mut out = Sparse::new();
        for (&x, &a) in lhs {
            for &(k, b) in &self.products[x][j] {
                *out.entry(k).or_insert(0) += a * b;
            }
        }
        out
    }

    fn fail(&self, axiom: &str, idx: &[usize]) -> AxiomFailure {
        AxiomFailure { axiom: axiom.into(), labels: idx.iter().map(|&i| self.name(i).to_string()).collect() }
    }

    fn grade_sum(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).zip(&self.moduli).map(|((x, y), m)| (x + y) % m).collect()
    }

    /// Unit, commutativity, associativity, grading and duality, exhaustively.
    pub fn verify_axioms(&self) -> std::result::Result<(), AxiomFailure> {
        let n = self.len();
        let u = self.unit;
        for j in 0..n {
            if self.products[u][j] != [(j, 1)] {
                return Err(self.fail("unit", &[u, j]));
            }
        }
        for i in 0..n {
            for j in 0..i {
                if self.products[i][j] != self.products[j][i] {
                    return Err(self.fail("commutativity", &[i, j]));
                }
            }
        }
        for i in 0..n {
            if self.dual[self.dual[i]] != i {
                return Err(self.fail("duality involution", &[i]));
            }
            for j in 0..n {
                let want = u32::from(j == self.dual[i]);
                if self.constant(i, j, u) != want {
                    return Err(self.fail("duality", &[i, j]));
                }
                if !self.moduli.is_empty() {
                    let g = self.grade_sum(&self.labels[i].grade, &self.labels[j].grade);
                    if let Some(&(k, _)) = self.products[i][j].iter().find(|(k, _)| self.labels[*k].grade != g) {
                        return Err(self.fail("grading", &[i, j, k]));
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij: Sparse = self.products[i][j].iter().copied().collect();
                for k in 0..n {
                    let left = self.mul_sparse(&ij, k);
                    let jk: Sparse = self.products[j][k].iter().copied().collect();
                    let mut right = Sparse::new();
                    for (&y, &a) in &jk {
                        for &(l, b) in &self.products[i][y] {
                            *right.entry(l).or_insert(0) += a * b;
                        }
                    }
                    if left != right {
                        return Err(self.fail("associativity", &[i, j, k]));
                    }
                }
            }
        }
        Ok(())
    }

    /// Labels whose product with every label is a single label.
    pub fn simple_currents(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| (0..self.len()).all(|w| self.products[x][w].iter().map(|&(_, c)| c).sum::<u32>() == 1))
            .collect()
    }

    /// The unique product of a simple current with a label.
    pub fn current_times(&self, x: usize, w: usize) -> Option<usize> {
        match self.products[x][w].as_slice() {
            [(k, 1)] => Some(*k),
            _ => None,
        }
    }

    pub fn tensor(&self, other: &FusionRing) -> FusionRing {
        let n2 = other.len();
        let idx = |a: usize, b: usize| a * n2 + b;
        let mut labels = Vec::new();
        let mut dual = Vec::new();
        for a in &self.labels {
            for b in &other.labels {
                let mut grade = a.grade.clone();
                grade.extend(&b.grade);
                labels.push(RingLabel {
                    name: format!("({},{})", a.name, b.name),
                    weight: &a.weight + &b.weight,
                    grade,
                });
            }
        }
        for a in 0..self.len() {
            for b in 0..n2 {
                dual.push(idx(self.dual[a], other.dual[b]));
            }
        }
        let mut products = vec![vec![Vec::new(); labels.len()]; labels.len()];
        for a1 in 0..self.len() {
            for b1 in 0..n2 {
                for a2 in 0..self.len() {
                    for b2 in 0..n2 {
                        let mut row = Vec::new();
                        for &(ka, ca) in &self.products[a1][a2] {
                            for &(kb, cb) in &other.products[b1][b2] {
                                row.push((idx(ka, kb), ca * cb));
                            }
                        }
                        row.sort();
                        products[idx(a1, b1)][idx(a2, b2)] = row;
                    }
                }
            }
        }
        let mut moduli = self.moduli.clone();
        moduli.extend(&other.moduli);
        FusionRing { labels, moduli, dual, unit: idx(self.unit, other.unit), products }
    }

    /// Checks that a permutation of labels is an involutive ring automorphism.
    pub fn verify_involution(&self, perm: &[usize]) -> std::result::Result<(), AxiomFailure> {
        let n = self.len();
        if perm.len() != n {
            return Err(AxiomFailure { axiom: "involution length".into(), labels: vec![] });
        }
        for i in 0..n {
            if perm[perm[i]] != i {
                return Err(self.fail("involution order", &[i]));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let mut mapped: Vec<(usize, u32)> = self.products[i][j].iter().map(|&(k, c)| (perm[k], c)).collect();
                mapped.sort();
                if mapped != self.products[perm[i]][perm[j]] {
                    return Err(self.fail("involution compatibility", &[i, j]));
                }
            }
        }
        Ok(())
    }

    /// Serialises to the line-oriented ring format.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        if !self.moduli.is_empty() {
            let _ = writeln!(s, "grading {}", join(&self.moduli));
        }
        for (i, l) in self.labels.iter().enumerate() {
            let grade = if l.grade.is_empty() { "-".to_string() } else { join(&l.grade) };
            let _ = writeln!(s, "label {} {} {} {}", l.name, l.weight, grade, self.name(self.dual[i]));
        }
        for i in 0..self.len() {
            for j in 0..self.len() {
                for &(k, c) in &self.products[i][j] {
                    let _ = writeln!(s, "const {} {} {} {}", self.name(i), self.name(j), self.name(k), c);
                }
            }
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut moduli = Vec::new();
        let mut labels = Vec::new();
        let mut dual_names = Vec::new();
        let mut consts = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = || Error::Parse(format!("line {}: `{}`", lineno + 1, raw.trim()));
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.as_slice() {
                ["grading", g] => moduli = parse_list(g).ok_or_else(bad)?,
                ["label", name, weight, grade, dual] => {
                    let grade = if *grade == "-" { Vec::new() } else { parse_list(grade).ok_or_else(bad)? };
                    labels.push(RingLabel {
                        name: name.to_string(),
                        weight: parse_rational(weight).ok_or_else(bad)?,
                        grade,
                    });
                    dual_names.push(dual.to_string());
                }
                ["const", a, b, c, n] => {
                    consts.push((a.to_string(), b.to_string(), c.to_string(), n.parse::<u32>().map_err(|_| bad())?))
                }
                _ => return Err(bad()),
            }
        }
        let find = |name: &str| {
            labels
                .iter()
                .position(|l: &RingLabel| l.name == name)
                .ok_or_else(|| Error::Parse(format!("unknown label `{name}`")))
        };
        let dual = dual_names.iter().map(|d| find(d)).collect::<Result<Vec<_>>>()?;
        let mut table: BTreeMap<(usize, usize), Sparse> = BTreeMap::new();
        for (a, b, c, n) in consts {
            *table.entry((find(&a)?, find(&b)?)).or_default().entry(find(&c)?).or_insert(0) += n;
        }
        FusionRing::new(labels, moduli, dual, table)
    }
}

fn join(v: &[u32]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn parse_list(s: &str) -> Option<Vec<u32>> {
    s.split(',').map(|x| x.parse().ok()).collect()
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let d: num_bigint::BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n.parse().ok()?, d))
}

/// Ring of a unitary minimal model, from the Wang fusion rules.
pub fn minimal_ring(m: u32) -> Result<FusionRing> {
    let all = MinimalLabel::all(m);
    let labels = all
        .iter()
        .map(|l| RingLabel { name: format!("h{}", l.highest_weight()), weight: l.highest_weight(), grade: vec![] })
        .collect();
    let mut table = BTreeMap::new();
    for (i, a) in all.iter().enumerate() {
        for (j, b) in all.iter().enumerate() {
            let mut row = Sparse::new();
            for c in wang_fusion(a, b)? {
                let k = all.iter().position(|x| *x == c).expect("canonical label");
                *row.entry(k).or_insert(0) += 1;
            }
            table.insert((i, j), row);
        }
    }
    let dual = (0..all.len()).collect();
    FusionRing::new(labels, vec![], dual, table)
}

/// The Ising ring `{1, ε, σ}`.
pub fn ising() -> FusionRing {
    minimal_ring(1).expect("m = 1 is valid")
}

/// Level-`m` affine sl2 ring, labels `j = 0..m`.
pub fn affine_ring(m: u32) -> Result<FusionRing> {
    use crate::affine::{fz_fusion, AffineLabel};
    let labels = (0..=m)
        .map(|j| {
            let a = AffineLabel::new(m, j)?;
            Ok(RingLabel { name: a.to_string(), weight: a.top_weight(), grade: vec![] })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut table = BTreeMap::new();
    for j in 0..=m {
        for k in 0..=m {
            let row = fz_fusion(&AffineLabel::new(m, j)?, &AffineLabel::new(m, k)?)?
                .into_iter()
                .map(|a| (a.j as usize, 1))
                .collect();
            table.insert((j as usize, k as usize), row);
        }
    }
    FusionRing::new(labels, vec![], (0..=m as usize).collect(), table)
}

/// Z3-graded ring from letter families: `rule(x, y)` lists the letters in
/// `X^i × Y^j`, all carrying superscript `i + j`.
fn z3_ring(letters: &[(char, [BigRational; 3])], rule: impl Fn(char, char) -> Vec<char>) -> FusionRing {
    let mut labels = Vec::new();
    for (ch, weights) in letters {
        for (g, w) in weights.iter().enumerate() {
            labels.push(RingLabel { name: format!("{ch}{g}"), weight: w.clone(), grade: vec![g as u32] });
        }
    }
    let idx = |ch: char, g: usize| letters.iter().position(|(c, _)| *c == ch).expect("letter") * 3 + g % 3;
    let mut table = BTreeMap::new();
    for (x, _) in letters {
        for (y, _) in letters {
            for i in 0..3 {
                for j in 0..3 {
                    let row: Sparse = rule(*x, *y).into_iter().map(|z| (idx(z, i + j), 1)).collect();
                    table.insert((idx(*x, i), idx(*y, j)), row);
                }
            }
        }
    }
    let dual = (0..labels.len()).map(|k| (k / 3) * 3 + (3 - k % 3) % 3).collect();
    FusionRing::new(labels, vec![3], dual, table).expect("well-formed table")
}

/// Modules of `L(4/5,0) ⊕ L(4/5,3)` with Z3-graded names `A^i`, `B^i`.
pub fn w0() -> FusionRing {
    let q = |n, d| rational(n, d);
    z3_ring(&[('A', [q(0, 1), q(2, 3), q(2, 3)]), ('B', [q(2, 5), q(1, 15), q(1, 15)])], |x, y| match (x, y) {
        ('A', z) | (z, 'A') => vec![z],
        _ => vec!['A', 'B'],
    })
}

/// Modules of `L(6/7,0) ⊕ L(6/7,5)` with Z3-graded names `A^i`, `B^i`, `C^i`.
pub fn n0() -> FusionRing {
    let q = |n, d| rational(n, d);
    z3_ring(
        &[
            ('A', [q(0, 1), q(4, 3), q(4, 3)]),
            ('B', [q(1, 7), q(10, 21), q(10, 21)]),
            ('C', [q(5, 7), q(1, 21), q(1, 21)]),
        ],
        |x, y| match (x, y) {
            ('A', z) | (z, 'A') => vec![z],
            ('B', 'B') => vec!['A', 'C'],
            ('B', 'C') | ('C', 'B') => vec!['B', 'C'],
            _ => vec!['A', 'B', 'C'],
        },
    )
}

/// `W(0) ⊗ N(0)`, labels named `(X,Y)`.
pub fn u0() -> FusionRing {
    w0().tensor(&n0())
}

/// The conjugation swapping superscripts 1 and 2 on a Z3-named ring.
pub fn sigma(ring: &FusionRing) -> Vec<usize> {
    (0..ring.len())
        .map(|i| {
            let name = ring.name(i);
            let (letter, g) = name.split_at(name.len() - 1);
            let g2 = match g {
                "1" => "2",
                "2" => "1",
                other => other,
            };
            ring.index(&format!("{letter}{g2}")).expect("conjugate label exists")
        })
        .collect()
}

/// Conjugations acting on the first and second factor of `u0`.
pub fn u0_sigmas(ring: &FusionRing) -> (Vec<usize>, Vec<usize>) {
    let (s1, s2) = (sigma(&w0()), sigma(&n0()));
    let (w, n) = (w0(), n0());
    let lift = |first: bool| -> Vec<usize> {
        (0..ring.len())
            .map(|i| {
                let (a, b) = (i / n.len(), i % n.len());
                let (a, b) = if first { (s1[a], b) } else { (a, s2[b]) };
                ring.index(&format!("({},{})", w.name(a), n.name(b))).expect("label")
            })
            .collect()
    };
    (lift(true), lift(false))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_rings_pass() {
        for r in [ising(), w0(), n0()] {
            r.verify_axioms().unwrap();
        }
        assert_eq!(w0().len(), 6);
        assert_eq!(n0().len(), 9);
    }

    #[test]
    fn currents() {
        let names = |r: &FusionRing| r.simple_currents().iter().map(|&i| r.name(i).to_string()).collect::<Vec<_>>();
        assert_eq!(names(&w0()), ["A0", "A1", "A2"]);
        assert_eq!(names(&n0()), ["A0", "A1", "A2"]);
        for m in 1..6 {
            let r = affine_ring(m).unwrap();
            assert_eq!(r.simple_currents(), vec![0, m as usize]);
        }
    }

    #[test]
    fn weights_and_sigma() {
        let w = w0();
        assert_eq!(w.labels[w.index("B1").unwrap()].weight, rational(1, 15));
        let n = n0();
        let s = sigma(&n);
        assert_eq!(n.name(s[n.index("A1").unwrap()]), "A2");
        assert_eq!(n.name(s[n.index("B0").unwrap()]), "B0");
        n.verify_involution(&s).unwrap();
    }

    #[test]
    fn corrupted_constant_fails() {
        let mut n = n0();
        let (b, c) = (n.index("B0").unwrap(), n.index("C0").unwrap());
        n.set_constant(b, b, c, 2);
        assert!(n.verify_axioms().is_err());
    }

    #[test]
    fn tensor_square_of_b0c0() {
        let u = u0();
        assert_eq!(u.len(), 54);
        assert_eq!(u.name(u.unit), "(A0,A0)");
        let x = u.index("(B0,C0)").unwrap();
        assert_eq!(u.product(x, x).len(), 6);
    }

    #[test]
    fn fixtures_match_builtin() {
        use crate::fixtures::{N0_RING, W0_RING};
        assert_eq!(FusionRing::from_text(W0_RING).unwrap(), w0());
        assert_eq!(FusionRing::from_text(N0_RING).unwrap(), n0());
    }

    #[test]
    fn text_round_trip() {
        let w = w0();
        assert_eq!(FusionRing::from_text(&w.to_text()).unwrap(), w);
        assert!(FusionRing::from_text("label X 0 - Y").is_err());
    }
}
