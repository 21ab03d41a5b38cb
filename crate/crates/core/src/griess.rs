//! Finite-dimensional commutative algebras with an invariant form, the two
//! presentations of the weight-2 algebra, conformal vectors and Miyamoto
//! involutions.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{pairing, Matrix};
use crate::poly::{solve_rational, Poly, Solutions, TermOrder};
use crate::scalar::{rational, Scalar};

pub type Vector = Vec<Scalar>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GriessAlgebra {
    pub names: Vec<String>,
    products: Vec<Vec<Option<Vector>>>,
    pub form: Matrix,
    pub omega: Vector,
}

impl GriessAlgebra {
    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn basis(&self, i: usize) -> Vector {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[i] = Scalar::one();
        v
    }

    pub fn product_entry(&self, i: usize, j: usize) -> Option<&Vector> {
        self.products[i][j].as_ref()
    }

    pub fn set_product(&mut self, i: usize, j: usize, v: Vector) {
        self.products[i][j] = Some(v.clone());
        self.products[j][i] = Some(v);
    }

    pub fn missing_products(&self) -> Vec<(usize, usize)> {
        let n = self.dim();
        (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).filter(|&(i, j)| self.products[i][j].is_none()).collect()
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let p = self.products[i][j].as_ref().ok_or_else(|| {
                    Error::Unsupported(format!("product {}*{} is not known", self.names[i], self.names[j]))
                })?;
                let ab = a * b;
                for (o, c) in out.iter_mut().zip(p) {
                    *o += &(&ab * c);
                }
            }
        }
        Ok(out)
    }

    pub fn pair(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        pairing(&self.form, x, y).expect("dimensions agree")
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mul(&self, x: &[Scalar]) -> Result<Matrix> {
        let cols = (0..self.dim()).map(|j| self.mul(x, &self.basis(j))).collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(&cols, self.dim())
    }

    /// `⟨a·b, c⟩ = ⟨b, a·c⟩` for all basis triples; the first failure is named.
    pub fn verify_invariance(&self) -> std::result::Result<(), String> {
        let n = self.dim();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let ab = self.mul(&self.basis(a), &self.basis(b)).map_err(|e| e.to_string())?;
                    let ac = self.mul(&self.basis(a), &self.basis(c)).map_err(|e| e.to_string())?;
                    if self.pair(&ab, &self.basis(c)) != self.pair(&self.basis(b), &ac) {
                        return Err(format!("({}, {}, {})", self.names[a], self.names[b], self.names[c]));
                    }
                }
            }
        }
        Ok(())
    }

    /// `ω·x = 2x` on every basis vector.
    pub fn verify_virasoro(&self) -> std::result::Result<(), String> {
        for i in 0..self.dim() {
            let b = self.basis(i);
            let got = self.mul(&self.omega, &b).map_err(|e| e.to_string())?;
            if got != scale(&b, &Scalar::from_int(2)) {
                return Err(self.names[i].clone());
            }
        }
        Ok(())
    }

    /// The same algebra on a new basis, given by coordinates in the old one.
    pub fn change_basis(&self, names: &[&str], vectors: &[Vector]) -> Result<GriessAlgebra> {
        let n = self.dim();
        if vectors.len() != n || names.len() != n {
            return Err(Error::Shape("a basis needs one vector per dimension".into()));
        }
        let m = Matrix::from_columns(vectors, n)?;
        let inv = m.inverse().map_err(|_| Error::NonInvertible("new basis is dependent".into()))?;
        let mut products = vec![vec![None; n]; n];
        let mut form = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                products[i][j] = Some(inv.apply(&self.mul(&vectors[i], &vectors[j])?)?);
                form[(i, j)] = self.pair(&vectors[i], &vectors[j]);
            }
        }
        Ok(GriessAlgebra {
            names: names.iter().map(|s| s.to_string()).collect(),
            products,
            form,
            omega: inv.apply(&self.omega)?,
        })
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        let mut omega_terms = None;
        let mut muls = Vec::new();
        let mut forms = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |why: &str| Error::Parse(format!("line {}: {why}: `{}`", lineno + 1, raw.trim()));
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks[0] {
                "basis" => names = toks[1..].iter().map(|s| s.to_string()).collect(),
                "omega" => omega_terms = Some(toks[1..].iter().map(|s| s.to_string()).collect::<Vec<_>>()),
                "mul" => {
                    if toks.len() < 5 || toks[3] != ":" {
                        return Err(bad("expected `mul x y : terms`"));
                    }
                    muls.push((
                        toks[1].to_string(),
                        toks[2].to_string(),
                        toks[4..].iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                        lineno,
                    ));
                }
                "form" => {
                    if toks.len() != 4 {
                        return Err(bad("expected `form x y value`"));
                    }
                    let v: Scalar = toks[3].parse().map_err(|_| bad("bad scalar"))?;
                    forms.push((toks[1].to_string(), toks[2].to_string(), v));
                }
                _ => return Err(bad("unknown directive")),
            }
        }
        let n = names.len();
        if n == 0 {
            return Err(Error::Parse("missing basis line".into()));
        }
        let idx = |s: &str| {
            names.iter().position(|x| x == s).ok_or_else(|| Error::Parse(format!("unknown basis element `{s}`")))
        };
        let combo = |toks: &[String]| -> Result<Vector> {
            let mut v = vec![Scalar::zero(); n];
            if toks.len() == 1 && toks[0] == "0" {
                return Ok(v);
            }
            if !toks.len().is_multiple_of(2) {
                return Err(Error::Parse(format!("terms must pair a scalar with a name: {}", toks.join(" "))));
            }
            for pair in toks.chunks(2) {
                let c: Scalar = pair[0].parse()?;
                v[idx(&pair[1])?] += &c;
            }
            Ok(v)
        };
        let omega = combo(&omega_terms.ok_or_else(|| Error::Parse("missing omega line".into()))?)?;
        let mut products: Vec<Vec<Option<Vector>>> = vec![vec![None; n]; n];
        for (a, b, terms, lineno) in muls {
            let (i, j) = (idx(&a)?, idx(&b)?);
            let v = combo(&terms)?;
            if products[i][j].as_ref().is_some_and(|old| *old != v) {
                return Err(Error::Parse(format!("line {}: conflicting product {a}*{b}", lineno + 1)));
            }
            products[i][j] = Some(v.clone());
            products[j][i] = Some(v);
        }
        let mut form = Matrix::zeros(n, n);
        for (a, b, v) in forms {
            let (i, j) = (idx(&a)?, idx(&b)?);
            form[(i, j)] = v.clone();
            form[(j, i)] = v;
        }
        Ok(GriessAlgebra { names, products, form, omega })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "basis {}", self.names.join(" "));
        let _ = writeln!(s, "omega {}", self.terms(&self.omega));
        for i in 0..self.dim() {
            for j in i..self.dim() {
                if let Some(p) = &self.products[i][j] {
                    let _ = writeln!(s, "mul {} {} : {}", self.names[i], self.names[j], self.terms(p));
                }
            }
        }
        for i in 0..self.dim() {
            for j in i..self.dim() {
                if !self.form[(i, j)].is_zero() {
                    let _ = writeln!(s, "form {} {} {}", self.names[i], self.names[j], self.form[(i, j)]);
                }
            }
        }
        s
    }

    fn terms(&self, v: &[Scalar]) -> String {
        let parts: Vec<String> =
            v.iter().zip(&self.names).filter(|(c, _)| !c.is_zero()).map(|(c, n)| format!("{c} {n}")).collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" ")
        }
    }

    /// Coordinates as rationals, when every structure constant is rational.
    fn rational_table(&self) -> Result<Vec<Vec<Vec<BigRational>>>> {
        let n = self.dim();
        let mut out = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let p = self.products[i][j].as_ref().ok_or_else(|| Error::Unsupported("incomplete table".into()))?;
                out[i][j] = p
                    .iter()
                    .map(|c| c.to_rational().ok_or_else(|| Error::Unsupported("irrational structure constant".into())))
                    .collect::<Result<_>>()?;
            }
        }
        Ok(out)
    }
}

pub fn scale(v: &[Scalar], c: &Scalar) -> Vector {
    v.iter().map(|x| x * c).collect()
}

pub fn add(x: &[Scalar], y: &[Scalar]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn sub(x: &[Scalar], y: &[Scalar]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn q(n: i64, d: i64) -> Scalar {
    Scalar::frac(n, d)
}

/// `k = 9√6/64`, the positive root of `k² = 3⁵/2¹¹`.
pub fn k_scalar() -> Scalar {
    &Scalar::frac(9, 64) * &Scalar::sqrt6()
}

/// Images of `e, a, b, c` in the basis `w3, w4, v0, v1`.
pub fn p2_in_p1() -> Vec<Vector> {
    let e = vec![q(5, 32), q(7, 16), q(-9, 16), q(0, 1)];
    let a = scale(&[q(27, 32), q(9, 16), q(9, 16), q(0, 1)], &q(105, 256));
    let b = scale(&[q(-45, 8), q(21, 4), q(9, 4), q(0, 1)], &q(9, 256));
    let c = vec![q(0, 1), q(0, 1), q(0, 1), k_scalar()];
    vec![e, a, b, c]
}

/// Checks that the linear map with the given basis images is an isometric
/// algebra map carrying `ω` to `ω`.
pub fn verify_isomorphism(
    src: &GriessAlgebra,
    dst: &GriessAlgebra,
    images: &[Vector],
) -> std::result::Result<(), String> {
    let n = src.dim();
    let map = Matrix::from_columns(images, dst.dim()).map_err(|e| e.to_string())?;
    let t = |v: &[Scalar]| map.apply(v).expect("dimensions agree");
    for i in 0..n {
        for j in i..n {
            let (x, y) = (src.basis(i), src.basis(j));
            let lhs = t(&src.mul(&x, &y).map_err(|e| e.to_string())?);
            let rhs = dst.mul(&t(&x), &t(&y)).map_err(|e| e.to_string())?;
            if lhs != rhs {
                return Err(format!("product {}*{}", src.names[i], src.names[j]));
            }
            if src.pair(&x, &y) != dst.pair(&t(&x), &t(&y)) {
                return Err(format!("pairing <{},{}>", src.names[i], src.names[j]));
            }
        }
    }
    if t(&src.omega) != dst.omega {
        return Err("omega".into());
    }
    Ok(())
}

/// Both presentations with the open product of the first filled in from the
/// second, plus the rational basis `ω, e, f, f′`.
#[derive(Clone, Debug)]
pub struct Presentations {
    pub p1: GriessAlgebra,
    pub p2: GriessAlgebra,
    pub p3: GriessAlgebra,
    /// Columns: `e, a, b, c` in P1 coordinates.
    pub p2_to_p1: Vec<Vector>,
    /// Columns: `ω, e, f, f′` in P2 coordinates.
    pub p3_to_p2: Vec<Vector>,
    pub k: Scalar,
    pub derived: Vec<String>,
}

pub fn build_presentations(p1_text: &str, p2_text: &str) -> Result<Presentations> {
    let mut p1 = GriessAlgebra::from_text(p1_text)?;
    let p2 = GriessAlgebra::from_text(p2_text)?;
    if p1.dim() != 4 || p2.dim() != 4 || !p2.missing_products().is_empty() {
        return Err(Error::Inconsistent("expected two 4-dimensional tables, the second complete".into()));
    }
    let images = p2_in_p1();
    let k = k_scalar();
    let mut derived = Vec::new();
    let v1 = p1.index("v1").ok_or_else(|| Error::Parse("basis element v1 missing".into()))?;
    let c = p2.index("c").ok_or_else(|| Error::Parse("basis element c missing".into()))?;
    if p1.product_entry(v1, v1).is_none() {
        // v1·v1 = (c·c)/k², transported along the basis map
        let map = Matrix::from_columns(&images, 4)?;
        let cc = map.apply(&p2.mul(&p2.basis(c), &p2.basis(c))?)?;
        let k2 = &k * &k;
        let v = cc.iter().map(|x| x.checked_div(&k2)).collect::<Result<Vec<_>>>()?;
        derived.push(format!("mul v1 v1 : {}", p1.terms(&v)));
        p1.set_product(v1, v1, v);
    }
    verify_isomorphism(&p2, &p1, &images).map_err(|w| Error::Inconsistent(format!("basis map fails at {w}")))?;
    let e = p2.basis(0);
    let cvec = p2.basis(c);
    let head = vec![q(13, 256), q(1, 1), q(1, 1), q(0, 1)];
    let f = add(&head, &cvec);
    let fp = sub(&head, &cvec);
    let p3_to_p2 = vec![p2.omega.clone(), e, f, fp];
    let p3 = p2.change_basis(&["omega", "e", "f", "f'"], &p3_to_p2)?;
    Ok(Presentations { p1, p2, p3, p2_to_p1: images, p3_to_p2, k, derived })
}

impl Presentations {
    /// P1 coordinates to P3 coordinates.
    pub fn p1_to_p3(&self, v: &[Scalar]) -> Result<Vector> {
        let m21 = Matrix::from_columns(&self.p2_to_p1, 4)?;
        let m32 = Matrix::from_columns(&self.p3_to_p2, 4)?;
        m32.solve(&m21.solve(v)?)
    }

    /// `ω³` and `ω⁴` in P3 coordinates.
    pub fn virasoro_parts(&self) -> Result<(Vector, Vector)> {
        Ok((self.p1_to_p3(&self.p1.basis(0))?, self.p1_to_p3(&self.p1.basis(1))?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConformalVector {
    pub coords: Vec<BigRational>,
    pub charge: BigRational,
}

impl ConformalVector {
    pub fn as_vector(&self) -> Vector {
        self.coords.iter().cloned().map(Scalar::from_rational).collect()
    }
}

/// `2⟨x,x⟩`, for `x` with `x·x = 2x`.
pub fn central_charge_of(alg: &GriessAlgebra, x: &[Scalar]) -> Result<BigRational> {
    let xx = alg.mul(x, x)?;
    if xx != scale(x, &Scalar::from_int(2)) {
        return Err(Error::InvalidInput("not a conformal vector".into()));
    }
    (&Scalar::from_int(2) * &alg.pair(x, x)).to_rational().ok_or_else(|| Error::Unsupported("irrational charge".into()))
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub quotient_dimension: Option<usize>,
    pub solutions_with_zero: usize,
    pub basis_size: usize,
    pub irrational_roots: usize,
}

impl Certificate {
    pub fn complete(&self) -> bool {
        self.irrational_roots == 0 && self.quotient_dimension == Some(self.solutions_with_zero)
    }
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub vectors: Vec<ConformalVector>,
    pub certificate: Certificate,
}

/// All nonzero `x` with `x·x = 2x`, over a rational table. The count of
/// distinct solutions, zero included, is compared with the dimension of
/// the quotient ring: equality means none were missed and all are simple.
pub fn conformal_vectors(alg: &GriessAlgebra) -> Result<Classification> {
    let n = alg.dim();
    let table = alg.rational_table()?;
    let vars: Vec<Poly> = (0..n).map(|i| Poly::var(n, TermOrder::GrevLex, i)).collect();
    let mut system = Vec::new();
    for k in 0..n {
        let mut p = vars[k].scale(&rational(-2, 1));
        for i in 0..n {
            for j in 0..n {
                let c = &table[i][j][k];
                if !c.is_zero() {
                    p = p.add(&vars[i].mul(&vars[j]).scale(c));
                }
            }
        }
        system.push(p);
    }
    let sols: Solutions = solve_rational(&system);
    let certificate = Certificate {
        quotient_dimension: sols.quotient_dimension,
        solutions_with_zero: sols.points.len(),
        basis_size: sols.basis_size,
        irrational_roots: sols.irrational.len(),
    };
    let mut vectors = Vec::new();
    for pt in sols.points {
        if pt.iter().all(Zero::is_zero) {
            continue;
        }
        let v: Vector = pt.iter().cloned().map(Scalar::from_rational).collect();
        vectors.push(ConformalVector { charge: central_charge_of(alg, &v)?, coords: pt });
    }
    vectors.sort_by(|a, b| a.charge.cmp(&b.charge).then_with(|| a.coords.cmp(&b.coords)));
    Ok(Classification { vectors, certificate })
}

/// Pairs each vector with `ω − x`; `None` where the complement is zero.
pub fn complement_pairs(alg: &GriessAlgebra, vectors: &[ConformalVector]) -> Result<Vec<(usize, Option<usize>)>> {
    let mut out = Vec::new();
    for (i, x) in vectors.iter().enumerate() {
        let y = sub(&alg.omega, &x.as_vector());
        if y.iter().all(Scalar::is_zero) {
            out.push((i, None));
            continue;
        }
        let j = vectors
            .iter()
            .position(|v| v.as_vector() == y)
            .ok_or_else(|| Error::Inconsistent(format!("complement of vector {i} is missing")))?;
        out.push((i, Some(j)));
    }
    Ok(out)
}

pub const MIYAMOTO_SPECTRUM: [(i64, i64); 4] = [(2, 1), (0, 1), (1, 2), (1, 16)];

/// Identity on the `2, 0, 1/2` eigenspaces of `x·`, negation on `1/16`.
pub fn miyamoto(alg: &GriessAlgebra, x: &[Scalar]) -> Result<Matrix> {
    let n = alg.dim();
    let l = alg.left_mul(x)?;
    let mut cols = Vec::new();
    let mut signs = Vec::new();
    for (num, den) in MIYAMOTO_SPECTRUM {
        let shifted = l.sub(&Matrix::identity(n).scale(&q(num, den)))?;
        for v in shifted.kernel() {
            cols.push(v);
            signs.push(if (num, den) == (1, 16) { -1 } else { 1 });
        }
    }
    if cols.len() != n {
        return Err(Error::InvalidInput("spectrum of x· is not within {2, 0, 1/2, 1/16}".into()));
    }
    let p = Matrix::from_columns(&cols, n)?;
    let mut d = Matrix::zeros(n, n);
    for (i, s) in signs.iter().enumerate() {
        d[(i, i)] = Scalar::from_int(*s);
    }
    let tau = p.mul(&d)?.mul(&p.inverse()?)?;
    verify_automorphism(alg, &tau).map_err(|w| Error::Inconsistent(format!("involution fails at {w}")))?;
    Ok(tau)
}

pub fn verify_automorphism(alg: &GriessAlgebra, g: &Matrix) -> std::result::Result<(), String> {
    let images: Vec<Vector> = (0..alg.dim()).map(|j| g.column(j)).collect();
    verify_isomorphism(alg, alg, &images)
}

#[derive(Clone, Debug)]
pub struct GroupData {
    pub elements: Vec<Matrix>,
    /// `table[i][j]` is the index of `elements[i] · elements[j]`.
    pub table: Vec<Vec<usize>>,
}

impl GroupData {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (0..n).all(|j| self.table[i][j] == self.table[j][i]))
    }

    /// Permutation induced on a list of vectors, one per element.
    pub fn permutations(&self, vectors: &[Vector]) -> Result<Vec<Vec<usize>>> {
        self.elements
            .iter()
            .map(|g| {
                vectors
                    .iter()
                    .map(|v| {
                        let w = g.apply(v)?;
                        vectors
                            .iter()
                            .position(|u| *u == w)
                            .ok_or_else(|| Error::Inconsistent("orbit leaves the set".into()))
                    })
                    .collect()
            })
            .collect()
    }
}

pub const GROUP_BOUND: usize = 1000;

pub fn automorphism_group(generators: &[Matrix]) -> Result<GroupData> {
    let n = generators.first().map_or(0, Matrix::rows);
    let mut elements = vec![Matrix::identity(n)];
    let mut frontier = vec![0usize];
    while let Some(i) = frontier.pop() {
        for g in generators {
            let h = elements[i].mul(g)?;
            if !elements.contains(&h) {
                if elements.len() >= GROUP_BOUND {
                    return Err(Error::Unsupported(format!("group exceeds {GROUP_BOUND} elements")));
                }
                elements.push(h);
                frontier.push(elements.len() - 1);
            }
        }
    }
    let mut table = vec![vec![0; elements.len()]; elements.len()];
    for i in 0..elements.len() {
        for j in 0..elements.len() {
            let p = elements[i].mul(&elements[j])?;
            table[i][j] =
                elements.iter().position(|x| *x == p).ok_or_else(|| Error::Inconsistent("not closed".into()))?;
        }
    }
    Ok(GroupData { elements, table })
}

/// Common fixed space of the generators.
pub fn fixed_subspace(generators: &[Matrix]) -> Result<Vec<Vector>> {
    let n = generators.first().map_or(0, Matrix::rows);
    let mut rows = Vec::new();
    for g in generators {
        rows.extend(g.sub(&Matrix::identity(n))?.to_rows());
    }
    Ok(Matrix::from_rows(rows)?.kernel())
}

/// Products listed in the coordinates of a given basis.
pub fn product_table(alg: &GriessAlgebra) -> BTreeMap<(String, String), Vector> {
    let mut out = BTreeMap::new();
    for i in 0..alg.dim() {
        for j in i..alg.dim() {
            if let Some(p) = alg.product_entry(i, j) {
                out.insert((alg.names[i].clone(), alg.names[j].clone()), p.clone());
            }
        }
    }
    out
}

pub fn rational_vector(v: &[Scalar]) -> Option<Vec<BigRational>> {
    v.iter().map(Scalar::to_rational).collect()
}

pub fn is_identity(m: &Matrix) -> bool {
    *m == Matrix::identity(m.rows())
}

pub fn power(m: &Matrix, e: u32) -> Result<Matrix> {
    let mut out = Matrix::identity(m.rows());
    for _ in 0..e {
        out = out.mul(m)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{GRIESS_P1, GRIESS_P2};

    fn pres() -> Presentations {
        build_presentations(GRIESS_P1, GRIESS_P2).unwrap()
    }

    #[test]
    fn k_squared() {
        assert_eq!(&k_scalar() * &k_scalar(), Scalar::frac(243, 2048));
    }

    #[test]
    fn tables_are_invariant() {
        let p = pres();
        p.p1.verify_invariance().unwrap();
        p.p2.verify_invariance().unwrap();
        p.p3.verify_invariance().unwrap();
        p.p1.verify_virasoro().unwrap();
        p.p2.verify_virasoro().unwrap();
        assert_eq!(p.derived.len(), 1);
    }

    #[test]
    fn p3_is_rational_with_expected_products() {
        let p = pres();
        let a = &p.p3;
        assert_eq!(a.omega, vec![q(1, 1), q(0, 1), q(0, 1), q(0, 1)]);
        let ef = a.mul(&a.basis(1), &a.basis(2)).unwrap();
        assert_eq!(ef, vec![q(-105, 512), q(9, 32), q(9, 32), q(7, 32)]);
        assert_eq!(a.pair(&a.basis(1), &a.basis(2)), q(13, 1024));
    }

    #[test]
    fn corrupted_entry_breaks_isomorphism() {
        let bad = GRIESS_P1.replace("mul v0 v1 : 10/9 v1", "mul v0 v1 : 11/9 v1");
        assert!(build_presentations(&bad, GRIESS_P2).is_err());
    }

    #[test]
    fn text_round_trip() {
        let p = pres();
        assert_eq!(GriessAlgebra::from_text(&p.p2.to_text()).unwrap(), p.p2);
    }

    #[test]
    fn fifteen_conformal_vectors() {
        let p = pres();
        let c = conformal_vectors(&p.p3).unwrap();
        assert_eq!(c.vectors.len(), 15);
        assert!(c.certificate.complete(), "{:?}", c.certificate);
        let charges: Vec<String> = c.vectors.iter().map(|v| v.charge.to_string()).collect();
        assert_eq!(charges.iter().filter(|s| *s == "1/2").count(), 3);
        assert_eq!(charges.iter().filter(|s| *s == "58/35").count(), 1);
    }

    #[test]
    fn miyamoto_of_e() {
        let p = pres();
        let a = &p.p3;
        let te = miyamoto(a, &a.basis(1)).unwrap();
        assert_eq!(te.apply(&a.basis(2)).unwrap(), a.basis(3));
        assert_eq!(te.apply(&a.omega).unwrap(), a.omega);
    }
}
