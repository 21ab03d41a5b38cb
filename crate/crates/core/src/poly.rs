//! Multivariate polynomials over Q, Gröbner bases, and exact real-root
//! isolation for univariate polynomials.
//!
//! A polynomial stores its terms in a `BTreeMap` keyed by monomials that
//! carry their own term order, which makes the leading term the last entry.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::matrix::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TermOrder {
    /// Lexicographic with the first variable largest.
    Lex,
    /// Graded reverse lexicographic.
    GrevLex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mono {
    pub exps: Vec<u32>,
    order: TermOrder,
}

impl Mono {
    fn new(exps: Vec<u32>, order: TermOrder) -> Self {
        Mono { exps, order }
    }

    fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.order {
            TermOrder::Lex => self.exps.cmp(&other.exps),
            TermOrder::GrevLex => self.degree().cmp(&other.degree()).then_with(|| {
                for (a, b) in self.exps.iter().zip(&other.exps).rev() {
                    if a != b {
                        return b.cmp(a);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub type Monomial = Vec<u32>;

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    order: TermOrder,
    terms: BTreeMap<Mono, BigRational>,
}

impl Poly {
    pub fn zero(nvars: usize, order: TermOrder) -> Self {
        Poly { nvars, order, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, order: TermOrder, c: BigRational) -> Self {
        let mut p = Self::zero(nvars, order);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, order: TermOrder, i: usize) -> Self {
        let mut m = vec![0; nvars];
        m[i] = 1;
        let mut p = Self::zero(nvars, order);
        p.add_term(m, BigRational::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().map(|(m, c)| (&m.exps, c))
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let key = Mono::new(m, self.order);
        let e = self.terms.entry(key.clone()).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back().map(|(m, c)| (&m.exps, c))
    }

    /// The same polynomial under another term order.
    pub fn with_order(&self, order: TermOrder) -> Poly {
        let mut p = Poly::zero(self.nvars, order);
        for (m, c) in self.terms() {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    fn add_scaled(&mut self, other: &Poly, shift: &[u32], c: &BigRational) {
        for (m, v) in other.terms() {
            self.add_term(mono_mul(m, shift), v * c);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(other, &vec![0; self.nvars], &BigRational::one());
        out
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars, self.order);
        }
        Poly {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(other, &vec![0; self.nvars], &-BigRational::one());
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars, self.order);
        for (m, c) in other.terms() {
            out.add_scaled(self, m, c);
        }
        out
    }

    fn monic(&self) -> Poly {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        self.terms()
            .map(|(m, c)| m.iter().zip(point).fold(c.clone(), |acc, (&e, x)| acc * pow(x, e)))
            .fold(BigRational::zero(), |a, b| a + b)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .map(|(m, c)| {
                let vars: Vec<String> = m
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { format!("x{i}") } else { format!("x{i}^{e}") })
                    .collect();
                if vars.is_empty() {
                    c.to_string()
                } else {
                    format!("{c}*{}", vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn pow(x: &BigRational, e: u32) -> BigRational {
    let mut out = BigRational::one();
    for _ in 0..e {
        out *= x;
    }
    out
}

fn mono_mul(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn mono_div(b: &[u32], a: &[u32]) -> Monomial {
    b.iter().zip(a).map(|(y, x)| y - x).collect()
}

fn lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Full reduction of `f` by `basis`.
pub fn reduce(f: &Poly, basis: &[Poly]) -> Poly {
    let mut p = f.clone();
    let mut rem = Poly::zero(f.nvars, f.order);
    while let Some((m, c)) = p.leading().map(|(m, c)| (m.clone(), c.clone())) {
        let hit = basis.iter().find_map(|g| {
            let (lm, lc) = g.leading()?;
            divides(lm, &m).then(|| (g, mono_div(&m, lm), -(&c / lc)))
        });
        match hit {
            Some((g, shift, factor)) => p.add_scaled(g, &shift, &factor),
            None => {
                p.terms.remove(&Mono::new(m.clone(), p.order));
                rem.add_term(m, c);
            }
        }
    }
    rem
}

fn s_poly(f: &Poly, g: &Poly) -> Poly {
    let (fm, fc) = f.leading().expect("nonzero");
    let (gm, gc) = g.leading().expect("nonzero");
    let l = lcm(fm, gm);
    let mut out = Poly::zero(f.nvars, f.order);
    out.add_scaled(f, &mono_div(&l, fm), &fc.recip());
    out.add_scaled(g, &mono_div(&l, gm), &-gc.recip());
    out
}

/// Reduced Gröbner basis in the generators' term order, sorted by leading
/// monomial. Pairs are processed smallest lcm first.
pub fn groebner(generators: &[Poly]) -> Vec<Poly> {
    let mut basis: Vec<Poly> = generators.iter().filter(|p| !p.is_zero()).map(Poly::monic).collect();
    let Some(order) = basis.first().map(|p| p.order) else { return basis };
    let lead = |p: &Poly| p.leading().expect("nonzero").0.clone();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    loop {
        let Some(pos) = (0..pairs.len()).min_by(|&x, &y| {
            let key = |(i, j): (usize, usize)| Mono::new(lcm(&lead(&basis[i]), &lead(&basis[j])), order);
            key(pairs[x]).cmp(&key(pairs[y]))
        }) else {
            break;
        };
        let (i, j) = pairs.swap_remove(pos);
        let (a, b) = (lead(&basis[i]), lead(&basis[j]));
        // coprime leading monomials reduce to zero
        if a.iter().zip(&b).all(|(x, y)| *x == 0 || *y == 0) {
            continue;
        }
        let r = reduce(&s_poly(&basis[i], &basis[j]), &basis);
        if !r.is_zero() {
            basis.push(r.monic());
            let n = basis.len() - 1;
            for k in 0..n {
                pairs.push((k, n));
            }
        }
    }
    let mut minimal: Vec<Poly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lm = lead(g);
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let hm = lead(h);
            j != i && divides(&hm, &lm) && (hm != lm || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out: Vec<Poly> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Poly> =
                minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.clone()).collect();
            let (m, c) = minimal[i].leading().expect("nonzero");
            let mut head = Poly::zero(minimal[i].nvars, order);
            head.add_term(m.clone(), c.clone());
            head.add(&reduce(&minimal[i].sub(&head), &others)).monic()
        })
        .collect();
    out.sort_by(|a, b| Mono::new(lead(a), order).cmp(&Mono::new(lead(b), order)));
    out
}

/// Monomials not divisible by any leading monomial of `basis`, when finite.
pub fn standard_monomials(basis: &[Poly], nvars: usize) -> Option<Vec<Monomial>> {
    let leads: Vec<&Monomial> = basis.iter().map(|g| g.leading().expect("nonzero").0).collect();
    // zero-dimensional iff every variable has a pure power among the leads
    let mut bounds = Vec::new();
    for i in 0..nvars {
        let b = leads.iter().filter(|m| m.iter().enumerate().all(|(j, &e)| j == i || e == 0)).map(|m| m[i]).min()?;
        bounds.push(b);
    }
    let mut out = Vec::new();
    let mut m = vec![0u32; nvars];
    loop {
        if !leads.iter().any(|l| divides(l, &m)) {
            out.push(m.clone());
        }
        let mut i = 0;
        loop {
            if i == nvars {
                return Some(out);
            }
            m[i] += 1;
            if m[i] < bounds[i] {
                break;
            }
            m[i] = 0;
            i += 1;
        }
    }
}

/// Dense univariate polynomial, lowest degree first, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    fn lead(&self) -> &BigRational {
        self.coeffs.last().expect("nonzero polynomial")
    }

    fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead().clone();
        UniPoly::new(self.coeffs.iter().map(|c| c / &l).collect())
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("nonzero divisor");
        let mut r = self.coeffs.clone();
        let mut q = vec![BigRational::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let f = r.last().expect("nonempty") / d.lead();
            for (i, c) in d.coeffs.iter().enumerate() {
                r[k + i] -= &f * c;
            }
            q[k] = f;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (UniPoly::new(q), UniPoly::new(r))
    }

    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn squarefree(&self) -> UniPoly {
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            self.monic()
        } else {
            self.div_rem(&g).0.monic()
        }
    }

    fn sturm(&self) -> Vec<UniPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        while !seq.last().expect("nonempty").is_zero() {
            let n = seq.len();
            let r = seq[n - 2].div_rem(&seq[n - 1]).1;
            if r.is_zero() {
                break;
            }
            seq.push(UniPoly::new(r.coeffs.into_iter().map(|c| -c).collect()));
        }
        seq
    }

    /// An upper bound on the absolute value of every real root.
    fn root_bound(&self) -> BigRational {
        let l = self.lead().abs();
        BigRational::one() + self.coeffs.iter().map(|c| c.abs() / &l).max().unwrap_or_else(BigRational::zero)
    }
}

fn sign_changes(seq: &[UniPoly], x: &BigRational) -> usize {
    let signs: Vec<i8> = seq
        .iter()
        .map(|p| {
            let v = p.eval(x);
            if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            }
        })
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// A real root: exact when rational, otherwise an isolating interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealRoot {
    Rational(BigRational),
    Isolated(BigRational, BigRational),
}

/// The simplest rational in the closed interval `[a, b]`.
pub fn simplest_between(a: &BigRational, b: &BigRational) -> BigRational {
    if a.is_negative() && b.is_positive() || a.is_zero() || b.is_zero() {
        return BigRational::zero();
    }
    if b.is_negative() {
        return -simplest_between(&-b.clone(), &-a.clone());
    }
    let fl = a.floor();
    if fl == *a {
        return a.clone();
    }
    if fl.clone() + BigRational::one() <= *b {
        return fl + BigRational::one();
    }
    // both in (n, n+1): recurse on reciprocals of the fractional parts
    let inner = simplest_between(&(b - &fl).recip(), &(a - &fl).recip());
    fl + inner.recip()
}

/// All real roots of a nonzero polynomial, in increasing order. Rational
/// roots are recognised exactly: an isolating interval narrower than
/// `1/L²` (with `L` the integral leading coefficient) contains at most one
/// rational whose denominator divides `L`, and that is the simplest one.
pub fn real_roots(p: &UniPoly) -> Vec<RealRoot> {
    let f = integral(&p.squarefree());
    if f.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let seq = f.sturm();
    let bound = f.root_bound();
    let mut stack = vec![(-bound.clone(), bound)];
    let mut intervals = Vec::new();
    while let Some((a, b)) = stack.pop() {
        let n = sign_changes(&seq, &a) - sign_changes(&seq, &b);
        if n == 0 {
            continue;
        }
        if n == 1 {
            intervals.push((a, b));
            continue;
        }
        // split away from roots so that endpoints never vanish
        let mut k = 2i64;
        let mid = loop {
            let t = &a + (&b - &a) * BigRational::new(1.into(), k.into());
            if !f.eval(&t).is_zero() {
                break t;
            }
            k += 1;
        };
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    intervals.sort();
    let l = f.lead().abs();
    let width = (&l * &l).recip();
    intervals
        .into_iter()
        .map(|(mut a, mut b)| loop {
            if &b - &a < width {
                let s = simplest_between(&a, &b);
                return if f.eval(&s).is_zero() { RealRoot::Rational(s) } else { RealRoot::Isolated(a, b) };
            }
            let mid = (&a + &b) / BigRational::from_integer(2.into());
            let fa = f.eval(&a);
            let fm = f.eval(&mid);
            if fm.is_zero() {
                return RealRoot::Rational(mid);
            }
            if fa.is_positive() == fm.is_positive() {
                a = mid;
            } else {
                b = mid;
            }
        })
        .collect()
}

/// Scales to integer coefficients with content one.
fn integral(p: &UniPoly) -> UniPoly {
    let den = p.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> =
        p.coeffs.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    UniPoly::new(ints.into_iter().map(|c| BigRational::from_integer(c / &g)).collect())
}

/// Result of solving a zero-dimensional system.
#[derive(Clone, Debug)]
pub struct Solutions {
    pub points: Vec<Vec<BigRational>>,
    /// Real eigenvalues of the separating form that are not rational.
    pub irrational: Vec<RealRoot>,
    /// Dimension of the quotient ring; `None` if not zero-dimensional.
    pub quotient_dimension: Option<usize>,
    pub basis_size: usize,
}

impl Solutions {
    /// All complex solutions are found, distinct and rational.
    pub fn complete(&self) -> bool {
        self.irrational.is_empty() && self.quotient_dimension == Some(self.points.len())
    }
}

/// Coordinates of `NF(f)` on the standard monomials.
fn coordinates(f: &Poly, gb: &[Poly], standard: &[Monomial]) -> Vec<Scalar> {
    let nf = reduce(f, gb);
    let mut v = vec![Scalar::zero(); standard.len()];
    for (m, c) in nf.terms() {
        let i = standard.iter().position(|s| s == m).expect("normal forms use standard monomials");
        v[i] = Scalar::from_rational(c.clone());
    }
    v
}

/// Characteristic polynomial by the Faddeev–LeVerrier recursion.
pub fn charpoly(m: &Matrix) -> UniPoly {
    let n = m.rows();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut acc = Matrix::zeros(n, n);
    for k in 1..=n {
        let prev = Scalar::from_rational(coeffs[n - k + 1].clone());
        acc = m.mul(&acc.add(&Matrix::identity(n).scale(&prev)).expect("square")).expect("square");
        let tr: Scalar = (0..n).map(|i| acc[(i, i)].clone()).sum();
        let c = tr.to_rational().expect("rational matrix") / BigRational::from_integer(BigInt::from(k));
        coeffs[n - k] = -c;
    }
    UniPoly::new(coeffs)
}

/// Rational solutions of a zero-dimensional system. A graded basis gives
/// the quotient ring; the eigenvectors of multiplication by a separating
/// linear form are the evaluation functionals at the solutions.
pub fn solve_rational(system: &[Poly]) -> Solutions {
    let nvars = system.first().map_or(0, Poly::nvars);
    let graded: Vec<Poly> = system.iter().map(|p| p.with_order(TermOrder::GrevLex)).collect();
    let gb = groebner(&graded);
    let Some(standard) = standard_monomials(&gb, nvars) else {
        return Solutions { points: vec![], irrational: vec![], quotient_dimension: None, basis_size: gb.len() };
    };
    let dim = standard.len();
    let one = vec![0u32; nvars];
    let mut best: Option<Solutions> = None;
    for shift in 0..nvars as i64 + 3 {
        let mut form = Poly::zero(nvars, TermOrder::GrevLex);
        for i in 0..nvars {
            let weight = BigRational::from_integer(BigInt::from(1 + (i as i64 + 1) * (shift + 1)));
            form = form.add(&Poly::var(nvars, TermOrder::GrevLex, i).scale(&weight));
        }
        let cols: Vec<Vec<Scalar>> = standard
            .iter()
            .map(|m| {
                let mut mono = Poly::zero(nvars, TermOrder::GrevLex);
                mono.add_term(m.clone(), BigRational::one());
                coordinates(&form.mul(&mono), &gb, &standard)
            })
            .collect();
        let mult = Matrix::from_columns(&cols, dim).expect("square");
        let chi = charpoly(&mult);
        let roots = real_roots(&chi);
        let separating = chi.gcd(&chi.derivative()).degree() == Some(0);
        let transposed = mult.transpose();
        let unit_pos = standard.iter().position(|m| *m == one);
        let var_coords: Vec<Vec<Scalar>> =
            (0..nvars).map(|i| coordinates(&Poly::var(nvars, TermOrder::GrevLex, i), &gb, &standard)).collect();
        let mut points = Vec::new();
        let mut irrational = Vec::new();
        for r in roots {
            let RealRoot::Rational(lambda) = r else {
                irrational.push(r);
                continue;
            };
            let shifted = transposed.sub(&Matrix::identity(dim).scale(&Scalar::from_rational(lambda))).expect("square");
            for ev in shifted.kernel() {
                let Some(u) = unit_pos else { continue };
                if ev[u].is_zero() {
                    continue;
                }
                let ev: Vec<Scalar> = ev.iter().map(|x| x.checked_div(&ev[u]).expect("nonzero")).collect();
                let pt: Option<Vec<BigRational>> = var_coords
                    .iter()
                    .map(|c| c.iter().zip(&ev).map(|(a, b)| a * b).sum::<Scalar>().to_rational())
                    .collect();
                if let Some(pt) = pt {
                    points.push(pt);
                }
            }
        }
        points.retain(|pt| system.iter().all(|p| p.eval(pt).is_zero()));
        points.sort();
        points.dedup();
        let sol = Solutions { points, irrational, quotient_dimension: Some(dim), basis_size: gb.len() };
        if separating {
            return sol;
        }
        best.get_or_insert(sol);
    }
    best.expect("at least one attempt")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn univariate_roots() {
        // (x - 1/2)(x + 3)(x^2 - 2)
        let p = UniPoly::from_ints(&[6, -10, -7, 5, 2]);
        let p = UniPoly::new(p.coeffs().iter().map(|c| c * q(1, 1)).collect());
        let roots = real_roots(&p);
        assert_eq!(roots.len(), 4);
        assert!(roots.contains(&RealRoot::Rational(q(1, 2))));
        assert!(roots.contains(&RealRoot::Rational(q(-3, 1))));
        assert_eq!(roots.iter().filter(|r| matches!(r, RealRoot::Isolated(..))).count(), 2);
    }

    #[test]
    fn simplest() {
        assert_eq!(simplest_between(&q(3, 10), &q(4, 10)), q(1, 3));
        assert_eq!(simplest_between(&q(-7, 2), &q(-3, 1)), q(-3, 1));
    }

    #[test]
    fn circle_and_line() {
        // x^2 + y^2 = 1, x = y·3/4 ⇒ y = ±4/5
        let (x, y) = (Poly::var(2, TermOrder::Lex, 0), Poly::var(2, TermOrder::Lex, 1));
        let one = Poly::constant(2, TermOrder::Lex, q(1, 1));
        let f = x.mul(&x).add(&y.mul(&y)).sub(&one);
        let g = x.sub(&y.scale(&q(3, 4)));
        let s = solve_rational(&[f, g]);
        assert_eq!(s.points, vec![vec![q(-3, 5), q(-4, 5)], vec![q(3, 5), q(4, 5)]]);
        assert!(s.complete());
    }

    #[test]
    fn irrational_is_reported() {
        let x = Poly::var(1, TermOrder::Lex, 0);
        let f = x.mul(&x).sub(&Poly::constant(1, TermOrder::Lex, q(2, 1)));
        let s = solve_rational(&[f]);
        assert!(s.points.is_empty());
        assert_eq!(s.irrational.len(), 2);
        assert!(!s.complete());
    }
}
