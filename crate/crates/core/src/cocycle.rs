//! Symmetric 2-cocycles on finite abelian groups and their splitting.

use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scalar::{rational, rational_nth_root, Scalar};

/// `exp(2πi·phase)·modulus` with `phase ∈ [0,1)` and `modulus > 0`.
#[derive(Clone, PartialEq, Eq)]
pub struct Phased {
    phase: BigRational,
    modulus: Scalar,
}

fn frac_part(q: &BigRational) -> BigRational {
    q - q.floor()
}

impl Phased {
    pub fn new(phase: BigRational, modulus: Scalar) -> Result<Self> {
        if modulus.is_zero() {
            return Err(Error::InvalidInput("cocycle values must be nonzero".into()));
        }
        let (phase, modulus) =
            if modulus.is_negative() { (phase + rational(1, 2), -modulus) } else { (phase, modulus) };
        Ok(Phased { phase: frac_part(&phase), modulus })
    }

    pub fn one() -> Self {
        Phased { phase: BigRational::zero(), modulus: Scalar::one() }
    }

    /// The root of unity `exp(2πi·k/n)`.
    pub fn root_of_unity(k: i64, n: i64) -> Self {
        Phased { phase: frac_part(&rational(k, n)), modulus: Scalar::one() }
    }

    pub fn from_scalar(s: Scalar) -> Result<Self> {
        Self::new(BigRational::zero(), s)
    }

    pub fn phase(&self) -> &BigRational {
        &self.phase
    }

    pub fn modulus(&self) -> &Scalar {
        &self.modulus
    }

    pub fn is_one(&self) -> bool {
        self.phase.is_zero() && self.modulus.is_one()
    }

    pub fn mul(&self, other: &Phased) -> Phased {
        Phased { phase: frac_part(&(&self.phase + &other.phase)), modulus: &self.modulus * &other.modulus }
    }

    pub fn inv(&self) -> Phased {
        Phased { phase: frac_part(&-self.phase.clone()), modulus: self.modulus.inv().expect("modulus is positive") }
    }

    pub fn pow(&self, n: u32) -> Phased {
        Phased { phase: frac_part(&(&self.phase * BigRational::from_integer(n.into()))), modulus: self.modulus.pow(n) }
    }

    /// Principal `n`-th root; the modulus must have an exact rational root.
    pub fn principal_root(&self, n: u32) -> Result<Phased> {
        let m = self
            .modulus
            .to_rational()
            .and_then(|q| rational_nth_root(&q, n))
            .ok_or_else(|| Error::Unsupported(format!("no exact {n}-th root of {}", self.modulus)))?;
        Ok(Phased { phase: &self.phase / BigRational::from_integer(n.into()), modulus: Scalar::from_rational(m) })
    }
}

impl fmt::Display for Phased {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.phase.is_zero() {
            write!(f, "{}", self.modulus)
        } else if self.modulus.is_one() {
            write!(f, "e({})", self.phase)
        } else {
            write!(f, "e({})*{}", self.phase, self.modulus)
        }
    }
}

impl fmt::Debug for Phased {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite abelian group `Z_{n1} × ... × Z_{nk}`, elements in mixed radix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    pub moduli: Vec<u32>,
}

impl AbelianGroup {
    pub fn new(moduli: Vec<u32>) -> Result<Self> {
        if moduli.contains(&0) {
            return Err(Error::InvalidInput("cyclic factors must have positive order".into()));
        }
        Ok(AbelianGroup { moduli })
    }

    pub fn order(&self) -> usize {
        self.moduli.iter().map(|&n| n as usize).product()
    }

    pub fn element(&self, mut idx: usize) -> Vec<u32> {
        let mut out = vec![0; self.moduli.len()];
        for (slot, &n) in out.iter_mut().zip(&self.moduli).rev() {
            *slot = (idx % n as usize) as u32;
            idx /= n as usize;
        }
        out
    }

    pub fn index(&self, a: &[u32]) -> usize {
        a.iter().zip(&self.moduli).fold(0, |acc, (&x, &n)| acc * n as usize + (x % n) as usize)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.element(a), self.element(b));
        let sum: Vec<u32> = x.iter().zip(&y).zip(&self.moduli).map(|((p, q), n)| (p + q) % n).collect();
        self.index(&sum)
    }

    pub fn generator(&self, i: usize) -> usize {
        let mut e = vec![0; self.moduli.len()];
        e[i] = 1;
        self.index(&e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    pub group: AbelianGroup,
    values: Vec<Phased>,
}

impl Cocycle {
    pub fn from_fn(group: AbelianGroup, f: impl Fn(&[u32], &[u32]) -> Phased) -> Self {
        let n = group.order();
        let mut values = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                values.push(f(&group.element(a), &group.element(b)));
            }
        }
        Cocycle { group, values }
    }

    pub fn trivial(group: AbelianGroup) -> Self {
        Self::from_fn(group, |_, _| Phased::one())
    }

    pub fn value(&self, a: usize, b: usize) -> &Phased {
        &self.values[a * self.group.order() + b]
    }

    pub fn set_value(&mut self, a: usize, b: usize, v: Phased) {
        let n = self.group.order();
        self.values[a * n + b] = v;
    }

    /// Normalisation, symmetry and the cocycle identity, exhaustively.
    pub fn validate(&self) -> Result<()> {
        let n = self.group.order();
        let g = &self.group;
        for a in 0..n {
            if !self.value(0, a).is_one() {
                return Err(Error::InvalidInput(format!("c(0,{:?}) is not 1", g.element(a))));
            }
            for b in 0..n {
                if self.value(a, b) != self.value(b, a) {
                    return Err(Error::InvalidInput(format!(
                        "c is not symmetric at {:?},{:?}",
                        g.element(a),
                        g.element(b)
                    )));
                }
                for c in 0..n {
                    let lhs = self.value(a, g.add(b, c)).mul(self.value(b, c));
                    let rhs = self.value(a, b).mul(self.value(g.add(a, b), c));
                    if lhs != rhs {
                        return Err(Error::InvalidInput(format!(
                            "cocycle identity fails at {:?},{:?},{:?}",
                            g.element(a),
                            g.element(b),
                            g.element(c)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `δt(α,β) = t(α+β)·t(α)^{-1}·t(β)^{-1}`.
    pub fn coboundary(group: AbelianGroup, t: &[Phased]) -> Self {
        let n = group.order();
        let mut values = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                values.push(t[group.add(a, b)].mul(&t[a].inv()).mul(&t[b].inv()));
            }
        }
        Cocycle { group, values }
    }

    pub fn mul(&self, other: &Cocycle) -> Result<Cocycle> {
        if self.group != other.group {
            return Err(Error::Shape("cocycles over different groups".into()));
        }
        let values = self.values.iter().zip(&other.values).map(|(x, y)| x.mul(y)).collect();
        Ok(Cocycle { group: self.group.clone(), values })
    }
}

/// Finds `t` with `c = δt`, or reports why the input is unusable.
pub fn split_cocycle(c: &Cocycle) -> Result<Vec<Phased>> {
    c.validate()?;
    let g = &c.group;
    let n = g.order();
    let mut gens = Vec::new();
    for (i, &ord) in g.moduli.iter().enumerate() {
        let gi = g.generator(i);
        // t(k g) = ∏_{j<k} c(j g, g) · t(g)^k and t(ord·g) = t(0) = 1
        let mut acc = Phased::one();
        let mut x = gi;
        for _ in 1..ord {
            acc = acc.mul(c.value(x, gi));
            x = g.add(x, gi);
        }
        gens.push(acc.inv().principal_root(ord)?);
    }
    let mut t = vec![Phased::one(); n];
    for x in 1..n {
        let elt = g.element(x);
        let i = elt.iter().rposition(|&v| v != 0).expect("nonzero element");
        let gi = g.generator(i);
        let mut prev = elt.clone();
        prev[i] -= 1;
        let p = g.index(&prev);
        t[x] = c.value(p, gi).mul(&t[p]).mul(&gens[i]);
    }
    for a in 0..n {
        for b in 0..n {
            let lhs = t[g.add(a, b)].mul(&t[a].inv()).mul(&t[b].inv());
            if &lhs != c.value(a, b) {
                return Err(Error::Inconsistent(format!("splitting fails at {:?},{:?}", g.element(a), g.element(b))));
            }
        }
    }
    Ok(t)
}

/// A random symmetric cocycle: a coboundary of random root-of-unity times
/// rational values, times a random symmetric bicharacter.
pub fn random_symmetric_cocycle(group: &AbelianGroup, rng: &mut ChaCha8Rng) -> Cocycle {
    let n = group.order();
    let lcm = group.moduli.iter().fold(1i64, |acc, &m| acc.lcm(&(m as i64)));
    let mut t = vec![Phased::one(); n];
    for slot in t.iter_mut().skip(1) {
        let k = rng.gen_range(0..2 * lcm);
        let num = rng.gen_range(1..=9i64) * if rng.gen_bool(0.5) { -1 } else { 1 };
        let den = rng.gen_range(1..=9i64);
        *slot = Phased::root_of_unity(k, 2 * lcm).mul(&Phased::from_scalar(Scalar::frac(num, den)).expect("nonzero"));
    }
    let k = group.moduli.len();
    let mut b = vec![vec![0i64; k]; k];
    for i in 0..k {
        for j in i..k {
            let v = rng.gen_range(0..lcm);
            b[i][j] = v;
            b[j][i] = v;
        }
    }
    let moduli = group.moduli.clone();
    let bichar = Cocycle::from_fn(group.clone(), |x, y| {
        let mut phase = BigRational::zero();
        for i in 0..k {
            for j in 0..k {
                let d = (moduli[i] as i64).gcd(&(moduli[j] as i64));
                phase += rational(b[i][j] * x[i] as i64 * y[j] as i64, d);
            }
        }
        Phased::new(phase, Scalar::one()).expect("unit modulus")
    });
    Cocycle::coboundary(group.clone(), &t).mul(&bichar).expect("same group")
}

/// Outcome of a batch of random splittings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitBatch {
    pub cases: usize,
    pub failures: Vec<String>,
}

/// Splits `cases` random cocycles spread round-robin over the given groups.
pub fn split_random_batch(groups: &[AbelianGroup], cases: usize, seed: u64) -> SplitBatch {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for i in 0..cases {
        let g = &groups[i % groups.len()];
        let c = random_symmetric_cocycle(g, &mut rng);
        if let Err(e) = split_cocycle(&c) {
            failures.push(format!("case {i} over {:?}: {e}", g.moduli));
        }
    }
    SplitBatch { cases, failures }
}

pub fn standard_groups() -> Vec<AbelianGroup> {
    [vec![2], vec![3], vec![2, 2], vec![6]]
        .into_iter()
        .map(|m| AbelianGroup::new(m).expect("positive orders"))
        .collect()
}
