//! Truncated power series in `q` whose coefficients are Laurent polynomials
//! in a second variable `z`.
//!
//! A series stores a rational offset `q^δ` and the coefficients of
//! `q^{δ+n}` for `0 <= n < order`. Two series can be combined when their
//! offsets differ by an integer.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A finite Laurent polynomial `Σ c_k z^k`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Laurent {
    low: i64,
    coeffs: Vec<Scalar>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(power: i64, c: Scalar) -> Self {
        Laurent { low: power, coeffs: vec![c] }.trimmed()
    }

    pub fn from_coeffs(low: i64, coeffs: Vec<Scalar>) -> Self {
        Laurent { low, coeffs }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, power: i64) -> Scalar {
        let i = power - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            Scalar::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Nonzero terms as `(power, coefficient)`, lowest power first.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.low + i as i64, c))
    }

    /// Value at `z = 1`.
    pub fn at_one(&self) -> Scalar {
        self.coeffs.iter().cloned().sum()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }.trimmed()
    }

    /// Substitutes `z -> z^{-1}`.
    pub fn reflect(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Laurent { low: -self.high(), coeffs }.trimmed()
    }

    fn add_scaled_into(&mut self, other: &Laurent, sign: bool) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = if sign { other.clone() } else { -other.clone() };
            return;
        }
        let low = self.low.min(other.low);
        let high = self.high().max(other.high());
        if low < self.low {
            let pad = (self.low - low) as usize;
            self.coeffs.splice(0..0, std::iter::repeat_n(Scalar::zero(), pad));
            self.low = low;
        }
        let len = (high - low + 1) as usize;
        if self.coeffs.len() < len {
            self.coeffs.resize(len, Scalar::zero());
        }
        for (p, c) in other.terms() {
            let slot = &mut self.coeffs[(p - low) as usize];
            if sign {
                *slot += c;
            } else {
                *slot -= c;
            }
        }
        *self = std::mem::take(self).trimmed();
    }

    /// Exact division; fails unless `divisor` divides `self` in Q(√6)[z, z^{-1}].
    pub fn div_exact(&self, divisor: &Laurent) -> Result<Laurent> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Laurent::zero());
        }
        let d = &divisor.coeffs;
        let lead_inv = d[d.len() - 1].inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() < d.len() {
            return Err(Error::NonInvertible("Laurent remainder is nonzero".into()));
        }
        let qlen = rem.len() - d.len() + 1;
        let mut quot = vec![Scalar::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &rem[i + d.len() - 1];
            if top.is_zero() {
                continue;
            }
            let f = top * &lead_inv;
            for (j, dj) in d.iter().enumerate() {
                rem[i + j] -= &(&f * dj);
            }
            quot[i] = f;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonInvertible("Laurent remainder is nonzero".into()));
        }
        Ok(Laurent { low: self.low - divisor.low, coeffs: quot }.trimmed())
    }
}

impl<'a> Add<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn add(self, o: &Laurent) -> Laurent {
        let mut r = self.clone();
        r.add_scaled_into(o, true);
        r
    }
}

impl<'a> Sub<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn sub(self, o: &Laurent) -> Laurent {
        let mut r = self.clone();
        r.add_scaled_into(o, false);
        r
    }
}

impl<'a> Mul<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn mul(self, o: &Laurent) -> Laurent {
        if self.is_zero() || o.is_zero() {
            return Laurent::zero();
        }
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        Laurent { low: self.low + o.low, coeffs }.trimmed()
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent { low: self.low, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|(p, c)| format!("{c}z^{p}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A coefficient that differs between two series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub q_power: BigRational,
    pub z_power: i64,
    pub left: Scalar,
    pub right: Scalar,
}

/// Truncated series `Σ_{n<order} T_n(z) q^{offset+n}`.
#[derive(Clone, PartialEq, Eq)]
pub struct BiSeries {
    offset: BigRational,
    terms: Vec<Laurent>,
}

fn integer_gap(a: &BigRational, b: &BigRational) -> Result<i64> {
    let d = a - b;
    if !d.is_integer() {
        return Err(Error::Shape(format!("series offsets {a} and {b} differ by a non-integer")));
    }
    d.to_integer().to_i64().ok_or_else(|| Error::Shape("offset gap too large".into()))
}

impl BiSeries {
    pub fn zero(offset: BigRational, order: usize) -> Self {
        BiSeries { offset, terms: vec![Laurent::zero(); order] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(BigRational::zero(), order);
        if order > 0 {
            s.terms[0] = Laurent::constant(Scalar::one());
        }
        s
    }

    pub fn from_terms(offset: BigRational, terms: Vec<Laurent>) -> Self {
        BiSeries { offset, terms }
    }

    /// A z-free series from integer coefficients.
    pub fn from_ints(offset: BigRational, coeffs: &[i64]) -> Self {
        let terms = coeffs.iter().map(|&c| Laurent::constant(Scalar::from_int(c))).collect();
        BiSeries { offset, terms }
    }

    pub fn offset(&self) -> &BigRational {
        &self.offset
    }

    pub fn order(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> &[Laurent] {
        &self.terms
    }

    pub fn term(&self, level: usize) -> &Laurent {
        &self.terms[level]
    }

    pub fn term_mut(&mut self, level: usize) -> &mut Laurent {
        &mut self.terms[level]
    }

    /// Exclusive upper bound on the q-exponents this series knows exactly.
    pub fn frontier(&self) -> BigRational {
        &self.offset + BigRational::from_integer(BigInt::from(self.terms.len()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(Laurent::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut s = self.clone();
        s.terms.truncate(order);
        s
    }

    /// Multiplies by `q^shift`.
    pub fn shift_q(&self, shift: &BigRational) -> Self {
        BiSeries { offset: &self.offset + shift, terms: self.terms.clone() }
    }

    /// Multiplies by `z^power`.
    pub fn shift_z(&self, power: i64) -> Self {
        let terms =
            self.terms.iter().map(|t| Laurent { low: t.low + power, coeffs: t.coeffs.clone() }.trimmed()).collect();
        BiSeries { offset: self.offset.clone(), terms }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        BiSeries { offset: self.offset.clone(), terms: self.terms.iter().map(|t| t.scale(c)).collect() }
    }

    /// Moves the offset down by `by` levels, padding with zeros and dropping
    /// the same number of levels at the top so the frontier is preserved.
    fn lowered(&self, by: usize, order: usize) -> Vec<Laurent> {
        let mut out = vec![Laurent::zero(); order];
        for (i, t) in self.terms.iter().enumerate() {
            if i + by < order {
                out[i + by] = t.clone();
            }
        }
        out
    }

    fn combine(&self, other: &Self, sign: bool) -> Result<Self> {
        let gap = integer_gap(&other.offset, &self.offset)?;
        let offset = if gap >= 0 { self.offset.clone() } else { other.offset.clone() };
        let frontier = std::cmp::min(self.frontier(), other.frontier());
        let order = (&frontier - &offset).to_integer().to_i64().unwrap_or(0).max(0) as usize;
        let (sa, sb) = if gap >= 0 { (0usize, gap as usize) } else { ((-gap) as usize, 0usize) };
        let mut terms = self.lowered(sa, order);
        let rhs = other.lowered(sb, order);
        for (t, r) in terms.iter_mut().zip(rhs.iter()) {
            t.add_scaled_into(r, sign);
        }
        Ok(BiSeries { offset, terms })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.combine(other, true)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, false)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut terms = vec![Laurent::zero(); order];
        for (i, a) in self.terms.iter().take(order).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.terms.iter().take(order - i).enumerate() {
                if !b.is_zero() {
                    let p = a * b;
                    terms[i + j].add_scaled_into(&p, true);
                }
            }
        }
        BiSeries { offset: &self.offset + &other.offset, terms }
    }

    /// Exact quotient `self / divisor`; the lowest coefficient of the divisor
    /// must divide every intermediate remainder.
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        let order = self.order().min(divisor.order());
        let g0 = divisor
            .terms
            .first()
            .filter(|t| !t.is_zero())
            .ok_or_else(|| Error::NonInvertible("divisor has zero lowest term".into()))?;
        let mut out: Vec<Laurent> = Vec::with_capacity(order);
        for n in 0..order {
            let mut acc = self.terms[n].clone();
            for k in 1..=n {
                let gk = &divisor.terms[k];
                if !gk.is_zero() && !out[n - k].is_zero() {
                    acc.add_scaled_into(&(gk * &out[n - k]), false);
                }
            }
            out.push(acc.div_exact(g0)?);
        }
        Ok(BiSeries { offset: &self.offset - &divisor.offset, terms: out })
    }

    /// Graded dimensions: each coefficient evaluated at `z = 1`.
    pub fn at_z_one(&self) -> Vec<Scalar> {
        self.terms.iter().map(Laurent::at_one).collect()
    }

    /// Coefficient of `q^exponent z^power`, or `None` beyond the frontier.
    pub fn coefficient(&self, exponent: &BigRational, power: i64) -> Option<Scalar> {
        let d = exponent - &self.offset;
        if !d.is_integer() {
            return Some(Scalar::zero());
        }
        if d.is_negative() {
            return Some(Scalar::zero());
        }
        let n = d.to_integer().to_usize()?;
        self.terms.get(n).map(|t| t.coeff(power))
    }

    /// First coefficient (lowest q, then lowest z) where the two series
    /// disagree below their common frontier.
    pub fn first_mismatch(&self, other: &Self) -> Result<Option<Mismatch>> {
        let diff = self.try_sub(other)?;
        for (n, t) in diff.terms.iter().enumerate() {
            if let Some((p, _)) = t.terms().next() {
                let q = &diff.offset + BigRational::from_integer(BigInt::from(n));
                let left = self.coefficient(&q, p).unwrap_or_default();
                let right = other.coefficient(&q, p).unwrap_or_default();
                return Ok(Some(Mismatch { q_power: q, z_power: p, left, right }));
            }
        }
        Ok(None)
    }

    /// Reciprocal of the Euler function, `Π_{n>=1} (1-q^n)^{-1}`, i.e. the
    /// partition generating function.
    pub fn partitions(order: usize) -> Self {
        let mut p = vec![BigInt::zero(); order];
        if order > 0 {
            p[0] = BigInt::one();
        }
        for part in 1..order {
            for n in part..order {
                let add = p[n - part].clone();
                p[n] += add;
            }
        }
        let terms =
            p.into_iter().map(|c| Laurent::constant(Scalar::from_rational(BigRational::from_integer(c)))).collect();
        BiSeries { offset: BigRational::zero(), terms }
    }
}

impl fmt::Debug for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q^{} [", self.offset)?;
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t:?}")?;
        }
        write!(f, "] + O(q^{})", self.frontier())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    fn geometric(order: usize) -> BiSeries {
        BiSeries::from_ints(BigRational::zero(), &vec![1; order])
    }

    #[test]
    fn one_minus_q_times_geometric() {
        let a = BiSeries::from_ints(BigRational::zero(), &[1, -1, 0, 0, 0, 0]);
        assert_eq!(a.mul(&geometric(6)), BiSeries::one(6));
    }

    #[test]
    fn reciprocal_of_one_minus_q() {
        let a = BiSeries::from_ints(BigRational::zero(), &[1, -1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(BiSeries::one(8).div(&a).unwrap(), geometric(8));
    }

    #[test]
    fn laurent_identity_quotient() {
        let d = Laurent::from_coeffs(-1, vec![Scalar::from_int(-1), Scalar::zero(), Scalar::one()]);
        let s = BiSeries::from_terms(BigRational::zero(), vec![d.clone(), Laurent::zero()]);
        assert_eq!(s.div(&s).unwrap(), BiSeries::one(2));
        // (z^2 - z^-2)/(z - z^-1) = z + z^-1
        let n = Laurent::from_coeffs(-2, {
            let mut v = vec![Scalar::zero(); 5];
            v[0] = Scalar::from_int(-1);
            v[4] = Scalar::one();
            v
        });
        let q = n.div_exact(&d).unwrap();
        assert_eq!(q, Laurent::from_coeffs(-1, vec![Scalar::one(), Scalar::zero(), Scalar::one()]));
    }

    #[test]
    fn zero_lowest_term_rejected() {
        let g = BiSeries::from_ints(BigRational::zero(), &[0, 1, 0]);
        assert!(matches!(BiSeries::one(3).div(&g), Err(Error::NonInvertible(_))));
        let n = Laurent::monomial(0, Scalar::one());
        let d = Laurent::from_coeffs(0, vec![Scalar::one(), Scalar::one()]);
        assert!(n.div_exact(&d).is_err());
    }

    #[test]
    fn alignment_of_integer_shifted_offsets() {
        let a = BiSeries::from_ints(rational(1, 3), &[1, 2, 3]);
        let b = BiSeries::from_ints(rational(4, 3), &[5, 7, 11]);
        let s = a.try_add(&b).unwrap();
        assert_eq!(s.offset(), &rational(1, 3));
        assert_eq!(s.at_z_one(), vec![Scalar::from_int(1), Scalar::from_int(7), Scalar::from_int(10)]);
        let c = BiSeries::from_ints(rational(1, 2), &[1]);
        assert!(a.try_add(&c).is_err());
    }

    #[test]
    fn partition_numbers() {
        let p = BiSeries::partitions(10).at_z_one();
        let want = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30];
        assert_eq!(p, want.iter().map(|&x| Scalar::from_int(x)).collect::<Vec<_>>());
    }

    #[test]
    fn mismatch_is_located() {
        let a = BiSeries::from_ints(rational(1, 2), &[1, 0, 3]);
        let b = BiSeries::from_ints(rational(1, 2), &[1, 0, 4]);
        let m = a.first_mismatch(&b).unwrap().unwrap();
        assert_eq!(m.q_power, rational(5, 2));
        assert_eq!(m.left, Scalar::from_int(3));
        assert!(a.first_mismatch(&a).unwrap().is_none());
    }
}
