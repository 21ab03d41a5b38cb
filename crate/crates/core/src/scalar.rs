//! Exact arithmetic in the quadratic field Q(√6).
//!
//! Every structure constant that shows up in the Griess algebra of the S3
//! VOA lives in this field: the only irrational number is the normalising
//! scalar of the τ_e-odd basis vector, whose square is 3^5/2^11.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An element `rat + rad·√6` of Q(√6).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    rat: BigRational,
    rad: BigRational,
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Scalar {
    pub fn new(rat: BigRational, rad: BigRational) -> Self {
        Scalar { rat, rad }
    }

    pub fn from_rational(rat: BigRational) -> Self {
        Scalar { rat, rad: BigRational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::from_rational(rational(n, d))
    }

    /// √6 itself.
    pub fn sqrt6() -> Self {
        Scalar { rat: BigRational::zero(), rad: BigRational::one() }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rat
    }

    pub fn radical_part(&self) -> &BigRational {
        &self.rad
    }

    pub fn is_rational(&self) -> bool {
        self.rad.is_zero()
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.rat.clone())
    }

    /// Galois conjugate `a − b√6`.
    pub fn conjugate(&self) -> Self {
        Scalar { rat: self.rat.clone(), rad: -self.rad.clone() }
    }

    /// Field norm `a² − 6b²`, which is zero only for zero.
    pub fn norm(&self) -> BigRational {
        &self.rat * &self.rat - rational(6, 1) * &self.rad * &self.rad
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Self::from_rational(self.rat.recip()));
        }
        let n = self.norm();
        let c = self.conjugate();
        Ok(Scalar { rat: c.rat / &n, rad: c.rad / n })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Exact sign of the real number `a + b√6`.
    pub fn signum(&self) -> Ordering {
        let sa = self.rat.cmp(&BigRational::zero());
        let sb = self.rad.cmp(&BigRational::zero());
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (a, b) if a == b => a,
            (a, _) => {
                // opposite signs: compare a² with 6b²
                let lhs = &self.rat * &self.rat;
                let rhs = rational(6, 1) * &self.rad * &self.rad;
                match lhs.cmp(&rhs) {
                    Ordering::Greater => a,
                    Ordering::Less => a.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Approximate value, for display and interval seeding only.
    pub fn to_f64(&self) -> f64 {
        self.rat.to_f64().unwrap_or(f64::NAN) + self.rad.to_f64().unwrap_or(f64::NAN) * 6f64.sqrt()
    }

    /// A square root inside Q(√6) of a nonnegative rational, if one exists.
    ///
    /// Succeeds when `q` or `q/6` is the square of a rational; the positive
    /// root is returned.
    pub fn sqrt_of_rational(q: &BigRational) -> Option<Self> {
        if q.is_negative() {
            return None;
        }
        if let Some(r) = rational_sqrt(q) {
            return Some(Self::from_rational(r));
        }
        let r = rational_sqrt(&(q / rational(6, 1)))?;
        Some(Scalar { rat: BigRational::zero(), rad: r })
    }
}

/// Exact square root of a nonnegative rational, when it is a perfect square.
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    rational_nth_root(q, 2)
}

/// Exact `n`-th root of a positive rational, when it exists.
pub fn rational_nth_root(q: &BigRational, n: u32) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let num = q.numer().nth_root(n);
    let den = q.denom().nth_root(n);
    if num.pow(n) == *q.numer() && den.pow(n) == *q.denom() {
        Some(BigRational::new(num, den))
    } else {
        None
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::default()
    }
    fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.rad.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::from_int(1)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::from_rational(q)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        if self.is_rational() && o.is_rational() {
            return Scalar::from_rational(&self.rat + &o.rat);
        }
        Scalar { rat: &self.rat + &o.rat, rad: &self.rad + &o.rad }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        if self.is_rational() && o.is_rational() {
            return Scalar::from_rational(&self.rat - &o.rat);
        }
        Scalar { rat: &self.rat - &o.rat, rad: &self.rad - &o.rad }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        if self.is_rational() {
            if o.is_rational() {
                return Scalar::from_rational(&self.rat * &o.rat);
            }
            return Scalar { rat: &self.rat * &o.rat, rad: &self.rat * &o.rad };
        }
        if o.is_rational() {
            return Scalar { rat: &self.rat * &o.rat, rad: &self.rad * &o.rat };
        }
        Scalar {
            rat: &self.rat * &o.rat + rational(6, 1) * &self.rad * &o.rad,
            rad: &self.rat * &o.rad + &self.rad * &o.rat,
        }
    }
}

/// Panics on division by zero; use [`Scalar::checked_div`] for a fallible form.
impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, o: &Scalar) -> Scalar {
        self.checked_div(o).expect("division by zero in Q(√6)")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { rat: -self.rat, rad: -self.rad }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        self.rat += &o.rat;
        if !o.rad.is_zero() {
            self.rad += &o.rad;
        }
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, o: Scalar) {
        *self += &o;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        self.rat -= &o.rat;
        if !o.rad.is_zero() {
            self.rad -= &o.rad;
        }
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, o: Scalar) {
        *self -= &o;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = &*self * o;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |mut a, b| {
            a += &b;
            a
        })
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |a, b| a * b)
    }
}

fn fmt_rat(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Serialised as `p/q`, `p/q*r6` or `p/q+r/s*r6`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rat.is_zero(), self.rad.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rat(&self.rat)),
            (true, false) => write!(f, "{}*r6", fmt_rat(&self.rad)),
            (false, false) => {
                let sign = if self.rad.is_negative() { "-" } else { "+" };
                write!(f, "{}{}{}*r6", fmt_rat(&self.rat), sign, fmt_rat(&self.rad.abs()))
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rat(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    if s.is_empty() {
        return Err(bad());
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(body) = s.strip_suffix("*r6") else {
            return Ok(Scalar::from_rational(parse_rat(&s)?));
        };
        // split `a±b` at the last sign that is not the leading one
        let split = body.char_indices().skip(1).filter(|&(_, c)| c == '+' || c == '-').map(|(i, _)| i).last();
        match split {
            Some(i) => {
                let rat = parse_rat(&body[..i])?;
                let rad_str = &body[i..];
                let rad = parse_rat(rad_str.trim_start_matches('+'))?;
                Ok(Scalar { rat, rad })
            }
            None => Ok(Scalar { rat: BigRational::zero(), rad: parse_rat(body)? }),
        }
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(s("1/2") + s("1/3"), s("5/6"));
        assert_eq!((Scalar::one() + Scalar::sqrt6()) * (Scalar::one() - Scalar::sqrt6()), s("-5"));
        let k = s("9/64*r6");
        assert_eq!(k.pow(2), s("243/2048"));
        assert_eq!(Scalar::sqrt_of_rational(&rational(243, 2048)), Some(k));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(Scalar::one().checked_div(&Scalar::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn parse_and_print() {
        for text in ["0", "-3", "7/9", "1/2*r6", "-1/2*r6", "3/4+5/7*r6", "-3/4-1*r6"] {
            assert_eq!(s(text).to_string().parse::<Scalar>().unwrap(), s(text));
        }
        assert_eq!(s("3/4-5/7*r6").to_string(), "3/4-5/7*r6");
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
    }

    #[test]
    fn sign_of_mixed_values() {
        assert!(s("5/2-1*r6").is_positive()); // 2.5 > 2.449
        assert!(s("12/5-1*r6").is_negative());
        assert!(s("-5/2+1*r6").is_negative());
        assert_eq!(Scalar::zero().signum(), Ordering::Equal);
    }
}
