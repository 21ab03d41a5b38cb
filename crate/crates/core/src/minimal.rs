//! Unitary Virasoro minimal models `L(c_m, h_{r,s})`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{rational, Scalar};
use crate::series::BiSeries;

/// `c_m = 1 - 6/((m+2)(m+3))` for `m >= 1`.
pub fn central_charge(m: u32) -> Result<BigRational> {
    if m < 1 {
        return Err(Error::InvalidInput("minimal series index must be at least 1".into()));
    }
    Ok(series_charge(m))
}

// m = 0 is the trivial c = 0 theory, reached by the coset at level zero.
fn series_charge(m: u32) -> BigRational {
    let m = m as i64;
    rational(1, 1) - rational(6, (m + 2) * (m + 3))
}

/// A Kac-table entry, stored in canonical form `1 <= s <= r <= m+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MinimalLabel {
    m: u32,
    r: u32,
    s: u32,
}

impl MinimalLabel {
    /// Accepts any in-range `(r, s)` and folds it by the Kac symmetry.
    ///
    /// `m = 0` is allowed and has the single label `(1, 1)` of weight zero.
    pub fn new(m: u32, r: u32, s: u32) -> Result<Self> {
        if r < 1 || r > m + 1 || s < 1 || s > m + 2 {
            return Err(Error::InvalidInput(format!("(r,s)=({r},{s}) out of range for m={m}")));
        }
        let (r, s) = if s <= r { (r, s) } else { (m + 2 - r, m + 3 - s) };
        Ok(MinimalLabel { m, r, s })
    }

    pub fn vacuum(m: u32) -> Self {
        MinimalLabel { m, r: 1, s: 1 }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn central_charge(&self) -> BigRational {
        series_charge(self.m)
    }

    pub fn highest_weight(&self) -> BigRational {
        kac_weight(self.m, self.r, self.s)
    }

    /// All canonical labels of the model.
    pub fn all(m: u32) -> Vec<MinimalLabel> {
        let mut out = Vec::new();
        for r in 1..=m + 1 {
            for s in 1..=r.min(m + 2) {
                out.push(MinimalLabel { m, r, s });
            }
        }
        out
    }

    /// Looks up the label with the given top weight.
    pub fn with_weight(m: u32, h: &BigRational) -> Result<Self> {
        Self::all(m)
            .into_iter()
            .find(|l| &l.highest_weight() == h)
            .ok_or_else(|| Error::InvalidInput(format!("no weight {h} at m={m}")))
    }
}

impl fmt::Display for MinimalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.central_charge(), self.highest_weight())
    }
}

fn kac_weight(m: u32, r: u32, s: u32) -> BigRational {
    let (m, r, s) = (m as i64, r as i64, s as i64);
    let t = r * (m + 3) - s * (m + 2);
    rational(t * t - 1, 4 * (m + 2) * (m + 3))
}

/// `h^{(m)}_{r,s}` for in-range `(r, s)`.
pub fn highest_weight(m: u32, r: u32, s: u32) -> Result<BigRational> {
    if m < 1 {
        return Err(Error::InvalidInput("minimal series index must be at least 1".into()));
    }
    Ok(MinimalLabel::new(m, r, s)?.highest_weight())
}

/// Fusion product of two modules of the same model.
pub fn wang_fusion(a: &MinimalLabel, b: &MinimalLabel) -> Result<Vec<MinimalLabel>> {
    if a.m != b.m {
        return Err(Error::InvalidInput(format!("fusion across m={} and m={}", a.m, b.m)));
    }
    let m = a.m;
    let imax = a.r.min(b.r).min(m + 2 - a.r).min(m + 2 - b.r);
    let jmax = a.s.min(b.s).min(m + 3 - a.s).min(m + 3 - b.s);
    let dr = a.r.abs_diff(b.r);
    let ds = a.s.abs_diff(b.s);
    let mut out = Vec::new();
    for i in 1..=imax {
        for j in 1..=jmax {
            out.push(MinimalLabel::new(m, dr + 2 * i - 1, ds + 2 * j - 1)?);
        }
    }
    out.sort();
    Ok(out)
}

/// Normalised character `q^{-h} ch L(c_m, h)` shifted back to offset `h`,
/// from the alternating sum over the embedding diagram.
pub fn vir_character(label: &MinimalLabel, order: usize) -> BiSeries {
    let p = label.m as i64 + 2;
    let pp = label.m as i64 + 3;
    let (r, s) = (label.r as i64, label.s as i64);
    let h = label.highest_weight();
    let mut coeffs = vec![0i64; order];
    let level = |t: i64| -> Option<usize> {
        // ((t^2 - 1)/(4pp') - h) is an integer level
        let e = rational(t * t - 1, 4 * p * pp) - &h;
        debug_assert!(e.is_integer());
        let n = e.to_integer().to_i64()?;
        (n >= 0 && (n as usize) < order).then_some(n as usize)
    };
    // both exponent families grow like k^2, so a symmetric window suffices
    let bound = (order as i64) + 2;
    for k in -bound..=bound {
        let base = 2 * p * pp * k;
        if let Some(n) = level(base + r * pp - s * p) {
            coeffs[n] += 1;
        }
        if let Some(n) = level(base + r * pp + s * p) {
            coeffs[n] -= 1;
        }
    }
    BiSeries::from_ints(h, &coeffs).mul(&BiSeries::partitions(order))
}

/// Graded dimensions of a character, lowest level first.
pub fn dimensions(ch: &BiSeries) -> Vec<BigInt> {
    ch.at_z_one().into_iter().map(|c| c.to_rational().map(|q| q.to_integer()).unwrap_or_else(BigInt::zero)).collect()
}

/// Weight of a label as an exact scalar, for reports.
pub fn weight_scalar(label: &MinimalLabel) -> Scalar {
    Scalar::from_rational(label.highest_weight())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charges() {
        assert_eq!(central_charge(1).unwrap(), rational(1, 2));
        assert_eq!(central_charge(3).unwrap(), rational(4, 5));
        assert_eq!(central_charge(4).unwrap(), rational(6, 7));
        assert!(central_charge(0).is_err());
    }

    #[test]
    fn weights() {
        assert_eq!(highest_weight(3, 1, 1).unwrap(), rational(0, 1));
        assert_eq!(highest_weight(3, 4, 3).unwrap(), rational(2, 3));
        assert_eq!(highest_weight(4, 5, 1).unwrap(), rational(5, 1));
        assert!(highest_weight(3, 5, 1).is_err());
    }

    #[test]
    fn canonical_form() {
        let a = MinimalLabel::new(3, 1, 3).unwrap();
        assert_eq!((a.r(), a.s()), (4, 3));
        assert_eq!(a, MinimalLabel::new(3, 4, 3).unwrap());
    }

    #[test]
    fn ising_fusion() {
        let sigma = MinimalLabel::new(1, 2, 2).unwrap();
        let got = wang_fusion(&sigma, &sigma).unwrap();
        let eps = MinimalLabel::with_weight(1, &rational(1, 2)).unwrap();
        assert_eq!(got, vec![MinimalLabel::vacuum(1), eps]);
    }

    #[test]
    fn potts_two_thirds_squared() {
        let x = MinimalLabel::with_weight(3, &rational(2, 3)).unwrap();
        let hs: Vec<_> = wang_fusion(&x, &x).unwrap().iter().map(|l| l.highest_weight()).collect();
        assert_eq!(hs, vec![rational(0, 1), rational(3, 1), rational(2, 3)]);
    }

    #[test]
    fn ising_vacuum_character() {
        let ch = vir_character(&MinimalLabel::vacuum(1), 5);
        let want: Vec<BigInt> = [1, 0, 1, 1, 2].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(dimensions(&ch), want);
    }

    #[test]
    fn trivial_model_character() {
        let ch = vir_character(&MinimalLabel::vacuum(0), 12);
        assert_eq!(ch, BiSeries::one(12));
    }

    #[test]
    fn lowest_terms() {
        let l = MinimalLabel::with_weight(3, &rational(3, 1)).unwrap();
        let ch = vir_character(&l, 4);
        assert_eq!(ch.offset(), &rational(3, 1));
        assert_eq!(dimensions(&ch)[0], BigInt::from(1));
        for m in 1..6 {
            assert_eq!(dimensions(&vir_character(&MinimalLabel::vacuum(m), 3))[1], BigInt::from(0));
        }
    }
}
