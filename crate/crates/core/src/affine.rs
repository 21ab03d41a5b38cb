//! Integrable highest-weight modules of affine sl2 and the coset branching
//! rules between them and the unitary minimal models.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::minimal::{vir_character, MinimalLabel};
use crate::scalar::{rational, Scalar};
use crate::series::{BiSeries, Laurent, Mismatch};

/// `L(m, j)`: level `m`, top component the `(j+1)`-dimensional sl2 module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineLabel {
    pub m: u32,
    pub j: u32,
}

impl AffineLabel {
    pub fn new(m: u32, j: u32) -> Result<Self> {
        if j > m {
            return Err(Error::InvalidInput(format!("L({m},{j}) needs j <= m")));
        }
        Ok(AffineLabel { m, j })
    }

    /// Conformal weight of the top component, `j(j+2)/(4(m+2))`.
    pub fn top_weight(&self) -> BigRational {
        let (m, j) = (self.m as i64, self.j as i64);
        rational(j * (j + 2), 4 * (m + 2))
    }
}

impl fmt::Display for AffineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.m, self.j)
    }
}

pub fn affine_central_charge(m: u32) -> Result<BigRational> {
    if m < 1 {
        return Err(Error::InvalidInput("level must be at least 1".into()));
    }
    Ok(rational(3 * m as i64, m as i64 + 2))
}

pub fn fz_fusion(a: &AffineLabel, b: &AffineLabel) -> Result<Vec<AffineLabel>> {
    if a.m != b.m {
        return Err(Error::InvalidInput(format!("fusion across levels {} and {}", a.m, b.m)));
    }
    let lo = (a.j + b.j).saturating_sub(a.m);
    let hi = a.j.min(b.j);
    let mut out: Vec<AffineLabel> = (lo..=hi).map(|i| AffineLabel { m: a.m, j: a.j + b.j - 2 * i }).collect();
    out.sort();
    Ok(out)
}

/// `Θ_{n,k} = Σ_l q^{(2kl+n)^2/(4k)} z^{2kl+n}`, stored from offset `n^2/(4k)`.
fn theta(n: i64, k: i64, order: usize) -> BiSeries {
    let offset = rational(n * n, 4 * k);
    let mut terms = vec![Laurent::zero(); order];
    let bound = (order as f64 / k as f64).sqrt() as i64 + 2;
    for l in -bound..=bound {
        let t = 2 * k * l + n;
        let level = rational(t * t, 4 * k) - &offset;
        let Some(lv) = level.to_integer().to_i64() else { continue };
        if lv >= 0 && (lv as usize) < order {
            let slot = &mut terms[lv as usize];
            *slot = &*slot + &Laurent::monomial(t, Scalar::one());
        }
    }
    BiSeries::from_terms(offset, terms)
}

/// Two-variable character `q^{h_j} Σ dim(weight, level) z^weight q^level`,
/// `z` tracking the eigenvalue of the Cartan element.
pub fn affine_character(a: &AffineLabel, order: usize) -> Result<BiSeries> {
    let k = a.m as i64 + 2;
    let j = a.j as i64;
    let num = theta(j + 1, k, order).try_sub(&theta(-j - 1, k, order))?;
    let den = theta(1, 2, order).try_sub(&theta(-1, 2, order))?;
    let ch = num.div(&den)?;
    // the quotient carries q^{h - c/24}; undo the vacuum energy
    let shift = a.top_weight() - ch.offset();
    Ok(ch.shift_q(&shift))
}

/// The summands of `L(1,ε) ⊗ L(m,n)` as a coset module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchingRule {
    pub eps: u32,
    pub m: u32,
    pub n: u32,
    pub outputs: Vec<(MinimalLabel, AffineLabel)>,
}

/// Branching rule; `m = 0` is allowed and gives the trivial coset.
pub fn gko_branch(eps: u32, m: u32, n: u32) -> Result<BranchingRule> {
    if eps > 1 || n > m {
        return Err(Error::InvalidInput(format!("branching needs eps in {{0,1}} and n <= m, got ({eps},{m},{n})")));
    }
    let outputs = (0..=m + 1)
        .filter(|s| s % 2 == (n + eps) % 2)
        .map(|s| Ok((MinimalLabel::new(m, n + 1, s + 1)?, AffineLabel::new(m + 1, s)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(BranchingRule { eps, m, n, outputs })
}

/// Character identity for one rule; `None` means every coefficient agrees.
pub fn verify_branch(rule: &BranchingRule, order: usize) -> Result<Option<Mismatch>> {
    let lhs = affine_character(&AffineLabel::new(1, rule.eps)?, order)?
        .mul(&affine_character(&AffineLabel::new(rule.m, rule.n)?, order)?);
    let mut rhs: Option<BiSeries> = None;
    for (vir, aff) in &rule.outputs {
        let term = vir_character(vir, order).mul(&affine_character(aff, order)?);
        rhs = Some(match rhs {
            None => term,
            Some(acc) => acc.try_add(&term)?,
        });
    }
    let rhs = rhs.ok_or_else(|| Error::InvalidInput("empty branching rule".into()))?;
    lhs.first_mismatch(&rhs)
}

/// A summand `L(4/5,h3) ⊗ L(6/7,h4) ⊗ L(5,t)` of a two-step branching.
pub type ChainKey = (MinimalLabel, MinimalLabel, AffineLabel);

/// Decomposes `L(3,n) ⊗ L(1,ε1) ⊗ L(1,ε2)` by branching twice.
pub fn compose_chain(n: u32, eps1: u32, eps2: u32) -> Result<BTreeMap<ChainKey, u32>> {
    let mut out = BTreeMap::new();
    for (v3, a4) in gko_branch(eps1, 3, n)?.outputs {
        for (v4, a5) in gko_branch(eps2, 4, a4.j)?.outputs {
            *out.entry((v3, v4, a5)).or_insert(0) += 1;
        }
    }
    Ok(out)
}

/// Checks `ch L(3,n)·ch L(1,ε1)·ch L(1,ε2) = Σ mult·χ_{h3}·χ_{h4}·ch L(5,t)`.
pub fn verify_chain_characters(n: u32, eps1: u32, eps2: u32, order: usize) -> Result<Option<Mismatch>> {
    let lhs = affine_character(&AffineLabel::new(3, n)?, order)?
        .mul(&affine_character(&AffineLabel::new(1, eps1)?, order)?)
        .mul(&affine_character(&AffineLabel::new(1, eps2)?, order)?);
    let mut rhs: Option<BiSeries> = None;
    for ((v3, v4, a5), mult) in compose_chain(n, eps1, eps2)? {
        let term = vir_character(&v3, order)
            .mul(&vir_character(&v4, order))
            .mul(&affine_character(&a5, order)?)
            .scale(&Scalar::from_int(mult as i64));
        rhs = Some(match rhs {
            None => term,
            Some(acc) => acc.try_add(&term)?,
        });
    }
    lhs.first_mismatch(&rhs.expect("branching is never empty"))
}

/// A displayed decomposition: a sum of triple products and the blocks it
/// should split into, each block a list of `(h3, h4)` weights at level-5
/// index `t`.
#[derive(Clone, Debug)]
pub struct ChainDisplay {
    pub name: &'static str,
    pub sources: Vec<(u32, u32, u32)>,
    pub blocks: Vec<(u32, Vec<(&'static str, &'static str, u32)>)>,
}

fn w_then_n(ws: &[&'static str], ns: &[&'static str]) -> Vec<(&'static str, &'static str, u32)> {
    let mut v = Vec::new();
    for w in ws {
        for n in ns {
            v.push((*w, *n, 1));
        }
    }
    v
}

/// The four decompositions used to build the extension and its modules.
pub fn chain_displays() -> Vec<ChainDisplay> {
    let block = |rows: &[(&'static str, &'static str)]| rows.iter().map(|&(a, b)| (a, b, 1)).collect::<Vec<_>>();
    let paired = |ws: &[&'static str], ns: &[&'static str], twisted: (&'static str, &'static str)| {
        let mut v = w_then_n(ws, ns);
        v.push((twisted.0, twisted.1, 2));
        v
    };
    vec![
        ChainDisplay {
            name: "L(3,0)xL(1,0)xL(1,0)",
            sources: vec![(0, 0, 0)],
            blocks: vec![
                (0, block(&[("0", "0"), ("3", "5"), ("2/3", "4/3")])),
                (2, block(&[("0", "5/7"), ("3", "12/7"), ("2/3", "1/21")])),
                (4, block(&[("0", "22/7"), ("3", "1/7"), ("2/3", "10/21")])),
            ],
        },
        ChainDisplay {
            name: "L(3,3)xL(1,1)xL(1,0)",
            sources: vec![(3, 1, 0)],
            blocks: vec![
                (0, block(&[("0", "5"), ("3", "0"), ("2/3", "4/3")])),
                (2, block(&[("0", "12/7"), ("3", "5/7"), ("2/3", "1/21")])),
                (4, block(&[("0", "1/7"), ("3", "22/7"), ("2/3", "10/21")])),
            ],
        },
        ChainDisplay {
            name: "T",
            sources: vec![(0, 0, 0), (3, 1, 0)],
            blocks: vec![
                (0, paired(&["0", "3"], &["0", "5"], ("2/3", "4/3"))),
                (2, paired(&["0", "3"], &["5/7", "12/7"], ("2/3", "1/21"))),
                (4, paired(&["0", "3"], &["1/7", "22/7"], ("2/3", "10/21"))),
            ],
        },
        ChainDisplay {
            name: "L(3,2)xL(1,0)xL(1,0)+L(3,1)xL(1,1)xL(1,0)",
            sources: vec![(2, 0, 0), (1, 1, 0)],
            blocks: vec![
                (0, paired(&["2/5", "7/5"], &["0", "5"], ("1/15", "4/3"))),
                (2, paired(&["2/5", "7/5"], &["5/7", "12/7"], ("1/15", "1/21"))),
                (4, paired(&["2/5", "7/5"], &["1/7", "22/7"], ("1/15", "10/21"))),
            ],
        },
    ]
}

fn parse_weight(s: &str) -> BigRational {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    BigRational::new(n.parse::<BigInt>().expect("literal"), d.parse::<BigInt>().expect("literal"))
}

impl ChainDisplay {
    pub fn expected(&self) -> Result<BTreeMap<ChainKey, u32>> {
        let mut out = BTreeMap::new();
        for (t, rows) in &self.blocks {
            for (h3, h4, mult) in rows {
                let key = (
                    MinimalLabel::with_weight(3, &parse_weight(h3))?,
                    MinimalLabel::with_weight(4, &parse_weight(h4))?,
                    AffineLabel::new(5, *t)?,
                );
                *out.entry(key).or_insert(0) += mult;
            }
        }
        Ok(out)
    }

    pub fn computed(&self) -> Result<BTreeMap<ChainKey, u32>> {
        let mut out = BTreeMap::new();
        for &(n, e1, e2) in &self.sources {
            for (k, v) in compose_chain(n, e1, e2)? {
                *out.entry(k).or_insert(0) += v;
            }
        }
        Ok(out)
    }
}

/// Outcome of checking one displayed decomposition.
#[derive(Clone, Debug)]
pub struct ChainOutcome {
    pub name: &'static str,
    pub summands_match: bool,
    pub max_multiplicity: u32,
    pub mismatch: Option<Mismatch>,
}

impl ChainOutcome {
    pub fn passed(&self) -> bool {
        self.summands_match && self.mismatch.is_none()
    }
}

pub fn verify_chain_decomposition(order: usize) -> Result<Vec<ChainOutcome>> {
    chain_displays()
        .into_iter()
        .map(|d| {
            let computed = d.computed()?;
            let mut mismatch = None;
            for &(n, e1, e2) in &d.sources {
                if let Some(m) = verify_chain_characters(n, e1, e2, order)? {
                    mismatch = Some(m);
                    break;
                }
            }
            Ok(ChainOutcome {
                name: d.name,
                summands_match: computed == d.expected()?,
                max_multiplicity: computed.values().copied().max().unwrap_or(0),
                mismatch,
            })
        })
        .collect()
}

/// Graded dimensions of a two-variable character.
pub fn graded_dimensions(ch: &BiSeries) -> Vec<BigInt> {
    ch.at_z_one().into_iter().map(|c| c.to_rational().map(|q| q.to_integer()).unwrap_or_else(BigInt::zero)).collect()
}
