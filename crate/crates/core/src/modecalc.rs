//! Mode calculus on the module generated by a weight-2 highest weight
//! vector, inside a VOA of moonshine type whose Griess algebra is known.
//!
//! Every weight space `M_n` is built as an explicit inner-product space.
//! It is spanned by creation modes `a_(m)`, `m <= 0`, applied to the lower
//! spaces. Inner products of spanning words are computed by moving one
//! mode across with `a_(m)† = a_(2-m)` and then commuting it to the right.
//!
//! The commutator of two weight-2 modes is
//!
//! ```text
//! [c_(k), a_(m)] = (c_(0)a)_(k+m) + k (c·a)_(k+m-1) + C(k,3) <c,a> δ_{k+m,2}
//! ```
//!
//! because `c_(2)a` lies in `V_1 = 0`. The weight-3 field is removed by
//! `(c_(0)a)_(j) = [c_(1), a_(j-1)] - (c·a)_(j-1)` when `c` is a conformal
//! vector, so that `c_(1) = L^c(0)`, and by skew symmetry otherwise.
//! `L^c(0)` on `M_n` is known exactly on Virasoro descendants. Its value
//! on the orthogonal complement, the new highest weight vectors, is the
//! unique highest weight type of that weight in the fusion closure of the
//! generators' types.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::griess::GriessAlgebra;
use crate::matrix::{pairing, Matrix};
use crate::minimal::{self, MinimalLabel};
use crate::scalar::Scalar;
use crate::series::BiSeries;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Base {
    /// A highest weight vector of the Griess algebra, by label.
    Vector(String),
    Vacuum,
}

/// `a1_(m1) a2_(m2) ... ak_(mk) base`, leftmost mode applied last.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ModeMonomial {
    pub modes: Vec<(String, i64)>,
    pub base: Base,
}

impl ModeMonomial {
    pub fn new(modes: &[(&str, i64)], base: &str) -> Self {
        ModeMonomial {
            modes: modes.iter().map(|(a, m)| (a.to_string(), *m)).collect(),
            base: Base::Vector(base.into()),
        }
    }

    pub fn on_vacuum(modes: &[(&str, i64)]) -> Self {
        ModeMonomial { modes: modes.iter().map(|(a, m)| (a.to_string(), *m)).collect(), base: Base::Vacuum }
    }

    /// Conformal weight, counting the base vector as weight 2.
    pub fn weight(&self) -> i64 {
        let base = match self.base {
            Base::Vector(_) => 2,
            Base::Vacuum => 0,
        };
        base + self.modes.iter().map(|(_, m)| 1 - m).sum::<i64>()
    }
}

impl fmt::Display for ModeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, m) in &self.modes {
            write!(f, "{a}_({m}) ")?;
        }
        match &self.base {
            Base::Vector(v) => write!(f, "{v}"),
            Base::Vacuum => write!(f, "1"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModeState {
    pub terms: Vec<(Scalar, ModeMonomial)>,
    pub weight: i64,
}

impl ModeState {
    pub fn new(terms: Vec<(Scalar, ModeMonomial)>) -> Result<Self> {
        let weight = terms.first().map(|(_, m)| m.weight()).ok_or_else(|| Error::InvalidInput("empty state".into()))?;
        if let Some((_, m)) = terms.iter().find(|(_, m)| m.weight() != weight) {
            return Err(Error::Shape(format!("{m} has weight {} but the state has weight {weight}", m.weight())));
        }
        Ok(ModeState { terms, weight })
    }

    pub fn monomial(m: ModeMonomial) -> Self {
        let weight = m.weight();
        ModeState { terms: vec![(Scalar::one(), m)], weight }
    }

    pub fn zero(weight: i64) -> Self {
        ModeState { terms: vec![], weight }
    }

    pub fn add(&self, other: &ModeState) -> Result<ModeState> {
        if self.weight != other.weight && !self.terms.is_empty() && !other.terms.is_empty() {
            return Err(Error::Shape(format!("weights {} and {} differ", self.weight, other.weight)));
        }
        let weight = if self.terms.is_empty() { other.weight } else { self.weight };
        Ok(ModeState { terms: self.terms.iter().chain(&other.terms).cloned().collect(), weight })
    }

    pub fn scale(&self, c: &Scalar) -> ModeState {
        ModeState { terms: self.terms.iter().map(|(x, m)| (x * c, m.clone())).collect(), weight: self.weight }
    }

    /// Applies one more mode on the left of every monomial.
    pub fn apply(&self, label: &str, mode: i64) -> ModeState {
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| {
                let mut modes = vec![(label.to_string(), mode)];
                modes.extend(m.modes.iter().cloned());
                (c.clone(), ModeMonomial { modes, base: m.base.clone() })
            })
            .collect();
        ModeState { terms, weight: self.weight + 1 - mode }
    }
}

impl fmt::Display for ModeState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(c, m)| format!("({c}) {m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A creation word `gen_(mode) b` with `b` a basis vector of a lower space.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Word {
    gen: usize,
    mode: i64,
    source: i64,
    index: usize,
}

#[derive(Clone, Debug)]
struct Level {
    words: Vec<Word>,
    gram: Matrix,
    gram_inv: Matrix,
    /// `(gen, m)` from weight `n - 1 + m` into this space.
    creation: BTreeMap<(usize, i64), Matrix>,
    zero: Vec<Option<Matrix>>,
    /// `(gen, k)` from this space to weight `n + 1 - k`.
    lowering: BTreeMap<(usize, i64), Matrix>,
    hw_dim: usize,
    hw_type: Option<Vec<BigRational>>,
}

impl Level {
    fn dim(&self) -> usize {
        self.gram.rows()
    }
}

/// Summary of one weight space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelInfo {
    pub weight: i64,
    pub dim: usize,
    pub highest_weight_vectors: usize,
    pub highest_weight_type: Option<Vec<String>>,
}

pub struct ModeCalculus {
    alg: GriessAlgebra,
    base: usize,
    base_name: String,
    /// Algebra indices of the acting labels.
    gens: Vec<usize>,
    virasoro: Vec<bool>,
    models: Vec<Option<u32>>,
    /// `gens[i]·gens[j]` over the acting labels.
    prod: Vec<Vec<Vec<(usize, Scalar)>>>,
    pair: Vec<Vec<Scalar>>,
    /// Joint highest weight types reachable from the base by fusion.
    closure: BTreeSet<Vec<MinimalLabel>>,
    levels: Vec<Level>,
    max_weight: i64,
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

fn axpy(y: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
    for (a, b) in y.iter_mut().zip(x) {
        *a += &(c * b);
    }
}

fn binom3(k: i64) -> i64 {
    k * (k - 1) * (k - 2) / 6
}

fn model_of_charge(c: &BigRational) -> Option<u32> {
    (1..200).find(|&m| minimal::central_charge(m).ok().as_ref() == Some(c))
}

impl ModeCalculus {
    /// The calculus on the module generated by `base`, with weight spaces
    /// built up to `max_weight`. Acting labels are the basis labels other
    /// than the base; they must be orthogonal to it and map it into its
    /// own line.
    pub fn new(alg: &GriessAlgebra, base: &str, max_weight: i64) -> Result<Self> {
        let b = alg.index(base).ok_or_else(|| Error::InvalidInput(format!("unknown base vector {base}")))?;
        let gens: Vec<usize> = (0..alg.dim()).filter(|&i| i != b).collect();
        let mut calc = ModeCalculus {
            alg: alg.clone(),
            base: b,
            base_name: base.to_string(),
            gens: gens.clone(),
            virasoro: vec![],
            models: vec![],
            prod: vec![],
            pair: vec![],
            closure: BTreeSet::new(),
            levels: vec![],
            max_weight,
        };
        calc.load_table()?;
        calc.closure = calc.fusion_closure()?;
        calc.levels.push(calc.empty_level());
        calc.levels.push(calc.empty_level());
        if max_weight >= 2 {
            let l2 = calc.base_level()?;
            calc.levels.push(l2);
        }
        for n in 3..=max_weight {
            calc.build_level(n)?;
        }
        Ok(calc)
    }

    fn load_table(&mut self) -> Result<()> {
        let alg = &self.alg;
        let g = self.gens.len();
        let mut prod = vec![vec![vec![]; g]; g];
        let mut pair = vec![vec![Scalar::zero(); g]; g];
        for i in 0..g {
            for j in 0..g {
                let v = alg.mul(&alg.basis(self.gens[i]), &alg.basis(self.gens[j]))?;
                prod[i][j] = self.expand(&v)?;
                pair[i][j] = alg.form[(self.gens[i], self.gens[j])].clone();
            }
        }
        self.prod = prod;
        self.pair = pair;
        let two = Scalar::from_int(2);
        self.virasoro = (0..g).map(|i| self.prod[i][i].len() == 1 && self.prod[i][i][0] == (i, two.clone())).collect();
        let vir: Vec<usize> = (0..g).filter(|&i| self.virasoro[i]).collect();
        for &i in &vir {
            for &j in &vir {
                if i != j && !self.prod[i][j].is_empty() {
                    return Err(Error::Unsupported("conformal generators must have zero product".into()));
                }
            }
        }
        let mut sum = vec![Scalar::zero(); alg.dim()];
        for &i in &vir {
            sum[self.gens[i]] = Scalar::one();
        }
        if sum != alg.omega {
            return Err(Error::Unsupported("the conformal generators must sum to the conformal vector".into()));
        }
        self.models = (0..g)
            .map(|i| {
                if !self.virasoro[i] {
                    return Ok(None);
                }
                let c = (&self.pair[i][i] * &two)
                    .to_rational()
                    .ok_or_else(|| Error::Unsupported("irrational central charge".into()))?;
                model_of_charge(&c)
                    .map(Some)
                    .ok_or_else(|| Error::Unsupported(format!("central charge {c} is not in the minimal series")))
            })
            .collect::<Result<_>>()?;
        for (i, &a) in self.gens.iter().enumerate() {
            if !alg.form[(a, self.base)].is_zero() {
                return Err(Error::InvalidInput(format!("{} is not orthogonal to the base", alg.names[a])));
            }
            self.base_eigenvalue(i)?;
        }
        Ok(())
    }

    /// Coordinates over the acting labels.
    fn expand(&self, v: &[Scalar]) -> Result<Vec<(usize, Scalar)>> {
        let mut out = Vec::new();
        for (k, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let i = self.gens.iter().position(|&x| x == k).ok_or_else(|| {
                Error::Unsupported(format!("products leave the acting span through {}", self.alg.names[k]))
            })?;
            out.push((i, c.clone()));
        }
        Ok(out)
    }

    /// `λ` with `gen·base = λ base`.
    fn base_eigenvalue(&self, i: usize) -> Result<Scalar> {
        let v = self.alg.mul(&self.alg.basis(self.gens[i]), &self.alg.basis(self.base))?;
        let lambda = v[self.base].clone();
        if v.iter().enumerate().any(|(k, c)| k != self.base && !c.is_zero()) {
            return Err(Error::Unsupported(format!(
                "{} does not preserve the line of {}",
                self.alg.names[self.gens[i]], self.base_name
            )));
        }
        Ok(lambda)
    }

    /// Eigenvalue of `L^d(0)` on a Griess element, for conformal `d`.
    fn eigenvalue_on(&self, d: usize, v: &[Scalar]) -> Result<BigRational> {
        let dv = self.alg.mul(&self.alg.basis(self.gens[d]), v)?;
        let k = v.iter().position(|c| !c.is_zero()).expect("nonzero vector");
        let lambda = dv[k].checked_div(&v[k])?;
        if dv != v.iter().map(|c| c * &lambda).collect::<Vec<_>>() {
            return Err(Error::Unsupported(format!("{} is not an L(0) eigenvector", self.alg.names[k])));
        }
        lambda.to_rational().ok_or_else(|| Error::Unsupported("irrational weight".into()))
    }

    fn type_of(&self, v: &[Scalar]) -> Result<Vec<MinimalLabel>> {
        (0..self.gens.len())
            .filter(|&d| self.virasoro[d])
            .map(|d| MinimalLabel::with_weight(self.models[d].expect("conformal"), &self.eigenvalue_on(d, v)?))
            .collect()
    }

    fn fusion_closure(&self) -> Result<BTreeSet<Vec<MinimalLabel>>> {
        let seed = self.type_of(&self.alg.basis(self.base))?;
        let mut gen_types = BTreeSet::new();
        for (i, &a) in self.gens.iter().enumerate() {
            if !self.virasoro[i] {
                gen_types.insert(self.type_of(&self.alg.basis(a))?);
            }
        }
        let mut seen = BTreeSet::from([seed.clone()]);
        let mut queue = vec![seed];
        while let Some(t) = queue.pop() {
            for g in &gen_types {
                let mut products: Vec<Vec<MinimalLabel>> = vec![vec![]];
                for (x, y) in t.iter().zip(g) {
                    let fused = minimal::wang_fusion(x, y)?;
                    products = products
                        .iter()
                        .flat_map(|p| fused.iter().map(move |f| [p.clone(), vec![*f]].concat()))
                        .collect();
                }
                for p in products {
                    if seen.insert(p.clone()) {
                        queue.push(p);
                    }
                }
            }
        }
        Ok(seen)
    }

    /// Joint types in the closure with total weight `n`.
    pub fn allowed_types(&self, n: i64) -> Vec<Vec<BigRational>> {
        let n = BigRational::from_integer(BigInt::from(n));
        self.closure
            .iter()
            .map(|t| t.iter().map(MinimalLabel::highest_weight).collect::<Vec<_>>())
            .filter(|hs| hs.iter().fold(BigRational::zero(), |a, b| a + b) == n)
            .collect()
    }

    fn empty_level(&self) -> Level {
        Level {
            words: vec![],
            gram: Matrix::zeros(0, 0),
            gram_inv: Matrix::zeros(0, 0),
            creation: BTreeMap::new(),
            zero: vec![Some(Matrix::zeros(0, 0)); self.gens.len()],
            lowering: BTreeMap::new(),
            hw_dim: 0,
            hw_type: None,
        }
    }

    fn base_level(&self) -> Result<Level> {
        let norm = self.alg.form[(self.base, self.base)].clone();
        if !norm.is_positive() {
            return Err(Error::Inconsistent("the base vector must have positive norm".into()));
        }
        let gram = Matrix::from_rows(vec![vec![norm]])?;
        let zero = (0..self.gens.len())
            .map(|i| Ok(Some(Matrix::from_rows(vec![vec![self.base_eigenvalue(i)?]])?)))
            .collect::<Result<_>>()?;
        let hw_type = (0..self.gens.len())
            .filter(|&d| self.virasoro[d])
            .map(|d| self.base_eigenvalue(d).map(|s| s.to_rational().expect("rational")))
            .collect::<Result<_>>()?;
        Ok(Level {
            words: vec![],
            gram_inv: gram.inverse()?,
            gram,
            creation: BTreeMap::new(),
            zero,
            lowering: BTreeMap::new(),
            hw_dim: 1,
            hw_type: Some(hw_type),
        })
    }

    fn dim(&self, w: i64) -> Result<usize> {
        if w < 2 {
            return Ok(0);
        }
        self.levels
            .get(w as usize)
            .map(Level::dim)
            .ok_or_else(|| Error::Unsupported(format!("weight {w} exceeds the model bound {}", self.max_weight)))
    }

    /// `gen_(mode)` on a vector of weight `w`; returns the new weight.
    fn act(&self, gen: usize, mode: i64, w: i64, v: &[Scalar]) -> Result<(i64, Vec<Scalar>)> {
        let t = w + 1 - mode;
        let dt = self.dim(t)?;
        if v.is_empty() || dt == 0 {
            return Ok((t, vec![Scalar::zero(); dt]));
        }
        let missing = || Error::Inconsistent(format!("no matrix for mode {mode} at weight {w}"));
        let m = match mode {
            m if m <= 0 => self.levels[t as usize].creation.get(&(gen, m)).ok_or_else(missing)?,
            1 => self.levels[w as usize].zero[gen].as_ref().ok_or_else(missing)?,
            k => self.levels[w as usize].lowering.get(&(gen, k)).ok_or_else(missing)?,
        };
        Ok((t, m.apply(v)?))
    }

    fn act_combo(&self, combo: &[(usize, Scalar)], mode: i64, w: i64, v: &[Scalar]) -> Result<Vec<Scalar>> {
        let mut out = vec![Scalar::zero(); self.dim(w + 1 - mode)?];
        for (g, c) in combo {
            axpy(&mut out, c, &self.act(*g, mode, w, v)?.1);
        }
        Ok(out)
    }

    /// `(c_(0)a)_(j) x` for `x` of weight `w`.
    fn weight3(&self, c: usize, a: usize, j: i64, w: i64, x: &[Scalar]) -> Result<Vec<Scalar>> {
        if c == a {
            let half = Scalar::frac(-j, 2);
            return Ok(self.act_combo(&self.prod[c][c], j - 1, w, x)?.iter().map(|y| y * &half).collect());
        }
        if self.virasoro[c] {
            let (t, ax) = self.act(a, j - 1, w, x)?;
            let mut out = self.act(c, 1, t, &ax)?.1;
            let (_, lx) = self.act(c, 1, w, x)?;
            axpy(&mut out, &-Scalar::one(), &self.act(a, j - 1, w, &lx)?.1);
            axpy(&mut out, &-Scalar::one(), &self.act_combo(&self.prod[c][a], j - 1, w, x)?);
            return Ok(out);
        }
        if self.virasoro[a] {
            let mut out: Vec<Scalar> = self.weight3(a, c, j, w, x)?.into_iter().map(|y| -y).collect();
            axpy(&mut out, &Scalar::from_int(-j), &self.act_combo(&self.prod[a][c], j - 1, w, x)?);
            return Ok(out);
        }
        Err(Error::Unsupported(format!(
            "the weight-3 field of {} and {}",
            self.alg.names[self.gens[c]], self.alg.names[self.gens[a]]
        )))
    }

    /// `[c_(k), a_(m)] x` for `k >= 1`.
    fn commutator(&self, c: usize, k: i64, a: usize, m: i64, w: i64, x: &[Scalar]) -> Result<Vec<Scalar>> {
        let mut out = self.weight3(c, a, k + m, w, x)?;
        axpy(&mut out, &Scalar::from_int(k), &self.act_combo(&self.prod[c][a], k + m - 1, w, x)?);
        if k + m == 2 && k >= 3 {
            axpy(&mut out, &(&self.pair[c][a] * &Scalar::from_int(binom3(k))), x);
        }
        Ok(out)
    }

    /// `c_(k)` applied to a creation word, `k >= 1`, by one commutation.
    fn apply_to_word(&self, c: usize, k: i64, word: &Word) -> Result<Vec<Scalar>> {
        let x = unit(self.dim(word.source)?, word.index);
        let (t, cx) = self.act(c, k, word.source, &x)?;
        let mut out = self.act(word.gen, word.mode, t, &cx)?.1;
        axpy(&mut out, &Scalar::one(), &self.commutator(c, k, word.gen, word.mode, word.source, &x)?);
        Ok(out)
    }

    fn build_level(&mut self, n: i64) -> Result<()> {
        let g = self.gens.len();
        let mut cands = Vec::new();
        for m in (3 - n..=0).rev() {
            let p = n - 1 + m;
            for gen in 0..g {
                for index in 0..self.dim(p)? {
                    cands.push(Word { gen, mode: m, source: p, index });
                }
            }
        }
        let nc = cands.len();
        let mut full = Matrix::zeros(nc, nc);
        for (j, wj) in cands.iter().enumerate() {
            for (i, wi) in cands.iter().enumerate() {
                // <gen_(m) b, y> = <b, gen_(2-m) y>
                let low = self.apply_to_word(wi.gen, 2 - wi.mode, wj)?;
                let gp = &self.levels[wi.source as usize].gram;
                full[(i, j)] = gp.row(wi.index).iter().zip(&low).map(|(a, b)| a * b).sum();
            }
        }
        if !full.is_symmetric() {
            return Err(Error::Inconsistent(format!("inner products at weight {n} are not symmetric")));
        }
        let mut chosen: Vec<usize> = Vec::new();
        for i in 0..nc {
            let mut trial = chosen.clone();
            trial.push(i);
            if full.select(&trial, &trial).rank() == trial.len() {
                chosen = trial;
            }
        }
        if full.rank() != chosen.len() {
            return Err(Error::Inconsistent(format!("the form is degenerate at weight {n}")));
        }
        let gram = full.select(&chosen, &chosen);
        if !gram.is_positive_definite()? {
            return Err(Error::Inconsistent(format!("the form is not positive definite at weight {n}")));
        }
        let gram_inv = gram.inverse()?;
        let dim = chosen.len();
        let coords: Vec<Vec<Scalar>> = (0..nc)
            .map(|j| {
                let rhs: Vec<Scalar> = chosen.iter().map(|&i| full[(i, j)].clone()).collect();
                gram_inv.apply(&rhs)
            })
            .collect::<Result<_>>()?;
        let mut creation: BTreeMap<(usize, i64), Matrix> = BTreeMap::new();
        for (w, c) in cands.iter().zip(&coords) {
            let src = self.dim(w.source)?;
            let mat = creation.entry((w.gen, w.mode)).or_insert_with(|| Matrix::zeros(dim, src));
            for (r, x) in c.iter().enumerate() {
                mat[(r, w.index)] = x.clone();
            }
        }
        let words: Vec<Word> = chosen.iter().map(|&i| cands[i].clone()).collect();
        self.levels.push(Level {
            words,
            gram: gram.clone(),
            gram_inv,
            creation,
            zero: vec![None; g],
            lowering: BTreeMap::new(),
            hw_dim: 0,
            hw_type: None,
        });
        self.virasoro_zero_modes(n, &cands, &coords)?;
        self.other_zero_modes(n)?;
        self.lowering_maps(n)?;
        Ok(())
    }

    fn virasoro_zero_modes(&mut self, n: i64, cands: &[Word], coords: &[Vec<Scalar>]) -> Result<()> {
        let level = &self.levels[n as usize];
        let dim = level.dim();
        let gram = level.gram.clone();
        let desc: Vec<usize> = (0..cands.len()).filter(|&j| self.virasoro[cands[j].gen]).collect();
        let mut basis: Vec<usize> = Vec::new();
        for &j in &desc {
            let mut trial: Vec<Vec<Scalar>> = basis.iter().map(|&i| coords[i].clone()).collect();
            trial.push(coords[j].clone());
            if Matrix::from_columns(&trial, dim)?.rank() == trial.len() {
                basis.push(j);
            }
        }
        // highest weight vectors: the orthogonal complement of the descendants
        let dmat = Matrix::from_columns(&basis.iter().map(|&i| coords[i].clone()).collect::<Vec<_>>(), dim)?;
        let hw = if basis.is_empty() {
            (0..dim).map(|i| unit(dim, i)).collect()
        } else {
            dmat.transpose().mul(&gram)?.kernel()
        };
        let types = self.allowed_types(n);
        let hw_type = match (hw.is_empty(), types.len()) {
            (true, _) => None,
            (false, 1) => Some(types[0].clone()),
            (false, 0) => {
                return Err(Error::Inconsistent(format!("weight {n} has highest weight vectors of no allowed type")))
            }
            (false, _) => return Err(Error::Unsupported(format!("weight {n} admits several highest weight types"))),
        };
        let mut columns: Vec<Vec<Scalar>> = basis.iter().map(|&i| coords[i].clone()).collect();
        columns.extend(hw.iter().cloned());
        let t = Matrix::from_columns(&columns, dim)?;
        let t_inv = t.inverse()?;
        let mut vir_index = 0;
        for d in 0..self.gens.len() {
            if !self.virasoro[d] {
                continue;
            }
            let image = |j: usize| -> Result<Vec<Scalar>> {
                let w = &cands[j];
                let x = unit(self.dim(w.source)?, w.index);
                let (_, lx) = self.act(d, 1, w.source, &x)?;
                let mut out = self.act(w.gen, w.mode, w.source, &lx)?.1;
                if w.gen == d {
                    axpy(&mut out, &Scalar::from_int(1 - w.mode), &coords[j]);
                }
                Ok(out)
            };
            let mut images: Vec<Vec<Scalar>> = basis.iter().map(|&j| image(j)).collect::<Result<_>>()?;
            if let Some(ty) = &hw_type {
                let h = Scalar::from_rational(ty[vir_index].clone());
                images.extend(hw.iter().map(|v| v.iter().map(|x| x * &h).collect::<Vec<_>>()));
            }
            let l0 = Matrix::from_columns(&images, dim)?.mul(&t_inv)?;
            for &j in &desc {
                if l0.apply(&coords[j])? != image(j)? {
                    return Err(Error::Inconsistent(format!("L(0) is not well defined at weight {n}")));
                }
            }
            if !gram.mul(&l0)?.is_symmetric() {
                return Err(Error::Inconsistent(format!("L(0) is not self-adjoint at weight {n}")));
            }
            self.levels[n as usize].zero[d] = Some(l0);
            vir_index += 1;
        }
        let mut total = Matrix::zeros(dim, dim);
        for d in (0..self.gens.len()).filter(|&d| self.virasoro[d]) {
            total = total.add(self.levels[n as usize].zero[d].as_ref().expect("set"))?;
        }
        if total != Matrix::identity(dim).scale(&Scalar::from_int(n)) {
            return Err(Error::Inconsistent(format!("L(0) is not {n} at weight {n}")));
        }
        let level = &mut self.levels[n as usize];
        level.hw_dim = hw.len();
        level.hw_type = hw_type;
        Ok(())
    }

    fn other_zero_modes(&mut self, n: i64) -> Result<()> {
        let level = &self.levels[n as usize];
        let dim = level.dim();
        let words = level.words.clone();
        let gram = level.gram.clone();
        for c in (0..self.gens.len()).filter(|&c| !self.virasoro[c]) {
            let cols: Vec<Vec<Scalar>> = words.iter().map(|w| self.apply_to_word(c, 1, w)).collect::<Result<_>>()?;
            let z = Matrix::from_columns(&cols, dim)?;
            if !gram.mul(&z)?.is_symmetric() {
                return Err(Error::Inconsistent(format!(
                    "the zero mode of {} is not self-adjoint at weight {n}",
                    self.alg.names[self.gens[c]]
                )));
            }
            self.levels[n as usize].zero[c] = Some(z);
        }
        Ok(())
    }

    /// `c_(k)` as the adjoint of `c_(2-k)`: `G_t^{-1} C^T G_n`.
    fn lowering_maps(&mut self, n: i64) -> Result<()> {
        let mut maps = BTreeMap::new();
        for c in 0..self.gens.len() {
            for k in 2..n {
                let t = n + 1 - k;
                let create = &self.levels[n as usize].creation[&(c, 2 - k)];
                let tl = &self.levels[t as usize];
                let m = tl.gram_inv.mul(&create.transpose())?.mul(&self.levels[n as usize].gram)?;
                maps.insert((c, k), m);
            }
        }
        self.levels[n as usize].lowering = maps;
        Ok(())
    }

    pub fn max_weight(&self) -> i64 {
        self.max_weight
    }

    pub fn base_name(&self) -> &str {
        &self.base_name
    }

    pub fn generator_names(&self) -> Vec<String> {
        self.gens.iter().map(|&g| self.alg.names[g].clone()).collect()
    }

    pub fn levels(&self) -> Vec<LevelInfo> {
        (2..self.levels.len())
            .map(|n| {
                let l = &self.levels[n];
                LevelInfo {
                    weight: n as i64,
                    dim: l.dim(),
                    highest_weight_vectors: l.hw_dim,
                    highest_weight_type: l.hw_type.as_ref().map(|t| t.iter().map(|h| h.to_string()).collect()),
                }
            })
            .collect()
    }

    fn gen_index(&self, label: &str) -> Result<usize> {
        self.gens
            .iter()
            .position(|&g| self.alg.names[g] == label)
            .ok_or_else(|| Error::InvalidInput(format!("unresolved symbol {label}")))
    }

    /// Coordinates of a state on the basis of its weight space.
    pub fn coordinates(&self, state: &ModeState) -> Result<Vec<Scalar>> {
        let mut out = vec![Scalar::zero(); self.dim(state.weight)?];
        for (c, m) in &state.terms {
            axpy(&mut out, c, &self.monomial_coordinates(m)?);
        }
        Ok(out)
    }

    fn monomial_coordinates(&self, m: &ModeMonomial) -> Result<Vec<Scalar>> {
        let modes: Vec<(usize, i64)> =
            m.modes.iter().map(|(a, k)| Ok((self.gen_index(a)?, *k))).collect::<Result<_>>()?;
        let (mut w, mut v) = match &m.base {
            Base::Vector(b) if *b == self.base_name => (2, unit(self.dim(2)?, 0)),
            Base::Vector(b) => return Err(Error::InvalidInput(format!("unresolved base vector {b}"))),
            Base::Vacuum => match modes.last() {
                // a_(m) 1 = 0 for m >= 0
                Some(&(_, k)) if k >= 0 => return Ok(vec![Scalar::zero(); self.dim(m.weight())?]),
                None => return Err(Error::Unsupported("the vacuum lies outside the module".into())),
                _ => return Err(Error::Unsupported("creation modes on the vacuum".into())),
            },
        };
        for &(g, k) in modes.iter().rev() {
            let (t, nv) = self.act(g, k, w, &v)?;
            w = t;
            v = nv;
        }
        Ok(v)
    }

    fn word_monomial(&self, w: i64, i: usize) -> ModeMonomial {
        if w == 2 {
            return ModeMonomial { modes: vec![], base: Base::Vector(self.base_name.clone()) };
        }
        let word = &self.levels[w as usize].words[i];
        let mut inner = self.word_monomial(word.source, word.index);
        inner.modes.insert(0, (self.alg.names[self.gens[word.gen]].clone(), word.mode));
        inner
    }

    /// The basis of a weight space as creation monomials.
    pub fn basis_states(&self, w: i64) -> Result<Vec<ModeState>> {
        Ok((0..self.dim(w)?).map(|i| ModeState::monomial(self.word_monomial(w, i))).collect())
    }

    /// Normal form: a combination of basis monomials, which carry only
    /// creation modes.
    pub fn reduce(&self, state: &ModeState) -> Result<ModeState> {
        let coords = self.coordinates(state)?;
        let terms = coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.clone(), self.word_monomial(state.weight, i)))
            .collect();
        Ok(ModeState { terms, weight: state.weight })
    }

    pub fn gram_of_weight(&self, w: i64) -> Result<Matrix> {
        if w < 2 {
            return Ok(Matrix::zeros(0, 0));
        }
        self.dim(w)?;
        Ok(self.levels[w as usize].gram.clone())
    }

    pub fn inner(&self, a: &ModeState, b: &ModeState) -> Result<Scalar> {
        GramCoordinates.inner(self, a, b)
    }

    /// Gram matrix of a list of states, with its determinant.
    pub fn gram(&self, states: &[ModeState]) -> Result<(Matrix, Scalar)> {
        gram_with(self, &GramCoordinates, states)
    }

    /// Checks `L^d(0) s = h s` and `L^d(1) s = L^d(2) s = 0` by pairing
    /// with spanning sets of the target spaces.
    pub fn highest_weight_check(&self, state: &ModeState, virasoro: &str, h: &BigRational) -> Result<HwCheck> {
        let d = self.gen_index(virasoro)?;
        if !self.virasoro[d] {
            return Err(Error::InvalidInput(format!("{virasoro} is not a conformal vector")));
        }
        let mut shifted = state.apply(virasoro, 1);
        shifted = shifted.add(&state.scale(&Scalar::from_rational(-h)))?;
        let mut residuals = Vec::new();
        for (label, s) in [("L(0)-h", shifted), ("L(1)", state.apply(virasoro, 2)), ("L(2)", state.apply(virasoro, 3))]
        {
            let spanning = self.basis_states(s.weight)?;
            let worst = spanning
                .iter()
                .map(|t| self.inner(t, &s))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .find(|x| !x.is_zero())
                .unwrap_or_else(Scalar::zero);
            residuals.push((label.to_string(), worst));
        }
        let pass = residuals.iter().all(|(_, x)| x.is_zero());
        Ok(HwCheck { virasoro: virasoro.into(), weight: h.to_string(), pass, residuals })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HwCheck {
    pub virasoro: String,
    pub weight: String,
    pub pass: bool,
    /// First nonzero pairing per condition, zero when it holds.
    pub residuals: Vec<(String, Scalar)>,
}

/// A way to evaluate `<a, b>`.
pub trait InnerStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn inner(&self, calc: &ModeCalculus, a: &ModeState, b: &ModeState) -> Result<Scalar>;
}

/// Both states to coordinates, then the Gram matrix of the weight space.
pub struct GramCoordinates;

impl InnerStrategy for GramCoordinates {
    fn name(&self) -> &'static str {
        "gram-coordinates"
    }

    fn inner(&self, calc: &ModeCalculus, a: &ModeState, b: &ModeState) -> Result<Scalar> {
        let x = calc.coordinates(a)?;
        let y = calc.coordinates(b)?;
        if a.weight != b.weight {
            return Ok(Scalar::zero());
        }
        if x.is_empty() {
            return Ok(Scalar::zero());
        }
        pairing(&calc.levels[a.weight as usize].gram, &x, &y)
    }
}

/// Moves every mode of the left state onto the right one, ending with a
/// multiple of the base vector.
pub struct Adjoint;

impl InnerStrategy for Adjoint {
    fn name(&self) -> &'static str {
        "adjoint"
    }

    fn inner(&self, calc: &ModeCalculus, a: &ModeState, b: &ModeState) -> Result<Scalar> {
        if a.weight != b.weight {
            return Ok(Scalar::zero());
        }
        let mut total = Scalar::zero();
        for (ca, ma) in &a.terms {
            if !matches!(&ma.base, Base::Vector(v) if *v == calc.base_name) {
                // the vacuum side vanishes or is rejected by coordinates
                if calc.monomial_coordinates(ma)?.iter().all(Scalar::is_zero) {
                    continue;
                }
            }
            for (cb, mb) in &b.terms {
                let mut w = mb.weight();
                let mut v = calc.monomial_coordinates(mb)?;
                for (label, k) in &ma.modes {
                    let (t, nv) = calc.act(calc.gen_index(label)?, 2 - k, w, &v)?;
                    w = t;
                    v = nv;
                }
                if w != 2 || v.is_empty() {
                    continue;
                }
                let c = ca * cb;
                total += &(&c * &(&v[0] * &calc.levels[2].gram[(0, 0)]));
            }
        }
        Ok(total)
    }
}

pub fn inner_strategies() -> Vec<Box<dyn InnerStrategy>> {
    vec![Box::new(GramCoordinates), Box::new(Adjoint)]
}

pub fn inner_strategy(name: &str) -> Option<Box<dyn InnerStrategy>> {
    inner_strategies().into_iter().find(|s| s.name() == name)
}

pub fn gram_with(calc: &ModeCalculus, strategy: &dyn InnerStrategy, states: &[ModeState]) -> Result<(Matrix, Scalar)> {
    let n = states.len();
    let mut g = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            g[(i, j)] = strategy.inner(calc, &states[i], &states[j])?;
        }
    }
    let det = g.det()?;
    Ok((g, det))
}

fn mono(modes: &[(&str, i64)]) -> ModeState {
    ModeState::monomial(ModeMonomial::new(modes, "v1"))
}

fn combo(parts: Vec<(Scalar, ModeState)>) -> ModeState {
    let mut out = ModeState::zero(parts[0].1.weight);
    for (c, s) in parts {
        out = out.add(&s.scale(&c)).expect("equal weights");
    }
    out
}

/// `v0_(0) v1 - 5/9 (w3_(0) + w4_(0)) v1`.
pub fn hw_state() -> ModeState {
    let c = Scalar::frac(-5, 9);
    combo(vec![(Scalar::one(), mono(&[("v0", 0)])), (c.clone(), mono(&[("w3", 0)])), (c, mono(&[("w4", 0)]))])
}

fn on_hw(prefix: &[(&str, i64)]) -> ModeState {
    let mut s = hw_state();
    for &(a, m) in prefix.iter().rev() {
        s = s.apply(a, m);
    }
    s
}

/// The named state sets `weight3` and `weight5`.
pub fn builtin_set(name: &str) -> Option<Vec<ModeState>> {
    match name {
        "weight3" => Some(vec![mono(&[("w3", 0)]), mono(&[("w4", 0)]), mono(&[("v0", 0)])]),
        "weight5" => Some(vec![
            mono(&[("w3", -2)]),
            mono(&[("w3", -1), ("w3", 0)]),
            mono(&[("w3", -1), ("w4", 0)]),
            mono(&[("w3", 0), ("w3", 0), ("w4", 0)]),
            mono(&[("w3", 0), ("w4", -1)]),
            mono(&[("w3", 0), ("w4", 0), ("w4", 0)]),
            mono(&[("w4", -2)]),
            mono(&[("w4", -1), ("w4", 0)]),
            on_hw(&[("w3", -1)]),
            on_hw(&[("w3", 0), ("w3", 0)]),
            on_hw(&[("w4", -1)]),
            mono(&[("v0", -2)]),
        ]),
        _ => None,
    }
}

pub const BUILTIN_SETS: [&str; 2] = ["weight3", "weight5"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Case {
    I,
    Ii,
    Iii,
    Iv,
}

impl std::str::FromStr for Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "i" => Ok(Case::I),
            "ii" => Ok(Case::Ii),
            "iii" => Ok(Case::Iii),
            "iv" => Ok(Case::Iv),
            _ => Err(Error::Parse(format!("unknown case {s}"))),
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Case::I => "i",
            Case::Ii => "ii",
            Case::Iii => "iii",
            Case::Iv => "iv",
        };
        write!(f, "{s}")
    }
}

/// `(h at c=4/5, h at c=6/7, multiplicity)` summands of each case.
pub fn case_summands(case: Case) -> Vec<(BigRational, BigRational, u32)> {
    let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let odd = (q(2, 3), q(4, 3), 1);
    match case {
        Case::I => vec![(q(3, 1), q(0, 1), 1), odd],
        Case::Ii => vec![(q(0, 1), q(5, 1), 1), odd],
        Case::Iii => vec![(q(3, 1), q(5, 1), 1), odd],
        Case::Iv => vec![
            (q(0, 1), q(0, 1), 1),
            (q(0, 1), q(5, 1), 1),
            (q(3, 1), q(0, 1), 1),
            (q(3, 1), q(5, 1), 1),
            (q(2, 3), q(4, 3), 2),
        ],
    }
}

/// Graded dimension at `weight` from products of Virasoro characters.
pub fn case_dimension(case: Case, weight: i64) -> Result<u64> {
    let mut total = BigInt::zero();
    let target = BigRational::from_integer(BigInt::from(weight));
    for (h3, h4, mult) in case_summands(case) {
        let l3 = MinimalLabel::with_weight(3, &h3)?;
        let l4 = MinimalLabel::with_weight(4, &h4)?;
        let level = &target - &h3 - &h4;
        if level.is_negative() {
            continue;
        }
        let order = level.to_integer().to_usize().ok_or_else(|| Error::InvalidInput("weight too large".into()))? + 1;
        let ch: BiSeries = minimal::vir_character(&l3, order).mul(&minimal::vir_character(&l4, order));
        let dims = minimal::dimensions(&ch);
        total += &dims[order - 1] * BigInt::from(mult);
    }
    total.to_u64().ok_or_else(|| Error::Inconsistent("negative dimension".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn calc(max: i64) -> ModeCalculus {
        let alg = GriessAlgebra::from_text(fixtures::GRIESS_P1).unwrap();
        ModeCalculus::new(&alg, "v1", max).unwrap()
    }

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::frac(n, d)
    }

    #[test]
    fn reduce_examples() {
        let c = calc(3);
        let s = mono(&[("w3", 2), ("w3", 0)]);
        let r = c.reduce(&s).unwrap();
        assert_eq!(r.terms, vec![(q(4, 3), ModeMonomial::new(&[], "v1"))]);
        let s = mono(&[("v0", 2), ("v0", 0)]);
        assert_eq!(c.coordinates(&s).unwrap(), vec![q(113, 81)]);
        let vac = ModeState::monomial(ModeMonomial::on_vacuum(&[("w3", 0)]));
        assert!(c.coordinates(&vac).unwrap().iter().all(Scalar::is_zero));
    }

    #[test]
    fn weight_three_inner_products() {
        let c = calc(3);
        let x = builtin_set("weight3").unwrap();
        assert_eq!(c.inner(&x[0], &x[0]).unwrap(), q(4, 3));
        assert_eq!(c.inner(&x[0], &x[1]).unwrap(), q(0, 1));
        assert_eq!(c.inner(&x[2], &x[2]).unwrap(), q(113, 81));
        assert_eq!(c.inner(&x[2], &x[0]).unwrap(), q(20, 27));
        assert_eq!(c.inner(&x[2], &x[1]).unwrap(), q(40, 27));
        let lv = c.levels();
        assert_eq!(lv[1].dim, 3);
        assert_eq!(lv[1].highest_weight_type, Some(vec!["3".into(), "0".into()]));
    }

    #[test]
    fn strategies_agree_on_weight_five() {
        let c = calc(5);
        let ys = builtin_set("weight5").unwrap();
        let (g1, d1) = gram_with(&c, &GramCoordinates, &ys).unwrap();
        let (g2, d2) = gram_with(&c, &Adjoint, &ys).unwrap();
        assert_eq!(g1, g2);
        assert_eq!(d1, d2);
        assert!(!d1.is_zero());
        assert!(g1.is_positive_definite().unwrap());
        assert_eq!(g1.rank(), 12);
    }

    #[test]
    fn w_is_highest_weight() {
        let c = calc(3);
        let w = hw_state();
        assert!(c.highest_weight_check(&w, "w3", &BigRational::from_integer(3.into())).unwrap().pass);
        assert!(c.highest_weight_check(&w, "w4", &BigRational::zero()).unwrap().pass);
        assert!(!c.inner(&w, &w).unwrap().is_zero());
        let x1 = mono(&[("w3", 0)]);
        assert!(!c.highest_weight_check(&x1, "w3", &BigRational::from_integer(3.into())).unwrap().pass);
    }

    #[test]
    fn case_dimensions() {
        assert_eq!(case_dimension(Case::I, 5).unwrap(), 11);
        assert_eq!(case_dimension(Case::Iv, 2).unwrap(), 4);
        assert_eq!(case_dimension(Case::Iv, 1).unwrap(), 0);
    }

    #[test]
    fn unknown_label_rejected() {
        let c = calc(3);
        assert!(c.coordinates(&mono(&[("zz", 0)])).is_err());
    }
}
