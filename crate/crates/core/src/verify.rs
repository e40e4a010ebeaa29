//! Checks tying the generators to actual common roots: symbolic planted-root
//! vanishing, an exact gcd-based root oracle, and numeric evaluation of every
//! maximal minor at rational coefficient tuples.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::cascade::RowSelection;
use crate::minors::{enumerate_generators, GeneratorRecord};
use crate::polyring::{Monomial, Polynomial, Rational, Unmapped, VariableId};
use crate::rng::Lcg64;
use crate::upoly::UPoly;
use crate::walks::{enumerate_walks, walk_to_rows};
use crate::{check_shape, Error, Result};

/// Bound on sampled numerators and denominators.
pub const SAMPLE_BOUND: u32 = 20;

/// A specialization of every `a_{i,j}` to a rational number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTuple {
    d: usize,
    n: usize,
    /// `values[i-1][j] = a_{i,j}`.
    values: Vec<Vec<Rational>>,
}

impl CoefficientTuple {
    pub fn new(d: usize, n: usize, values: Vec<Vec<Rational>>) -> Result<Self> {
        check_shape(d, n)?;
        if values.len() != n {
            return Err(Error::OutOfRange(format!("expected {n} rows of coefficients, got {}", values.len())));
        }
        if let Some((i, row)) = values.iter().enumerate().find(|(_, r)| r.len() != d + 1) {
            return Err(Error::OutOfRange(format!("row {} has {} coefficients, expected {}", i + 1, row.len(), d + 1)));
        }
        Ok(CoefficientTuple { d, n, values })
    }

    pub fn from_integers(d: usize, n: usize, rows: &[&[i64]]) -> Result<Self> {
        let values = rows.iter().map(|r| r.iter().map(|&c| Rational::from_integer(c.into())).collect()).collect();
        Self::new(d, n, values)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Vec<Rational>] {
        &self.values
    }

    /// `a_{i,j}` with `i` 1-based.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.values[i - 1][j]
    }

    /// The specialized `f_i`.
    pub fn polynomial(&self, i: usize) -> UPoly {
        UPoly::from_descending(&self.values[i - 1])
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().flatten().all(Zero::is_zero)
    }

    pub fn all_leading_zero(&self) -> bool {
        self.values.iter().all(|r| r[0].is_zero())
    }

    pub fn point(&self) -> BTreeMap<VariableId, Rational> {
        let mut out = BTreeMap::new();
        for (i, row) in self.values.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                out.insert(VariableId::a(i + 1, j), c.clone());
            }
        }
        out
    }

    /// The specialized `M_k` as a dense `nk × (d+k)` matrix.
    pub fn cascade_values(&self, k: usize) -> Result<Vec<Vec<Rational>>> {
        if k == 0 || k > self.d {
            return Err(Error::OutOfRange(format!("cascade depth k = {k} must lie in 1..={}", self.d)));
        }
        let mut out = Vec::with_capacity(self.n * k);
        for block in 1..=k {
            for row in &self.values {
                let mut r = alloc::vec![Rational::zero(); self.d + k];
                for (j, c) in row.iter().enumerate() {
                    r[block - 1 + j] = c.clone();
                }
                out.push(r);
            }
        }
        Ok(out)
    }

    /// `M_k · (r^{d+k−1}, …, r, 1)`.
    pub fn kernel_residual(&self, k: usize, r: &Rational) -> Result<Vec<Rational>> {
        let m = self.cascade_values(k)?;
        let len = self.d + k;
        let mut powers = alloc::vec![Rational::one(); len];
        for idx in (0..len - 1).rev() {
            powers[idx] = &powers[idx + 1] * r;
        }
        Ok(m.iter().map(|row| row.iter().zip(&powers).map(|(a, b)| a * b).sum()).collect())
    }
}

/// Common-root information for one coefficient tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootReport {
    pub has_affine_common_root: bool,
    /// Every `a_{i,0}` vanishes: the binary forms share the root at infinity.
    pub all_leading_zero: bool,
    pub gcd_degree: usize,
    /// Monic gcd of the nonzero specialized `f_i`.
    pub gcd: UPoly,
}

impl RootReport {
    /// Whether the binary forms share a projective root.
    pub fn has_projective_common_root(&self) -> bool {
        self.has_affine_common_root || self.all_leading_zero
    }
}

pub fn common_root_oracle(c: &CoefficientTuple) -> Result<RootReport> {
    if c.is_zero() {
        return Err(Error::Degenerate("all coefficients are zero".into()));
    }
    let gcd = (1..=c.n).map(|i| c.polynomial(i)).fold(UPoly::zero(), |g, f| g.gcd(&f));
    let gcd_degree = gcd.degree().expect("some polynomial is nonzero");
    Ok(RootReport { has_affine_common_root: gcd_degree >= 1, all_leading_zero: c.all_leading_zero(), gcd_degree, gcd })
}

/// Exact determinant by Gaussian elimination.
pub fn rational_det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &pivot;
            let (top, bottom) = a.split_at_mut(r);
            for (x, y) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x -= &f * y;
            }
        }
    }
    det
}

/// Exact rank by Gaussian elimination.
pub fn rational_rank(m: &[Vec<Rational>]) -> usize {
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        let pivot = a[rank][col].clone();
        for r in rank + 1..a.len() {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &pivot;
            let (top, bottom) = a.split_at_mut(r);
            for (x, y) in bottom[0][col..].iter_mut().zip(&top[rank][col..]) {
                *x -= &f * y;
            }
        }
        rank += 1;
    }
    rank
}

/// `a_{i,j} ↦` coefficient of `x^{d−j}` in `(x − r)(b_{i,0}x^{d−1} + … + b_{i,d−1})`.
pub fn planted_substitution(d: usize, n: usize) -> Result<BTreeMap<VariableId, Polynomial>> {
    check_shape(d, n)?;
    let r = Polynomial::var(VariableId::Root);
    let b = |i, j| Polynomial::var(VariableId::b(i, j));
    let mut out = BTreeMap::new();
    for i in 1..=n {
        out.insert(VariableId::a(i, 0), b(i, 0));
        for j in 1..d {
            out.insert(VariableId::a(i, j), &b(i, j) - &(&r * &b(i, j - 1)));
        }
        out.insert(VariableId::a(i, d), -&(&r * &b(i, d - 1)));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlantedReport {
    pub d: usize,
    pub n: usize,
    pub generators_checked: usize,
    /// Generators whose image is not the zero polynomial, with that image.
    pub nonvanishing: Vec<(GeneratorRecord, Polynomial)>,
}

impl PlantedReport {
    pub fn passed(&self) -> bool {
        self.nonvanishing.is_empty()
    }
}

/// Substitutes [`planted_substitution`] into every generator.
pub fn planted_vanishing(d: usize, n: usize) -> Result<PlantedReport> {
    let subst = planted_substitution(d, n)?;
    let gens = enumerate_generators(d, n)?;
    let mut nonvanishing = Vec::new();
    for g in &gens {
        let image = g.poly.substitute(&subst, Unmapped::Reject)?;
        if !image.is_zero() {
            nonvanishing.push((g.clone(), image));
        }
    }
    Ok(PlantedReport { d, n, generators_checked: gens.len(), nonvanishing })
}

/// Row selections of every nonzero maximal minor, for repeated numeric evaluation.
#[derive(Clone, Debug)]
pub struct GeneratorTable {
    d: usize,
    n: usize,
    /// `(k, selection)` in order of increasing `k`.
    entries: Vec<(usize, RowSelection)>,
}

impl GeneratorTable {
    pub fn new(d: usize, n: usize) -> Result<Self> {
        check_shape(d, n)?;
        let mut entries = Vec::new();
        for k in 1..=d {
            for w in enumerate_walks(d, n, k)? {
                entries.push((k, walk_to_rows(&w)));
            }
        }
        Ok(GeneratorTable { d, n, entries })
    }

    pub fn entries(&self) -> &[(usize, RowSelection)] {
        &self.entries
    }

    fn check(&self, c: &CoefficientTuple) -> Result<()> {
        if (c.d, c.n) != (self.d, self.n) {
            return Err(Error::OutOfRange(format!(
                "tuple has shape d = {}, n = {}, expected d = {}, n = {}",
                c.d, c.n, self.d, self.n
            )));
        }
        Ok(())
    }

    fn minor_value(m: &[Vec<Rational>], sel: &RowSelection, n: usize) -> Rational {
        let sub: Vec<Vec<Rational>> = sel.rows().iter().map(|r| m[(r.block - 1) * n + (r.poly - 1)].clone()).collect();
        rational_det(&sub)
    }

    /// Value of every generator at `c`, in table order.
    pub fn evaluate(&self, c: &CoefficientTuple) -> Result<Vec<Rational>> {
        self.check(c)?;
        let cascades = (1..=self.d).map(|k| c.cascade_values(k)).collect::<Result<Vec<_>>>()?;
        Ok(self.entries.iter().map(|(k, sel)| Self::minor_value(&cascades[*k - 1], sel, self.n)).collect())
    }

    /// Whether every maximal minor of `M_k` vanishes at `c` (vacuously true
    /// when `M_k` has fewer rows than columns).
    pub fn depth_vanishes(&self, c: &CoefficientTuple, k: usize) -> Result<bool> {
        self.check(c)?;
        let m = c.cascade_values(k)?;
        Ok(self.entries.iter().filter(|(kk, _)| *kk == k).all(|(_, sel)| Self::minor_value(&m, sel, self.n).is_zero()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorValue {
    pub k: usize,
    pub selection: RowSelection,
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipReport {
    pub root: RootReport,
    pub values: Vec<GeneratorValue>,
    pub all_vanish: bool,
    /// Every `2d × 2d` minor of `M_d` vanishes.
    pub top_vanish: bool,
    /// `top_vanish` agrees with the existence of a projective common root.
    pub consistent: bool,
}

pub fn membership_scan(c: &CoefficientTuple) -> Result<MembershipReport> {
    membership_scan_with(&GeneratorTable::new(c.d, c.n)?, c)
}

pub fn membership_scan_with(table: &GeneratorTable, c: &CoefficientTuple) -> Result<MembershipReport> {
    let root = common_root_oracle(c)?;
    let values: Vec<GeneratorValue> = table
        .entries
        .iter()
        .zip(table.evaluate(c)?)
        .map(|((k, sel), value)| GeneratorValue { k: *k, selection: sel.clone(), value })
        .collect();
    let all_vanish = values.iter().all(|g| g.value.is_zero());
    let top_vanish = values.iter().filter(|g| g.k == c.d).all(|g| g.value.is_zero());
    let consistent = top_vanish == root.has_projective_common_root();
    Ok(MembershipReport { root, values, all_vanish, top_vanish, consistent })
}

fn sample_rational(rng: &mut Lcg64) -> Rational {
    let num = rng.nonzero_in(SAMPLE_BOUND);
    let den = rng.nonzero_in(SAMPLE_BOUND);
    Rational::new(num.into(), den.into())
}

/// A tuple whose polynomials all vanish at a sampled rational `r`, together with `r`.
pub fn sample_planted_with_root(d: usize, n: usize, seed: u64) -> Result<(CoefficientTuple, Rational)> {
    check_shape(d, n)?;
    let mut rng = Lcg64::new(seed);
    let r = sample_rational(&mut rng);
    let x = Polynomial::var(VariableId::X);
    let linear = &x - &Polynomial::constant(r.clone());
    let mut values = Vec::with_capacity(n);
    for _ in 0..n {
        let mut q = Polynomial::zero();
        for e in 0..d {
            q.add_term(Monomial::from_powers([(VariableId::X, e as u32)]), sample_rational(&mut rng));
        }
        let f = &linear * &q;
        let row = (0..=d).map(|j| f.coefficient(&Monomial::from_powers([(VariableId::X, (d - j) as u32)]))).collect();
        values.push(row);
    }
    Ok((CoefficientTuple::new(d, n, values)?, r))
}

pub fn sample_planted(d: usize, n: usize, seed: u64) -> Result<CoefficientTuple> {
    sample_planted_with_root(d, n, seed).map(|(c, _)| c)
}

/// Every coefficient sampled independently.
pub fn sample_generic(d: usize, n: usize, seed: u64) -> Result<CoefficientTuple> {
    check_shape(d, n)?;
    let mut rng = Lcg64::new(seed);
    let values = (0..n).map(|_| (0..=d).map(|_| sample_rational(&mut rng)).collect()).collect();
    CoefficientTuple::new(d, n, values)
}
