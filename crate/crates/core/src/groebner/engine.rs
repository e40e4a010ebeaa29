//! Fraction-free Buchberger engine over dense exponent vectors.
//!
//! Polynomials are kept primitive over ℤ with terms sorted from largest to
//! smallest. Reduction scales the running polynomial instead of dividing, so
//! a remainder is only defined up to a nonzero rational factor, which is all
//! that zero tests and leading monomials need.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Limits, Stats};
use crate::polyring::{CompiledOrder, Polynomial, Rational};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Mono {
    exps: Vec<u32>,
    deg: u32,
    mask: u64,
}

impl Mono {
    fn new(exps: Vec<u32>) -> Self {
        let deg = exps.iter().sum();
        let mask = exps.iter().enumerate().filter(|(_, &e)| e > 0).fold(0u64, |m, (i, _)| m | (1u64 << (i % 64)));
        Mono { exps, deg, mask }
    }

    pub(crate) fn degree(&self) -> u32 {
        self.deg
    }

    fn divides(&self, other: &Mono) -> bool {
        self.mask & !other.mask == 0 && self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    fn mul(&self, other: &Mono) -> Mono {
        Mono::new(self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, assuming divisibility.
    fn div(&self, other: &Mono) -> Mono {
        Mono::new(self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect())
    }

    fn lcm(&self, other: &Mono) -> Mono {
        Mono::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    fn coprime(&self, other: &Mono) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

pub(crate) type Term = (Mono, BigInt);

/// Nonzero terms, strictly decreasing in the engine's order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct DPoly {
    terms: Vec<Term>,
}

impl DPoly {
    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn lead(&self) -> &Mono {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.deg).max().unwrap_or(0)
    }

    /// Divides out the content and makes the leading coefficient positive.
    fn make_primitive(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in &mut self.terms {
                *c /= &g;
            }
        }
    }
}

pub(crate) struct Ctx {
    order: CompiledOrder,
}

impl Ctx {
    pub(crate) fn new(order: CompiledOrder) -> Self {
        Ctx { order }
    }

    fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        self.order.cmp_dense(&a.exps, &b.exps)
    }

    pub(crate) fn import(&self, p: &Polynomial) -> Result<DPoly> {
        let den = p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut terms = Vec::with_capacity(p.num_terms());
        for (m, c) in p.terms() {
            let mono = Mono::new(self.order.dense(m)?);
            terms.push((mono, c.numer() * (&den / c.denom())));
        }
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        let mut out = DPoly { terms };
        out.make_primitive();
        Ok(out)
    }

    pub(crate) fn export(&self, p: &DPoly) -> Polynomial {
        Polynomial::from_terms(
            p.terms.iter().map(|(m, c)| (self.order.sparse(&m.exps), Rational::from_integer(c.clone()))),
        )
    }

    /// `a·p − b·q·g`, merging the two sorted term lists.
    fn combine(&self, a: &BigInt, p: &[Term], b: &BigInt, q: &Mono, g: &[Term]) -> Vec<Term> {
        let mut out = Vec::with_capacity(p.len() + g.len());
        let mut gi = g.iter().map(|(m, c)| (q.mul(m), c)).peekable();
        let mut pi = p.iter().peekable();
        loop {
            match (pi.peek(), gi.peek()) {
                (None, None) => break,
                (Some(_), None) => {
                    let (m, c) = pi.next().unwrap();
                    out.push((m.clone(), a * c));
                }
                (None, Some(_)) => {
                    let (m, c) = gi.next().unwrap();
                    out.push((m, -(b * c)));
                }
                (Some((pm, _)), Some((gm, _))) => match self.cmp(pm, gm) {
                    Ordering::Greater => {
                        let (m, c) = pi.next().unwrap();
                        out.push((m.clone(), a * c));
                    }
                    Ordering::Less => {
                        let (m, c) = gi.next().unwrap();
                        out.push((m, -(b * c)));
                    }
                    Ordering::Equal => {
                        let (m, c) = pi.next().unwrap();
                        let (_, d) = gi.next().unwrap();
                        let v = a * c - b * d;
                        if !v.is_zero() {
                            out.push((m.clone(), v));
                        }
                    }
                },
            }
        }
        out
    }

    /// S-polynomial, primitive.
    pub(crate) fn spoly(&self, f: &DPoly, g: &DPoly) -> DPoly {
        let lcm = f.lead().lcm(g.lead());
        let qf = lcm.div(f.lead());
        let qg = lcm.div(g.lead());
        let gcd = f.lc().gcd(g.lc());
        let a = g.lc() / &gcd;
        let b = f.lc() / &gcd;
        let scaled_f: Vec<Term> = f.terms[1..].iter().map(|(m, c)| (qf.mul(m), c.clone())).collect();
        let mut out = DPoly { terms: self.combine(&a, &scaled_f, &b, &qg, &g.terms[1..]) };
        out.make_primitive();
        out
    }

    /// Full reduction of `f` by `basis`: the order-largest reducible term is
    /// cancelled first, by the first basis element whose leading monomial
    /// divides it. The result is primitive.
    pub(crate) fn reduce(&self, f: &DPoly, basis: &[&DPoly]) -> DPoly {
        let mut rem: Vec<Term> = Vec::new();
        let mut p: Vec<Term> = f.terms.clone();
        let mut start = 0usize;
        let mut steps = 0usize;
        while start < p.len() {
            let (m, c) = &p[start];
            let hit = basis.iter().find(|g| g.lead().divides(m));
            match hit {
                None => {
                    rem.push(p[start].clone());
                    start += 1;
                }
                Some(g) => {
                    let q = m.div(g.lead());
                    let gcd = c.gcd(g.lc());
                    let a = g.lc() / &gcd;
                    let b = c / &gcd;
                    p = self.combine(&a, &p[start + 1..], &b, &q, &g.terms[1..]);
                    start = 0;
                    if !a.is_one() {
                        for (_, rc) in &mut rem {
                            *rc *= &a;
                        }
                    }
                    steps += 1;
                    if steps.is_multiple_of(32) {
                        shrink_content(&mut rem, &mut p);
                    }
                }
            }
        }
        let mut out = DPoly { terms: rem };
        out.make_primitive();
        out
    }

    pub(crate) fn reduces_to_zero(&self, f: &DPoly, basis: &[&DPoly]) -> bool {
        self.reduce(f, basis).is_zero()
    }
}

/// Divides the common content of the remainder and the unprocessed part.
fn shrink_content(rem: &mut [Term], p: &mut [Term]) {
    let mut g = BigInt::zero();
    for (_, c) in rem.iter().chain(p.iter()) {
        g = g.gcd(c);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() {
        return;
    }
    for (_, c) in rem.iter_mut().chain(p.iter_mut()) {
        *c /= &g;
    }
}

struct PairInfo {
    lcm: Mono,
}

/// Buchberger's algorithm with the Gebauer–Möller pair update (product and
/// chain criteria). Pairs are taken by smallest lcm degree, then smallest
/// index pair. Returns a reduced Gröbner basis, primitive, sorted by
/// increasing leading monomial.
pub(crate) fn groebner(
    ctx: &Ctx,
    gens: Vec<DPoly>,
    limits: &Limits,
    interrupt: &dyn Fn() -> bool,
    stats: &mut Stats,
) -> Result<Vec<DPoly>> {
    let mut polys: Vec<DPoly> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: BTreeMap<(u32, usize, usize), PairInfo> = BTreeMap::new();

    let add = |h: DPoly,
               polys: &mut Vec<DPoly>,
               active: &mut Vec<usize>,
               pairs: &mut BTreeMap<(u32, usize, usize), PairInfo>,
               stats: &mut Stats|
     -> Result<()> {
        if polys.len() >= limits.max_basis {
            return Err(Error::ResourceExhausted(alloc::format!("basis grew past {} polynomials", limits.max_basis)));
        }
        if let Some(bound) = limits.max_degree {
            if h.total_degree() > bound {
                return Err(Error::ResourceExhausted(alloc::format!(
                    "basis element of degree {} exceeds the degree bound {bound}",
                    h.total_degree()
                )));
            }
        }
        let hi = polys.len();
        polys.push(h);
        stats.basis_additions += 1;
        gebauer_moller(polys, active, pairs, hi, stats);
        Ok(())
    };

    for g in gens {
        if g.is_zero() {
            continue;
        }
        let basis: Vec<&DPoly> = active.iter().map(|&i| &polys[i]).collect();
        let h = ctx.reduce(&g, &basis);
        if !h.is_zero() {
            add(h, &mut polys, &mut active, &mut pairs, stats)?;
        }
    }

    while let Some((&key, _)) = pairs.iter().next() {
        pairs.remove(&key);
        let (_, i, j) = key;
        stats.pairs_selected += 1;
        if stats.pairs_selected > limits.max_pairs {
            return Err(Error::ResourceExhausted(alloc::format!("more than {} critical pairs", limits.max_pairs)));
        }
        if interrupt() {
            return Err(Error::ResourceExhausted("interrupted".to_string()));
        }
        let s = ctx.spoly(&polys[i], &polys[j]);
        let basis: Vec<&DPoly> = active.iter().map(|&i| &polys[i]).collect();
        let h = ctx.reduce(&s, &basis);
        if h.is_zero() {
            stats.zero_reductions += 1;
        } else {
            add(h, &mut polys, &mut active, &mut pairs, stats)?;
        }
    }

    let minimal: Vec<&DPoly> = active.iter().map(|&i| &polys[i]).collect();
    Ok(interreduce(ctx, &minimal))
}

fn gebauer_moller(
    polys: &[DPoly],
    active: &mut Vec<usize>,
    pairs: &mut BTreeMap<(u32, usize, usize), PairInfo>,
    hi: usize,
    stats: &mut Stats,
) {
    let h = polys[hi].lead().clone();
    let cands: Vec<(usize, Mono, bool)> = active
        .iter()
        .map(|&g| {
            let lg = polys[g].lead();
            (g, h.lcm(lg), h.coprime(lg))
        })
        .collect();

    // chain criterion among the new pairs
    let mut kept: Vec<usize> = Vec::new();
    let mut removed = alloc::vec![false; cands.len()];
    for (idx, (_, lcm, coprime)) in cands.iter().enumerate() {
        let dominated = !coprime
            && cands.iter().enumerate().any(|(jdx, (_, other, _))| {
                jdx != idx && !removed[jdx] && (jdx > idx || kept.contains(&jdx)) && other.divides(lcm)
            });
        if dominated {
            removed[idx] = true;
            stats.criteria_skips += 1;
        } else {
            kept.push(idx);
        }
    }

    // old pairs made redundant by h
    let stale: Vec<(u32, usize, usize)> = pairs
        .iter()
        .filter(|(&(_, i, j), info)| {
            h.divides(&info.lcm) && h.lcm(polys[i].lead()) != info.lcm && h.lcm(polys[j].lead()) != info.lcm
        })
        .map(|(k, _)| *k)
        .collect();
    for k in stale {
        pairs.remove(&k);
        stats.criteria_skips += 1;
    }

    for idx in kept {
        let (g, lcm, coprime) = &cands[idx];
        if *coprime {
            stats.criteria_skips += 1;
            continue;
        }
        let key = (lcm.degree(), *g.min(&hi), *g.max(&hi));
        pairs.insert(key, PairInfo { lcm: lcm.clone() });
    }

    active.retain(|&g| !h.divides(polys[g].lead()));
    active.push(hi);
}

/// Tail-reduces a minimal basis and sorts it by increasing leading monomial.
pub(crate) fn interreduce(ctx: &Ctx, basis: &[&DPoly]) -> Vec<DPoly> {
    let mut minimal: Vec<&DPoly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(j, other)| j != i && other.lead().divides(g.lead()) && (other.lead() != g.lead() || j < i));
        if !redundant && !g.is_zero() {
            minimal.push(g);
        }
    }
    let mut out: Vec<DPoly> = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let others: Vec<&DPoly> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| *p).collect();
        // no other leading monomial divides the head, so full reduction only touches the tail
        let r = ctx.reduce(g, &others);
        debug_assert!(!r.is_zero() && r.lead() == g.lead());
        out.push(r);
    }
    out.sort_by(|a, b| ctx.cmp(a.lead(), b.lead()));
    out
}

/// Every S-polynomial (optionally skipping coprime pairs) reduces to zero.
pub(crate) fn nonzero_s_pairs(ctx: &Ctx, basis: &[DPoly], skip_coprime: bool) -> Vec<(usize, usize, DPoly)> {
    let refs: Vec<&DPoly> = basis.iter().collect();
    let mut out = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if skip_coprime && basis[i].lead().coprime(basis[j].lead()) {
                continue;
            }
            let r = ctx.reduce(&ctx.spoly(&basis[i], &basis[j]), &refs);
            if !r.is_zero() {
                out.push((i, j, r));
            }
        }
    }
    out
}
