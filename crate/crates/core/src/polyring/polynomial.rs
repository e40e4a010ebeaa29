use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{CompiledOrder, Monomial, Rational, TermOrder, VariableId};
use crate::{Error, Result};

/// Sparse polynomial with exact rational coefficients. Zero coefficients are
/// never stored; the zero polynomial has no terms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

/// What [`Polynomial::substitute`] does with variables the assignment does not mention.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Unmapped {
    Keep,
    Reject,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn integer(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(v: VariableId) -> Self {
        Self::term(Monomial::var(v), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c·m` in place.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            Some(d0) => degs.all(|d| d == d0),
            None => true,
        }
    }

    /// Variables that occur in some term, sorted.
    pub fn variables(&self) -> Vec<VariableId> {
        let mut v: Vec<VariableId> = self.terms.keys().flat_map(|m| m.variables()).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(u, c)| (u.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The order-maximal term.
    pub fn leading_term(&self, order: &TermOrder) -> Result<(Monomial, Rational)> {
        self.leading_term_compiled(&order.compile()?)
    }

    pub fn leading_term_compiled(&self, order: &CompiledOrder) -> Result<(Monomial, Rational)> {
        let mut best: Option<(Vec<u32>, &Monomial, &Rational)> = None;
        for (m, c) in &self.terms {
            let dense = order.dense(m)?;
            let better = match &best {
                None => true,
                Some((b, _, _)) => order.cmp_dense(&dense, b) == Ordering::Greater,
            };
            if better {
                best = Some((dense, m, c));
            }
        }
        best.map(|(_, m, c)| (m.clone(), c.clone())).ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, order: &TermOrder) -> Result<Monomial> {
        Ok(self.leading_term(order)?.0)
    }

    /// Terms sorted from largest to smallest under `order`.
    pub fn sorted_terms(&self, order: &CompiledOrder) -> Result<Vec<(Monomial, Rational)>> {
        let mut keyed = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            keyed.push((order.dense(m)?, m.clone(), c.clone()));
        }
        keyed.sort_by(|a, b| order.cmp_dense(&b.0, &a.0));
        Ok(keyed.into_iter().map(|(_, m, c)| (m, c)).collect())
    }

    /// Remainder of multivariate division by `basis`.
    ///
    /// Repeatedly cancels the order-largest term that some basis leading
    /// monomial divides, trying basis elements in list order. Terms no leading
    /// monomial divides move to the remainder.
    pub fn normal_form(&self, basis: &[Polynomial], order: &TermOrder) -> Result<Polynomial> {
        let order = order.compile()?;
        let mut leads = Vec::with_capacity(basis.len());
        for b in basis {
            let (m, c) = b.leading_term_compiled(&order)?;
            leads.push((m, c));
        }
        for v in self.variables() {
            order.index(v).ok_or(Error::RingMismatch(v))?;
        }
        let mut p = self.clone();
        let mut rem = Polynomial::zero();
        while !p.is_zero() {
            let (m, c) = p.leading_term_compiled(&order)?;
            let hit = leads.iter().position(|(lm, _)| lm.divides(&m));
            match hit {
                Some(idx) => {
                    let (lm, lc) = &leads[idx];
                    let q = m.div(lm).expect("divisibility checked");
                    let factor = &c / lc;
                    p = &p - &basis[idx].mul_monomial(&q).scale(&factor);
                }
                None => {
                    p.terms.remove(&m);
                    rem.add_term(m, c);
                }
            }
        }
        Ok(rem)
    }

    /// Replaces variables by polynomials. This is the ring homomorphism fixed
    /// by `assignment`; unmapped variables follow `unmapped`.
    pub fn substitute(&self, assignment: &BTreeMap<VariableId, Polynomial>, unmapped: Unmapped) -> Result<Polynomial> {
        if unmapped == Unmapped::Reject {
            if let Some(v) = self.variables().into_iter().find(|v| !assignment.contains_key(v)) {
                return Err(Error::Unmapped(v));
            }
        }
        let mut powers: BTreeMap<(VariableId, u32), Polynomial> = BTreeMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut acc = Polynomial::constant(c.clone());
            for &(v, e) in m.powers() {
                let image = match assignment.get(&v) {
                    Some(p) => {
                        powers.entry((v, e)).or_insert_with(|| p.pow(e));
                        powers[&(v, e)].clone()
                    }
                    None => Polynomial::term(Monomial::from_powers([(v, e)]), Rational::one()),
                };
                acc = &acc * &image;
                if acc.is_zero() {
                    break;
                }
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    /// Value at a rational point; every occurring variable must be assigned.
    pub fn evaluate(&self, point: &BTreeMap<VariableId, Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.powers() {
                let x = point.get(&v).ok_or(Error::Unmapped(v))?;
                t *= num_traits::pow(x.clone(), e as usize);
                if t.is_zero() {
                    break;
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Integer coefficients with gcd 1 and a positive leading coefficient under `order`.
    pub fn content_normalize(&self, order: &TermOrder) -> Result<Polynomial> {
        let (_, lc) = self.leading_term(order)?;
        let den_lcm = self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num_gcd = self.terms.values().fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * (&den_lcm / c.denom()))));
        let mut factor = Rational::new(den_lcm, num_gcd);
        if lc.is_negative() {
            factor = -factor;
        }
        Ok(self.scale(&factor))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (u, c) in &self.terms {
            for (v, d) in &rhs.terms {
                out.add_term(u.mul(v), c * d);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl From<VariableId> for Polynomial {
    fn from(v: VariableId) -> Self {
        Polynomial::var(v)
    }
}

impl fmt::Display for Polynomial {
    /// Terms in structural monomial order; exporters choose their own ordering.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::row_major_ranking;

    fn a(i: usize, j: usize) -> Polynomial {
        Polynomial::var(VariableId::a(i, j))
    }
    fn x() -> Polynomial {
        Polynomial::var(VariableId::X)
    }
    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }
    fn c(n: i64) -> Polynomial {
        Polynomial::integer(n)
    }

    #[test]
    fn ring_arithmetic() {
        let p = &a(1, 0) * &a(2, 1);
        assert_eq!(&p + &Polynomial::zero(), p);
        assert_eq!(&(&x() - &c(1)) * &(&x() + &c(1)), &x().pow(2) - &c(1));
        let det = &(&a(1, 0) * &a(2, 1)) + &(&(-&a(1, 1)) * &a(2, 0));
        assert_eq!(det.num_terms(), 2);
        assert!(det.is_homogeneous());
        assert_eq!(&det - &det, Polynomial::zero());
    }

    #[test]
    fn leading_terms() {
        let p = &(&x().pow(2) - &x().scale(&q(3, 1))) + &c(2);
        let (m, coeff) = p.leading_term(&TermOrder::Lex(alloc::vec![VariableId::X])).unwrap();
        assert_eq!(m, Monomial::from_powers([(VariableId::X, 2)]));
        assert_eq!(coeff, q(1, 1));
        assert_eq!(Polynomial::zero().leading_term(&TermOrder::Lex(alloc::vec![])), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn normal_forms() {
        let lex = TermOrder::Lex(alloc::vec![VariableId::X]);
        let p = &x().pow(2) + &c(1);
        assert_eq!(p.normal_form(&[x()], &lex).unwrap(), c(1));
        assert!(p.normal_form(core::slice::from_ref(&p), &lex).unwrap().is_zero());

        let ord = TermOrder::DegRevLex(row_major_ranking(1, 2));
        let det = &(&a(1, 0) * &a(2, 1)) - &(&a(1, 1) * &a(2, 0));
        assert!(det.normal_form(core::slice::from_ref(&det), &ord).unwrap().is_zero());
        assert_eq!(x().normal_form(core::slice::from_ref(&det), &ord), Err(Error::RingMismatch(VariableId::X)));
    }

    #[test]
    fn substitution() {
        let det = &(&a(1, 0) * &a(2, 1)) - &(&a(1, 1) * &a(2, 0));
        let mut map = BTreeMap::new();
        map.insert(VariableId::a(1, 0), Polynomial::one());
        let got = det.substitute(&map, Unmapped::Keep).unwrap();
        assert_eq!(got, &a(2, 1) - &(&a(1, 1) * &a(2, 0)));
        assert!(matches!(det.substitute(&map, Unmapped::Reject), Err(Error::Unmapped(_))));

        let mut at_one = BTreeMap::new();
        at_one.insert(VariableId::X, Polynomial::one());
        assert!((&x().pow(2) - &c(1)).substitute(&at_one, Unmapped::Reject).unwrap().is_zero());

        // a common root r planted in two linear forms kills the 2x2 determinant
        let b = |i| Polynomial::var(VariableId::b(i, 0));
        let r = Polynomial::var(VariableId::Root);
        let mut plant = BTreeMap::new();
        plant.insert(VariableId::a(1, 0), b(1));
        plant.insert(VariableId::a(1, 1), -&(&r * &b(1)));
        plant.insert(VariableId::a(2, 0), b(2));
        plant.insert(VariableId::a(2, 1), -&(&r * &b(2)));
        assert!(det.substitute(&plant, Unmapped::Reject).unwrap().is_zero());
    }

    #[test]
    fn content_normalization() {
        let ord = TermOrder::Lex(alloc::vec![VariableId::X]);
        let p = &x().scale(&q(1, 2)) - &c(1);
        assert_eq!(p.content_normalize(&ord).unwrap(), &x() - &c(2));
        let p = &x().scale(&q(-2, 1)) + &c(4);
        assert_eq!(p.content_normalize(&ord).unwrap(), &x() - &c(2));

        let ord = TermOrder::DegRevLex(row_major_ranking(1, 1));
        let p = &a(1, 0).scale(&q(6, 1)) - &a(1, 1).scale(&q(9, 1));
        assert_eq!(p.content_normalize(&ord).unwrap(), &a(1, 0).scale(&q(2, 1)) - &a(1, 1).scale(&q(3, 1)));
        assert_eq!(Polynomial::zero().content_normalize(&ord), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn evaluation() {
        let p = &(&x().pow(2) - &x().scale(&q(3, 1))) + &c(2);
        let mut pt = BTreeMap::new();
        pt.insert(VariableId::X, q(1, 1));
        assert!(p.evaluate(&pt).unwrap().is_zero());
        pt.insert(VariableId::X, q(1, 2));
        assert_eq!(p.evaluate(&pt).unwrap(), q(3, 4));
    }
}
