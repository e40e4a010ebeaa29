//! Gröbner bases: Buchberger's algorithm, certification of bases, the
//! elimination oracle for the resultant ideal, ideal equality, and the
//! comparison of the top-depth minors with all minors on the chart
//! `a_{1,0} = 1`.

mod engine;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use engine::{Ctx, DPoly};

use crate::minors::{enumerate_generators, top_minors};
use crate::polyring::{row_major_ranking, Monomial, Polynomial, TermOrder, Unmapped, VariableId};
use crate::{check_shape, Error, Result};

/// Bounds on a Buchberger run. Exceeding one is an error, never a truncated answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_pairs: u64,
    pub max_basis: usize,
    pub max_degree: Option<u32>,
    /// Re-check the Buchberger criterion on every computed basis.
    pub self_check: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_pairs: 1_000_000, max_basis: 5_000, max_degree: None, self_check: true }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    pub pairs_selected: u64,
    pub zero_reductions: u64,
    pub basis_additions: u64,
    pub criteria_skips: u64,
}

/// The variables of a polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingDescriptor {
    variables: Vec<VariableId>,
}

impl RingDescriptor {
    pub fn new(mut variables: Vec<VariableId>) -> Self {
        variables.sort();
        variables.dedup();
        RingDescriptor { variables }
    }

    /// `K[a_{i,j}]` for `n` polynomials of degree `d`, optionally extended.
    pub fn coefficients(d: usize, n: usize, extra: &[VariableId]) -> Self {
        let mut v = row_major_ranking(d, n);
        v.extend_from_slice(extra);
        Self::new(v)
    }

    pub fn variables(&self) -> &[VariableId] {
        &self.variables
    }

    pub fn contains(&self, v: VariableId) -> bool {
        self.variables.binary_search(&v).is_ok()
    }
}

/// Generators of an ideal together with a term order and, once certified, a
/// reduced Gröbner basis for that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPresentation {
    pub ring: RingDescriptor,
    pub generators: Vec<Polynomial>,
    pub order: TermOrder,
    pub certified_basis: Option<Vec<Polynomial>>,
}

impl IdealPresentation {
    /// The ring is the set of variables ranked by `order`.
    pub fn new(generators: Vec<Polynomial>, order: TermOrder) -> Result<Self> {
        let ring = RingDescriptor::new(order.variables());
        for g in &generators {
            for v in g.variables() {
                if !ring.contains(v) {
                    return Err(Error::RingMismatch(v));
                }
            }
        }
        Ok(IdealPresentation { ring, generators, order, certified_basis: None })
    }

    pub fn is_certified(&self) -> bool {
        self.certified_basis.is_some()
    }

    pub fn certify(&mut self, limits: &Limits) -> Result<Stats> {
        self.certify_with(limits, &|| false)
    }

    /// Computes the reduced Gröbner basis if missing. `interrupt` is polled
    /// once per critical pair.
    pub fn certify_with(&mut self, limits: &Limits, interrupt: &dyn Fn() -> bool) -> Result<Stats> {
        if self.certified_basis.is_some() {
            return Ok(Stats::default());
        }
        let (basis, stats) = groebner_basis(&self.generators, &self.order, limits, interrupt)?;
        self.certified_basis = Some(basis);
        Ok(stats)
    }

    pub fn basis(&self) -> Option<&[Polynomial]> {
        self.certified_basis.as_deref()
    }

    fn require_basis(&self) -> Result<&[Polynomial]> {
        self.basis().ok_or_else(|| Error::Degenerate("ideal presentation has no certified basis".into()))
    }

    /// Ideal membership through the certified basis.
    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        reduces_to_zero(p, self.require_basis()?, &self.order)
    }

    /// Leading monomials of the certified basis, i.e. minimal generators of the initial ideal.
    pub fn leading_monomials(&self) -> Result<Vec<Monomial>> {
        let order = self.order.compile()?;
        self.require_basis()?.iter().map(|g| Ok(g.leading_term_compiled(&order)?.0)).collect()
    }
}

/// `lcm/lt(p) · p / lc(p) − lcm/lt(q) · q / lc(q)`.
pub fn s_polynomial(p: &Polynomial, q: &Polynomial, order: &TermOrder) -> Result<Polynomial> {
    let order = order.compile()?;
    let (mp, cp) = p.leading_term_compiled(&order)?;
    let (mq, cq) = q.leading_term_compiled(&order)?;
    let lcm = mp.lcm(&mq);
    let left = p.mul_monomial(&lcm.div(&mp).expect("lcm is a multiple")).scale(&cp.recip());
    let right = q.mul_monomial(&lcm.div(&mq).expect("lcm is a multiple")).scale(&cq.recip());
    Ok(&left - &right)
}

fn import_all(ctx: &Ctx, polys: &[Polynomial]) -> Result<Vec<DPoly>> {
    polys.iter().map(|p| ctx.import(p)).collect()
}

/// Reduced Gröbner basis as content-normalized polynomials, increasing by leading monomial.
pub fn groebner_basis(
    gens: &[Polynomial],
    order: &TermOrder,
    limits: &Limits,
    interrupt: &dyn Fn() -> bool,
) -> Result<(Vec<Polynomial>, Stats)> {
    let ctx = Ctx::new(order.compile()?);
    let input = import_all(&ctx, gens)?;
    let mut stats = Stats::default();
    let basis = engine::groebner(&ctx, input, limits, interrupt, &mut stats)?;
    if limits.self_check {
        let bad = engine::nonzero_s_pairs(&ctx, &basis, true);
        if !bad.is_empty() {
            return Err(Error::Degenerate(alloc::format!(
                "internal error: {} S-pairs of the computed basis do not reduce to zero",
                bad.len()
            )));
        }
    }
    Ok((basis.iter().map(|p| ctx.export(p)).collect(), stats))
}

/// Runs Buchberger on `gens` and returns the certified presentation.
pub fn buchberger(gens: Vec<Polynomial>, order: TermOrder, limits: &Limits) -> Result<IdealPresentation> {
    buchberger_with(gens, order, limits, &|| false).map(|(p, _)| p)
}

pub fn buchberger_with(
    gens: Vec<Polynomial>,
    order: TermOrder,
    limits: &Limits,
    interrupt: &dyn Fn() -> bool,
) -> Result<(IdealPresentation, Stats)> {
    let mut ideal = IdealPresentation::new(gens, order)?;
    let stats = ideal.certify_with(limits, interrupt)?;
    Ok((ideal, stats))
}

/// Whether `p` reduces to zero modulo `basis` (which should be a Gröbner basis for a faithful membership test).
pub fn reduces_to_zero(p: &Polynomial, basis: &[Polynomial], order: &TermOrder) -> Result<bool> {
    let ctx = Ctx::new(order.compile()?);
    let b = import_all(&ctx, basis)?;
    let refs: Vec<&DPoly> = b.iter().collect();
    Ok(ctx.reduces_to_zero(&ctx.import(p)?, &refs))
}

/// Outcome of checking the Buchberger criterion on a candidate basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SPairReport {
    pub basis_size: usize,
    pub pairs_checked: usize,
    /// `(i, j, remainder)` for every S-polynomial with a nonzero remainder.
    pub failures: Vec<(usize, usize, Polynomial)>,
}

impl SPairReport {
    pub fn is_groebner(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Reduces the S-polynomial of every pair of `basis` modulo `basis`.
/// With `skip_coprime` pairs with coprime leading monomials are skipped.
pub fn check_s_pairs(basis: &[Polynomial], order: &TermOrder, skip_coprime: bool) -> Result<SPairReport> {
    let ctx = Ctx::new(order.compile()?);
    let b = import_all(&ctx, basis)?;
    if b.iter().any(DPoly::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    let n = b.len();
    let pairs_checked = if skip_coprime {
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).count()
    } else {
        n * n.saturating_sub(1) / 2
    };
    let failures =
        engine::nonzero_s_pairs(&ctx, &b, skip_coprime).into_iter().map(|(i, j, r)| (i, j, ctx.export(&r))).collect();
    Ok(SPairReport { basis_size: n, pairs_checked, failures })
}

pub fn is_groebner_basis(basis: &[Polynomial], order: &TermOrder) -> Result<bool> {
    Ok(check_s_pairs(basis, order, true)?.is_groebner())
}

/// `x` above every coefficient variable, ties by degrevlex on the `a_{i,j}`.
pub fn elimination_order(d: usize, n: usize) -> TermOrder {
    TermOrder::block(TermOrder::Lex(alloc::vec![VariableId::X]), TermOrder::DegRevLex(row_major_ranking(d, n)))
}

/// The polynomials `f_i = a_{i,0} x^d + … + a_{i,d}`.
pub fn system_polynomials(d: usize, n: usize) -> Vec<Polynomial> {
    (1..=n)
        .map(|i| {
            Polynomial::from_terms((0..=d).map(|j| {
                (
                    Monomial::from_powers([(VariableId::a(i, j), 1), (VariableId::X, (d - j) as u32)]),
                    crate::Rational::from_integer(1.into()),
                )
            }))
        })
        .collect()
}

/// `⟨f_1, …, f_n⟩ ∩ K[a_{i,j}]`, computed by a Gröbner basis under
/// [`elimination_order`]. The result is certified for degrevlex on the
/// coefficient variables (row-major ranking).
pub fn eliminate_x(d: usize, n: usize, limits: &Limits) -> Result<IdealPresentation> {
    eliminate_x_with(d, n, limits, &|| false)
}

pub fn eliminate_x_with(
    d: usize,
    n: usize,
    limits: &Limits,
    interrupt: &dyn Fn() -> bool,
) -> Result<IdealPresentation> {
    check_shape(d, n)?;
    let (basis, _) = groebner_basis(&system_polynomials(d, n), &elimination_order(d, n), limits, interrupt)?;
    let free: Vec<Polynomial> =
        basis.into_iter().filter(|p| p.variables().iter().all(|v| *v != VariableId::X)).collect();
    let mut out = IdealPresentation::new(free.clone(), TermOrder::DegRevLex(row_major_ranking(d, n)))?;
    out.certified_basis = Some(free);
    Ok(out)
}

/// Whether the two presentations generate the same ideal: every generator of
/// each reduces to zero modulo the other's certified basis. Uncertified sides
/// are certified first (on a copy).
pub fn ideal_equal(a: &IdealPresentation, b: &IdealPresentation, limits: &Limits) -> Result<bool> {
    ideal_equal_with(a, b, limits, &|| false)
}

pub fn ideal_equal_with(
    a: &IdealPresentation,
    b: &IdealPresentation,
    limits: &Limits,
    interrupt: &dyn Fn() -> bool,
) -> Result<bool> {
    if a.ring != b.ring {
        let stray = a
            .ring
            .variables()
            .iter()
            .chain(b.ring.variables())
            .find(|v| !a.ring.contains(**v) || !b.ring.contains(**v))
            .copied()
            .expect("rings differ in some variable");
        return Err(Error::RingMismatch(stray));
    }
    let mut a = a.clone();
    let mut b = b.clone();
    a.certify_with(limits, interrupt)?;
    b.certify_with(limits, interrupt)?;
    for g in &a.generators {
        if !b.contains(g)? {
            return Ok(false);
        }
    }
    for g in &b.generators {
        if !a.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartReport {
    pub equal: bool,
    /// Size of the reduced basis of the top-depth minors on the chart.
    pub top_basis_size: usize,
    /// Size of the reduced basis of all minors on the chart.
    pub all_basis_size: usize,
}

/// Sets `a_{1,0} = 1` in the `2d × 2d` minors of `M_d` and in all maximal
/// minors of every `M_k`, then checks the two dehomogenized ideals agree.
pub fn chart_equal(d: usize, n: usize, limits: &Limits) -> Result<bool> {
    Ok(chart_equal_with(d, n, limits, &|| false)?.equal)
}

pub fn chart_equal_with(d: usize, n: usize, limits: &Limits, interrupt: &dyn Fn() -> bool) -> Result<ChartReport> {
    check_shape(d, n)?;
    let mut chart = BTreeMap::new();
    chart.insert(VariableId::a(1, 0), Polynomial::one());
    let dehomogenize = |gens: Vec<crate::minors::GeneratorRecord>| -> Result<Vec<Polynomial>> {
        gens.iter()
            .map(|g| g.poly.substitute(&chart, Unmapped::Keep))
            .filter(|p| !matches!(p, Ok(q) if q.is_zero()))
            .collect()
    };
    let top = dehomogenize(top_minors(d, n)?)?;
    let all = dehomogenize(enumerate_generators(d, n)?)?;
    let order = TermOrder::DegRevLex(row_major_ranking(d, n));
    let mut top = IdealPresentation::new(top, order.clone())?;
    let mut all = IdealPresentation::new(all, order)?;
    top.certify_with(limits, interrupt)?;
    all.certify_with(limits, interrupt)?;
    let equal = ideal_equal_with(&top, &all, limits, interrupt)?;
    Ok(ChartReport {
        equal,
        top_basis_size: top.basis().map_or(0, <[_]>::len),
        all_basis_size: all.basis().map_or(0, <[_]>::len),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Rational;

    fn x() -> Polynomial {
        Polynomial::var(VariableId::X)
    }
    fn y() -> Polynomial {
        Polynomial::var(VariableId::Root)
    }
    fn c(k: i64) -> Polynomial {
        Polynomial::integer(k)
    }
    fn lex_xy() -> TermOrder {
        TermOrder::Lex(alloc::vec![VariableId::X, VariableId::Root])
    }

    #[test]
    fn s_polynomials() {
        let p = &x().pow(2) - &c(1);
        assert!(s_polynomial(&p, &p, &lex_xy()).unwrap().is_zero());
        let xy = &x() * &y();
        assert!(s_polynomial(&x().pow(2), &xy, &lex_xy()).unwrap().is_zero());
        let q = &xy - &c(1);
        assert_eq!(s_polynomial(&p, &q, &lex_xy()).unwrap(), &x() - &y());
        assert_eq!(s_polynomial(&Polynomial::zero(), &q, &lex_xy()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn single_generator_is_its_own_basis() {
        let p = &x().pow(2) - &c(1);
        let ideal = buchberger(alloc::vec![p.clone()], lex_xy(), &Limits::default()).unwrap();
        assert_eq!(ideal.basis().unwrap(), &[p]);
    }

    #[test]
    fn textbook_basis() {
        // ⟨x² − 1, xy − 1⟩ = ⟨x − y, y² − 1⟩ under lex x > y
        let gens = alloc::vec![&x().pow(2) - &c(1), &(&x() * &y()) - &c(1)];
        let ideal = buchberger(gens, lex_xy(), &Limits::default()).unwrap();
        assert_eq!(ideal.basis().unwrap(), &[&y().pow(2) - &c(1), &x() - &y()]);
        assert!(ideal.contains(&(&x().pow(3) - &y())).unwrap());
        assert!(!ideal.contains(&x()).unwrap());
    }

    #[test]
    fn ideal_equality_basics() {
        let a = IdealPresentation::new(alloc::vec![x()], lex_xy()).unwrap();
        let b = IdealPresentation::new(alloc::vec![x().pow(2)], lex_xy()).unwrap();
        assert!(ideal_equal(&a, &a, &Limits::default()).unwrap());
        assert!(!ideal_equal(&a, &b, &Limits::default()).unwrap());
        let other = IdealPresentation::new(alloc::vec![x()], TermOrder::Lex(alloc::vec![VariableId::X])).unwrap();
        assert!(matches!(ideal_equal(&a, &other, &Limits::default()), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn limits_are_errors() {
        let gens = alloc::vec![&x().pow(2) - &c(1), &(&x() * &y()) - &c(1)];
        let tight = Limits { max_pairs: 0, ..Limits::default() };
        assert!(matches!(buchberger(gens.clone(), lex_xy(), &tight), Err(Error::ResourceExhausted(_))));
        let tiny = Limits { max_basis: 1, ..Limits::default() };
        assert!(matches!(buchberger(gens.clone(), lex_xy(), &tiny), Err(Error::ResourceExhausted(_))));
        let low = Limits { max_degree: Some(1), ..Limits::default() };
        assert!(matches!(buchberger(gens.clone(), lex_xy(), &low), Err(Error::ResourceExhausted(_))));
        let stop = buchberger_with(gens, lex_xy(), &Limits::default(), &|| true);
        assert!(matches!(stop, Err(Error::ResourceExhausted(_))));
    }

    #[test]
    fn elimination_of_two_linear_forms() {
        let ideal = eliminate_x(1, 2, &Limits::default()).unwrap();
        let a = |i, j| Polynomial::var(VariableId::a(i, j));
        let det = &(&a(1, 0) * &a(2, 1)) - &(&a(1, 1) * &a(2, 0));
        let basis = ideal.basis().unwrap();
        assert_eq!(basis.len(), 1);
        assert!(basis[0] == det || basis[0] == -&det);
    }

    #[test]
    fn engine_remainder_is_a_multiple_of_the_rational_one() {
        let gens = alloc::vec![&x().pow(2) - &c(1), &(&x() * &y()).scale(&Rational::new(3.into(), 2.into())) - &c(1)];
        let order = lex_xy();
        let p = &(&x().pow(3) + &y().pow(2)) + &c(5);
        let rational = p.normal_form(&gens, &order).unwrap();
        let ctx = Ctx::new(order.compile().unwrap());
        let b = import_all(&ctx, &gens).unwrap();
        let refs: Vec<&DPoly> = b.iter().collect();
        let fraction_free = ctx.export(&ctx.reduce(&ctx.import(&p).unwrap(), &refs));
        let ratio = fraction_free.leading_term(&order).unwrap().1 / rational.leading_term(&order).unwrap().1;
        assert_eq!(rational.scale(&ratio), fraction_free);
    }

    #[test]
    fn small_charts() {
        assert!(chart_equal(1, 2, &Limits::default()).unwrap());
        assert!(chart_equal(2, 2, &Limits::default()).unwrap());
    }
}
