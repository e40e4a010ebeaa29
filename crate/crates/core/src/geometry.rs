//! Square-free monomial ideals, their coordinate-subspace components, and the
//! Chow-ring degree computation on `P¹ × P^{n−1+D}`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::minors::generators_for_basis;
use crate::ordering::{build_diagonal_weights, diagonal_order};
use crate::polyring::{Monomial, Polynomial, TermOrder, VariableId};
use crate::{Error, Result};

/// Minimal generators of a square-free monomial ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareFreeMonomialIdeal {
    generators: Vec<Monomial>,
}

impl SquareFreeMonomialIdeal {
    /// Drops generators divisible by another one; rejects non-square-free input.
    pub fn new(generators: Vec<Monomial>) -> Result<Self> {
        if let Some(m) = generators.iter().find(|m| !m.is_square_free()) {
            return Err(Error::Degenerate(format!("monomial {m} is not square-free")));
        }
        let mut gens: Vec<Monomial> = generators.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        gens.sort_by_key(Monomial::degree);
        let mut minimal: Vec<Monomial> = Vec::new();
        for g in gens {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        minimal.sort();
        Ok(SquareFreeMonomialIdeal { generators: minimal })
    }

    /// The ideal of leading monomials of `polys`.
    pub fn from_leading_terms(polys: &[Polynomial], order: &TermOrder) -> Result<Self> {
        let order = order.compile()?;
        let lts = polys.iter().map(|p| Ok(p.leading_term_compiled(&order)?.0)).collect::<Result<Vec<_>>>()?;
        Self::new(lts)
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    /// Whether `vars` meets the support of every generator.
    pub fn is_hit_by(&self, vars: &BTreeSet<VariableId>) -> bool {
        self.generators.iter().all(|g| g.variables().any(|v| vars.contains(&v)))
    }
}

/// `lt(G)` under the diagonal order, where `G` is the set of reduced-walk minors.
pub fn diagonal_initial_ideal(d: usize, n: usize) -> Result<SquareFreeMonomialIdeal> {
    let order = diagonal_order(&build_diagonal_weights(d, n)?);
    let polys: Vec<Polynomial> = generators_for_basis(d, n)?.into_iter().map(|g| g.poly).collect();
    SquareFreeMonomialIdeal::from_leading_terms(&polys, &order)
}

/// Inclusion-minimal sets of variables meeting every generator, i.e. the
/// minimal primes of the ideal, sorted.
///
/// Branches on the variables of the first generator not yet hit; the `i`-th
/// branch forbids the first `i − 1` variables, so each set is produced once.
pub fn minimal_primes(ideal: &SquareFreeMonomialIdeal) -> Vec<BTreeSet<VariableId>> {
    let edges: Vec<Vec<VariableId>> = ideal.generators.iter().map(|g| g.variables().collect()).collect();
    let mut out = Vec::new();
    let mut chosen = BTreeSet::new();
    let mut forbidden = BTreeSet::new();
    cover_search(&edges, &mut chosen, &mut forbidden, &mut out);
    out.sort();
    out
}

fn cover_search(
    edges: &[Vec<VariableId>],
    chosen: &mut BTreeSet<VariableId>,
    forbidden: &mut BTreeSet<VariableId>,
    out: &mut Vec<BTreeSet<VariableId>>,
) {
    let Some(edge) = edges.iter().find(|e| !e.iter().any(|v| chosen.contains(v))) else {
        if is_minimal_cover(edges, chosen) {
            out.push(chosen.clone());
        }
        return;
    };
    // a chosen variable whose every edge is already hit by others can never become necessary
    if !chosen.iter().all(|&v| has_private_edge(edges, chosen, v)) {
        return;
    }
    let mut newly_forbidden = Vec::new();
    for &v in edge {
        if forbidden.contains(&v) {
            continue;
        }
        chosen.insert(v);
        cover_search(edges, chosen, forbidden, out);
        chosen.remove(&v);
        forbidden.insert(v);
        newly_forbidden.push(v);
    }
    for v in newly_forbidden {
        forbidden.remove(&v);
    }
}

fn has_private_edge(edges: &[Vec<VariableId>], chosen: &BTreeSet<VariableId>, v: VariableId) -> bool {
    edges.iter().any(|e| e.contains(&v) && e.iter().all(|w| *w == v || !chosen.contains(w)))
}

fn is_minimal_cover(edges: &[Vec<VariableId>], chosen: &BTreeSet<VariableId>) -> bool {
    chosen.iter().all(|&v| has_private_edge(edges, chosen, v))
}

/// Projective dimension and degree of a union of coordinate subspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimDegree {
    /// `−1` for the empty variety.
    pub dim: i64,
    /// Number of components of top dimension.
    pub degree: usize,
    pub equidimensional: bool,
    pub components: Vec<BTreeSet<VariableId>>,
}

/// Dimension and degree of `V(I) ⊆ P^{ambient−1}`.
pub fn dim_and_degree(ideal: &SquareFreeMonomialIdeal, ambient: usize) -> DimDegree {
    let components = minimal_primes(ideal);
    let Some(min) = components.iter().map(BTreeSet::len).min() else {
        return DimDegree { dim: -1, degree: 0, equidimensional: true, components };
    };
    let degree = components.iter().filter(|c| c.len() == min).count();
    DimDegree { dim: ambient as i64 - 1 - min as i64, degree, equidimensional: degree == components.len(), components }
}

/// An element of `ℤ[H_1, H_2]/(H_1², H_2^{top+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowClass {
    top: usize,
    /// `coeffs[a][b]` is the coefficient of `H_1^a H_2^b`.
    coeffs: [Vec<i128>; 2],
}

impl ChowClass {
    pub fn zero(top: usize) -> Self {
        ChowClass { top, coeffs: [alloc::vec![0; top + 1], alloc::vec![0; top + 1]] }
    }

    /// `c_1 H_1 + c_2 H_2`.
    pub fn linear(top: usize, c1: i128, c2: i128) -> Self {
        let mut out = Self::zero(top);
        out.coeffs[1][0] = c1;
        if top >= 1 {
            out.coeffs[0][1] = c2;
        }
        out
    }

    /// `H_2^e`, zero once `e` exceeds the truncation.
    pub fn h2_power(top: usize, e: usize) -> Self {
        let mut out = Self::zero(top);
        if e <= top {
            out.coeffs[0][e] = 1;
        }
        out
    }

    pub fn coefficient(&self, h1: usize, h2: usize) -> i128 {
        if h1 > 1 || h2 > self.top {
            0
        } else {
            self.coeffs[h1][h2]
        }
    }

    pub fn mul(&self, other: &ChowClass) -> ChowClass {
        assert_eq!(self.top, other.top, "classes from different rings");
        let mut out = Self::zero(self.top);
        for a1 in 0..2 {
            for a2 in 0..2 - a1 {
                for (b1, x) in self.coeffs[a1].iter().enumerate().filter(|(_, x)| **x != 0) {
                    for (b2, y) in other.coeffs[a2].iter().enumerate().take(self.top + 1 - b1) {
                        out.coeffs[a1 + a2][b1 + b2] += x * y;
                    }
                }
            }
        }
        out
    }
}

/// Coefficient of `H_1 H_2^{n−1+D}` in `H_2^D ∏ (d_i H_1 + H_2)`, computed in
/// `ℤ[H_1, H_2]/(H_1², H_2^{n+D})` with `D = Σ d_i`.
pub fn chow_degree(degrees: &[u32]) -> Result<i128> {
    if degrees.len() < 2 {
        return Err(Error::OutOfRange(format!("need at least two polynomials, got {}", degrees.len())));
    }
    if degrees.contains(&0) {
        return Err(Error::OutOfRange("degrees must be positive".into()));
    }
    let n = degrees.len();
    let big_d: usize = degrees.iter().map(|&d| d as usize).sum();
    let top = n - 1 + big_d;
    let mut class = ChowClass::h2_power(top, big_d);
    for &d in degrees {
        class = class.mul(&ChowClass::linear(top, d as i128, 1));
    }
    Ok(class.coefficient(1, top))
}
