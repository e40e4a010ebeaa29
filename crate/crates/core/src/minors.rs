//! Symbolic maximal minors of the cascade matrices.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::cascade::{build_cascade, CascadeMatrix, RowSelection};
use crate::polyring::{Polynomial, TermOrder};
use crate::walks::{enumerate_reduced, enumerate_walks, rows_to_walk, walk_to_rows, MinorWalk};
use crate::{check_shape, Result};

/// One determinantal generator: the maximal minor of `M_k` on `selection`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorRecord {
    pub k: usize,
    pub selection: RowSelection,
    pub walk: MinorWalk,
    pub poly: Polynomial,
    pub degree: usize,
}

impl GeneratorRecord {
    /// Primitive integer form with positive leading coefficient under `order`.
    pub fn normalized(&self, order: &TermOrder) -> Result<Polynomial> {
        self.poly.content_normalize(order)
    }
}

/// Laplace expansion of square submatrices of one cascade matrix.
///
/// Expansion always runs along the leftmost remaining column, so a partial
/// minor is determined by its row set alone (its columns are the trailing
/// `|rows|` ones). Partial minors are memoized on the row bitmask and shared
/// across every maximal minor of the same matrix.
pub struct MinorExpander<'a> {
    matrix: &'a CascadeMatrix,
    memo: BTreeMap<u64, Polynomial>,
}

impl<'a> MinorExpander<'a> {
    pub fn new(matrix: &'a CascadeMatrix) -> Self {
        assert!(matrix.num_rows() <= 64, "row bitmasks hold at most 64 rows");
        MinorExpander { matrix, memo: BTreeMap::new() }
    }

    /// Determinant of the selected rows, rows in selection order, columns in natural order.
    pub fn det(&mut self, sel: &RowSelection) -> Result<Polynomial> {
        self.matrix.check_selection(sel)?;
        let mut mask = 0u64;
        for &r in sel.rows() {
            mask |= 1 << self.matrix.row_index(r)?;
        }
        Ok(self.expand(mask))
    }

    fn expand(&mut self, mask: u64) -> Polynomial {
        let size = mask.count_ones() as usize;
        if size == 0 {
            return Polynomial::one();
        }
        if let Some(p) = self.memo.get(&mask) {
            return p.clone();
        }
        let col = self.matrix.num_cols() - size;
        let mut total = Polynomial::zero();
        let mut position = 0usize;
        let mut rest = mask;
        while rest != 0 {
            let row = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if let Some(v) = self.matrix.variable_at(row, col) {
                let sub = self.expand(mask & !(1 << row));
                if !sub.is_zero() {
                    let term = &sub * &Polynomial::var(v);
                    total = if position.is_multiple_of(2) { &total + &term } else { &total - &term };
                }
            }
            position += 1;
        }
        self.memo.insert(mask, total.clone());
        total
    }
}

/// Determinant of one maximal minor.
pub fn minor_det(m: &CascadeMatrix, sel: &RowSelection) -> Result<Polynomial> {
    MinorExpander::new(m).det(sel)
}

fn records_for_walks(m: &CascadeMatrix, walks: Vec<MinorWalk>) -> Result<Vec<GeneratorRecord>> {
    let mut exp = MinorExpander::new(m);
    let mut out = Vec::with_capacity(walks.len());
    for walk in walks {
        let selection = walk_to_rows(&walk);
        let poly = exp.det(&selection)?;
        out.push(GeneratorRecord { k: m.k(), selection, walk, poly, degree: m.minor_size() });
    }
    out.sort_by(|a, b| a.selection.cmp(&b.selection));
    Ok(out)
}

/// The nonzero maximal minors of `M_k`. Zero minors are those whose walk
/// leaves the lattice and are never expanded.
pub fn generators_of_depth(d: usize, n: usize, k: usize) -> Result<Vec<GeneratorRecord>> {
    let m = build_cascade(d, n, k)?;
    if m.num_rows() < m.minor_size() {
        return Ok(Vec::new());
    }
    records_for_walks(&m, enumerate_walks(d, n, k)?)
}

/// Nonzero maximal minors of every `M_k`, `k = 1..=d`.
pub fn enumerate_generators(d: usize, n: usize) -> Result<Vec<GeneratorRecord>> {
    check_shape(d, n)?;
    let mut out = Vec::new();
    for k in 1..=d {
        out.extend(generators_of_depth(d, n, k)?);
    }
    Ok(out)
}

/// The minors indexed by reduced walks; the Gröbner basis candidate `G`.
pub fn generators_for_basis(d: usize, n: usize) -> Result<Vec<GeneratorRecord>> {
    check_shape(d, n)?;
    let mut by_depth: BTreeMap<usize, Vec<MinorWalk>> = BTreeMap::new();
    for w in enumerate_reduced(d, n)? {
        by_depth.entry(w.depth()).or_default().push(w);
    }
    let mut out = Vec::new();
    for (k, walks) in by_depth {
        let m = build_cascade(d, n, k)?;
        out.extend(records_for_walks(&m, walks)?);
    }
    Ok(out)
}

/// The `2d × 2d` minors of `M_d` alone.
pub fn top_minors(d: usize, n: usize) -> Result<Vec<GeneratorRecord>> {
    generators_of_depth(d, n, d)
}

/// Walk of a selection, for callers holding only the selection.
pub fn selection_walk(sel: &RowSelection, d: usize) -> Result<MinorWalk> {
    rows_to_walk(sel, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{column_major_ranking, Monomial, VariableId};

    fn a(i: usize, j: usize) -> Polynomial {
        Polynomial::var(VariableId::a(i, j))
    }

    #[test]
    fn two_by_two() {
        let m = build_cascade(1, 2, 1).unwrap();
        let det = minor_det(&m, &m.full_selection()).unwrap();
        assert_eq!(det, &(&a(1, 0) * &a(2, 1)) - &(&a(1, 1) * &a(2, 0)));
    }

    #[test]
    fn three_by_three_lead_under_degrevlex() {
        let m = build_cascade(2, 3, 1).unwrap();
        let det = minor_det(&m, &m.full_selection()).unwrap();
        assert_eq!(det.num_terms(), 6);
        let ord = TermOrder::DegRevLex(column_major_ranking(2, 3));
        let lead = det.leading_monomial(&ord).unwrap();
        let a = VariableId::a;
        assert_eq!(lead, Monomial::product([a(3, 0), a(2, 1), a(1, 2)]));
    }

    #[test]
    fn generator_counts() {
        assert_eq!(enumerate_generators(2, 3).unwrap().len(), 16);
        assert_eq!(generators_of_depth(2, 3, 1).unwrap().len(), 1);
        assert_eq!(generators_of_depth(2, 3, 2).unwrap().len(), 15);
        assert_eq!(enumerate_generators(2, 2).unwrap().len(), 1);
        assert_eq!(enumerate_generators(1, 3).unwrap().len(), 3);
        assert_eq!(generators_for_basis(2, 2).unwrap().len(), 1);
        assert_eq!(generators_for_basis(1, 2).unwrap().len(), 1);
    }

    #[test]
    fn generators_are_homogeneous_and_multilinear_per_row() {
        for g in enumerate_generators(2, 3).unwrap() {
            assert!(g.poly.is_homogeneous());
            assert_eq!(g.poly.total_degree(), Some(g.degree as u32));
            assert!(g.poly.terms().all(|(_, c)| c.is_integer()));
            // every term takes exactly one entry from each selected row
            for (m, _) in g.poly.terms() {
                for &(v, e) in m.powers() {
                    let (i, _) = v.coeff_indices().unwrap();
                    let rows_of_i = g.selection.rows().iter().filter(|r| r.poly == i).count();
                    assert!(e as usize <= rows_of_i);
                }
            }
        }
    }
}
