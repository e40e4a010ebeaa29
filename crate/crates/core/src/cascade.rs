//! The cascading coefficient matrices `M_k`.
//!
//! `M_k` stacks `k` copies of the `n × (d+1)` coefficient block, each shifted
//! one column to the right of the one above, giving an `nk × (d+k)` matrix.
//! Row `(i, j)` (block `i`, polynomial `j`) holds `a_{j,c-i}` in column `c`
//! whenever `0 ≤ c - i ≤ d`. All indices here are 1-based.

use alloc::vec::Vec;
use core::fmt;

use crate::polyring::{Polynomial, VariableId};
use crate::{check_shape, Error, Result};

/// A row of `M_k`: block `i ∈ 1..=k`, polynomial `j ∈ 1..=n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RowLabel {
    pub block: usize,
    pub poly: usize,
}

impl RowLabel {
    pub fn new(block: usize, poly: usize) -> Self {
        RowLabel { block, poly }
    }
}

impl fmt::Display for RowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.block, self.poly)
    }
}

/// Strictly increasing list of row labels selecting a square submatrix.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RowSelection {
    rows: Vec<RowLabel>,
}

impl RowSelection {
    pub fn new(rows: Vec<RowLabel>) -> Result<Self> {
        if rows.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::OutOfRange("row selection must be strictly increasing".into()));
        }
        if rows.iter().any(|r| r.block == 0 || r.poly == 0) {
            return Err(Error::OutOfRange("row labels are 1-based".into()));
        }
        Ok(RowSelection { rows })
    }

    pub fn rows(&self) -> &[RowLabel] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CascadeMatrix {
    d: usize,
    n: usize,
    k: usize,
    entries: Vec<Vec<Polynomial>>,
}

pub fn build_cascade(d: usize, n: usize, k: usize) -> Result<CascadeMatrix> {
    check_shape(d, n)?;
    if k == 0 || k > d {
        return Err(Error::OutOfRange(alloc::format!("cascade depth k = {k} must lie in 1..={d}")));
    }
    let mut entries = Vec::with_capacity(n * k);
    for i in 1..=k {
        for j in 1..=n {
            let row = (1..=d + k)
                .map(|c| match c.checked_sub(i) {
                    Some(off) if off <= d => Polynomial::var(VariableId::a(j, off)),
                    _ => Polynomial::zero(),
                })
                .collect();
            entries.push(row);
        }
    }
    Ok(CascadeMatrix { d, n, k, entries })
}

impl CascadeMatrix {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn num_rows(&self) -> usize {
        self.n * self.k
    }

    pub fn num_cols(&self) -> usize {
        self.d + self.k
    }

    /// Size of the maximal minors, `d + k`.
    pub fn minor_size(&self) -> usize {
        self.d + self.k
    }

    /// Position of `label` in the flattened row list (0-based).
    pub fn row_index(&self, label: RowLabel) -> Result<usize> {
        if !(1..=self.k).contains(&label.block) || !(1..=self.n).contains(&label.poly) {
            return Err(Error::OutOfRange(alloc::format!("row {label} outside M_{}", self.k)));
        }
        Ok((label.block - 1) * self.n + (label.poly - 1))
    }

    pub fn row_label(&self, index: usize) -> RowLabel {
        RowLabel { block: index / self.n + 1, poly: index % self.n + 1 }
    }

    pub fn labels(&self) -> impl Iterator<Item = RowLabel> + '_ {
        (0..self.num_rows()).map(|r| self.row_label(r))
    }

    /// Entry at 1-based `(row label, column)`.
    pub fn entry(&self, label: RowLabel, col: usize) -> Result<&Polynomial> {
        let r = self.row_index(label)?;
        if !(1..=self.num_cols()).contains(&col) {
            return Err(Error::OutOfRange(alloc::format!("column {col} outside M_{}", self.k)));
        }
        Ok(&self.entries[r][col - 1])
    }

    /// The variable at 0-based `(row, col)`, or `None` for a structural zero.
    pub fn variable_at(&self, row: usize, col: usize) -> Option<VariableId> {
        let label = self.row_label(row);
        let col = col + 1;
        let off = col.checked_sub(label.block)?;
        (off <= self.d).then(|| VariableId::a(label.poly, off))
    }

    pub fn rows(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    /// Maps every entry through `f`; structural zeros are passed as `None`.
    pub fn specialize<T, F: FnMut(Option<VariableId>) -> T>(&self, mut f: F) -> Vec<Vec<T>> {
        (0..self.num_rows()).map(|r| (0..self.num_cols()).map(|c| f(self.variable_at(r, c))).collect()).collect()
    }

    pub fn full_selection(&self) -> RowSelection {
        RowSelection { rows: self.labels().collect() }
    }

    /// Checks that `sel` picks `d + k` rows of this matrix.
    pub fn check_selection(&self, sel: &RowSelection) -> Result<()> {
        if sel.len() != self.minor_size() {
            return Err(Error::OutOfRange(alloc::format!(
                "selection has {} rows, maximal minors of M_{} need {}",
                sel.len(),
                self.k,
                self.minor_size()
            )));
        }
        for &r in sel.rows() {
            self.row_index(r)?;
        }
        Ok(())
    }
}

/// Nonzero entries of row `(i, j)` as `(column, variable)`, columns `i..=i+d`.
pub fn row_entries(m: &CascadeMatrix, i: usize, j: usize) -> Result<Vec<(usize, VariableId)>> {
    let label = RowLabel::new(i, j);
    let r = m.row_index(label)?;
    Ok((0..m.num_cols()).filter_map(|c| m.variable_at(r, c).map(|v| (c + 1, v))).collect())
}

impl fmt::Display for CascadeMatrix {
    /// Aligned text grid of variable names and zeros.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = self.specialize(|v| match v {
            Some(v) => alloc::format!("{v}"),
            None => alloc::string::String::from("0"),
        });
        let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for row in &cells {
            for (c, cell) in row.iter().enumerate() {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{cell:>width$}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: usize, j: usize) -> VariableId {
        VariableId::a(i, j)
    }

    #[test]
    fn the_six_by_four_matrix() {
        let m = build_cascade(2, 3, 2).unwrap();
        assert_eq!((m.num_rows(), m.num_cols()), (6, 4));
        for i in 1..=3 {
            let top: Vec<_> = (0..4).map(|c| m.variable_at(i - 1, c)).collect();
            assert_eq!(top, [Some(a(i, 0)), Some(a(i, 1)), Some(a(i, 2)), None]);
            let bottom: Vec<_> = (0..4).map(|c| m.variable_at(i + 2, c)).collect();
            assert_eq!(bottom, [None, Some(a(i, 0)), Some(a(i, 1)), Some(a(i, 2))]);
        }
        for r in 0..m.num_rows() {
            let nz = m.rows()[r].iter().filter(|p| !p.is_zero()).count();
            assert_eq!(nz, 3);
        }
    }

    #[test]
    fn square_and_sylvester_shapes() {
        let m = build_cascade(2, 3, 1).unwrap();
        assert_eq!((m.num_rows(), m.num_cols()), (3, 3));
        assert_eq!(m.entry(RowLabel::new(1, 2), 2).unwrap(), &Polynomial::var(a(2, 1)));
        let s = build_cascade(2, 2, 2).unwrap();
        assert_eq!((s.num_rows(), s.num_cols()), (4, 4));
    }

    #[test]
    fn row_entry_lists() {
        let m = build_cascade(2, 3, 2).unwrap();
        assert_eq!(row_entries(&m, 2, 1).unwrap(), [(2, a(1, 0)), (3, a(1, 1)), (4, a(1, 2))]);
        let m = build_cascade(1, 2, 1).unwrap();
        assert_eq!(row_entries(&m, 1, 2).unwrap(), [(1, a(2, 0)), (2, a(2, 1))]);
        let m = build_cascade(3, 2, 3).unwrap();
        assert_eq!(row_entries(&m, 3, 2).unwrap(), [(3, a(2, 0)), (4, a(2, 1)), (5, a(2, 2)), (6, a(2, 3))]);
        assert!(row_entries(&m, 4, 1).is_err());
        assert!(row_entries(&m, 1, 3).is_err());
    }

    #[test]
    fn parameter_errors() {
        assert!(build_cascade(2, 3, 0).is_err());
        assert!(build_cascade(2, 3, 3).is_err());
        assert!(build_cascade(0, 3, 1).is_err());
        assert!(build_cascade(2, 1, 1).is_err());
        assert!(build_cascade(1, 2, 1).is_ok());
    }

    #[test]
    fn selections_must_increase() {
        assert!(RowSelection::new(alloc::vec![RowLabel::new(1, 2), RowLabel::new(1, 1)]).is_err());
        assert!(RowSelection::new(alloc::vec![RowLabel::new(1, 1), RowLabel::new(1, 1)]).is_err());
        assert!(RowSelection::new(alloc::vec![RowLabel::new(1, 1), RowLabel::new(2, 1)]).is_ok());
    }
}
