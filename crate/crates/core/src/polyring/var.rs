use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::Error;

/// A ring variable, identified by its kind and indices.
///
/// Coefficient variables `a_{i,j}` use 1-based `i` (which polynomial) and
/// 0-based `j` (which coefficient, `j = 0` multiplies `x^d`). `Root` and
/// `Cofactor` are the auxiliary symbols `r` and `b_{i,j}` used when planting a
/// common root symbolically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VariableId {
    Coeff { i: u16, j: u16 },
    X,
    Root,
    Cofactor { i: u16, j: u16 },
}

impl VariableId {
    pub fn a(i: usize, j: usize) -> Self {
        VariableId::Coeff { i: i as u16, j: j as u16 }
    }

    pub fn b(i: usize, j: usize) -> Self {
        VariableId::Cofactor { i: i as u16, j: j as u16 }
    }

    /// `(i, j)` for a coefficient variable.
    pub fn coeff_indices(&self) -> Option<(usize, usize)> {
        match *self {
            VariableId::Coeff { i, j } => Some((i as usize, j as usize)),
            _ => None,
        }
    }

    pub fn is_coefficient(&self) -> bool {
        matches!(self, VariableId::Coeff { .. })
    }

    /// Whether this is a coefficient variable valid for polynomials of degree `d`, `n` of them.
    pub fn in_shape(&self, d: usize, n: usize) -> bool {
        match self.coeff_indices() {
            Some((i, j)) => (1..=n).contains(&i) && j <= d,
            None => false,
        }
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VariableId::Coeff { i, j } => write!(f, "a_{i}_{j}"),
            VariableId::X => f.write_str("x"),
            VariableId::Root => f.write_str("r"),
            VariableId::Cofactor { i, j } => write!(f, "b_{i}_{j}"),
        }
    }
}

impl FromStr for VariableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(alloc::format!("unknown variable name {s:?}"));
        match s {
            "x" => return Ok(VariableId::X),
            "r" => return Ok(VariableId::Root),
            _ => {}
        }
        let mut parts = s.split('_');
        let head = parts.next().ok_or_else(bad)?;
        let i: u16 = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let j: u16 = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        if parts.next().is_some() || i == 0 {
            return Err(bad());
        }
        match head {
            "a" => Ok(VariableId::Coeff { i, j }),
            "b" => Ok(VariableId::Cofactor { i, j }),
            _ => Err(bad()),
        }
    }
}

impl From<VariableId> for String {
    fn from(v: VariableId) -> String {
        alloc::format!("{v}")
    }
}

/// `a_{1,0} > a_{1,1} > … > a_{1,d} > a_{2,0} > … > a_{n,d}`.
pub fn row_major_ranking(d: usize, n: usize) -> Vec<VariableId> {
    let mut out = Vec::with_capacity(n * (d + 1));
    for i in 1..=n {
        for j in 0..=d {
            out.push(VariableId::a(i, j));
        }
    }
    out
}

/// `a_{1,0} > a_{2,0} > … > a_{n,0} > a_{1,1} > … > a_{n,d}`: the ranking of a
/// ring declared as `QQ[a_1..a_n, b_1..b_n, …]` with one letter per coefficient column.
pub fn column_major_ranking(d: usize, n: usize) -> Vec<VariableId> {
    let mut out = Vec::with_capacity(n * (d + 1));
    for j in 0..=d {
        for i in 1..=n {
            out.push(VariableId::a(i, j));
        }
    }
    out
}

/// All coefficient variables in row-major order.
pub fn coefficient_variables(d: usize, n: usize) -> Vec<VariableId> {
    row_major_ranking(d, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn names_round_trip() {
        for v in [VariableId::a(3, 0), VariableId::X, VariableId::Root, VariableId::b(12, 4)] {
            assert_eq!(v.to_string().parse::<VariableId>().unwrap(), v);
        }
        assert!("a_0_1".parse::<VariableId>().is_err());
        assert!("c_1_1".parse::<VariableId>().is_err());
        assert!("a_1".parse::<VariableId>().is_err());
    }

    #[test]
    fn rankings_cover_all_coefficients() {
        let row = row_major_ranking(2, 3);
        let col = column_major_ranking(2, 3);
        assert_eq!(row.len(), 9);
        assert_eq!(col[..3], [VariableId::a(1, 0), VariableId::a(2, 0), VariableId::a(3, 0)]);
        let mut sorted = col.clone();
        sorted.sort();
        let mut row_sorted = row.clone();
        row_sorted.sort();
        assert_eq!(sorted, row_sorted);
    }
}
