//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use resultant_core::cascade::{build_cascade, RowLabel, RowSelection};
use resultant_core::polyring::{Monomial, Polynomial, Rational, VariableId};
use resultant_core::walks::is_minor_walk;

pub const GRID: [(usize, usize); 6] = [(1, 2), (2, 2), (2, 3), (3, 2), (3, 3), (2, 4)];

pub fn a(i: usize, j: usize) -> Polynomial {
    Polynomial::var(VariableId::a(i, j))
}

/// Determinant as the signed sum over all permutations.
pub fn leibniz_det(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Polynomial::zero();
    permute(&mut perm, 0, m, &mut total);
    total
}

fn permute(perm: &mut Vec<usize>, pos: usize, m: &[Vec<Polynomial>], total: &mut Polynomial) {
    if pos == perm.len() {
        let mut term = Polynomial::one();
        for (r, &c) in perm.iter().enumerate() {
            term = &term * &m[r][c];
            if term.is_zero() {
                return;
            }
        }
        if inversions(perm) % 2 == 1 {
            term = -&term;
        }
        *total = &*total + &term;
        return;
    }
    for i in pos..perm.len() {
        perm.swap(pos, i);
        permute(perm, pos + 1, m, total);
        perm.swap(pos, i);
    }
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len()).map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count()).sum()
}

/// Classical Sylvester matrix of `f_1` and `f_2`: `d` shifted rows of each.
pub fn sylvester_matrix(d: usize) -> Vec<Vec<Polynomial>> {
    let mut rows = Vec::new();
    for i in 1..=2 {
        for shift in 0..d {
            let mut row = vec![Polynomial::zero(); 2 * d];
            for j in 0..=d {
                row[shift + j] = a(i, j);
            }
            rows.push(row);
        }
    }
    rows
}

/// All `size`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, size, &mut Vec::new(), &mut out);
    out
}

/// Row selections of `M_k` whose minor is not identically zero, found by
/// expanding every maximal minor with [`leibniz_det`].
pub fn nonzero_selections_brute_force(d: usize, n: usize, k: usize) -> BTreeSet<RowSelection> {
    let m = build_cascade(d, n, k).unwrap();
    let size = d + k;
    let mut out = BTreeSet::new();
    if m.num_rows() < size {
        return out;
    }
    for rows in subsets(m.num_rows(), size) {
        let sub: Vec<Vec<Polynomial>> = rows.iter().map(|&r| m.rows()[r].clone()).collect();
        if !leibniz_det(&sub).is_zero() {
            let labels = rows.iter().map(|&r| RowLabel::new(r / n + 1, r % n + 1)).collect();
            out.insert(RowSelection::new(labels).unwrap());
        }
    }
    out
}

/// Product of the diagonal entries of the selected square submatrix.
pub fn diagonal_product(d: usize, n: usize, k: usize, sel: &RowSelection) -> Option<Monomial> {
    let m = build_cascade(d, n, k).unwrap();
    let mut vars = Vec::new();
    for (c, label) in sel.rows().iter().enumerate() {
        let r = (label.block - 1) * n + (label.poly - 1);
        vars.push(m.variable_at(r, c)?);
    }
    Some(Monomial::product(vars))
}

/// Every minor walk of length `d+1 ..= 2d`, by exhaustive search over all
/// lattice sequences satisfying the step rules.
pub fn all_minor_walks_brute_force(d: usize, n: usize) -> Vec<Vec<(usize, usize)>> {
    let points: Vec<(usize, usize)> = (1..=n).flat_map(|u| (0..=d).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    for len in d + 1..=2 * d {
        let mut cur = Vec::new();
        extend_any(&points, len, d, n, &mut cur, &mut out);
    }
    out
}

fn extend_any(
    points: &[(usize, usize)],
    len: usize,
    d: usize,
    n: usize,
    cur: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if cur.len() == len {
        if is_minor_walk(cur, d, n) {
            out.push(cur.clone());
        }
        return;
    }
    for &p in points {
        if let Some(&(u, v)) = cur.last() {
            // keep only legal steps so the search stays small
            let legal = p.1 <= v || (p.1 == v + 1 && p.0 > u);
            if !legal {
                continue;
            }
        } else if p.1 != 0 {
            continue;
        }
        cur.push(p);
        extend_any(points, len, d, n, cur, out);
        cur.pop();
    }
}

/// A walk is reduced when no nonempty set of its steps can be deleted
/// leaving a minor walk.
pub fn is_reduced_brute_force(steps: &[(usize, usize)], d: usize, n: usize) -> bool {
    let len = steps.len();
    for keep in 1..(1u32 << len) - 1 {
        let sub: Vec<(usize, usize)> = (0..len).filter(|i| keep & (1 << i) != 0).map(|i| steps[i]).collect();
        if is_minor_walk(&sub, d, n) {
            return false;
        }
    }
    true
}

/// `c_0 x^m + … + c_m` evaluated by Horner's rule.
pub fn horner(coeffs_desc: &[Rational], x: &Rational) -> Rational {
    coeffs_desc.iter().fold(Rational::from_integer(0.into()), |acc, c| acc * x + c)
}
