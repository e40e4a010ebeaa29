//! The diagonal-selecting weighted term order.
//!
//! Pick increments `x_{k,l}` (`k ∈ 1..=n`, `l ∈ 1..=d`) strictly increasing
//! along `x_{n,1} < x_{n-1,1} < … < x_{1,1} < x_{n,2} < … < x_{1,d}`, give
//! every `a_{k,d}` weight 1 and set `w_{k,l} = w_{k,l+1} + x_{k,l+1}`. Any
//! order refining these weights makes the diagonal product the leading term of
//! every maximal minor of every `M_k`. The canonical increments used here are
//! the consecutive integers `1..=nd` along that sequence.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::minors::generators_of_depth;
use crate::polyring::{row_major_ranking, Monomial, TermOrder, VariableId};
use crate::walks::walk_leading_monomial;
use crate::{check_shape, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalWeights {
    d: usize,
    n: usize,
    /// `increments[k-1][l-1] = x_{k,l}`
    increments: Vec<Vec<u64>>,
    /// `weights[k-1][l] = w_{k,l}`
    weights: Vec<Vec<u64>>,
}

pub fn build_diagonal_weights(d: usize, n: usize) -> Result<DiagonalWeights> {
    check_shape(d, n)?;
    let increments: Vec<Vec<u64>> =
        (1..=n).map(|k| (1..=d).map(|l| ((l - 1) * n + (n - k + 1)) as u64).collect()).collect();
    let weights = increments
        .iter()
        .map(|inc| {
            let mut w = alloc::vec![0u64; d + 1];
            w[d] = 1;
            for l in (0..d).rev() {
                w[l] = w[l + 1] + inc[l];
            }
            w
        })
        .collect();
    Ok(DiagonalWeights { d, n, increments, weights })
}

impl DiagonalWeights {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `x_{k,l}` for `k ∈ 1..=n`, `l ∈ 1..=d`.
    pub fn increment(&self, k: usize, l: usize) -> u64 {
        self.increments[k - 1][l - 1]
    }

    /// `w_{k,l}` for `k ∈ 1..=n`, `l ∈ 0..=d`.
    pub fn weight(&self, k: usize, l: usize) -> u64 {
        self.weights[k - 1][l]
    }

    pub fn weight_map(&self) -> BTreeMap<VariableId, u64> {
        let mut map = BTreeMap::new();
        for k in 1..=self.n {
            for l in 0..=self.d {
                map.insert(VariableId::a(k, l), self.weight(k, l));
            }
        }
        map
    }

    /// Weight of a monomial; variables other than the `a_{k,l}` weigh nothing.
    pub fn weight_of(&self, m: &Monomial) -> u64 {
        m.powers()
            .iter()
            .filter_map(|&(v, e)| {
                let (k, l) = v.coeff_indices()?;
                v.in_shape(self.d, self.n).then(|| self.weight(k, l) * e as u64)
            })
            .sum()
    }
}

/// Weights first, ties broken by degrevlex over `a_{1,0} > a_{1,1} > … > a_{n,d}`.
pub fn diagonal_order(dw: &DiagonalWeights) -> TermOrder {
    TermOrder::weighted(dw.weight_map(), TermOrder::DegRevLex(row_major_ranking(dw.d, dw.n)))
}

/// The diagonal order on a ring extended by `extra` variables, which form a
/// lexicographic block ranked above every coefficient variable.
pub fn diagonal_order_extended(dw: &DiagonalWeights, extra: &[VariableId]) -> TermOrder {
    TermOrder::block(TermOrder::Lex(extra.to_vec()), diagonal_order(dw))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalViolation {
    pub k: usize,
    pub walk: crate::walks::MinorWalk,
    pub expected: Monomial,
    pub found: Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalReport {
    pub d: usize,
    pub n: usize,
    /// Nonzero maximal minors examined, over all `k`.
    pub checked: usize,
    pub violations: Vec<DiagonalViolation>,
    /// Minors whose diagonal does not strictly out-weigh every other term.
    pub weak_dominance: usize,
}

impl DiagonalReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.weak_dominance == 0
    }
}

/// Expands every nonzero maximal minor of every `M_k` and compares its
/// leading monomial under [`diagonal_order`] with the walk product. Also
/// records whether the diagonal wins on weight alone.
pub fn verify_diagonal_property(d: usize, n: usize) -> Result<DiagonalReport> {
    let dw = build_diagonal_weights(d, n)?;
    let order = diagonal_order(&dw).compile()?;
    let mut report = DiagonalReport { d, n, checked: 0, violations: Vec::new(), weak_dominance: 0 };
    for k in 1..=d {
        for g in generators_of_depth(d, n, k)? {
            report.checked += 1;
            let expected = walk_leading_monomial(&g.walk);
            let (found, _) = g.poly.leading_term_compiled(&order)?;
            let top = dw.weight_of(&expected);
            let strict = g.poly.terms().all(|(m, _)| *m == expected || dw.weight_of(m) < top);
            if !strict {
                report.weak_dominance += 1;
            }
            if found != expected {
                report.violations.push(DiagonalViolation { k, walk: g.walk, expected, found });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::cmp::Ordering;

    #[test]
    fn canonical_weights_for_two_three() {
        let dw = build_diagonal_weights(2, 3).unwrap();
        let inc: Vec<u64> =
            [(3, 1), (2, 1), (1, 1), (3, 2), (2, 2), (1, 2)].iter().map(|&(k, l)| dw.increment(k, l)).collect();
        assert_eq!(inc, [1, 2, 3, 4, 5, 6]);
        assert!((1..=3).all(|k| dw.weight(k, 2) == 1));
        assert_eq!((dw.weight(1, 1), dw.weight(2, 1), dw.weight(3, 1)), (7, 6, 5));
        assert_eq!((dw.weight(1, 0), dw.weight(2, 0), dw.weight(3, 0)), (10, 8, 6));
    }

    #[test]
    fn canonical_weights_for_one_two() {
        let dw = build_diagonal_weights(1, 2).unwrap();
        assert_eq!((dw.increment(2, 1), dw.increment(1, 1)), (1, 2));
        assert_eq!((dw.weight(1, 1), dw.weight(2, 1)), (1, 1));
        assert_eq!((dw.weight(1, 0), dw.weight(2, 0)), (3, 2));
    }

    #[test]
    fn weights_strictly_decrease_along_rows() {
        for (d, n) in [(1, 2), (2, 3), (3, 3), (4, 5)] {
            let dw = build_diagonal_weights(d, n).unwrap();
            for k in 1..=n {
                assert_eq!(dw.weight(k, d), 1);
                for l in 0..d {
                    assert!(dw.weight(k, l) > dw.weight(k, l + 1));
                    assert_eq!(dw.weight(k, l) - dw.weight(k, l + 1), dw.increment(k, l + 1));
                }
            }
        }
    }

    #[test]
    fn diagonal_leads() {
        let a = VariableId::a;
        let dw = build_diagonal_weights(2, 3).unwrap();
        let ord = diagonal_order(&dw);
        let diag = Monomial::product([a(1, 0), a(2, 1), a(3, 2)]);
        let anti = Monomial::product([a(3, 0), a(2, 1), a(1, 2)]);
        assert_eq!(dw.weight_of(&diag), 17);
        assert_eq!(dw.weight_of(&anti), 13);
        assert_eq!(ord.compare(&diag, &anti).unwrap(), Ordering::Greater);
        let v = Monomial::var(a(2, 2));
        assert_eq!(ord.compare(&v, &v).unwrap(), Ordering::Equal);

        let dw = build_diagonal_weights(1, 2).unwrap();
        let ord = diagonal_order(&dw);
        let lead = Monomial::product([a(1, 0), a(2, 1)]);
        let other = Monomial::product([a(1, 1), a(2, 0)]);
        assert_eq!((dw.weight_of(&lead), dw.weight_of(&other)), (4, 3));
        assert_eq!(ord.compare(&lead, &other).unwrap(), Ordering::Greater);
    }

    #[test]
    fn verification_runs() {
        let r = verify_diagonal_property(2, 3).unwrap();
        assert_eq!(r.checked, 16);
        assert!(r.passed(), "{r:?}");
        let r = verify_diagonal_property(2, 2).unwrap();
        assert_eq!(r.checked, 1);
        assert!(r.passed());
        let r = verify_diagonal_property(3, 2).unwrap();
        assert_eq!(r.checked, 1);
        assert!(r.passed());
    }

    #[test]
    fn extended_ring_ranks_extras_first() {
        let dw = build_diagonal_weights(1, 2).unwrap();
        let ord = diagonal_order_extended(&dw, &[VariableId::X]);
        let x = Monomial::var(VariableId::X);
        let heavy = Monomial::from_powers([(VariableId::a(1, 0), 9)]);
        assert_eq!(ord.compare(&x, &heavy).unwrap(), Ordering::Greater);
    }
}
