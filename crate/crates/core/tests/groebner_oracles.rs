mod common;

use std::collections::BTreeSet;

use common::*;
use resultant_core::groebner::{buchberger, check_s_pairs, eliminate_x, is_groebner_basis, Limits};
use resultant_core::minors::{enumerate_generators, generators_for_basis};
use resultant_core::ordering::{build_diagonal_weights, diagonal_order};
use resultant_core::polyring::{column_major_ranking, Monomial, Polynomial, TermOrder};
use resultant_core::walks::{enumerate_reduced, walk_leading_monomial};

#[test]
fn two_quadrics_eliminate_to_the_sylvester_resultant() {
    let ideal = eliminate_x(2, 2, &Limits::default()).unwrap();
    let basis = ideal.basis().unwrap();
    assert_eq!(basis.len(), 1);
    let syl = leibniz_det(&sylvester_matrix(2));
    assert!(basis[0] == syl || basis[0] == -&syl);
}

#[test]
fn basis_of_g_has_the_reduced_walk_leading_terms() {
    for (d, n) in [(2, 2), (2, 3), (3, 2), (2, 4)] {
        let order = diagonal_order(&build_diagonal_weights(d, n).unwrap());
        let g: Vec<Polynomial> = generators_for_basis(d, n).unwrap().into_iter().map(|r| r.poly).collect();
        let ideal = buchberger(g, order, &Limits::default()).unwrap();
        let leads: BTreeSet<Monomial> = ideal.leading_monomials().unwrap().into_iter().collect();
        let walks: BTreeSet<Monomial> = enumerate_reduced(d, n).unwrap().iter().map(walk_leading_monomial).collect();
        assert_eq!(leads, walks, "d={d} n={n}");
    }
}

#[test]
fn g_is_a_basis_under_the_diagonal_order_only() {
    let (d, n) = (2, 3);
    let g: Vec<Polynomial> = generators_for_basis(d, n).unwrap().into_iter().map(|r| r.poly).collect();
    let diag = diagonal_order(&build_diagonal_weights(d, n).unwrap());
    assert!(is_groebner_basis(&g, &diag).unwrap());
    let report = check_s_pairs(&g, &TermOrder::DegRevLex(column_major_ranking(d, n)), false).unwrap();
    assert!(!report.is_groebner());
}

#[test]
fn runs_are_deterministic() {
    let gens: Vec<Polynomial> = enumerate_generators(2, 3).unwrap().into_iter().map(|g| g.poly).collect();
    let order = TermOrder::DegRevLex(column_major_ranking(2, 3));
    let a = buchberger(gens.clone(), order.clone(), &Limits::default()).unwrap();
    let mut reversed = gens;
    reversed.reverse();
    let b = buchberger(reversed, order, &Limits::default()).unwrap();
    // reduced bases are unique, so even the input order must not matter
    assert_eq!(a.basis(), b.basis());
}

#[test]
fn initial_ideals_are_square_free() {
    let gens: Vec<Polynomial> = enumerate_generators(2, 3).unwrap().into_iter().map(|g| g.poly).collect();
    for order in
        [TermOrder::DegRevLex(column_major_ranking(2, 3)), diagonal_order(&build_diagonal_weights(2, 3).unwrap())]
    {
        let ideal = buchberger(gens.clone(), order, &Limits::default()).unwrap();
        assert!(ideal.leading_monomials().unwrap().iter().all(Monomial::is_square_free));
    }
}
