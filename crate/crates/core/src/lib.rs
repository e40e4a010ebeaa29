//! Resultant ideals of `n` univariate polynomials of degree `d`.
//!
//! The crate builds the cascading coefficient matrices `M_k`, expands their
//! maximal minors into exact polynomials, provides the weighted term order
//! under which each minor leads with its diagonal product, enumerates the
//! minor walks that index a square-free Gröbner basis, and carries a small
//! Buchberger engine plus sampling checks for certifying all of it.
//!
//! Everything is exact over the rationals and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cascade;
pub mod error;
pub mod geometry;
pub mod groebner;
pub mod minors;
pub mod ordering;
pub mod polyring;
pub mod rng;
pub mod upoly;
pub mod verify;
pub mod walks;

pub use error::{Error, Result};
pub use polyring::{Monomial, Polynomial, Rational, TermOrder, VariableId};

/// Checks the `(d, n)` pair shared by most entry points.
pub(crate) fn check_shape(d: usize, n: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::OutOfRange(alloc::format!("degree d = {d} must be at least 1")));
    }
    if n < 2 {
        return Err(Error::OutOfRange(alloc::format!("number of polynomials n = {n} must be at least 2")));
    }
    if d > 64 || n > 64 {
        return Err(Error::OutOfRange(alloc::format!("(d, n) = ({d}, {n}) is too large")));
    }
    Ok(())
}
