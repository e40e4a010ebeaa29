//! Dense univariate polynomials over the rationals.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::polyring::{rational_to_string, Rational};

/// Coefficients stored in ascending degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly { coeffs: alloc::vec![Rational::one()] }
    }

    pub fn from_ascending(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    /// `c[0] x^m + c[1] x^{m-1} + … + c[m]`.
    pub fn from_descending(coeffs: &[Rational]) -> Self {
        Self::from_ascending(coeffs.iter().rev().cloned().collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => {
                let inv = lc.recip();
                UPoly { coeffs: self.coeffs.iter().map(|c| c * &inv).collect() }
            }
        }
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = alloc::vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_ascending(out)
    }

    /// Remainder of division by a nonzero `divisor`.
    pub fn rem(&self, divisor: &UPoly) -> UPoly {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.coeffs[dd].recip();
        let mut r = self.coeffs.clone();
        while r.len() > dd {
            let top = r.len() - 1;
            let q = &r[top] * &lc_inv;
            if !q.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    r[top - dd + i] -= &q * c;
                }
            }
            r.pop();
        }
        Self::from_ascending(r)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", rational_to_string(c))?;
            match e {
                0 => {}
                1 => write!(f, "*x")?,
                _ => write!(f, "*x^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(desc: &[i64]) -> UPoly {
        UPoly::from_descending(&desc.iter().map(|&c| Rational::from_integer(c.into())).collect::<Vec<_>>())
    }

    #[test]
    fn gcd_of_shared_factor() {
        assert_eq!(p(&[1, -3, 2]).gcd(&p(&[1, -1, 0])), p(&[1, -1]));
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[1, 0, -1])), p(&[1]));
        assert_eq!(p(&[2, 4]).gcd(&UPoly::zero()), p(&[1, 2]));
        assert!(UPoly::zero().gcd(&UPoly::zero()).is_zero());
    }

    #[test]
    fn degree_and_evaluation() {
        let f = p(&[0, 0, 3, -1]);
        assert_eq!(f.degree(), Some(1));
        assert_eq!(f.evaluate(&Rational::new(1.into(), 3.into())), Rational::zero());
        assert_eq!(UPoly::zero().degree(), None);
    }

    #[test]
    fn remainder() {
        // x^3 + 1 = (x + 1)(x^2 - x + 1)
        assert!(p(&[1, 0, 0, 1]).rem(&p(&[1, 1])).is_zero());
        let quarter = UPoly::from_descending(&[Rational::new(1.into(), 4.into())]);
        assert_eq!(p(&[1, 0, 0]).rem(&p(&[2, 1])), quarter);
        assert_eq!(p(&[1, -1]).mul(&p(&[1, 1])), p(&[1, 0, -1]));
    }
}
