//! Exact sparse multivariate polynomials over the rationals.

mod monomial;
mod order;
mod polynomial;
mod var;

pub use monomial::Monomial;
pub use order::{CompiledOrder, TermOrder};
pub use polynomial::{Polynomial, Unmapped};
pub use var::{coefficient_variables, column_major_ranking, row_major_ranking, VariableId};

/// Arbitrary precision rational coefficient.
pub type Rational = num_rational::BigRational;

/// Formats a rational as `num/den`, the only serialization used for coefficients.
pub fn rational_to_string(q: &Rational) -> alloc::string::String {
    alloc::format!("{}/{}", q.numer(), q.denom())
}

/// Parses `num/den` or a bare integer.
pub fn parse_rational(s: &str) -> crate::Result<Rational> {
    use core::str::FromStr;
    use num_bigint::BigInt;
    use num_traits::Zero;

    let s = s.trim();
    let bad = || crate::Error::Parse(alloc::format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}
