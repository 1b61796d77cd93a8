//! Exact integration over the projected standard simplex
//! `D_n = { t in R^n : t_i >= 0, t_1 + ... + t_n <= 1 }` with Lebesgue measure.
//!
//! Integrating over `D_n` is the same as integrating over the standard
//! simplex with its surface measure normalised by the parametrisation
//! volume factor, so all values stay rational.

use super::{MultiPoly, Rational};
use crate::{Error, Result};

/// `∫_{D_n} t_1^{a_1} ... t_n^{a_n} dt = (a_1! ... a_n!) / (n + a_1 + ... + a_n)!`.
pub fn integrate_monomial_simplex(n: usize, exponents: &[u32]) -> Result<Rational> {
    if n == 0 {
        return Err(Error::Degree("simplex integration needs at least one variable".into()));
    }
    if exponents.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "exponent vector of length {} for a {n}-simplex",
            exponents.len()
        )));
    }
    let numer: Rational = exponents.iter().map(|&a| Rational::factorial(a as u64)).product();
    let total: u64 = n as u64 + exponents.iter().map(|&a| a as u64).sum::<u64>();
    Ok(numer / Rational::factorial(total))
}

/// Integral of `p` over `D_n` with `n = p.nvars()`.
pub fn integrate_poly_simplex(p: &MultiPoly) -> Result<Rational> {
    let n = p.nvars();
    if p.support_len() > n {
        return Err(Error::DimensionMismatch(format!(
            "polynomial uses {} variables but declares {n}",
            p.support_len()
        )));
    }
    let mut acc = Rational::zero();
    for (m, c) in p.iter() {
        acc += c * &integrate_monomial_simplex(n, &m.padded(n))?;
    }
    Ok(acc)
}
