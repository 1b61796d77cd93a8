//! Exact scalars and the linear algebra built on them.
//!
//! Everything downstream is generic over [`Scalar`], which is implemented by
//! [`Rational`] and by [`MultiPoly`] (polynomials in the simplex parameters).
//! Rank, nullspace and solves are only provided over the rationals.

mod matrix;
mod poly;
mod rational;
mod simplex;

use std::fmt::Debug;

pub use matrix::{nullspace, rank, solve_linear, Matrix};
pub use poly::{Monomial, MultiPoly, PolyTerm};
pub use rational::Rational;
pub use simplex::{integrate_monomial_simplex, integrate_poly_simplex};

/// Exact commutative scalar ring used for cochain values.
///
/// Methods take references and return owned values so generic code never
/// needs higher-ranked operator bounds.
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: &Rational) -> Self;

    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn scale(&self, r: &Rational) -> Self;

    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.add_ref(other);
    }

    /// `self += a * b`, the hot path of every contraction.
    fn add_product(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        self.add_assign_ref(&a.mul_ref(b));
    }

    /// `self += r * a`.
    fn add_scaled(&mut self, a: &Self, r: &Rational) {
        if a.is_zero() || r.is_zero() {
            return;
        }
        self.add_assign_ref(&a.scale(r));
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self += a * b;
    }
    fn add_scaled(&mut self, a: &Self, r: &Rational) {
        self.add_product(a, r);
    }
}

/// Componentwise helpers on scalar vectors.
pub(crate) fn vec_zero<S: Scalar>(len: usize) -> Vec<S> {
    vec![S::zero(); len]
}

pub(crate) fn vec_add_assign<S: Scalar>(acc: &mut [S], v: &[S]) {
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            a.add_assign_ref(b);
        }
    }
}

pub(crate) fn vec_add_scaled<S: Scalar>(acc: &mut [S], v: &[S], r: &Rational) {
    for (a, b) in acc.iter_mut().zip(v) {
        a.add_scaled(b, r);
    }
}

pub(crate) fn vec_is_zero<S: Scalar>(v: &[S]) -> bool {
    v.iter().all(Scalar::is_zero)
}
