//! Cochain calculus: alternating and symmetric multilinear maps, wedge
//! products, the Chevalley–Eilenberg differential, covariant derivatives
//! and curvature.
//!
//! All operations are generic over the scalar kind, so the same code runs
//! on rational cochains and on cochains whose entries are polynomials in
//! simplex parameters.

mod cochain;
mod ops;
mod product;
mod sym;
mod tuples;

pub use cochain::{alt, Cochain, RawMultilinear};
pub use ops::{ce_differential, compose_sym, covariant_derivative, curvature, wedge, LinearAction};
pub use product::BilinearProduct;
pub use sym::{sym_product, SymMultiMap};
