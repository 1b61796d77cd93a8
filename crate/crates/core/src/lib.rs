//! Exact Chevalley–Eilenberg cohomology of finite-dimensional Lie algebras,
//! together with primary (Chern–Weil/Lecomte) and secondary (Bott–Lecomte)
//! characteristic classes of Lie algebra extensions.
//!
//! All arithmetic is over the rationals, with polynomials in the simplex
//! parameters where a family of sections is integrated, so every identity
//! checked by this crate holds by exact equality.
//!
//! The runnable programs in `examples/` walk through each capability:
//!
//! ```bash
//! cargo run --example oscillator_secondary
//! cargo run --example heisenberg_chern_weil
//! ```

pub mod characteristic;
pub mod cli;
pub mod exact;
pub mod extension;
pub mod io;
pub mod lie;
pub mod multilinear;

mod error;

pub use error::{Error, Result};
