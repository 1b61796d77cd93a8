//! Lie algebras by structure constants, their representations, derivations
//! and semidirect products.

mod algebra;
mod representation;

pub use algebra::{
    check_jacobi, is_derivation, semidirect_product, JacobiReport, JacobiViolation, LieAlgebra,
};
pub use representation::{check_representation, Representation, RepresentationReport};

pub(crate) use algebra::unit;

use crate::exact::{Matrix, Rational};

/// Named algebras with fixed basis orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardAlgebra {
    /// Basis `e0, e1, ...`, all brackets zero.
    Abelian(usize),
    /// Basis `(p, q, z)` with `[p, q] = z`.
    Heisenberg3,
    /// Basis `(p, q, z, w)`: the Heisenberg algebra extended by the rotation
    /// derivation `w`, so `[w, p] = q`, `[w, q] = -p`, `[w, z] = 0`.
    Oscillator,
}

pub fn standard_algebra(which: StandardAlgebra) -> LieAlgebra {
    match which {
        StandardAlgebra::Abelian(d) => abelian(d),
        StandardAlgebra::Heisenberg3 => heisenberg3(),
        StandardAlgebra::Oscillator => oscillator(),
    }
}

pub fn abelian(d: usize) -> LieAlgebra {
    let basis = (0..d).map(|i| format!("e{i}")).collect();
    LieAlgebra::from_brackets(basis, Vec::new()).expect("abelian algebra is valid")
}

pub fn heisenberg3() -> LieAlgebra {
    let r = Rational::from;
    LieAlgebra::from_brackets(
        vec!["p".into(), "q".into(), "z".into()],
        vec![(0, 1, vec![r(0), r(0), r(1)])],
    )
    .expect("Heisenberg algebra is valid")
}

/// The derivation of the Heisenberg algebra with `Dp = q`, `Dq = -p`, `Dz = 0`.
pub fn rotation_derivation() -> Matrix<Rational> {
    let r = Rational::from;
    Matrix::from_rows(vec![
        vec![r(0), r(-1), r(0)],
        vec![r(1), r(0), r(0)],
        vec![r(0), r(0), r(0)],
    ])
    .expect("square")
}

pub fn oscillator() -> LieAlgebra {
    let line = LieAlgebra::from_brackets(vec!["w".into()], Vec::new()).expect("valid");
    semidirect_product(&heisenberg3(), &line, &[rotation_derivation()])
        .expect("rotation is a derivation of the Heisenberg algebra")
}
