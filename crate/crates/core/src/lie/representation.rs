use crate::exact::{Matrix, Rational};
use crate::{Error, Result};

use super::LieAlgebra;

/// A linear action `ρ: g → End(V)` given on the basis of `g`.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    algebra: LieAlgebra,
    space_dim: usize,
    matrices: Vec<Matrix<Rational>>,
}

/// Basis pairs `(i, j)`, `i < j`, on which `ρ([e_i, e_j]) ≠ [ρ(e_i), ρ(e_j)]`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RepresentationReport {
    pub violations: Vec<(usize, usize)>,
}

impl RepresentationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl Representation {
    /// Builds and validates the module axiom on all basis pairs.
    pub fn new(algebra: LieAlgebra, matrices: Vec<Matrix<Rational>>) -> Result<Self> {
        let space_dim = matrices.first().map_or(0, Matrix::rows);
        Self::with_dim(algebra, space_dim, matrices)
    }

    /// Like [`new`](Self::new) but with an explicit module dimension, which
    /// matters when the algebra is zero-dimensional.
    pub fn with_dim(
        algebra: LieAlgebra,
        space_dim: usize,
        matrices: Vec<Matrix<Rational>>,
    ) -> Result<Self> {
        if matrices.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for a {}-dimensional algebra",
                matrices.len(),
                algebra.dim()
            )));
        }
        if let Some(i) = matrices.iter().position(|m| m.rows() != space_dim || m.cols() != space_dim)
        {
            return Err(Error::DimensionMismatch(format!(
                "action matrix of {} is not {space_dim}x{space_dim}",
                algebra.basis_names()[i]
            )));
        }
        let rep = Representation { algebra, space_dim, matrices };
        let report = rep.check();
        if let Some(&(i, j)) = report.violations.first() {
            let names = rep.algebra.basis_names();
            return Err(Error::validation(
                format!("({}, {})", names[i], names[j]),
                "ρ([x,y]) differs from ρ(x)ρ(y) - ρ(y)ρ(x)",
            ));
        }
        Ok(rep)
    }

    pub fn new_unchecked(algebra: LieAlgebra, matrices: Vec<Matrix<Rational>>) -> Self {
        let space_dim = matrices.first().map_or(0, Matrix::rows);
        Representation { algebra, space_dim, matrices }
    }

    /// All `ρ(e_i) = 0` on an `m`-dimensional space.
    pub fn trivial(algebra: LieAlgebra, m: usize) -> Self {
        let matrices = vec![Matrix::zeros(m, m); algebra.dim()];
        Representation { algebra, space_dim: m, matrices }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    pub fn matrices(&self) -> &[Matrix<Rational>] {
        &self.matrices
    }

    pub fn action(&self, i: usize) -> &Matrix<Rational> {
        &self.matrices[i]
    }

    pub fn is_trivial(&self) -> bool {
        self.matrices.iter().all(Matrix::is_zero)
    }

    /// `ρ(x)` for a coefficient vector `x`.
    pub fn action_of(&self, x: &[Rational]) -> Matrix<Rational> {
        let mut out = Matrix::zeros(self.space_dim, self.space_dim);
        for (c, m) in x.iter().zip(&self.matrices) {
            if !c.is_zero() {
                out = out.add(&m.scale(c)).expect("same shape");
            }
        }
        out
    }

    pub fn check(&self) -> RepresentationReport {
        check_representation(self)
    }

    /// The same module after changing the algebra basis by `alg_change`
    /// (columns are new basis vectors) and the module basis by `module_change`.
    pub fn change_basis(
        &self,
        alg_change: &Matrix<Rational>,
        module_change: &Matrix<Rational>,
    ) -> Result<Representation> {
        let algebra = self.algebra.change_basis(alg_change)?;
        let inv = module_change
            .inverse()
            .ok_or_else(|| Error::DimensionMismatch("module basis change is singular".into()))?;
        let matrices = (0..self.algebra.dim())
            .map(|i| {
                let m = self.action_of(&alg_change.column(i));
                inv.mul(&m)?.mul(module_change)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Representation { algebra, space_dim: self.space_dim, matrices })
    }
}

/// Checks `ρ([e_i, e_j]) = ρ(e_i)ρ(e_j) − ρ(e_j)ρ(e_i)` for all `i < j`.
pub fn check_representation(rep: &Representation) -> RepresentationReport {
    let d = rep.algebra.dim();
    let mut violations = Vec::new();
    for i in 0..d {
        for j in (i + 1)..d {
            let lhs = rep.action_of(rep.algebra.bracket_basis(i, j));
            let ok = match rep.matrices[i].commutator(&rep.matrices[j]) {
                Ok(rhs) => rhs == lhs,
                Err(_) => false,
            };
            if !ok {
                violations.push((i, j));
            }
        }
    }
    RepresentationReport { violations }
}
