use crate::exact::{nullspace, rank, solve_linear, Matrix, Rational};
use crate::lie::{LieAlgebra, Representation};
use crate::multilinear::{ce_differential, Cochain};
use crate::{Error, Result};

/// Matrix of `d_g: C^p(g, V) → C^{p+1}(g, V)` in the flat coordinates of
/// [`Cochain::to_flat`].
pub fn differential_matrix(rep: &Representation, p: usize) -> Matrix<Rational> {
    let d = rep.algebra().dim();
    let m = rep.space_dim();
    let source = Cochain::<Rational>::zero(p, d, m).flat_len();
    let target = Cochain::<Rational>::zero(p + 1, d, m).flat_len();
    let columns: Vec<Vec<Rational>> = (0..source)
        .map(|u| {
            let mut flat = vec![Rational::zero(); source];
            flat[u] = Rational::one();
            let c = Cochain::from_flat(p, d, m, &flat).expect("length");
            ce_differential(&c, rep).expect("shapes agree").to_flat()
        })
        .collect();
    Matrix::from_columns(target, &columns)
}

/// `H^p(g, V) = Z^p / B^p` with deterministic echelon bases.
///
/// The classes are indexed by `complement`, a set of cocycles whose images
/// form a basis of `H^p`; coordinates of a class are the coefficients of
/// those cocycles once the coboundary part is removed.
#[derive(Clone, Debug, PartialEq)]
pub struct CohomologySpace {
    degree: usize,
    algebra_dim: usize,
    module_dim: usize,
    rep: Representation,
    cocycle_basis: Vec<Cochain>,
    coboundary_basis: Vec<Cochain>,
    complement: Vec<Cochain>,
    class_projection: Matrix<Rational>,
    // [B | H] as columns, for coordinate solves
    decomposition: Matrix<Rational>,
}

impl CohomologySpace {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The coefficient module.
    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    pub fn h_dim(&self) -> usize {
        self.complement.len()
    }

    pub fn cocycle_basis(&self) -> &[Cochain] {
        &self.cocycle_basis
    }

    pub fn coboundary_basis(&self) -> &[Cochain] {
        &self.coboundary_basis
    }

    /// Cocycles representing the basis classes of `H^p`.
    pub fn class_basis(&self) -> &[Cochain] {
        &self.complement
    }

    /// Maps coordinates against [`cocycle_basis`](Self::cocycle_basis) to
    /// class coordinates.
    pub fn class_projection(&self) -> &Matrix<Rational> {
        &self.class_projection
    }

    fn check_shape(&self, c: &Cochain) -> Result<()> {
        if c.degree() != self.degree
            || c.source_dim() != self.algebra_dim
            || c.target_dim() != self.module_dim
        {
            return Err(Error::DimensionMismatch(format!(
                "degree-{} cochain {}→{} against H^{} of a {}-dimensional algebra in dimension {}",
                c.degree(),
                c.source_dim(),
                c.target_dim(),
                self.degree,
                self.algebra_dim,
                self.module_dim
            )));
        }
        Ok(())
    }

    /// Solves `c = Σ b_i B_i + Σ h_j H_j`; `None` if `c` is not a cocycle.
    fn split(&self, c: &Cochain) -> Result<Option<Vec<Rational>>> {
        self.check_shape(c)?;
        solve_linear(&self.decomposition, &c.to_flat())
    }

    /// Class coordinates of a cocycle.
    pub fn coordinates(&self, c: &Cochain) -> Result<Vec<Rational>> {
        let x = self.split(c)?.ok_or_else(|| {
            Error::NotACocycle(format!("degree-{} cochain has nonzero differential", c.degree()))
        })?;
        Ok(x[self.coboundary_basis.len()..].to_vec())
    }

    pub fn is_coboundary(&self, c: &Cochain) -> Result<bool> {
        Ok(match self.split(c)? {
            Some(x) => x[self.coboundary_basis.len()..].iter().all(Rational::is_zero),
            None => false,
        })
    }
}

/// Builds `H^p(g, V)` for the module `rep`. Degrees above `dim g` give the
/// zero space.
pub fn cohomology_space(rep: &Representation, p: usize) -> CohomologySpace {
    let d = rep.algebra().dim();
    let m = rep.space_dim();
    let to_cochain = |v: &[Rational]| Cochain::from_flat(p, d, m, v).expect("length");

    let dp = differential_matrix(rep, p);
    let z = nullspace(&dp);
    let b: Vec<Vec<Rational>> = if p == 0 {
        Vec::new()
    } else {
        let prev = differential_matrix(rep, p - 1);
        let (_, pivots) = prev.rref();
        pivots.iter().map(|&j| prev.column(j)).collect()
    };
    let len = dp.cols();
    let mut stacked = b.clone();
    stacked.extend(z.iter().cloned());
    let (_, pivots) = Matrix::from_columns(len, &stacked).rref();
    let h: Vec<Vec<Rational>> =
        pivots.iter().filter(|&&j| j >= b.len()).map(|&j| stacked[j].clone()).collect();

    let mut columns = b.clone();
    columns.extend(h.iter().cloned());
    let decomposition = Matrix::from_columns(len, &columns);

    let proj_cols: Vec<Vec<Rational>> = z
        .iter()
        .map(|zi| {
            let x = solve_linear(&decomposition, zi).expect("shape").expect("cocycle");
            x[b.len()..].to_vec()
        })
        .collect();
    let class_projection = Matrix::from_columns(h.len(), &proj_cols);

    CohomologySpace {
        degree: p,
        algebra_dim: d,
        module_dim: m,
        rep: rep.clone(),
        cocycle_basis: z.iter().map(|v| to_cochain(v)).collect(),
        coboundary_basis: b.iter().map(|v| to_cochain(v)).collect(),
        complement: h.iter().map(|v| to_cochain(v)).collect(),
        class_projection,
        decomposition,
    }
}

/// `dim H^p(g, V)` for `p = 0..=dim g`.
pub fn betti_numbers(rep: &Representation) -> Vec<usize> {
    let d = rep.algebra().dim();
    let ranks: Vec<usize> = (0..=d).map(|p| rank(&differential_matrix(rep, p))).collect();
    (0..=d)
        .map(|p| {
            let cp = Cochain::<Rational>::zero(p, d, rep.space_dim()).flat_len();
            let prev = if p == 0 { 0 } else { ranks[p - 1] };
            cp - ranks[p] - prev
        })
        .collect()
}

/// Trivial-coefficient shortcut for [`betti_numbers`].
pub fn trivial_betti_numbers(g: &LieAlgebra) -> Vec<usize> {
    betti_numbers(&Representation::trivial(g.clone(), 1))
}

fn require_cocycle(c: &Cochain, rep: &Representation, label: &str) -> Result<()> {
    if !ce_differential(c, rep)?.is_zero() {
        return Err(Error::NotACocycle(format!("{label} has nonzero differential")));
    }
    Ok(())
}

/// Whether two cocycles define the same class, i.e. `a − b ∈ B^p`.
pub fn classes_equal(a: &Cochain, b: &Cochain, h: &CohomologySpace) -> Result<bool> {
    let rep = &h.rep;
    h.check_shape(a)?;
    h.check_shape(b)?;
    require_cocycle(a, rep, "first cochain")?;
    require_cocycle(b, rep, "second cochain")?;
    h.is_coboundary(&a.sub(b)?)
}
