use crate::exact::{vec_zero, Matrix, Rational, Scalar};
use crate::lie::{LieAlgebra, Representation};
use crate::{Error, Result};

use super::tuples::{multiset_count, multiset_rank, multisets};

/// A bilinear map `V1 × V2 → V3` given by `m(e_i, e_j) = Σ_k c[i][j][k] e_k`.
#[derive(Clone, PartialEq, Debug)]
pub struct BilinearProduct {
    left_dim: usize,
    right_dim: usize,
    out_dim: usize,
    coeffs: Vec<Rational>,
}

impl BilinearProduct {
    pub fn from_fn(
        left_dim: usize,
        right_dim: usize,
        out_dim: usize,
        mut f: impl FnMut(usize, usize, usize) -> Rational,
    ) -> Self {
        let mut coeffs = Vec::with_capacity(left_dim * right_dim * out_dim);
        for i in 0..left_dim {
            for j in 0..right_dim {
                for k in 0..out_dim {
                    coeffs.push(f(i, j, k));
                }
            }
        }
        BilinearProduct { left_dim, right_dim, out_dim, coeffs }
    }

    /// Multiplication on the scalars.
    pub fn scalars() -> Self {
        BilinearProduct::from_fn(1, 1, 1, |_, _, _| Rational::one())
    }

    /// Scalar multiplication `R × V → V`.
    pub fn scalar_multiplication(m: usize) -> Self {
        BilinearProduct::from_fn(1, m, m, |_, j, k| indicator(j == k))
    }

    pub fn lie_bracket(alg: &LieAlgebra) -> Self {
        let d = alg.dim();
        BilinearProduct::from_fn(d, d, d, |i, j, k| alg.structure_constant(i, j, k).clone())
    }

    /// Evaluation `End(V) × V → V` with endomorphisms flattened row-major,
    /// so left index `r * m + c` is the matrix unit `E_{rc}`.
    pub fn evaluation(m: usize) -> Self {
        BilinearProduct::from_fn(m * m, m, m, |i, j, k| indicator(i / m == k && i % m == j))
    }

    /// The module action `g × V → V` of a representation.
    pub fn module_action(rep: &Representation) -> Self {
        let m = rep.space_dim();
        BilinearProduct::from_fn(rep.algebra().dim(), m, m, |i, j, k| rep.action(i)[(k, j)].clone())
    }

    /// Multiplication `S^p(W) × S^q(W) → S^{p+q}(W)` of symmetric tensors
    /// on the monomial bases (non-decreasing index tuples).
    pub fn symmetric_tensor(dim: usize, p: usize, q: usize) -> Self {
        let left = multisets(dim, p);
        let right = multisets(dim, q);
        let out_dim = multiset_count(dim, p + q);
        let mut prod = BilinearProduct::from_fn(left.len(), right.len(), out_dim, |_, _, _| {
            Rational::zero()
        });
        for (i, a) in left.iter().enumerate() {
            for (j, b) in right.iter().enumerate() {
                let mut merged = a.clone();
                merged.extend_from_slice(b);
                merged.sort_unstable();
                let k = multiset_rank(dim, &merged);
                let idx = prod.index(i, j, k);
                prod.coeffs[idx] = Rational::one();
            }
        }
        prod
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.right_dim + j) * self.out_dim + k
    }

    pub fn left_dim(&self) -> usize {
        self.left_dim
    }

    pub fn right_dim(&self) -> usize {
        self.right_dim
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.coeffs[self.index(i, j, k)]
    }

    /// Whether `m(u, v) = m(v, u)`.
    pub fn is_symmetric(&self) -> bool {
        self.left_dim == self.right_dim
            && (0..self.left_dim).all(|i| {
                (0..self.right_dim)
                    .all(|j| (0..self.out_dim).all(|k| self.coeff(i, j, k) == self.coeff(j, i, k)))
            })
    }

    /// Whether `D m(u, v) = m(Du, v) + m(u, Dv)` on basis pairs, for an
    /// endomorphism `D` of a space with `left_dim = right_dim = out_dim`.
    pub fn is_derivation(&self, d: &Matrix<Rational>) -> Result<bool> {
        let n = self.out_dim;
        if self.left_dim != n || self.right_dim != n || d.rows() != n || d.cols() != n {
            return Err(Error::DimensionMismatch(
                "derivations need a product V × V → V and an endomorphism of V".into(),
            ));
        }
        for i in 0..n {
            for j in 0..n {
                let ei = unit(n, i);
                let ej = unit(n, j);
                let lhs = d.mul_vec(&self.apply(&ei, &ej)?)?;
                let a = self.apply(&d.column(i), &ej)?;
                let b = self.apply(&ei, &d.column(j))?;
                let rhs: Vec<Rational> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn apply<S: Scalar>(&self, u: &[S], v: &[S]) -> Result<Vec<S>> {
        if u.len() != self.left_dim || v.len() != self.right_dim {
            return Err(Error::DimensionMismatch(format!(
                "product {}×{}→{} applied to vectors of length {} and {}",
                self.left_dim,
                self.right_dim,
                self.out_dim,
                u.len(),
                v.len()
            )));
        }
        let mut out = vec_zero(self.out_dim);
        self.apply_into(u, v, &Rational::one(), &mut out);
        Ok(out)
    }

    /// `out += sign * m(u, v)`, shapes assumed checked.
    pub(crate) fn apply_into<S: Scalar>(&self, u: &[S], v: &[S], factor: &Rational, out: &mut [S]) {
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let base = (i * self.right_dim + j) * self.out_dim;
                let cs = &self.coeffs[base..base + self.out_dim];
                if cs.iter().all(Rational::is_zero) {
                    continue;
                }
                let uv = ui.mul_ref(vj).scale(factor);
                for (o, c) in out.iter_mut().zip(cs) {
                    o.add_scaled(&uv, c);
                }
            }
        }
    }
}

fn indicator(b: bool) -> Rational {
    if b {
        Rational::one()
    } else {
        Rational::zero()
    }
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    crate::lie::unit(n, i)
}
