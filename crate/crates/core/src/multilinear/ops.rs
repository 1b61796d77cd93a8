use crate::exact::{vec_add_scaled, vec_zero, Matrix, Rational, Scalar};
use crate::lie::{LieAlgebra, Representation};
use crate::{Error, Result};

use super::cochain::Cochain;
use super::product::BilinearProduct;
use super::sym::SymMultiMap;
use super::tuples::shuffles;

/// A linear map `S: g → End(V)` given on the basis of `g`. Unlike a
/// [`Representation`] it need not respect brackets, and its matrices may
/// have polynomial entries.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearAction<S = Rational> {
    source: LieAlgebra,
    space_dim: usize,
    matrices: Vec<Matrix<S>>,
}

impl<S: Scalar> LinearAction<S> {
    pub fn new(source: LieAlgebra, space_dim: usize, matrices: Vec<Matrix<S>>) -> Result<Self> {
        if matrices.len() != source.dim()
            || matrices.iter().any(|m| m.rows() != space_dim || m.cols() != space_dim)
        {
            return Err(Error::DimensionMismatch(format!(
                "linear action needs {} matrices of size {space_dim}x{space_dim}",
                source.dim()
            )));
        }
        Ok(LinearAction { source, space_dim, matrices })
    }

    pub fn zero(source: LieAlgebra, space_dim: usize) -> Self {
        let matrices = vec![Matrix::zeros(space_dim, space_dim); source.dim()];
        LinearAction { source, space_dim, matrices }
    }

    pub fn from_representation(rep: &Representation) -> Self {
        LinearAction {
            source: rep.algebra().clone(),
            space_dim: rep.space_dim(),
            matrices: rep.matrices().iter().map(|m| m.map(S::from_rational)).collect(),
        }
    }

    pub fn source(&self) -> &LieAlgebra {
        &self.source
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    pub fn matrices(&self) -> &[Matrix<S>] {
        &self.matrices
    }

    pub fn matrix(&self, i: usize) -> &Matrix<S> {
        &self.matrices[i]
    }
}

/// `α ∧_m β`, computed as the signed `(p,q)`-shuffle sum
/// `Σ sgn(σ) m(α(x_A), β(x_B))`, which equals `(1/p!q!) Alt(α ·_m β)`.
pub fn wedge<S: Scalar>(
    alpha: &Cochain<S>,
    beta: &Cochain<S>,
    m: &BilinearProduct,
) -> Result<Cochain<S>> {
    if alpha.source_dim() != beta.source_dim() {
        return Err(Error::DimensionMismatch(format!(
            "wedge of cochains on {}- and {}-dimensional algebras",
            alpha.source_dim(),
            beta.source_dim()
        )));
    }
    if alpha.target_dim() != m.left_dim() || beta.target_dim() != m.right_dim() {
        return Err(Error::DimensionMismatch(format!(
            "product {}×{}→{} does not accept values of dimensions {} and {}",
            m.left_dim(),
            m.right_dim(),
            m.out_dim(),
            alpha.target_dim(),
            beta.target_dim()
        )));
    }
    let (p, q) = (alpha.degree(), beta.degree());
    let shuffles = shuffles(&[p, q]);
    let one = Rational::one();
    let minus = -Rational::one();
    let mut a_idx = Vec::with_capacity(p);
    let mut b_idx = Vec::with_capacity(q);
    Ok(Cochain::from_fn(p + q, alpha.source_dim(), m.out_dim(), |t| {
        let mut acc = vec_zero(m.out_dim());
        for sh in &shuffles {
            a_idx.clear();
            a_idx.extend(sh.blocks[0].iter().map(|&i| t[i]));
            b_idx.clear();
            b_idx.extend(sh.blocks[1].iter().map(|&i| t[i]));
            let sign = if sh.sign > 0 { &one } else { &minus };
            m.apply_into(alpha.get(&a_idx), beta.get(&b_idx), sign, &mut acc);
        }
        acc
    }))
}

/// `d_S ω(x_0..x_p) = Σ_j (-1)^j S(x_j)·ω(.., x̂_j, ..)
///   + Σ_{i<j} (-1)^{i+j} ω([x_i, x_j], .., x̂_i, .., x̂_j, ..)`.
///
/// With `S = 0` this is the Chevalley–Eilenberg differential for the
/// trivial module; with `S = ρ` it is the differential for `ρ`.
pub fn covariant_derivative<S: Scalar>(
    omega: &Cochain<S>,
    action: &LinearAction<S>,
) -> Result<Cochain<S>> {
    let alg = action.source();
    if omega.source_dim() != alg.dim() {
        return Err(Error::DimensionMismatch(format!(
            "cochain on a {}-dimensional algebra, action of a {}-dimensional one",
            omega.source_dim(),
            alg.dim()
        )));
    }
    if omega.target_dim() != action.space_dim() {
        return Err(Error::DimensionMismatch(format!(
            "cochain values of dimension {} but action on dimension {}",
            omega.target_dim(),
            action.space_dim()
        )));
    }
    let p = omega.degree();
    let d = alg.dim();
    let m = omega.target_dim();
    let mut rest = Vec::with_capacity(p);
    let mut args = Vec::with_capacity(p);
    Ok(Cochain::from_fn(p + 1, d, m, |x| {
        let mut acc = vec_zero(m);
        for j in 0..=p {
            let mat = action.matrix(x[j]);
            if mat.is_zero() {
                continue;
            }
            rest.clear();
            rest.extend(x.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &v)| v));
            let v = omega.get(&rest);
            let sv = mat.mul_vec(v).expect("shapes checked");
            let sign = if j % 2 == 0 { Rational::one() } else { -Rational::one() };
            vec_add_scaled(&mut acc, &sv, &sign);
        }
        for i in 0..=p {
            for j in (i + 1)..=p {
                let br = alg.bracket_basis(x[i], x[j]);
                let sign = if (i + j) % 2 == 0 { Rational::one() } else { -Rational::one() };
                for (k, c) in br.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    args.clear();
                    args.push(k);
                    args.extend(
                        x.iter().enumerate().filter(|&(l, _)| l != i && l != j).map(|(_, &v)| v),
                    );
                    let v = omega.value_on(&args);
                    vec_add_scaled(&mut acc, &v, &(&sign * c));
                }
            }
        }
        acc
    }))
}

/// The Chevalley–Eilenberg differential `d_g` with coefficients in `rep`.
pub fn ce_differential<S: Scalar>(omega: &Cochain<S>, rep: &Representation) -> Result<Cochain<S>> {
    covariant_derivative(omega, &LinearAction::from_representation(rep))
}

/// `R_σ(x, y) = [σ(x), σ(y)] − σ([x, y])` for a 1-cochain `σ` on `g` with
/// values in a space carrying the bracket `bracket_v`.
pub fn curvature<S: Scalar>(
    sigma: &Cochain<S>,
    g: &LieAlgebra,
    bracket_v: &BilinearProduct,
) -> Result<Cochain<S>> {
    if sigma.degree() != 1 {
        return Err(Error::Degree(format!("curvature of a degree-{} cochain", sigma.degree())));
    }
    if sigma.source_dim() != g.dim() {
        return Err(Error::DimensionMismatch(format!(
            "1-cochain on a {}-dimensional algebra, base of dimension {}",
            sigma.source_dim(),
            g.dim()
        )));
    }
    let m = sigma.target_dim();
    if bracket_v.left_dim() != m || bracket_v.right_dim() != m || bracket_v.out_dim() != m {
        return Err(Error::DimensionMismatch(format!(
            "bracket of shape {}×{}→{} on values of dimension {m}",
            bracket_v.left_dim(),
            bracket_v.right_dim(),
            bracket_v.out_dim()
        )));
    }
    let one = Rational::one();
    Ok(Cochain::from_fn(2, g.dim(), m, |t| {
        let mut acc = vec_zero(m);
        bracket_v.apply_into(sigma.get(&[t[0]]), sigma.get(&[t[1]]), &one, &mut acc);
        for (k, c) in g.bracket_basis(t[0], t[1]).iter().enumerate() {
            if !c.is_zero() {
                vec_add_scaled(&mut acc, sigma.get(&[k]), &-c);
            }
        }
        acc
    }))
}

/// `f̃ ∘ (α_1 ∧_{⊗_s} ⋯ ∧_{⊗_s} α_p)`: each argument cochain fills one slot
/// of `f`. Computed as a signed multi-shuffle sum without forming
/// symmetric tensors.
pub fn compose_sym<S: Scalar>(f: &SymMultiMap, args: &[&Cochain<S>]) -> Result<Cochain<S>> {
    if args.len() != f.degree() {
        return Err(Error::DimensionMismatch(format!(
            "degree-{} symmetric map composed with {} cochains",
            f.degree(),
            args.len()
        )));
    }
    let Some(first) = args.first() else {
        return Err(Error::Degree(
            "composition with no argument cochains has no source algebra".into(),
        ));
    };
    let d = first.source_dim();
    for a in args {
        if a.source_dim() != d {
            return Err(Error::DimensionMismatch("argument cochains on different algebras".into()));
        }
        if a.target_dim() != f.source_dim() {
            return Err(Error::DimensionMismatch(format!(
                "argument values of dimension {} but the symmetric map is on dimension {}",
                a.target_dim(),
                f.source_dim()
            )));
        }
    }
    let sizes: Vec<usize> = args.iter().map(|a| a.degree()).collect();
    let total: usize = sizes.iter().sum();
    let shuffles = shuffles(&sizes);
    let one = Rational::one();
    let minus = -Rational::one();
    let mut idx = Vec::new();
    Ok(Cochain::from_fn(total, d, f.target_dim(), |t| {
        let mut acc = vec_zero(f.target_dim());
        for sh in &shuffles {
            let mut vals: Vec<&[S]> = Vec::with_capacity(args.len());
            let mut all_nonzero = true;
            for (a, block) in args.iter().zip(&sh.blocks) {
                idx.clear();
                idx.extend(block.iter().map(|&i| t[i]));
                let v = a.get(&idx);
                if v.iter().all(Scalar::is_zero) {
                    all_nonzero = false;
                    break;
                }
                vals.push(v);
            }
            if !all_nonzero {
                continue;
            }
            let sign = if sh.sign > 0 { &one } else { &minus };
            f.evaluate_into(&vals, sign, &mut acc);
        }
        acc
    }))
}
