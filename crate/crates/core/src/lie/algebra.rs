use std::collections::HashSet;

use crate::exact::{vec_is_zero, Matrix, Rational, Scalar};
use crate::{Error, Result};

use super::Representation;

/// Finite-dimensional Lie algebra over the rationals, given by structure
/// constants `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
///
/// Values built through [`LieAlgebra::from_brackets`] are antisymmetric by
/// construction and satisfy the Jacobi identity.
#[derive(Clone, PartialEq, Debug)]
pub struct LieAlgebra {
    basis: Vec<String>,
    constants: Vec<Rational>,
}

/// A basis triple `i < j < k` whose cyclic Jacobi sum is nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub names: (String, String, String),
    pub sum: Vec<Rational>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct JacobiReport {
    pub violations: Vec<JacobiViolation>,
}

impl JacobiReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl LieAlgebra {
    /// Builds and validates an algebra from the brackets `[e_i, e_j]` with
    /// `i != j`; unlisted pairs bracket to zero.
    pub fn from_brackets<I>(basis: Vec<String>, brackets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vec<Rational>)>,
    {
        let alg = Self::from_brackets_unchecked(basis, brackets)?;
        alg.validate()?;
        Ok(alg)
    }

    /// Like [`from_brackets`](Self::from_brackets) but skips the Jacobi and
    /// unique-name checks, for inspecting corrupted data with [`check_jacobi`].
    pub fn from_brackets_unchecked<I>(basis: Vec<String>, brackets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vec<Rational>)>,
    {
        let d = basis.len();
        let mut constants = vec![Rational::zero(); d * d * d];
        let mut seen = HashSet::new();
        for (i, j, coeffs) in brackets {
            if i >= d || j >= d || coeffs.len() != d {
                return Err(Error::DimensionMismatch(format!(
                    "bracket ({i},{j}) with {} coefficients in a {d}-dimensional algebra",
                    coeffs.len()
                )));
            }
            if i == j {
                if vec_is_zero(&coeffs) {
                    continue;
                }
                return Err(Error::validation(
                    basis[i].clone(),
                    "bracket of a basis element with itself must vanish",
                ));
            }
            let key = (i.min(j), i.max(j));
            if !seen.insert(key) {
                return Err(Error::validation(
                    format!("[{}, {}]", basis[key.0], basis[key.1]),
                    "bracket listed twice",
                ));
            }
            for (k, c) in coeffs.into_iter().enumerate() {
                constants[(j * d + i) * d + k] = -&c;
                constants[(i * d + j) * d + k] = c;
            }
        }
        Ok(LieAlgebra { basis, constants })
    }

    /// Builds from a full structure-constant function; antisymmetry is
    /// enforced by reading only `i < j`.
    pub(crate) fn from_constant_fn(
        basis: Vec<String>,
        mut c: impl FnMut(usize, usize) -> Vec<Rational>,
    ) -> Self {
        let d = basis.len();
        let mut constants = vec![Rational::zero(); d * d * d];
        for i in 0..d {
            for j in (i + 1)..d {
                for (k, v) in c(i, j).into_iter().enumerate() {
                    constants[(j * d + i) * d + k] = -&v;
                    constants[(i * d + j) * d + k] = v;
                }
            }
        }
        LieAlgebra { basis, constants }
    }

    pub fn validate(&self) -> Result<()> {
        let mut names = HashSet::new();
        for n in &self.basis {
            if !names.insert(n) {
                return Err(Error::validation(n.clone(), "duplicate basis name"));
            }
        }
        let report = check_jacobi(self);
        if let Some(v) = report.violations.first() {
            return Err(Error::validation(
                format!("({}, {}, {})", v.names.0, v.names.1, v.names.2),
                format!("Jacobi identity fails, cyclic sum {:?}", v.sum),
            ));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == name)
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        let d = self.dim();
        &self.constants[(i * d + j) * d + k]
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Rational] {
        let d = self.dim();
        &self.constants[(i * d + j) * d..(i * d + j + 1) * d]
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.iter().all(Rational::is_zero)
    }

    /// Bilinear extension of the structure constants to coefficient vectors.
    pub fn bracket<S: Scalar>(&self, x: &[S], y: &[S]) -> Result<Vec<S>> {
        let d = self.dim();
        if x.len() != d || y.len() != d {
            return Err(Error::DimensionMismatch(format!(
                "bracket of vectors of length {} and {} in a {d}-dimensional algebra",
                x.len(),
                y.len()
            )));
        }
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked<S: Scalar>(&self, x: &[S], y: &[S]) -> Vec<S> {
        let d = self.dim();
        let mut out = vec![S::zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if i == j || yj.is_zero() {
                    continue;
                }
                let xy = xi.mul_ref(yj);
                for (k, c) in self.bracket_basis(i, j).iter().enumerate() {
                    out[k].add_scaled(&xy, c);
                }
            }
        }
        out
    }

    /// Matrix of `ad(e_i)`; column `j` holds `[e_i, e_j]`.
    pub fn ad_matrix(&self, i: usize) -> Matrix<Rational> {
        let d = self.dim();
        Matrix::from_fn(d, d, |k, j| self.structure_constant(i, j, k).clone())
    }

    /// The adjoint representation `ad(x) y = [x, y]`.
    pub fn adjoint(&self) -> Representation {
        let matrices = (0..self.dim()).map(|i| self.ad_matrix(i)).collect();
        Representation::new_unchecked(self.clone(), matrices)
    }

    /// The same algebra in the basis whose `i`-th vector is column `i` of
    /// `change` (old coordinates). Basis names are kept.
    pub fn change_basis(&self, change: &Matrix<Rational>) -> Result<LieAlgebra> {
        let d = self.dim();
        if change.rows() != d || change.cols() != d {
            return Err(Error::DimensionMismatch("basis change must be square".into()));
        }
        let inv = change
            .inverse()
            .ok_or_else(|| Error::DimensionMismatch("basis change is singular".into()))?;
        let cols: Vec<Vec<Rational>> = (0..d).map(|j| change.column(j)).collect();
        Ok(LieAlgebra::from_constant_fn(self.basis.clone(), |i, j| {
            let w = self.bracket_unchecked(&cols[i], &cols[j]);
            inv.mul_vec(&w).expect("shapes agree")
        }))
    }

    /// Direct sum `self ⊕ other`, basis of `self` first.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let (d1, d2) = (self.dim(), other.dim());
        let d = d1 + d2;
        let mut basis = self.basis.clone();
        basis.extend(other.basis.iter().cloned());
        LieAlgebra::from_constant_fn(basis, |i, j| {
            let mut v = vec![Rational::zero(); d];
            if j < d1 {
                v[..d1].clone_from_slice(self.bracket_basis(i, j));
            } else if i >= d1 {
                v[d1..].clone_from_slice(other.bracket_basis(i - d1, j - d1));
            }
            v
        })
    }
}

pub(crate) fn unit<S: Scalar>(d: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); d];
    v[i] = S::one();
    v
}

fn vec_add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Checks `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0` on all
/// basis triples `i < j < k`.
pub fn check_jacobi(alg: &LieAlgebra) -> JacobiReport {
    let d = alg.dim();
    let mut violations = Vec::new();
    for i in 0..d {
        for j in (i + 1)..d {
            for k in (j + 1)..d {
                let ek: Vec<Rational> = unit(d, k);
                let ei: Vec<Rational> = unit(d, i);
                let ej: Vec<Rational> = unit(d, j);
                let a = alg.bracket_unchecked(alg.bracket_basis(i, j), &ek);
                let b = alg.bracket_unchecked(alg.bracket_basis(j, k), &ei);
                let c = alg.bracket_unchecked(alg.bracket_basis(k, i), &ej);
                let sum = vec_add(&vec_add(&a, &b), &c);
                if !vec_is_zero(&sum) {
                    violations.push(JacobiViolation {
                        triple: (i, j, k),
                        names: (
                            alg.basis[i].clone(),
                            alg.basis[j].clone(),
                            alg.basis[k].clone(),
                        ),
                        sum,
                    });
                }
            }
        }
    }
    JacobiReport { violations }
}

/// Whether `D[x, y] = [Dx, y] + [x, Dy]` on all basis pairs. Column `i` of
/// `d` is the image of `e_i`.
pub fn is_derivation(alg: &LieAlgebra, d: &Matrix<Rational>) -> Result<bool> {
    let n = alg.dim();
    if d.rows() != n || d.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix is not an endomorphism of a {n}-dimensional algebra",
            d.rows(),
            d.cols()
        )));
    }
    let images: Vec<Vec<Rational>> = (0..n).map(|j| d.column(j)).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            let lhs = d.mul_vec(alg.bracket_basis(i, j))?;
            let rhs = vec_add(
                &alg.bracket_unchecked(&images[i], &unit(n, j)),
                &alg.bracket_unchecked(&unit(n, i), &images[j]),
            );
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The semidirect product `h ⋊ a` with basis `(h..., a...)` and bracket
/// `[(x, r), (y, s)] = ([x, y] + D(r) y - D(s) x, [r, s])`, where `D(e_u)`
/// is `action[u]`.
pub fn semidirect_product(
    h: &LieAlgebra,
    a: &LieAlgebra,
    action: &[Matrix<Rational>],
) -> Result<LieAlgebra> {
    let (dh, da) = (h.dim(), a.dim());
    if action.len() != da {
        return Err(Error::DimensionMismatch(format!(
            "{} action matrices for a {da}-dimensional acting algebra",
            action.len()
        )));
    }
    for (u, m) in action.iter().enumerate() {
        if !is_derivation(h, m)? {
            return Err(Error::validation(
                format!("action of {}", a.basis[u]),
                "not a derivation of the ideal",
            ));
        }
    }
    let rep = Representation::new_unchecked(a.clone(), action.to_vec());
    let report = rep.check();
    if let Some(&(u, v)) = report.violations.first() {
        return Err(Error::validation(
            format!("action on ({}, {})", a.basis[u], a.basis[v]),
            "action is not a representation",
        ));
    }
    let d = dh + da;
    let mut basis = h.basis.clone();
    basis.extend(a.basis.iter().cloned());
    let alg = LieAlgebra::from_constant_fn(basis, |i, j| {
        let mut v = vec![Rational::zero(); d];
        match (i < dh, j < dh) {
            (true, true) => v[..dh].clone_from_slice(h.bracket_basis(i, j)),
            // i < j, so only the (h, a) mixed case occurs: [x, r] = -D(r) x
            (true, false) => {
                for (k, c) in action[j - dh].column(i).into_iter().enumerate() {
                    v[k] = -c;
                }
            }
            (false, false) => v[dh..].clone_from_slice(a.bracket_basis(i - dh, j - dh)),
            (false, true) => unreachable!("i < j"),
        }
        v
    });
    alg.validate()?;
    Ok(alg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{abelian, heisenberg3, oscillator, rotation_derivation};

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn jacobi_ok_for_standard_algebras() {
        assert!(check_jacobi(&abelian(3)).is_ok());
        assert!(check_jacobi(&heisenberg3()).is_ok());
        assert!(check_jacobi(&oscillator()).is_ok());
    }

    #[test]
    fn redirected_heisenberg_bracket_still_satisfies_jacobi() {
        // [p,q] = p with everything else zero is aff(1) ⊕ R, a Lie algebra.
        let alg = LieAlgebra::from_brackets_unchecked(
            names(&["p", "q", "z"]),
            vec![(0, 1, vec![q(1), q(0), q(0)])],
        )
        .unwrap();
        assert!(check_jacobi(&alg).is_ok());
    }

    #[test]
    fn jacobi_violation_is_reported() {
        // [p,q] = z, [q,z] = q: cyclic sum on (p,q,z) is [z,z] + [q,p] + 0 = -z.
        let alg = LieAlgebra::from_brackets_unchecked(
            names(&["p", "q", "z"]),
            vec![(0, 1, vec![q(0), q(0), q(1)]), (1, 2, vec![q(0), q(1), q(0)])],
        )
        .unwrap();
        let report = check_jacobi(&alg);
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].triple, (0, 1, 2));
        assert_eq!(report.violations[0].sum, vec![q(0), q(0), q(-1)]);
        let err = alg.validate().unwrap_err();
        assert!(err.to_string().contains("(p, q, z)"), "{err}");
    }

    #[test]
    fn duplicate_names_rejected() {
        let err = LieAlgebra::from_brackets(names(&["a", "a"]), vec![]).unwrap_err();
        assert!(matches!(err, Error::Validation { .. }));
    }

    #[test]
    fn heisenberg_bracket() {
        let h = heisenberg3();
        let p: Vec<Rational> = unit(3, 0);
        let qv: Vec<Rational> = unit(3, 1);
        assert_eq!(h.bracket(&p, &qv).unwrap(), unit::<Rational>(3, 2));
        let x = vec![q(2), q(-1), q(5)];
        assert!(vec_is_zero(&h.bracket(&x, &x).unwrap()));
        assert!(h.bracket(&p, &[q(1)]).is_err());
    }

    #[test]
    fn oscillator_brackets() {
        let osc = oscillator();
        let w: Vec<Rational> = unit(4, 3);
        assert_eq!(osc.bracket(&w, &unit(4, 0)).unwrap(), unit::<Rational>(4, 1));
        assert_eq!(osc.bracket(&w, &unit(4, 1)).unwrap(), vec![q(-1), q(0), q(0), q(0)]);
        assert!(vec_is_zero(&osc.bracket(&w, &unit(4, 2)).unwrap()));
        // ad(w) on the first three coordinates is the rotation derivation
        let ad = osc.ad_matrix(3);
        let rot = rotation_derivation();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(ad[(i, j)], rot[(i, j)]);
            }
        }
    }

    #[test]
    fn derivation_checks() {
        let h = heisenberg3();
        assert!(is_derivation(&h, &rotation_derivation()).unwrap());
        assert!(!is_derivation(&h, &Matrix::identity(3)).unwrap());
        let any = Matrix::from_rows(vec![vec![q(1), q(2)], vec![q(3), q(4)]]).unwrap();
        assert!(is_derivation(&abelian(2), &any).unwrap());
        assert!(is_derivation(&h, &Matrix::identity(2)).is_err());
    }

    #[test]
    fn semidirect_with_zero_action_is_direct_sum() {
        let h = heisenberg3();
        let a = abelian(2);
        let prod = semidirect_product(&h, &a, &[Matrix::zeros(3, 3), Matrix::zeros(3, 3)])
            .unwrap();
        assert_eq!(prod, h.direct_sum(&a));
    }

    #[test]
    fn semidirect_solvable_example() {
        let nil = Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(0), q(0)]]).unwrap();
        let line = LieAlgebra::from_brackets(names(&["a"]), vec![]).unwrap();
        let alg = semidirect_product(&abelian(2), &line, &[nil]).unwrap();
        assert_eq!(alg.dim(), 3);
        assert!(check_jacobi(&alg).is_ok());
        // [a, e_1] = D e_1 = e_0
        assert_eq!(alg.bracket_basis(2, 1), &[q(1), q(0), q(0)]);
    }

    #[test]
    fn semidirect_rejects_non_derivation() {
        let err = semidirect_product(&heisenberg3(), &abelian(1), &[Matrix::identity(3)]);
        assert!(matches!(err, Err(Error::Validation { .. })));
    }

    #[test]
    fn semidirect_rejects_non_representation() {
        // two commuting basis elements acting by non-commuting derivations
        let e01 = Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(0), q(0)]]).unwrap();
        let e10 = Matrix::from_rows(vec![vec![q(0), q(0)], vec![q(1), q(0)]]).unwrap();
        let err = semidirect_product(&abelian(2), &abelian(2), &[e01, e10]);
        assert!(matches!(err, Err(Error::Validation { .. })));
    }

    #[test]
    fn basis_change_preserves_jacobi() {
        let osc = oscillator();
        let p = Matrix::from_rows(vec![
            vec![q(1), q(2), q(0), q(0)],
            vec![q(0), q(1), q(3), q(0)],
            vec![q(0), q(0), q(1), q(-1)],
            vec![q(1), q(0), q(0), q(1)],
        ])
        .unwrap();
        let changed = osc.change_basis(&p).unwrap();
        assert!(check_jacobi(&changed).is_ok());
        assert!(!changed.is_abelian());
        let back = changed.change_basis(&p.inverse().unwrap()).unwrap();
        assert_eq!(back, osc);
    }
}
