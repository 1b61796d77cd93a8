//! Lie algebra extensions `0 → n → ĝ → g → 0`, linear sections of the
//! projection, their curvature, the induced action on the kernel, and the
//! affine family of sections spanned by several given ones.
//!
//! No adapted basis is assumed: `ι` and `q` are arbitrary matrices, and
//! kernel coordinates of a vector in `ι(n)` are recovered by a left inverse
//! of `ι` followed by an exact membership check.

use std::fmt;

use crate::exact::{nullspace, rank, vec_is_zero, vec_zero, Matrix, MultiPoly, Rational, Scalar};
use crate::lie::{abelian, heisenberg3, oscillator, unit, LieAlgebra, Representation};
use crate::multilinear::{curvature, BilinearProduct, Cochain, LinearAction, SymMultiMap};
use crate::{Error, Result};

/// An extension of `base` by `kernel` with total algebra `total`.
///
/// `inclusion` is `dim ĝ × dim n` and `projection` is `dim g × dim ĝ`.
#[derive(Clone, Debug, PartialEq)]
pub struct Extension {
    total: LieAlgebra,
    base: LieAlgebra,
    kernel: LieAlgebra,
    inclusion: Matrix<Rational>,
    projection: Matrix<Rational>,
    left_inverse: Option<Matrix<Rational>>,
}

/// One invariant of [`Extension`] that can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtensionCheck {
    InclusionInjective,
    ProjectionSurjective,
    DimensionCount,
    Composition,
    InclusionHomomorphism,
    KernelIdeal,
    ProjectionHomomorphism,
}

impl fmt::Display for ExtensionCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ExtensionCheck::InclusionInjective => "inclusion is not injective",
            ExtensionCheck::ProjectionSurjective => "projection is not surjective",
            ExtensionCheck::DimensionCount => "dim n + dim g differs from dim ĝ",
            ExtensionCheck::Composition => "q·ι is not zero",
            ExtensionCheck::InclusionHomomorphism => "inclusion is not a homomorphism",
            ExtensionCheck::KernelIdeal => "image of the inclusion is not an ideal",
            ExtensionCheck::ProjectionHomomorphism => "projection is not a homomorphism",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExtensionFailure {
    pub check: ExtensionCheck,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ExtensionReport {
    pub failures: Vec<ExtensionFailure>,
}

impl ExtensionReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn fails(&self, check: ExtensionCheck) -> bool {
        self.failures.iter().any(|f| f.check == check)
    }
}

impl Extension {
    /// Builds and validates every extension invariant.
    pub fn new(
        total: LieAlgebra,
        base: LieAlgebra,
        kernel: LieAlgebra,
        inclusion: Matrix<Rational>,
        projection: Matrix<Rational>,
    ) -> Result<Self> {
        let ext = Self::new_unchecked(total, base, kernel, inclusion, projection)?;
        let report = ext.validate();
        if let Some(f) = report.failures.first() {
            return Err(Error::validation("extension", format!("{}: {}", f.check, f.detail)));
        }
        Ok(ext)
    }

    /// Checks only the matrix shapes.
    pub fn new_unchecked(
        total: LieAlgebra,
        base: LieAlgebra,
        kernel: LieAlgebra,
        inclusion: Matrix<Rational>,
        projection: Matrix<Rational>,
    ) -> Result<Self> {
        let (dt, db, dk) = (total.dim(), base.dim(), kernel.dim());
        if inclusion.rows() != dt || inclusion.cols() != dk {
            return Err(Error::DimensionMismatch(format!(
                "iota is {}x{}, expected {dt}x{dk}",
                inclusion.rows(),
                inclusion.cols()
            )));
        }
        if projection.rows() != db || projection.cols() != dt {
            return Err(Error::DimensionMismatch(format!(
                "q is {}x{}, expected {db}x{dt}",
                projection.rows(),
                projection.cols()
            )));
        }
        let left_inverse = inclusion.left_inverse();
        Ok(Extension { total, base, kernel, inclusion, projection, left_inverse })
    }

    pub fn total(&self) -> &LieAlgebra {
        &self.total
    }

    pub fn base(&self) -> &LieAlgebra {
        &self.base
    }

    pub fn kernel(&self) -> &LieAlgebra {
        &self.kernel
    }

    pub fn inclusion(&self) -> &Matrix<Rational> {
        &self.inclusion
    }

    pub fn projection(&self) -> &Matrix<Rational> {
        &self.projection
    }

    /// Checks exactness and the homomorphism properties; lists each failure.
    pub fn validate(&self) -> ExtensionReport {
        let mut failures = Vec::new();
        let mut fail = |check, detail: String| failures.push(ExtensionFailure { check, detail });
        let (dt, db, dk) = (self.total.dim(), self.base.dim(), self.kernel.dim());
        let names_t = self.total.basis_names();
        let names_k = self.kernel.basis_names();

        let ri = rank(&self.inclusion);
        if ri != dk {
            fail(ExtensionCheck::InclusionInjective, format!("rank {ri}, dim n = {dk}"));
        }
        let rq = rank(&self.projection);
        if rq != db {
            fail(ExtensionCheck::ProjectionSurjective, format!("rank {rq}, dim g = {db}"));
        }
        if dk + db != dt {
            fail(ExtensionCheck::DimensionCount, format!("{dk} + {db} != {dt}"));
        }
        let qi = self.projection.mul(&self.inclusion).expect("shapes checked");
        if !qi.is_zero() {
            fail(ExtensionCheck::Composition, format!("q·ι = {qi:?}"));
        }

        let iota_cols: Vec<Vec<Rational>> = (0..dk).map(|a| self.inclusion.column(a)).collect();
        for a in 0..dk {
            for b in (a + 1)..dk {
                let lhs = self.inclusion.mul_vec(self.kernel.bracket_basis(a, b)).expect("shape");
                let rhs = self.total.bracket_unchecked(&iota_cols[a], &iota_cols[b]);
                if lhs != rhs {
                    fail(
                        ExtensionCheck::InclusionHomomorphism,
                        format!("on ({}, {})", names_k[a], names_k[b]),
                    );
                }
            }
        }
        if self.left_inverse.is_some() {
            for (i, name) in names_t.iter().enumerate() {
                for (a, col) in iota_cols.iter().enumerate() {
                    let w = self.total.bracket_unchecked(&unit::<Rational>(dt, i), col);
                    if self.kernel_coordinates(&w).is_err() {
                        fail(
                            ExtensionCheck::KernelIdeal,
                            format!("[{name}, ι({})] leaves ι(n)", names_k[a]),
                        );
                    }
                }
            }
        }
        let q_cols: Vec<Vec<Rational>> = (0..dt).map(|i| self.projection.column(i)).collect();
        for i in 0..dt {
            for j in (i + 1)..dt {
                let lhs = self.projection.mul_vec(self.total.bracket_basis(i, j)).expect("shape");
                let rhs = self.base.bracket_unchecked(&q_cols[i], &q_cols[j]);
                if lhs != rhs {
                    fail(
                        ExtensionCheck::ProjectionHomomorphism,
                        format!("on ({}, {})", names_t[i], names_t[j]),
                    );
                }
            }
        }
        ExtensionReport { failures }
    }

    /// The unique `v` with `ι v = w`, or `ExactnessViolation` if `w ∉ ι(n)`.
    pub fn kernel_coordinates<S: Scalar>(&self, w: &[S]) -> Result<Vec<S>> {
        if w.len() != self.total.dim() {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in a {}-dimensional algebra",
                w.len(),
                self.total.dim()
            )));
        }
        let left = self.left_inverse.as_ref().ok_or_else(|| {
            Error::ExactnessViolation("inclusion is not injective".into())
        })?;
        let v = apply_rational(left, w);
        if apply_rational(&self.inclusion, &v) != w {
            return Err(Error::ExactnessViolation(format!("{w:?}")));
        }
        Ok(v)
    }

    /// `ad(x)|_n` in kernel coordinates for every basis vector `x` of `ĝ`.
    pub fn kernel_adjoint_action(&self) -> Result<LinearAction<Rational>> {
        let dt = self.total.dim();
        let matrices = (0..dt)
            .map(|i| self.restricted_ad(&unit::<Rational>(dt, i)))
            .collect::<Result<Vec<_>>>()?;
        LinearAction::new(self.total.clone(), self.kernel.dim(), matrices)
    }

    /// Matrix of `ad(x)` restricted and corestricted to `ι(n)`.
    fn restricted_ad<S: Scalar>(&self, x: &[S]) -> Result<Matrix<S>> {
        let dk = self.kernel.dim();
        let mut cols = Vec::with_capacity(dk);
        for a in 0..dk {
            let ia: Vec<S> = self.inclusion.column(a).iter().map(S::from_rational).collect();
            cols.push(self.kernel_coordinates(&self.total.bracket_unchecked(x, &ia))?);
        }
        Ok(Matrix::from_columns(dk, &cols))
    }
}

/// `M v` for a rational matrix and a vector of any scalar kind.
fn apply_rational<S: Scalar>(m: &Matrix<Rational>, v: &[S]) -> Vec<S> {
    let mut out: Vec<S> = vec_zero(m.rows());
    for (i, o) in out.iter_mut().enumerate() {
        for (c, x) in m.row(i).iter().zip(v) {
            o.add_scaled(x, c);
        }
    }
    out
}

/// A linear map `σ: g → ĝ`, stored as a `dim ĝ × dim g` matrix whose
/// column `i` is `σ(e_i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Section<S = Rational> {
    matrix: Matrix<S>,
}

impl<S: Scalar> Section<S> {
    pub fn new(matrix: Matrix<S>) -> Self {
        Section { matrix }
    }

    /// From the images of the basis vectors of `g`.
    pub fn from_images(total_dim: usize, images: &[Vec<S>]) -> Self {
        Section { matrix: Matrix::from_columns(total_dim, images) }
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    pub fn image(&self, i: usize) -> Vec<S> {
        self.matrix.column(i)
    }

    /// `σ` as a `ĝ`-valued 1-cochain on `g`.
    pub fn as_cochain(&self) -> Cochain<S> {
        Cochain::from_fn(1, self.matrix.cols(), self.matrix.rows(), |t| self.matrix.column(t[0]))
    }

    fn check_shape(&self, ext: &Extension) -> Result<()> {
        let (dt, db) = (ext.total.dim(), ext.base.dim());
        if self.matrix.rows() != dt || self.matrix.cols() != db {
            return Err(Error::DimensionMismatch(format!(
                "section is {}x{}, expected {dt}x{db}",
                self.matrix.rows(),
                self.matrix.cols()
            )));
        }
        Ok(())
    }
}

impl Section<Rational> {
    pub fn lift<T: Scalar>(&self) -> Section<T> {
        Section { matrix: self.matrix.map(T::from_rational) }
    }
}

/// Whether `q·σ = id_g` exactly (as polynomials for polynomial sections).
pub fn validate_section<S: Scalar>(ext: &Extension, sigma: &Section<S>) -> Result<bool> {
    sigma.check_shape(ext)?;
    let q = ext.projection.map(S::from_rational);
    Ok(q.mul(&sigma.matrix)? == Matrix::identity(ext.base.dim()))
}

fn require_section<S: Scalar>(ext: &Extension, sigma: &Section<S>) -> Result<()> {
    if !validate_section(ext, sigma)? {
        return Err(Error::InvalidSection("q·σ is not the identity".into()));
    }
    Ok(())
}

/// `R_σ(x, y) = [σx, σy] − σ[x, y]` as an `n`-valued 2-cochain on `g`.
pub fn section_curvature<S: Scalar>(ext: &Extension, sigma: &Section<S>) -> Result<Cochain<S>> {
    require_section(ext, sigma)?;
    let r = curvature(&sigma.as_cochain(), &ext.base, &BilinearProduct::lie_bracket(&ext.total))?;
    to_kernel(ext, &r)
}

/// Curvature of a polynomial section such as the output of [`param_section`].
pub fn param_curvature(ext: &Extension, sigma_t: &Section<MultiPoly>) -> Result<Cochain<MultiPoly>> {
    section_curvature(ext, sigma_t)
}

fn to_kernel<S: Scalar>(ext: &Extension, c: &Cochain<S>) -> Result<Cochain<S>> {
    let values = c.values().iter().map(|v| ext.kernel_coordinates(v)).collect::<Result<Vec<_>>>()?;
    Cochain::from_values(c.degree(), c.source_dim(), ext.kernel.dim(), values)
}

/// `S(x) = ad(σ(x))|_n` in kernel coordinates, for each basis `x` of `g`.
pub fn s_from_section<S: Scalar>(ext: &Extension, sigma: &Section<S>) -> Result<LinearAction<S>> {
    require_section(ext, sigma)?;
    let matrices = (0..ext.base.dim())
        .map(|i| ext.restricted_ad(&sigma.image(i)))
        .collect::<Result<Vec<_>>>()?;
    LinearAction::new(ext.base.clone(), ext.kernel.dim(), matrices)
}

/// `σ_b − σ_a` as an `n`-valued 1-cochain on `g`.
pub fn section_difference(ext: &Extension, a: &Section, b: &Section) -> Result<Cochain<Rational>> {
    require_section(ext, a)?;
    require_section(ext, b)?;
    let diff = b.as_cochain().sub(&a.as_cochain())?;
    to_kernel(ext, &diff)
}

/// `σ_t = σ_0 + Σ_{i≥1} t_i (σ_i − σ_0)`, the affine combination with
/// `t_0 = 1 − t_1 − … − t_n` eliminated; variables are `t_1..t_n`.
pub fn param_section(ext: &Extension, sections: &[Section]) -> Result<Section<MultiPoly>> {
    if sections.len() < 2 {
        return Err(Error::Degree(format!(
            "a parametric section needs at least two sections, got {}",
            sections.len()
        )));
    }
    for s in sections {
        require_section(ext, s)?;
    }
    let n = sections.len() - 1;
    let s0 = &sections[0].matrix;
    let matrix = Matrix::from_fn(s0.rows(), s0.cols(), |r, c| {
        let mut p = MultiPoly::constant(s0[(r, c)].clone(), n);
        for (i, s) in sections.iter().enumerate().skip(1) {
            let diff = &s.matrix[(r, c)] - &s0[(r, c)];
            if !diff.is_zero() {
                p.add_scaled(&MultiPoly::variable(i - 1, n), &diff);
            }
        }
        p.with_nvars(n)
    });
    Ok(Section { matrix })
}

/// Which algebra acts when testing invariance of `f ∈ Sym^p(n, V)`.
#[derive(Clone, Copy, Debug)]
pub enum InvariancePolicy<'a> {
    /// Every basis `x ∈ g`, acting on `n` by `ad(σ(x))` and on `V` by `ρ(x)`.
    Section(&'a Section),
    /// Every basis `x ∈ ĝ`, acting on `n` by `ad(x)` and on `V` by `ρ(q(x))`.
    StrictTotal,
}

/// The two actions entering the invariance condition, one pair per acting
/// basis vector.
fn invariance_actions(
    ext: &Extension,
    rep: &Representation,
    policy: InvariancePolicy<'_>,
) -> Result<Vec<(Matrix<Rational>, Matrix<Rational>)>> {
    if rep.algebra().dim() != ext.base.dim() {
        return Err(Error::DimensionMismatch(format!(
            "representation of a {}-dimensional algebra, base of dimension {}",
            rep.algebra().dim(),
            ext.base.dim()
        )));
    }
    match policy {
        InvariancePolicy::Section(sigma) => {
            let s = s_from_section(ext, sigma)?;
            Ok(s.matrices().iter().cloned().zip(rep.matrices().iter().cloned()).collect())
        }
        InvariancePolicy::StrictTotal => {
            let s = ext.kernel_adjoint_action()?;
            Ok(s.matrices()
                .iter()
                .enumerate()
                .map(|(i, m)| (m.clone(), rep.action_of(&ext.projection.column(i))))
                .collect())
        }
    }
}

/// `x.f(y) − Σ_i f(y_1, .., S(x) y_i, .., y_p)` over every acting `x` and
/// every non-decreasing basis tuple, flattened.
fn invariance_defect(f: &SymMultiMap, actions: &[(Matrix<Rational>, Matrix<Rational>)]) -> Vec<Rational> {
    let tuples = f.tuples();
    let n = f.source_dim();
    let mut out = Vec::with_capacity(actions.len() * tuples.len() * f.target_dim());
    for (s, rho) in actions {
        for t in &tuples {
            let mut v = rho.mul_vec(f.get(t)).expect("shape");
            let args: Vec<Vec<Rational>> = t.iter().map(|&i| unit(n, i)).collect();
            for slot in 0..t.len() {
                let mut moved = args.clone();
                moved[slot] = s.column(t[slot]);
                let refs: Vec<&[Rational]> = moved.iter().map(Vec::as_slice).collect();
                let w = f.evaluate(&refs).expect("shape");
                for (a, b) in v.iter_mut().zip(&w) {
                    *a = &*a - b;
                }
            }
            out.extend(v);
        }
    }
    out
}

fn check_poly_shape(f: &SymMultiMap, ext: &Extension, rep: &Representation) -> Result<()> {
    if f.source_dim() != ext.kernel.dim() || f.target_dim() != rep.space_dim() {
        return Err(Error::DimensionMismatch(format!(
            "symmetric map {}→{} for kernel dimension {} and module dimension {}",
            f.source_dim(),
            f.target_dim(),
            ext.kernel.dim(),
            rep.space_dim()
        )));
    }
    Ok(())
}

/// Whether `f` satisfies the invariance condition under `policy`.
pub fn is_invariant(
    f: &SymMultiMap,
    ext: &Extension,
    rep: &Representation,
    policy: InvariancePolicy<'_>,
) -> Result<bool> {
    check_poly_shape(f, ext, rep)?;
    let actions = invariance_actions(ext, rep, policy)?;
    Ok(vec_is_zero(&invariance_defect(f, &actions)))
}

/// A basis of the symmetric maps of the given degree that are invariant
/// under every listed policy. With no policies this is a basis of all maps.
pub fn invariant_polynomials(
    ext: &Extension,
    rep: &Representation,
    degree: usize,
    policies: &[InvariancePolicy<'_>],
) -> Result<Vec<SymMultiMap>> {
    let (n, m) = (ext.kernel.dim(), rep.space_dim());
    let mut actions = Vec::new();
    for &p in policies {
        actions.extend(invariance_actions(ext, rep, p)?);
    }
    let tuples = SymMultiMap::zero(degree, n, m).tuples();
    let unknowns = tuples.len() * m;
    let basis_map = |u: usize| {
        SymMultiMap::from_fn(degree, n, m, |t| {
            let mut v = vec![Rational::zero(); m];
            if *t == tuples[u / m][..] {
                v[u % m] = Rational::one();
            }
            v
        })
    };
    let columns: Vec<Vec<Rational>> = (0..unknowns).map(|u| invariance_defect(&basis_map(u), &actions)).collect();
    let rows = columns.first().map_or(0, Vec::len);
    let system = Matrix::from_columns(rows, &columns);
    Ok(nullspace(&system)
        .into_iter()
        .map(|coeffs| {
            SymMultiMap::from_fn(degree, n, m, |t| {
                let r = tuples.iter().position(|s| s[..] == *t).expect("tuple");
                coeffs[r * m..(r + 1) * m].to_vec()
            })
        })
        .collect())
}

/// The central extension `0 → span(z) → h3 → R^2 → 0` of the abelian
/// plane by the centre of the Heisenberg algebra.
pub fn heisenberg_extension() -> Extension {
    let r = Rational::from;
    let kernel = LieAlgebra::from_brackets(vec!["z".into()], Vec::new()).expect("valid");
    let iota = Matrix::from_rows(vec![vec![r(0)], vec![r(0)], vec![r(1)]]).expect("rows");
    let q = Matrix::from_rows(vec![vec![r(1), r(0), r(0)], vec![r(0), r(1), r(0)]]).expect("rows");
    Extension::new(heisenberg3(), abelian(2), kernel, iota, q).expect("valid extension")
}

/// The split extension `0 → h3 → osc → R → 0` of the line by the
/// Heisenberg algebra, with basis `(p, q, z, w)` of the total algebra.
pub fn oscillator_extension() -> Extension {
    let r = Rational::from;
    let base = LieAlgebra::from_brackets(vec!["r".into()], Vec::new()).expect("valid");
    let iota = Matrix::from_fn(4, 3, |i, j| r(i64::from(i == j)));
    let q = Matrix::from_rows(vec![vec![r(0), r(0), r(0), r(1)]]).expect("rows");
    Extension::new(oscillator(), base, heisenberg3(), iota, q).expect("valid extension")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn col(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| q(x)).collect()
    }

    fn osc_sections() -> (Section, Section) {
        (Section::from_images(4, &[col(&[0, 0, 0, 1])]), Section::from_images(4, &[col(&[0, 0, 1, 1])]))
    }

    fn heis_standard() -> Section {
        Section::from_images(3, &[col(&[1, 0, 0]), col(&[0, 1, 0])])
    }

    #[test]
    fn fixtures_validate() {
        assert!(heisenberg_extension().validate().is_ok());
        assert!(oscillator_extension().validate().is_ok());
    }

    #[test]
    fn zero_projection_fails_surjectivity() {
        let e = oscillator_extension();
        let bad = Extension::new_unchecked(
            e.total().clone(),
            e.base().clone(),
            e.kernel().clone(),
            e.inclusion().clone(),
            Matrix::zeros(1, 4),
        )
        .unwrap();
        let report = bad.validate();
        assert!(report.fails(ExtensionCheck::ProjectionSurjective));
        assert!(!report.fails(ExtensionCheck::InclusionInjective));
    }

    #[test]
    fn non_ideal_kernel_is_reported() {
        // span(p) in h3 with g = span(q, z): [q, p] = -z leaves span(p)
        let kernel = LieAlgebra::from_brackets(vec!["p".into()], Vec::new()).unwrap();
        let iota = Matrix::from_rows(vec![col(&[1]), col(&[0]), col(&[0])]).unwrap();
        let proj = Matrix::from_rows(vec![col(&[0, 1, 0]), col(&[0, 0, 1])]).unwrap();
        let e = Extension::new_unchecked(heisenberg3(), abelian(2), kernel, iota, proj).unwrap();
        let report = e.validate();
        assert!(report.fails(ExtensionCheck::KernelIdeal));
    }

    #[test]
    fn section_validation() {
        let e = oscillator_extension();
        let (s0, sz) = osc_sections();
        assert!(validate_section(&e, &s0).unwrap());
        assert!(validate_section(&e, &sz).unwrap());
        assert!(!validate_section(&e, &Section::new(Matrix::<Rational>::zeros(4, 1))).unwrap());
        assert!(validate_section(&e, &Section::new(Matrix::<Rational>::zeros(3, 1))).is_err());
    }

    #[test]
    fn heisenberg_curvature() {
        let e = heisenberg_extension();
        let r = section_curvature(&e, &heis_standard()).unwrap();
        assert_eq!(r.get(&[0, 1]), &[q(1)]);
    }

    #[test]
    fn oscillator_curvatures_vanish() {
        let e = oscillator_extension();
        let (s0, sz) = osc_sections();
        assert!(section_curvature(&e, &s0).unwrap().is_zero());
        assert!(section_curvature(&e, &sz).unwrap().is_zero());
    }

    #[test]
    fn oscillator_action_is_rotation() {
        let e = oscillator_extension();
        let (s0, _) = osc_sections();
        let s = s_from_section(&e, &s0).unwrap();
        assert_eq!(s.matrix(0), &crate::lie::rotation_derivation());
    }

    #[test]
    fn central_kernel_acts_trivially() {
        let e = heisenberg_extension();
        let sigma = Section::from_images(3, &[col(&[1, 0, 5]), col(&[0, 1, -2])]);
        let s = s_from_section(&e, &sigma).unwrap();
        assert!(s.matrices().iter().all(Matrix::is_zero));
    }

    #[test]
    fn oscillator_invariance_readings() {
        let e = oscillator_extension();
        let (s0, _) = osc_sections();
        let rep = Representation::trivial(e.base().clone(), 1);
        let fz = SymMultiMap::dual(3, 2);
        let fp = SymMultiMap::dual(3, 0);
        assert!(is_invariant(&fz, &e, &rep, InvariancePolicy::Section(&s0)).unwrap());
        assert!(!is_invariant(&fp, &e, &rep, InvariancePolicy::Section(&s0)).unwrap());
        assert!(!is_invariant(&fz, &e, &rep, InvariancePolicy::StrictTotal).unwrap());
    }

    #[test]
    fn invariant_linear_functionals_of_oscillator() {
        let e = oscillator_extension();
        let (s0, _) = osc_sections();
        let rep = Representation::trivial(e.base().clone(), 1);
        let inv = invariant_polynomials(&e, &rep, 1, &[InvariancePolicy::Section(&s0)]).unwrap();
        assert_eq!(inv.len(), 1);
        assert_eq!(inv[0], SymMultiMap::dual(3, 2));
        // quadratic invariants of the rotation: z², p² + q²
        let quad = invariant_polynomials(&e, &rep, 2, &[InvariancePolicy::Section(&s0)]).unwrap();
        assert_eq!(quad.len(), 2);
        for f in &quad {
            assert!(is_invariant(f, &e, &rep, InvariancePolicy::Section(&s0)).unwrap());
        }
    }

    #[test]
    fn parametric_section() {
        let e = oscillator_extension();
        let (s0, sz) = osc_sections();
        let st = param_section(&e, &[s0.clone(), sz]).unwrap();
        let t1 = MultiPoly::variable(0, 1);
        assert_eq!(st.matrix()[(2, 0)], t1);
        assert_eq!(st.matrix()[(3, 0)], MultiPoly::constant(q(1), 1));
        assert!(validate_section(&e, &st).unwrap());

        let same = param_section(&e, &[s0.clone(), s0.clone()]).unwrap();
        assert_eq!(same, s0.lift::<MultiPoly>());
        assert!(param_section(&e, &[s0]).is_err());
    }

    #[test]
    fn parametric_curvature_shifted_section() {
        let e = heisenberg_extension();
        let s0 = heis_standard();
        let s1 = Section::from_images(3, &[col(&[1, 0, 1]), col(&[0, 1, 0])]);
        let st = param_section(&e, &[s0, s1.clone()]).unwrap();
        let rt = param_curvature(&e, &st).unwrap();
        assert_eq!(rt.get(&[0, 1]), &[MultiPoly::constant(q(1), 1)]);
        let at_vertex = rt.map(|p| p.evaluate(&[q(1)]));
        assert_eq!(at_vertex, section_curvature(&e, &s1).unwrap());
    }

    #[test]
    fn difference_lands_in_kernel() {
        let e = oscillator_extension();
        let (s0, sz) = osc_sections();
        let a = section_difference(&e, &s0, &sz).unwrap();
        assert_eq!(a.get(&[0]), &[q(0), q(0), q(1)]);
    }
}
