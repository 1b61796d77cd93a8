use crate::exact::{integrate_poly_simplex, MultiPoly, Rational};
use crate::extension::{
    is_invariant, param_curvature, param_section, section_curvature, section_difference,
    validate_section, Extension, InvariancePolicy, Section,
};
use crate::lie::Representation;
use crate::multilinear::{ce_differential, compose_sym, Cochain, SymMultiMap};
use crate::{Error, Result};

use super::cohomology::{cohomology_space, CohomologySpace};

/// How invariance of `f` is judged before building classes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum InvarianceMode {
    /// The condition over `x ∈ g` with `S = ad∘σ`, checked for every section
    /// that enters the computation.
    #[default]
    Section,
    /// The condition over every `x ∈ ĝ`.
    Strict,
}

/// Whether `f` is invariant under `mode` for each of the given sections.
pub fn invariant_for_sections(
    ext: &Extension,
    f: &SymMultiMap,
    sections: &[Section],
    rep: &Representation,
    mode: InvarianceMode,
) -> Result<bool> {
    match mode {
        InvarianceMode::Strict => is_invariant(f, ext, rep, InvariancePolicy::StrictTotal),
        InvarianceMode::Section => {
            for s in sections {
                if !is_invariant(f, ext, rep, InvariancePolicy::Section(s))? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// The cochain `Δ_f(σ_0, …, σ_n)` of degree `2p − n`, with a flag set when
/// `f` fails the invariance check (the computation still proceeds).
#[derive(Clone, Debug, PartialEq)]
pub struct DeltaF {
    pub cochain: Cochain,
    pub invariance_warning: bool,
}

/// `f_{β_1, …, β_p} = f̃ ∘ (β_1 ∧ ⋯ ∧ β_p)`, with `f` itself for `p = 0`.
fn compose_or_constant<S: crate::exact::Scalar>(
    f: &SymMultiMap,
    args: &[&Cochain<S>],
    base_dim: usize,
) -> Result<Cochain<S>> {
    if f.degree() == 0 {
        let value = f.get(&[]).iter().map(S::from_rational).collect();
        return Ok(Cochain::constant(base_dim, value));
    }
    compose_sym(f, args)
}

/// `f_σ = f_{R_σ, …, R_σ}`.
pub fn f_sigma(ext: &Extension, f: &SymMultiMap, sigma: &Section) -> Result<Cochain> {
    let r = section_curvature(ext, sigma)?;
    let args = vec![&r; f.degree()];
    compose_or_constant(f, &args, ext.base().dim())
}

/// `Δ_f(σ_0, …, σ_n) = ∫_{D_n} f_{α_1, …, α_n, R_t, …, R_t} dλ` with
/// `α_i = σ_i − σ_0` and `R_t` the curvature of the affine family `σ_t`.
/// For a single section this is `f_σ`.
pub fn delta_f(
    ext: &Extension,
    f: &SymMultiMap,
    sections: &[Section],
    rep: &Representation,
    mode: InvarianceMode,
) -> Result<DeltaF> {
    check_shapes(ext, f, rep)?;
    let Some(first) = sections.first() else {
        return Err(Error::Degree("Δ_f needs at least one section".into()));
    };
    for s in sections {
        if !validate_section(ext, s)? {
            return Err(Error::InvalidSection("q·σ is not the identity".into()));
        }
    }
    let p = f.degree();
    let n = sections.len() - 1;
    if p < n {
        return Err(Error::Degree(format!(
            "a degree-{p} polynomial cannot absorb {n} section differences"
        )));
    }
    let invariance_warning = !invariant_for_sections(ext, f, sections, rep, mode)?;
    if n == 0 {
        return Ok(DeltaF { cochain: f_sigma(ext, f, first)?, invariance_warning });
    }

    let alphas: Vec<Cochain<MultiPoly>> = sections[1..]
        .iter()
        .map(|s| section_difference(ext, first, s).map(|a| a.lift()))
        .collect::<Result<_>>()?;
    let rt = param_curvature(ext, &param_section(ext, sections)?)?;
    let mut args: Vec<&Cochain<MultiPoly>> = alphas.iter().collect();
    args.extend(std::iter::repeat_n(&rt, p - n));
    let integrand = compose_sym(f, &args)?;
    let values = integrand
        .values()
        .iter()
        .map(|v| v.iter().map(|poly| integrate_poly_simplex(&poly.clone().with_nvars(n))).collect())
        .collect::<Result<Vec<Vec<Rational>>>>()?;
    let cochain =
        Cochain::from_values(integrand.degree(), integrand.source_dim(), integrand.target_dim(), values)?;
    Ok(DeltaF { cochain, invariance_warning })
}

fn check_shapes(ext: &Extension, f: &SymMultiMap, rep: &Representation) -> Result<()> {
    if f.source_dim() != ext.kernel().dim() {
        return Err(Error::DimensionMismatch(format!(
            "symmetric map on dimension {}, kernel of dimension {}",
            f.source_dim(),
            ext.kernel().dim()
        )));
    }
    if f.target_dim() != rep.space_dim() || rep.algebra().dim() != ext.base().dim() {
        return Err(Error::DimensionMismatch(
            "representation does not match the base algebra and the values of f".into(),
        ));
    }
    Ok(())
}

/// A cohomology class with its chosen representative.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacteristicClass {
    pub degree: usize,
    pub representative: Cochain,
    pub coordinates: Vec<Rational>,
    pub space: CohomologySpace,
}

impl CharacteristicClass {
    pub fn h_dim(&self) -> usize {
        self.space.h_dim()
    }

    pub fn is_zero(&self) -> bool {
        self.coordinates.iter().all(Rational::is_zero)
    }

    fn from_cocycle(representative: Cochain, rep: &Representation) -> Result<Self> {
        if !ce_differential(&representative, rep)?.is_zero() {
            return Err(Error::NotClosed(format!(
                "degree-{} representative has nonzero differential",
                representative.degree()
            )));
        }
        let degree = representative.degree();
        let space = cohomology_space(rep, degree);
        let coordinates = space.coordinates(&representative)?;
        Ok(CharacteristicClass { degree, representative, coordinates, space })
    }
}

fn require_invariant(
    ext: &Extension,
    f: &SymMultiMap,
    sections: &[Section],
    rep: &Representation,
    mode: InvarianceMode,
) -> Result<()> {
    if !invariant_for_sections(ext, f, sections, rep, mode)? {
        return Err(Error::NotInvariant(format!("under the {mode:?} policy")));
    }
    Ok(())
}

/// The primary class `(1/p!) [f_σ] ∈ H^{2p}(g, V)`.
pub fn chern_weil(
    ext: &Extension,
    f: &SymMultiMap,
    sigma: &Section,
    rep: &Representation,
    mode: InvarianceMode,
) -> Result<CharacteristicClass> {
    check_shapes(ext, f, rep)?;
    require_invariant(ext, f, std::slice::from_ref(sigma), rep, mode)?;
    let scale = Rational::factorial(f.degree() as u64).recip().expect("nonzero");
    let representative = f_sigma(ext, f, sigma)?.scale(&scale);
    CharacteristicClass::from_cocycle(representative, rep)
}

/// The secondary class `[Δ_f(σ_a, σ_b)] ∈ H^{2p−1}(g, V)`, defined when
/// `f_{σ_a} = f_{σ_b} = 0`.
pub fn secondary_class(
    ext: &Extension,
    f: &SymMultiMap,
    sigma_a: &Section,
    sigma_b: &Section,
    rep: &Representation,
    mode: InvarianceMode,
) -> Result<CharacteristicClass> {
    check_shapes(ext, f, rep)?;
    if f.degree() == 0 {
        return Err(Error::Degree("secondary classes need a polynomial of degree at least 1".into()));
    }
    let pair = [sigma_a.clone(), sigma_b.clone()];
    require_invariant(ext, f, &pair, rep, mode)?;
    for (label, s) in [("first", sigma_a), ("second", sigma_b)] {
        if !f_sigma(ext, f, s)?.is_zero() {
            return Err(Error::NotAdmissible(format!("f_σ is nonzero for the {label} section")));
        }
    }
    let delta = delta_f(ext, f, &pair, rep, mode)?;
    CharacteristicClass::from_cocycle(delta.cochain, rep)
}

/// Both sides of `(k − n + 1) d Δ_f(σ_0..σ_n) = Σ_i (−1)^i Δ_f(σ_0..σ̂_i..σ_n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TheoremReport {
    pub lhs: Cochain,
    pub rhs: Cochain,
    /// `lhs − rhs`.
    pub difference: Cochain,
    pub matches_plus: bool,
    /// Whether `lhs = −rhs`.
    pub matches_minus: bool,
    pub invariance_warning: bool,
}

impl TheoremReport {
    pub fn equal(&self) -> bool {
        self.matches_plus
    }

    /// `+1` or `−1` for the sign that holds, `None` if neither does. Both
    /// hold when the two sides vanish; `+1` is reported then.
    pub fn sign(&self) -> Option<i8> {
        if self.matches_plus {
            Some(1)
        } else if self.matches_minus {
            Some(-1)
        } else {
            None
        }
    }
}

pub fn verify_main_theorem(
    ext: &Extension,
    f: &SymMultiMap,
    sections: &[Section],
    rep: &Representation,
) -> Result<TheoremReport> {
    let k = f.degree();
    if sections.len() < 2 {
        return Err(Error::Degree("the theorem needs at least two sections".into()));
    }
    let n = sections.len() - 1;
    if k < n {
        return Err(Error::Degree(format!("degree {k} is below the number of differences {n}")));
    }
    let mode = InvarianceMode::Section;
    let full = delta_f(ext, f, sections, rep, mode)?;
    let coeff = Rational::from((k - n + 1) as i64);
    let lhs = ce_differential(&full.cochain, rep)?.scale(&coeff);

    let mut rhs: Option<Cochain> = None;
    for i in 0..=n {
        let omitted: Vec<Section> =
            sections.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, s)| s.clone()).collect();
        let term = delta_f(ext, f, &omitted, rep, mode)?.cochain;
        let term = if i % 2 == 0 { term } else { term.neg() };
        rhs = Some(match rhs {
            None => term,
            Some(acc) => acc.add(&term)?,
        });
    }
    let rhs = rhs.expect("at least two terms");
    let difference = lhs.sub(&rhs)?;
    let matches_plus = difference.is_zero();
    let matches_minus = lhs.add(&rhs)?.is_zero();
    Ok(TheoremReport {
        lhs,
        rhs,
        difference,
        matches_plus,
        matches_minus,
        invariance_warning: full.invariance_warning,
    })
}
