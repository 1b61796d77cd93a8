//! The JSON workspace format and renderings of computed objects.
//!
//! A workspace holds named algebras, representations, extensions, sections
//! and symmetric polynomials. Objects refer to each other by name, and to
//! basis vectors by basis name. Rationals are always strings. The canonical
//! form has sorted keys, two-space indentation and a trailing newline;
//! [`serialize_workspace`] produces it and [`parse_workspace`] reads it back
//! to an equal value.

mod render;
mod schema;

use std::collections::BTreeMap;

use crate::exact::{Matrix, MultiPoly, Rational};
use crate::extension::{validate_section, Extension, Section};
use crate::lie::{LieAlgebra, Representation};
use crate::multilinear::SymMultiMap;
use crate::{Error, Result};

pub use render::{class_json, class_text, cochain_json, cochain_text};
use schema::{
    RawAlgebra, RawBracket, RawEntry, RawExtension, RawPolyEntry, RawPolynomial,
    RawRepresentation, RawSection, RawTerm, RawWorkspace,
};

/// A section with rational or polynomial entries.
#[derive(Clone, Debug, PartialEq)]
pub enum StoredSection {
    Rational(Section),
    Polynomial { nvars: usize, section: Section<MultiPoly> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct RepresentationEntry {
    pub algebra: String,
    pub representation: Representation,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExtensionEntry {
    pub total: String,
    pub base: String,
    pub kernel: String,
    pub extension: Extension,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SectionEntry {
    pub extension: String,
    pub section: StoredSection,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PolynomialEntry {
    pub algebra: String,
    pub map: SymMultiMap,
}

/// Named, validated objects with resolved cross-references.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Workspace {
    algebras: BTreeMap<String, LieAlgebra>,
    representations: BTreeMap<String, RepresentationEntry>,
    extensions: BTreeMap<String, ExtensionEntry>,
    sections: BTreeMap<String, SectionEntry>,
    polynomials: BTreeMap<String, PolynomialEntry>,
}

fn missing(kind: &str, name: &str) -> Error {
    Error::validation(format!("{kind} '{name}'"), "not defined in the workspace")
}

/// Prefixes an error with the object it was raised for.
fn within(kind: &str, name: &str, e: Error) -> Error {
    match e {
        Error::Validation { object, reason } => {
            Error::Validation { object: format!("{kind} '{name}' {object}"), reason }
        }
        other => Error::validation(format!("{kind} '{name}'"), other.to_string()),
    }
}

impl Workspace {
    pub fn new() -> Self {
        Workspace::default()
    }

    pub fn is_empty(&self) -> bool {
        self.algebras.is_empty()
            && self.representations.is_empty()
            && self.extensions.is_empty()
            && self.sections.is_empty()
            && self.polynomials.is_empty()
    }

    pub fn algebras(&self) -> &BTreeMap<String, LieAlgebra> {
        &self.algebras
    }

    pub fn representations(&self) -> &BTreeMap<String, RepresentationEntry> {
        &self.representations
    }

    pub fn extensions(&self) -> &BTreeMap<String, ExtensionEntry> {
        &self.extensions
    }

    pub fn sections(&self) -> &BTreeMap<String, SectionEntry> {
        &self.sections
    }

    pub fn polynomials(&self) -> &BTreeMap<String, PolynomialEntry> {
        &self.polynomials
    }

    pub fn algebra(&self, name: &str) -> Result<&LieAlgebra> {
        self.algebras.get(name).ok_or_else(|| missing("algebra", name))
    }

    pub fn representation(&self, name: &str) -> Result<&Representation> {
        self.representations
            .get(name)
            .map(|e| &e.representation)
            .ok_or_else(|| missing("representation", name))
    }

    pub fn extension(&self, name: &str) -> Result<&Extension> {
        self.extensions.get(name).map(|e| &e.extension).ok_or_else(|| missing("extension", name))
    }

    pub fn section_entry(&self, name: &str) -> Result<&SectionEntry> {
        self.sections.get(name).ok_or_else(|| missing("section", name))
    }

    /// A section of `extension` with rational entries.
    pub fn section(&self, name: &str, extension: &str) -> Result<&Section> {
        let entry = self.section_entry(name)?;
        if entry.extension != extension {
            return Err(Error::validation(
                format!("section '{name}'"),
                format!("belongs to extension '{}', not '{extension}'", entry.extension),
            ));
        }
        match &entry.section {
            StoredSection::Rational(s) => Ok(s),
            StoredSection::Polynomial { .. } => Err(Error::validation(
                format!("section '{name}'"),
                "has polynomial entries where a rational section is required",
            )),
        }
    }

    pub fn polynomial(&self, name: &str) -> Result<&SymMultiMap> {
        self.polynomials.get(name).map(|e| &e.map).ok_or_else(|| missing("polynomial", name))
    }

    pub fn insert_algebra(&mut self, name: &str, algebra: LieAlgebra) -> Result<()> {
        algebra.validate().map_err(|e| within("algebra", name, e))?;
        self.algebras.insert(name.to_string(), algebra);
        Ok(())
    }

    pub fn insert_representation(
        &mut self,
        name: &str,
        algebra: &str,
        representation: Representation,
    ) -> Result<()> {
        let alg = self.algebra(algebra)?;
        if alg != representation.algebra() {
            return Err(Error::validation(
                format!("representation '{name}'"),
                format!("is not a representation of '{algebra}'"),
            ));
        }
        let report = representation.check();
        if let Some(&(i, j)) = report.violations.first() {
            let names = alg.basis_names();
            return Err(Error::validation(
                format!("representation '{name}' ({}, {})", names[i], names[j]),
                "ρ([x,y]) differs from ρ(x)ρ(y) - ρ(y)ρ(x)",
            ));
        }
        let entry = RepresentationEntry { algebra: algebra.to_string(), representation };
        self.representations.insert(name.to_string(), entry);
        Ok(())
    }

    pub fn insert_extension(
        &mut self,
        name: &str,
        total: &str,
        base: &str,
        kernel: &str,
        extension: Extension,
    ) -> Result<()> {
        for (role, alg_name, alg) in [
            ("total", total, extension.total()),
            ("base", base, extension.base()),
            ("kernel", kernel, extension.kernel()),
        ] {
            if self.algebra(alg_name)? != alg {
                return Err(Error::validation(
                    format!("extension '{name}'"),
                    format!("{role} algebra differs from '{alg_name}'"),
                ));
            }
        }
        if let Some(f) = extension.validate().failures.first() {
            return Err(Error::validation(
                format!("extension '{name}'"),
                format!("{}: {}", f.check, f.detail),
            ));
        }
        let entry = ExtensionEntry {
            total: total.to_string(),
            base: base.to_string(),
            kernel: kernel.to_string(),
            extension,
        };
        self.extensions.insert(name.to_string(), entry);
        Ok(())
    }

    pub fn insert_section(&mut self, name: &str, extension: &str, section: StoredSection) -> Result<()> {
        let ext = self.extension(extension)?;
        let valid = match &section {
            StoredSection::Rational(s) => validate_section(ext, s),
            StoredSection::Polynomial { section, .. } => validate_section(ext, section),
        }
        .map_err(|e| within("section", name, e))?;
        if !valid {
            return Err(Error::validation(format!("section '{name}'"), "q·σ is not the identity"));
        }
        let entry = SectionEntry { extension: extension.to_string(), section };
        self.sections.insert(name.to_string(), entry);
        Ok(())
    }

    pub fn insert_polynomial(&mut self, name: &str, algebra: &str, map: SymMultiMap) -> Result<()> {
        let dim = self.algebra(algebra)?.dim();
        if map.source_dim() != dim {
            return Err(Error::validation(
                format!("polynomial '{name}'"),
                format!("defined on dimension {}, '{algebra}' has dimension {dim}", map.source_dim()),
            ));
        }
        let entry = PolynomialEntry { algebra: algebra.to_string(), map };
        self.polynomials.insert(name.to_string(), entry);
        Ok(())
    }
}

fn index_of(alg: &LieAlgebra, name: &str) -> Result<usize> {
    alg.index_of(name).ok_or_else(|| {
        Error::validation(format!("'{name}'"), "is not a basis vector of the algebra")
    })
}

fn check_shape<T>(raw: &[Vec<T>], rows: usize, cols: usize, what: &str) -> Result<()> {
    if raw.len() != rows || raw.iter().any(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch(format!("{what} must be {rows}x{cols}")));
    }
    Ok(())
}

fn rational_matrix(raw: &[Vec<Rational>], rows: usize, cols: usize, what: &str) -> Result<Matrix> {
    check_shape(raw, rows, cols, what)?;
    Ok(Matrix::from_fn(rows, cols, |i, j| raw[i][j].clone()))
}

fn algebra_from_raw(raw: &RawAlgebra) -> Result<LieAlgebra> {
    if raw.dim != raw.basis.len() {
        return Err(Error::DimensionMismatch(format!(
            "dim is {} but {} basis names are listed",
            raw.dim,
            raw.basis.len()
        )));
    }
    let lookup = |n: &str| {
        raw.basis.iter().position(|b| b == n).ok_or_else(|| {
            Error::validation(format!("'{n}'"), "is not a basis vector of the algebra")
        })
    };
    let mut brackets = Vec::with_capacity(raw.brackets.len());
    for b in &raw.brackets {
        let (i, j) = (lookup(&b.i)?, lookup(&b.j)?);
        let mut coeffs = vec![Rational::zero(); raw.dim];
        for (k, c) in &b.coeffs {
            coeffs[lookup(k)?] = c.clone();
        }
        brackets.push((i, j, coeffs));
    }
    LieAlgebra::from_brackets(raw.basis.clone(), brackets)
}

fn algebra_to_raw(alg: &LieAlgebra) -> RawAlgebra {
    let names = alg.basis_names();
    let mut brackets = Vec::new();
    for i in 0..alg.dim() {
        for j in (i + 1)..alg.dim() {
            let coeffs: BTreeMap<String, Rational> = alg
                .bracket_basis(i, j)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (names[k].clone(), c.clone()))
                .collect();
            if !coeffs.is_empty() {
                brackets.push(RawBracket { i: names[i].clone(), j: names[j].clone(), coeffs });
            }
        }
    }
    RawAlgebra { dim: alg.dim(), basis: names.to_vec(), brackets }
}

fn poly_from_terms(terms: &[RawTerm], nvars: usize) -> Result<MultiPoly> {
    if let Some(t) = terms.iter().find(|t| t.exponents.len() != nvars) {
        return Err(Error::DimensionMismatch(format!(
            "term with {} exponents in a polynomial of {nvars} variables",
            t.exponents.len()
        )));
    }
    let p = MultiPoly::from_terms(nvars, terms.iter().map(|t| (t.exponents.clone(), t.coeff.clone())));
    Ok(p.with_nvars(nvars))
}

fn section_from_raw(raw: &RawSection, ext: &Extension) -> Result<StoredSection> {
    let (rows, cols) = (ext.total().dim(), ext.base().dim());
    check_shape(&raw.matrix, rows, cols, "section matrix")?;
    let entries = &raw.matrix;
    let has_poly = entries.iter().flatten().any(|e| matches!(e, RawEntry::Polynomial(_)));
    if raw.nvars.is_none() && !has_poly {
        let m = Matrix::from_fn(rows, cols, |i, j| match &entries[i][j] {
            RawEntry::Rational(r) => r.clone(),
            RawEntry::Polynomial(_) => unreachable!("checked above"),
        });
        return Ok(StoredSection::Rational(Section::new(m)));
    }
    let nvars = raw.nvars.ok_or_else(|| {
        Error::validation("nvars", "required for a section with polynomial entries")
    })?;
    let mut polys = Vec::with_capacity(rows * cols);
    for e in entries.iter().flatten() {
        polys.push(match e {
            RawEntry::Rational(r) => MultiPoly::constant(r.clone(), nvars),
            RawEntry::Polynomial(terms) => poly_from_terms(terms, nvars)?,
        });
    }
    let m = Matrix::from_fn(rows, cols, |i, j| polys[i * cols + j].clone());
    Ok(StoredSection::Polynomial { nvars, section: Section::new(m) })
}

fn section_to_raw(extension: &str, s: &StoredSection) -> RawSection {
    match s {
        StoredSection::Rational(sec) => RawSection {
            extension: extension.to_string(),
            nvars: None,
            matrix: sec
                .matrix()
                .to_rows()
                .into_iter()
                .map(|r| r.into_iter().map(RawEntry::Rational).collect())
                .collect(),
        },
        StoredSection::Polynomial { nvars, section } => RawSection {
            extension: extension.to_string(),
            nvars: Some(*nvars),
            matrix: section
                .matrix()
                .to_rows()
                .into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(|p| {
                            let terms = p.with_nvars(*nvars).terms();
                            RawEntry::Polynomial(
                                terms
                                    .into_iter()
                                    .map(|t| RawTerm { coeff: t.coeff, exponents: t.exponents })
                                    .collect(),
                            )
                        })
                        .collect()
                })
                .collect(),
        },
    }
}

fn polynomial_from_raw(raw: &RawPolynomial, alg: &LieAlgebra) -> Result<SymMultiMap> {
    let mut entries = Vec::with_capacity(raw.entries.len());
    for e in &raw.entries {
        let tuple = e.tuple.iter().map(|n| index_of(alg, n)).collect::<Result<Vec<_>>>()?;
        entries.push((tuple, e.value.clone()));
    }
    SymMultiMap::from_entries(raw.degree, alg.dim(), raw.target_dim, entries)
}

fn polynomial_to_raw(algebra: &str, f: &SymMultiMap, alg: &LieAlgebra) -> RawPolynomial {
    let names = alg.basis_names();
    let entries = f
        .tuples()
        .into_iter()
        .zip(f.values())
        .filter(|(_, v)| v.iter().any(|x| !x.is_zero()))
        .map(|(t, v)| RawPolyEntry {
            tuple: t.iter().map(|&i| names[i].clone()).collect(),
            value: v.clone(),
        })
        .collect();
    RawPolynomial {
        algebra: algebra.to_string(),
        degree: f.degree(),
        target_dim: f.target_dim(),
        entries,
    }
}

/// Parses and validates a workspace document.
///
/// Malformed JSON or a schema mismatch gives [`Error::Parse`] with the line
/// and column; data that parses but violates an invariant gives
/// [`Error::Validation`] naming the object.
pub fn parse_workspace(text: &str) -> Result<Workspace> {
    let raw: RawWorkspace = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let mut ws = Workspace::new();

    for (name, a) in &raw.algebras {
        let alg = algebra_from_raw(a).map_err(|e| within("algebra", name, e))?;
        ws.insert_algebra(name, alg)?;
    }
    for (name, r) in &raw.representations {
        let alg = ws.algebra(&r.algebra)?.clone();
        let mut matrices = vec![Matrix::zeros(r.dim, r.dim); alg.dim()];
        for (basis, m) in &r.action {
            let i = index_of(&alg, basis).map_err(|e| within("representation", name, e))?;
            matrices[i] = rational_matrix(m, r.dim, r.dim, "action matrix")
                .map_err(|e| within("representation", name, e))?;
        }
        let rep = Representation::with_dim(alg, r.dim, matrices)
            .map_err(|e| within("representation", name, e))?;
        ws.insert_representation(name, &r.algebra, rep)?;
    }
    for (name, x) in &raw.extensions {
        let total = ws.algebra(&x.total)?.clone();
        let base = ws.algebra(&x.base)?.clone();
        let kernel = ws.algebra(&x.kernel)?.clone();
        let build = || -> Result<Extension> {
            let iota = rational_matrix(&x.iota, total.dim(), kernel.dim(), "iota")?;
            let q = rational_matrix(&x.q, base.dim(), total.dim(), "q")?;
            Extension::new_unchecked(total.clone(), base.clone(), kernel.clone(), iota, q)
        };
        let ext = build().map_err(|e| within("extension", name, e))?;
        ws.insert_extension(name, &x.total, &x.base, &x.kernel, ext)?;
    }
    for (name, s) in &raw.sections {
        let ext = ws.extension(&s.extension)?;
        let section = section_from_raw(s, ext).map_err(|e| within("section", name, e))?;
        ws.insert_section(name, &s.extension, section)?;
    }
    for (name, p) in &raw.polynomials {
        let alg = ws.algebra(&p.algebra)?;
        let map = polynomial_from_raw(p, alg).map_err(|e| within("polynomial", name, e))?;
        ws.insert_polynomial(name, &p.algebra, map)?;
    }
    Ok(ws)
}

/// Canonical JSON text of a workspace.
pub fn serialize_workspace(ws: &Workspace) -> String {
    let mut raw = RawWorkspace::default();
    for (name, alg) in &ws.algebras {
        raw.algebras.insert(name.clone(), algebra_to_raw(alg));
    }
    for (name, e) in &ws.representations {
        let rep = &e.representation;
        let names = rep.algebra().basis_names();
        let action = rep
            .matrices()
            .iter()
            .enumerate()
            .filter(|(_, m)| !m.is_zero())
            .map(|(i, m)| (names[i].clone(), m.to_rows()))
            .collect();
        raw.representations.insert(
            name.clone(),
            RawRepresentation { algebra: e.algebra.clone(), dim: rep.space_dim(), action },
        );
    }
    for (name, e) in &ws.extensions {
        raw.extensions.insert(
            name.clone(),
            RawExtension {
                total: e.total.clone(),
                base: e.base.clone(),
                kernel: e.kernel.clone(),
                iota: e.extension.inclusion().to_rows(),
                q: e.extension.projection().to_rows(),
            },
        );
    }
    for (name, e) in &ws.sections {
        raw.sections.insert(name.clone(), section_to_raw(&e.extension, &e.section));
    }
    for (name, e) in &ws.polynomials {
        let alg = &ws.algebras[&e.algebra];
        raw.polynomials.insert(name.clone(), polynomial_to_raw(&e.algebra, &e.map, alg));
    }
    // Value maps are ordered, which sorts every object's keys.
    let value = serde_json::to_value(&raw).expect("workspace is representable as JSON");
    let mut text = serde_json::to_string_pretty(&value).expect("value serializes");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    const OSCILLATOR: &str = include_str!("../../examples/oscillator.json");
    const HEISENBERG: &str = include_str!("../../examples/heisenberg.json");

    #[test]
    fn empty_document() {
        let ws = parse_workspace("{}").unwrap();
        assert!(ws.is_empty());
        assert_eq!(serialize_workspace(&ws), "{}\n");
    }

    #[test]
    fn fixtures_round_trip_byte_identical() {
        for text in [OSCILLATOR, HEISENBERG] {
            let ws = parse_workspace(text).unwrap();
            assert_eq!(serialize_workspace(&ws), text);
            assert_eq!(parse_workspace(&serialize_workspace(&ws)).unwrap(), ws);
        }
    }

    #[test]
    fn oscillator_contents() {
        let ws = parse_workspace(OSCILLATOR).unwrap();
        let ext = ws.extension("osc").unwrap();
        assert_eq!(ext.total().dim(), 4);
        assert_eq!(ext.kernel().dim(), 3);
        assert_eq!(ext.base().dim(), 1);
        assert!(ws.section("s0", "osc").is_ok());
        assert!(ws.section("sz", "osc").is_ok());
        assert_eq!(ws.polynomial("fz").unwrap(), &SymMultiMap::dual(3, 2));
    }

    #[test]
    fn syntax_error_has_location() {
        let err = parse_workspace("{\n  \"algebras\": [\n}").unwrap_err();
        match err {
            Error::Parse(msg) => assert!(msg.contains("line"), "{msg}"),
            other => panic!("expected a parse error, got {other:?}"),
        }
        assert!(matches!(parse_workspace("{\"unknown\": 1}"), Err(Error::Parse(_))));
        assert!(matches!(
            parse_workspace(r#"{"algebras": {"a": {"dim": 1, "basis": ["x"], "brackets": [{"i": "x", "j": "x", "coeffs": {"x": "0.5"}}]}}}"#),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn jacobi_violation_names_triple() {
        let text = r#"{"algebras": {"bad": {"dim": 3, "basis": ["p", "q", "z"], "brackets": [
            {"i": "p", "j": "q", "coeffs": {"z": "1"}},
            {"i": "q", "j": "z", "coeffs": {"q": "1"}}]}}}"#;
        let err = parse_workspace(text).unwrap_err();
        let msg = err.to_string();
        assert!(matches!(err, Error::Validation { .. }));
        assert!(msg.contains("'bad'") && msg.contains("(p, q, z)"), "{msg}");
    }

    #[test]
    fn dangling_reference() {
        let text = r#"{"polynomials": {"f": {"algebra": "nope", "degree": 1, "target_dim": 1}}}"#;
        let err = parse_workspace(text).unwrap_err();
        assert!(err.to_string().contains("'nope'"), "{err}");
    }

    #[test]
    fn polynomial_section_terms_are_graded_lex() {
        let mut ws = parse_workspace(OSCILLATOR).unwrap();
        let s0 = ws.section("s0", "osc").unwrap().clone();
        let sz = ws.section("sz", "osc").unwrap().clone();
        let s1 = Section::from_images(4, &[vec![1, 0, 0, 1].into_iter().map(Rational::from).collect()]);
        let ext = ws.extension("osc").unwrap().clone();
        let st = crate::extension::param_section(&ext, &[s0, sz, s1]).unwrap();
        ws.insert_section("st", "osc", StoredSection::Polynomial { nvars: 2, section: st }).unwrap();
        let text = serialize_workspace(&ws);
        assert_eq!(parse_workspace(&text).unwrap(), ws);
        assert_eq!(serialize_workspace(&parse_workspace(&text).unwrap()), text);
        // σ_t(r) has p-entry t2 and z-entry t1
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        let m = &doc["sections"]["st"]["matrix"];
        assert_eq!(m[0][0], serde_json::json!([{"coeff": "1", "exponents": [0, 1]}]));
        assert_eq!(m[2][0], serde_json::json!([{"coeff": "1", "exponents": [1, 0]}]));
        assert_eq!(m[3][0], serde_json::json!([{"coeff": "1", "exponents": [0, 0]}]));
    }
}
