//! Serde mirror of the workspace document. Rationals are strings and basis
//! vectors are referred to by name.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::exact::Rational;

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(super) struct RawWorkspace {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub algebras: BTreeMap<String, RawAlgebra>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub representations: BTreeMap<String, RawRepresentation>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub extensions: BTreeMap<String, RawExtension>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub sections: BTreeMap<String, RawSection>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub polynomials: BTreeMap<String, RawPolynomial>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(super) struct RawAlgebra {
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub brackets: Vec<RawBracket>,
}

/// `[i, j] = Σ coeffs[k] k`.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(super) struct RawBracket {
    pub i: String,
    pub j: String,
    pub coeffs: BTreeMap<String, Rational>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(super) struct RawRepresentation {
    pub algebra: String,
    pub dim: usize,
    /// Matrix of each basis vector, row-major; missing entries act by zero.
    #[serde(default)]
    pub action: BTreeMap<String, Vec<Vec<Rational>>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(super) struct RawExtension {
    pub total: String,
    pub base: String,
    pub kernel: String,
    pub iota: Vec<Vec<Rational>>,
    pub q: Vec<Vec<Rational>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(super) struct RawSection {
    pub extension: String,
    /// Present for sections with polynomial entries.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nvars: Option<usize>,
    pub matrix: Vec<Vec<RawEntry>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub(super) enum RawEntry {
    Rational(Rational),
    Polynomial(Vec<RawTerm>),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(super) struct RawTerm {
    pub coeff: Rational,
    pub exponents: Vec<u32>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(super) struct RawPolynomial {
    pub algebra: String,
    pub degree: usize,
    pub target_dim: usize,
    #[serde(default)]
    pub entries: Vec<RawPolyEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(super) struct RawPolyEntry {
    pub tuple: Vec<String>,
    pub value: Vec<Rational>,
}
