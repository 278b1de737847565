//! JSON shapes of the command reports.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalParameters {
    pub alpha: String,
    pub beta: String,
    pub rho: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagReport {
    pub form: String,
    pub foliation_degree: u32,
    pub infinity_invariant: bool,
    pub monomials: Vec<[u32; 2]>,
    pub stripped_binomials: Vec<String>,
    pub smith_invariants: Vec<i64>,
    /// `None` for an infinite group.
    pub order: Option<u64>,
    pub root_order: Option<u64>,
    pub bezout_bound: Option<bool>,
    pub extremal: Option<ExtremalParameters>,
    pub elements: Option<Vec<[String; 2]>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub numerator: String,
    pub denominators: Vec<u32>,
    pub matches: bool,
    pub first_difference: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MolienReport {
    pub group: String,
    pub group_order: usize,
    pub character: usize,
    pub kind: String,
    pub truncation: usize,
    pub coefficients: Vec<i64>,
    pub comparison: Option<Comparison>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiReport {
    pub group: String,
    pub character: usize,
    pub degree: u32,
    pub dimension: usize,
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub group: String,
    pub group_order: usize,
    pub point: String,
    pub size: usize,
    pub points: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRow {
    pub key: String,
    pub symbol: String,
    pub degree: Option<u32>,
    pub expected_order: String,
    pub structure: String,
    pub description: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefiningText {
    pub kind: String,
    pub text: Vec<String>,
}

/// One record of the shipped `catalog.json`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub key: String,
    pub symbol: String,
    pub degree: u32,
    pub expected_order: u64,
    pub defining_object: DefiningText,
    pub affine_form: String,
    pub generators: Vec<Vec<Vec<String>>>,
    pub structure: String,
    pub description: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorResult {
    pub index: usize,
    pub certified: bool,
    pub scalar: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderResult {
    pub expected: u64,
    pub computed: u64,
    pub center: Option<[u64; 2]>,
    pub projective: Option<[u64; 2]>,
    pub diagonal_expected: Option<u64>,
    pub diagonal_computed: Option<u64>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyhedralResult {
    pub recovered: String,
    pub matches_orbit_polynomial: bool,
    pub top_part_exact: bool,
    pub rotation_coefficient: Option<String>,
    pub semi_invariance: Vec<Option<String>>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub key: String,
    pub symbol: String,
    pub degree: u32,
    pub generators: Vec<GeneratorResult>,
    pub order: OrderResult,
    pub polyhedral: Option<PolyhedralResult>,
    pub passed: bool,
}
