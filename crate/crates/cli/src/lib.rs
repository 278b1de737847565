//! Command implementations behind the `folsym` binary. Each command returns
//! its rendered output together with an exit status.

pub mod groups;
pub mod parse;
pub mod report;

use std::fmt::Write as _;
use std::path::Path;

use folsym_core::catalog::{
    build, verify_generators, verify_order_with, verify_polyhedral_normal_form, CatalogEntry, CatalogName,
    DefiningObject,
};
use folsym_core::diagonal::{bezout_bound_check, diagonal_group, extremal_form_detect, monomial_set};
use folsym_core::group::FiniteMatrixGroup;
use folsym_core::molien::{expand_closed_form, molien_series, parse_integer_polynomial, IntegerPowerSeries, MolienKind, Summation};
use folsym_core::semi::SemiInvariantSolver;
use folsym_core::{Cyclo, Error};
use serde::Serialize;

use crate::parse::{format_affine_form, format_vector_field, parse_affine_form, parse_point, ParseError};
use crate::report::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub truncation: usize,
    pub max_order: usize,
    pub conductor_cap: u64,
    pub output: Output,
}

impl Default for Config {
    fn default() -> Self {
        Config { truncation: 40, max_order: 10_000, conductor_cap: 120, output: Output::Text }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}: {1}")]
    Parse(String, ParseError),
    #[error("{0}: {1}")]
    Io(String, std::io::Error),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    /// 2 for bad input, 3 for a violated internal invariant.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(
                Error::NonIntegerCoefficient { .. }
                | Error::DimensionMismatch { .. }
                | Error::SingularMatrix
                | Error::DivisionByZero
                | Error::NoSolution(_),
            ) => 3,
            _ => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    VerificationFailed,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::VerificationFailed => 1,
        }
    }
}

pub struct Outcome {
    pub stdout: String,
    pub status: Status,
}

type CmdResult = Result<Outcome, CliError>;

fn emit<T: Serialize>(config: &Config, report: &T, text: impl FnOnce(&T) -> String, status: Status) -> CmdResult {
    let stdout = match config.output {
        Output::Json => serde_json::to_string_pretty(report).expect("reports serialize") + "\n",
        Output::Text => text(report),
    };
    Ok(Outcome { stdout, status })
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))
}

fn monomial_text(i: u32, j: u32) -> String {
    match (i, j) {
        (0, 0) => "1".into(),
        (i, 0) => format!("x^{}", i),
        (0, j) => format!("y^{}", j),
        (i, j) => format!("x^{}*y^{}", i, j),
    }
}

fn root_text(n: u64, k: u64) -> String {
    if k == 0 {
        "1".into()
    } else {
        format!("1*zeta({})^{}", n, k)
    }
}

pub fn cmd_diag(config: &Config, form_file: &Path, enumerate: bool) -> CmdResult {
    let text = read(form_file)?;
    let w = parse_affine_form(&text).map_err(|e| CliError::Parse(form_file.display().to_string(), e))?;
    let (degree, invariant) = w.foliation_degree();
    let m = monomial_set(&w)?;
    let g = diagonal_group(&m, enumerate, config.conductor_cap)?;
    let binomials = m.stripped_binomials();
    let report = DiagReport {
        form: format_affine_form(&w),
        foliation_degree: degree,
        infinity_invariant: invariant,
        monomials: m.monomials.iter().map(|&(i, j)| [i, j]).collect(),
        stripped_binomials: binomials
            .iter()
            .map(|b| format!("{} - {}", monomial_text(b.first.0, b.first.1), monomial_text(b.second.0, b.second.1)))
            .collect(),
        smith_invariants: g.lattice.snf.invariants.clone(),
        order: g.order,
        root_order: g.exponent,
        bezout_bound: if g.finite { Some(bezout_bound_check(&binomials)?) } else { None },
        extremal: extremal_form_detect(&w).map(|(a, b, r)| ExtremalParameters {
            alpha: a.to_string(),
            beta: b.to_string(),
            rho: r.to_string(),
        }),
        elements: enumerate.then(|| {
            let n = g.exponent.unwrap_or(1);
            g.exponents.iter().map(|&(ka, kb)| [root_text(n, ka), root_text(n, kb)]).collect()
        }),
    };
    let status = if report.bezout_bound == Some(false) { Status::VerificationFailed } else { Status::Ok };
    emit(config, &report, diag_text, status)
}

fn diag_text(r: &DiagReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "form: {}", r.form);
    let _ = writeln!(s, "foliation degree: {}", r.foliation_degree);
    let _ = writeln!(s, "line at infinity invariant: {}", r.infinity_invariant);
    let ms: Vec<String> = r.monomials.iter().map(|m| monomial_text(m[0], m[1])).collect();
    let _ = writeln!(s, "monomials: {}", ms.join(", "));
    let _ = writeln!(s, "stripped binomials: {}", r.stripped_binomials.join(", "));
    let inv: Vec<String> = r.smith_invariants.iter().map(|d| d.to_string()).collect();
    let _ = writeln!(s, "smith invariants: {}", inv.join(", "));
    match r.order {
        Some(n) => {
            let _ = writeln!(s, "order: {}", n);
        }
        None => {
            let _ = writeln!(s, "order: INFINITE");
        }
    }
    if let Some(b) = r.bezout_bound {
        let _ = writeln!(s, "bezout bound: {}", if b { "holds" } else { "VIOLATED" });
    }
    match &r.extremal {
        Some(p) => {
            let _ = writeln!(s, "extremal normal form: alpha = {}, beta = {}, rho = {}", p.alpha, p.beta, p.rho);
        }
        None => {
            let _ = writeln!(s, "extremal normal form: no");
        }
    }
    if let Some(els) = &r.elements {
        let _ = writeln!(s, "elements:");
        for [a, b] in els {
            let _ = writeln!(s, "  diag({}, {})", a, b);
        }
    }
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Ring,
    Vector,
    Fields,
}

impl SeriesKind {
    fn name(self) -> &'static str {
        match self {
            SeriesKind::Ring => "ring",
            SeriesKind::Vector => "vector",
            SeriesKind::Fields => "fields",
        }
    }
}

fn character(g: &FiniteMatrixGroup, index: usize) -> Result<folsym_core::group::Character, CliError> {
    let mut chars = g.linear_characters();
    if index >= chars.len() {
        return Err(CliError::Usage(format!("character {} out of range; the group has {}", index, chars.len())));
    }
    Ok(chars.swap_remove(index))
}

fn to_i64(s: &IntegerPowerSeries) -> Result<Vec<i64>, CliError> {
    s.coefficients()
        .iter()
        .map(|c| i64::try_from(c).map_err(|_| CliError::Usage(format!("coefficient {} does not fit in 64 bits", c))))
        .collect()
}

pub struct MolienArgs<'a> {
    pub group: &'a str,
    pub character: usize,
    pub kind: SeriesKind,
    pub compare: Option<(&'a Path, Vec<u32>)>,
}

pub fn cmd_molien(config: &Config, args: MolienArgs) -> CmdResult {
    let spec = groups::resolve(args.group)?;
    let g = spec.linear(config)?;
    let chi = character(&g, args.character)?;
    let kind = match args.kind {
        SeriesKind::Ring => MolienKind::Ring,
        SeriesKind::Vector => MolienKind::VectorPart,
        SeriesKind::Fields => MolienKind::Fields,
    };
    let series = molien_series(&g, &chi, kind, config.truncation, Summation::Deduplicated)?;
    let comparison = match args.compare {
        None => None,
        Some((path, denominators)) => {
            let numerator = read(path)?.trim().to_string();
            let num = parse_integer_polynomial(&numerator)
                .map_err(|e| CliError::Usage(format!("{}: {}", path.display(), e)))?;
            let expected = expand_closed_form(&num, &denominators, config.truncation);
            let first_difference =
                (0..=config.truncation).find(|&k| series.coefficient(k) != expected.coefficient(k));
            Some(Comparison { numerator, denominators, matches: first_difference.is_none(), first_difference })
        }
    };
    let status = match &comparison {
        Some(c) if !c.matches => Status::VerificationFailed,
        _ => Status::Ok,
    };
    let report = MolienReport {
        group: spec.label,
        group_order: g.order(),
        character: args.character,
        kind: args.kind.name().to_string(),
        truncation: config.truncation,
        coefficients: to_i64(&series)?,
        comparison,
    };
    emit(
        config,
        &report,
        |r| {
            let mut s = format!("{}\n", series);
            if let Some(c) = &r.comparison {
                match c.first_difference {
                    None => s.push_str("comparison: MATCH\n"),
                    Some(k) => s.push_str(&format!("comparison: MISMATCH at t^{}\n", k)),
                }
            }
            s
        },
        status,
    )
}

pub fn cmd_semi(config: &Config, group: &str, character_index: usize, degree: u32) -> CmdResult {
    let spec = groups::resolve(group)?;
    let g = spec.linear(config)?;
    if g.dimension() != 3 {
        return Err(CliError::Usage("semi-invariant fields need a group acting on C³".into()));
    }
    let chi = character(&g, character_index)?;
    let t = degree as usize;
    let series = molien_series(&g, &chi, MolienKind::Fields, t, Summation::Deduplicated)?;
    let expected = usize::try_from(series.coefficient(t)).map_err(|_| CliError::Usage("dimension overflow".into()))?;
    let basis = SemiInvariantSolver::new(&g, &chi).fields(degree, expected)?;
    let report = SemiReport {
        group: spec.label,
        character: character_index,
        degree,
        dimension: basis.dimension(),
        basis: basis.basis.iter().map(format_vector_field).collect(),
    };
    emit(
        config,
        &report,
        |r| {
            let mut s = format!("# dim = {}\n", r.dimension);
            for b in &r.basis {
                s.push_str(b);
                s.push('\n');
            }
            s
        },
        Status::Ok,
    )
}

pub fn cmd_orbit(config: &Config, group: &str, point: &str) -> CmdResult {
    let spec = groups::resolve(group)?;
    let p = parse_point(point).map_err(|e| CliError::Parse("point".into(), e))?;
    let g = spec.projective(config)?;
    if p.coords().len() != g.as_group().dimension() {
        return Err(CliError::Usage(format!("point has {} coordinates, group acts on {}", p.coords().len(), g.as_group().dimension())));
    }
    let orbit = g.orbit(&p);
    let report = OrbitReport {
        group: spec.label,
        group_order: g.order(),
        point: p.to_string(),
        size: orbit.len(),
        points: orbit.iter().map(|q| q.to_string()).collect(),
    };
    emit(
        config,
        &report,
        |r| {
            let mut s = format!("size: {}\n", r.size);
            for q in &r.points {
                s.push_str(q);
                s.push('\n');
            }
            s
        },
        Status::Ok,
    )
}

fn order_formula(n: CatalogName) -> String {
    match n {
        CatalogName::Jouanolou => "3(d^2+d+1)".into(),
        CatalogName::Fermat | CatalogName::G => "6(d-1)^2".into(),
        _ => n.expected_order(n.fixed_degree().expect("fixed degree")).to_string(),
    }
}

pub fn cmd_catalog_list(config: &Config) -> CmdResult {
    let rows: Vec<CatalogRow> = CatalogName::ALL
        .iter()
        .map(|&n| CatalogRow {
            key: n.key().into(),
            symbol: n.symbol().into(),
            degree: n.fixed_degree(),
            expected_order: order_formula(n),
            structure: n.structure_note().into(),
            description: n.description().into(),
        })
        .collect();
    emit(
        config,
        &rows,
        |rows| {
            let mut s = String::new();
            for r in rows {
                let degree = r.degree.map_or("d".to_string(), |d| d.to_string());
                let _ = writeln!(
                    s,
                    "{:<10} {:<5} degree {:<3} order {:<11} {:<22} {}",
                    r.key, r.symbol, degree, r.expected_order, r.structure, r.description
                );
            }
            s
        },
        Status::Ok,
    )
}

fn matrix_text(m: &folsym_core::Matrix<Cyclo>) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect()
}

fn record(e: &CatalogEntry) -> Result<CatalogRecord, CliError> {
    let defining_object = match &e.defining_object {
        DefiningObject::VectorField(v) => DefiningText { kind: "vector-field".into(), text: vec![format_vector_field(v)] },
        DefiningObject::AffineForm(w) => DefiningText { kind: "affine-form".into(), text: vec![format_affine_form(w)] },
        DefiningObject::AffineField(p, q) => {
            DefiningText { kind: "affine-field".into(), text: vec![p.to_string(), q.to_string()] }
        }
        DefiningObject::Pencil(f, g) => DefiningText { kind: "pencil".into(), text: vec![f.to_string(), g.to_string()] },
    };
    Ok(CatalogRecord {
        key: e.name.key().into(),
        symbol: e.name.symbol().into(),
        degree: e.degree,
        expected_order: e.expected_aut_order,
        defining_object,
        affine_form: format_affine_form(&e.affine_form),
        generators: e.aut_generators.iter().map(matrix_text).collect(),
        structure: e.aut_structure_note.into(),
        description: e.description.into(),
    })
}

/// Every entry, parametric ones at `d = 2..=7`.
pub fn catalog_records() -> Result<Vec<CatalogRecord>, CliError> {
    let mut out = Vec::new();
    for n in CatalogName::ALL {
        let degrees: Vec<u32> = match n.fixed_degree() {
            Some(d) => vec![d],
            None => (2..=7).collect(),
        };
        for d in degrees {
            out.push(record(&build(n, Some(d))?)?);
        }
    }
    Ok(out)
}

pub fn cmd_catalog_export() -> CmdResult {
    let records = catalog_records()?;
    Ok(Outcome { stdout: serde_json::to_string_pretty(&records).expect("serializable") + "\n", status: Status::Ok })
}

pub fn cmd_catalog_verify(config: &Config, name: &str, degree: Option<u32>) -> CmdResult {
    let n = CatalogName::parse(name).ok_or_else(|| CliError::Usage(format!("unknown catalog entry '{}'", name)))?;
    let e = build(n, degree)?;
    let gens = verify_generators(&e);
    let order = verify_order_with(&e, config.max_order, config.conductor_cap)?;
    let polyhedral = if n.acts_on_affine_plane() {
        let p = verify_polyhedral_normal_form(&e)?;
        Some(PolyhedralResult {
            recovered: p.recovered.to_string(),
            matches_orbit_polynomial: p.matches_orbit_polynomial,
            top_part_exact: p.top_part_exact,
            rotation_coefficient: p.rotation_coefficient.as_ref().map(|c| c.to_string()),
            semi_invariance: p.semi_invariance.iter().map(|c| c.as_ref().map(|c| c.to_string())).collect(),
            passed: p.passed(),
        })
    } else {
        None
    };
    let pair = |p: Option<(u64, u64)>| p.map(|(a, b)| [a, b]);
    let order_result = OrderResult {
        expected: order.expected,
        computed: order.computed,
        center: pair(order.center),
        projective: pair(order.projective),
        diagonal_expected: order.diagonal.as_ref().map(|d| d.expected),
        diagonal_computed: order.diagonal.as_ref().and_then(|d| d.computed),
        passed: order.passed(),
    };
    let passed = gens.passed() && order.passed() && polyhedral.as_ref().is_none_or(|p| p.passed);
    let report = VerifyReport {
        key: n.key().into(),
        symbol: n.symbol().into(),
        degree: e.degree,
        generators: gens
            .checks
            .iter()
            .map(|c| GeneratorResult { index: c.index, certified: c.certified, scalar: c.scalar.as_ref().map(|s| s.to_string()) })
            .collect(),
        order: order_result,
        polyhedral,
        passed,
    };
    let status = if passed { Status::Ok } else { Status::VerificationFailed };
    emit(config, &report, verify_text, status)
}

fn verdict(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

fn verify_text(r: &VerifyReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} (degree {})", r.symbol, r.degree);
    for g in &r.generators {
        let scalar = g.scalar.as_deref().unwrap_or("-");
        let _ = writeln!(s, "  generator {}: {} scalar {}", g.index, verdict(g.certified), scalar);
    }
    let o = &r.order;
    let _ = writeln!(s, "  order: {} computed {} expected {}", verdict(o.passed), o.computed, o.expected);
    if let Some([a, b]) = o.center {
        let _ = writeln!(s, "  center: {} expected {}", a, b);
    }
    if let Some([a, b]) = o.projective {
        let _ = writeln!(s, "  projective order: {} expected {}", a, b);
    }
    if let Some(exp) = o.diagonal_expected {
        let got = o.diagonal_computed.map_or("INFINITE".to_string(), |c| c.to_string());
        let _ = writeln!(s, "  diagonal subgroup: {} expected {}", got, exp);
    }
    if let Some(p) = &r.polyhedral {
        let _ = writeln!(s, "  polyhedral normal form: {} P = {}", verdict(p.passed), p.recovered);
    }
    let _ = writeln!(s, "{}", verdict(r.passed));
    s
}
