//! The foliations with large automorphism groups, their symmetry generators
//! and the checks tying them to the bound `f(d)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::constructors::{
    binary_icosahedral_ext_generators, binary_octahedral_ext_generators, fermat_generators, hessian_s,
    hessian_t, hessian_u, hessian_v, icosahedral_form, jouanolou_generators, octahedral_form,
};
use crate::cyclo::Cyclo;
use crate::diagonal::{diagonal_group, monomial_set};
use crate::error::{Error, Result};
use crate::geom::{foliation_from_pencil, AffineOneForm, HomogeneousVectorField};
use crate::group::{FiniteMatrixGroup, ProjectiveGroup, DEFAULT_MAX_ORDER};
use crate::linalg::Matrix;
use crate::poly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CatalogName {
    Jouanolou,
    Fermat,
    G,
    S,
    H4,
    H7,
    P5,
    P11,
}

impl CatalogName {
    pub const ALL: [CatalogName; 8] = [
        CatalogName::Jouanolou,
        CatalogName::Fermat,
        CatalogName::G,
        CatalogName::S,
        CatalogName::H4,
        CatalogName::H7,
        CatalogName::P5,
        CatalogName::P11,
    ];

    pub fn key(self) -> &'static str {
        match self {
            CatalogName::Jouanolou => "jouanolou",
            CatalogName::Fermat => "fermat",
            CatalogName::G => "g",
            CatalogName::S => "s",
            CatalogName::H4 => "hessian4",
            CatalogName::H7 => "hessian7",
            CatalogName::P5 => "p5",
            CatalogName::P11 => "p11",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            CatalogName::Jouanolou => "J_d",
            CatalogName::Fermat => "F_d",
            CatalogName::G => "G_d",
            CatalogName::S => "S",
            CatalogName::H4 => "H_4",
            CatalogName::H7 => "H_7",
            CatalogName::P5 => "P_5",
            CatalogName::P11 => "P_11",
        }
    }

    /// Accepts keys, symbols and a few short aliases, case-insensitively.
    pub fn parse(s: &str) -> Option<CatalogName> {
        let t = s.trim().to_ascii_lowercase();
        let t = t.as_str();
        CatalogName::ALL.into_iter().find(|n| n.key() == t || n.symbol().to_ascii_lowercase() == t).or(match t {
            "j" | "j_d" => Some(CatalogName::Jouanolou),
            "f" | "f_d" => Some(CatalogName::Fermat),
            "h4" => Some(CatalogName::H4),
            "h7" => Some(CatalogName::H7),
            _ => None,
        })
    }

    /// The degree of the non-parametric entries.
    pub fn fixed_degree(self) -> Option<u32> {
        match self {
            CatalogName::Jouanolou | CatalogName::Fermat | CatalogName::G => None,
            CatalogName::S => Some(2),
            CatalogName::H4 => Some(4),
            CatalogName::H7 => Some(7),
            CatalogName::P5 => Some(5),
            CatalogName::P11 => Some(11),
        }
    }

    /// Table value of `|Aut(F)|` at degree `d`.
    pub fn expected_order(self, d: u32) -> u64 {
        let d = d as u64;
        match self {
            CatalogName::Jouanolou => 3 * (d * d + d + 1),
            CatalogName::Fermat | CatalogName::G => 6 * (d - 1) * (d - 1),
            CatalogName::S => 24,
            CatalogName::H4 | CatalogName::H7 => 216,
            CatalogName::P5 => 96,
            CatalogName::P11 => 600,
        }
    }

    pub fn structure_note(self) -> &'static str {
        match self {
            CatalogName::Jouanolou => "Z/(d^2+d+1)Z x| Z/3Z",
            CatalogName::Fermat | CatalogName::G => "(Z/(d-1)Z)^2 x| S_3",
            CatalogName::S => "(Z/2Z)^2 x| S_3",
            CatalogName::H4 | CatalogName::H7 => "Hessian group",
            CatalogName::P5 => "(Z/2Z x T).Z/2Z",
            CatalogName::P11 => "Z/5Z x I",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            CatalogName::Jouanolou => "Jouanolou foliation",
            CatalogName::Fermat => "isotrivial hyperbolic fibration",
            CatalogName::G => "nonisotrivial hyperbolic fibration",
            CatalogName::S => "rational fibration",
            CatalogName::H4 => "nonisotrivial elliptic fibration",
            CatalogName::H7 => "nonisotrivial hyperbolic fibration",
            CatalogName::P5 | CatalogName::P11 => "general type Bernoulli foliation",
        }
    }

    /// Whether the symmetries are linear maps of the affine plane rather than of `P²`.
    pub fn acts_on_affine_plane(self) -> bool {
        matches!(self, CatalogName::P5 | CatalogName::P11)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DefiningObject {
    VectorField(HomogeneousVectorField),
    AffineForm(AffineOneForm),
    /// `P∂x + Q∂y` in the chart `Z = 1`.
    AffineField(Polynomial, Polynomial),
    /// The pencil spanned by two homogeneous polynomials of equal degree.
    Pencil(Polynomial, Polynomial),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: CatalogName,
    pub degree: u32,
    pub expected_aut_order: u64,
    pub defining_object: DefiningObject,
    /// The affine 1-form of the entry (printed or derived from the defining object).
    pub affine_form: AffineOneForm,
    pub aut_generators: Vec<Matrix<Cyclo>>,
    pub aut_structure_note: &'static str,
    pub description: &'static str,
}

fn p2(terms: &[(i64, [u32; 2])]) -> Polynomial {
    Polynomial::from_int_terms(2, &terms.iter().map(|&(c, [i, j])| (c, [i, j, 0])).collect::<Vec<_>>())
}

fn p3(terms: &[(i64, [u32; 3])]) -> Polynomial {
    Polynomial::from_int_terms(3, terms)
}

fn form(a: Polynomial, b: Polynomial) -> AffineOneForm {
    AffineOneForm::new(a, b).expect("catalog forms are nonzero")
}

/// `x dy − y dx + dP`.
pub fn bernoulli_form(p: &Polynomial) -> AffineOneForm {
    form(&p.derivative(0) - &p2(&[(1, [0, 1])]), &p.derivative(1) + &p2(&[(1, [1, 0])]))
}

/// `(x^{d−1} + y^{d−1} + 1)³ / (x^{d−1}y^{d−1})`, the rational first integral of `G_d`.
pub fn g_first_integral(d: u32) -> (Polynomial, Polynomial) {
    let e = d - 1;
    let base = p2(&[(1, [e, 0]), (1, [0, e]), (1, [0, 0])]);
    (base.pow(3), p2(&[(1, [e, e])]))
}

/// Whether `d(N/D)` is annihilated by `ω`: `(N_x D − N D_x)·B = (N_y D − N D_y)·A`.
pub fn annihilates_quotient(w: &AffineOneForm, num: &Polynomial, den: &Polynomial) -> bool {
    let fx = &(&num.derivative(0) * den) - &(num * &den.derivative(0));
    let fy = &(&num.derivative(1) * den) - &(num * &den.derivative(1));
    &fx * w.b() == &fy * w.a()
}

pub fn build(name: CatalogName, d: Option<u32>) -> Result<CatalogEntry> {
    let degree = match (name.fixed_degree(), d) {
        (Some(f), None) => f,
        (Some(f), Some(d)) if d == f => f,
        (Some(f), Some(d)) => {
            return Err(Error::Invalid(format!("{} has degree {}, not {}", name.symbol(), f, d)));
        }
        (None, Some(d)) if d >= 2 => d,
        (None, Some(d)) => return Err(Error::Invalid(format!("{} needs degree at least 2, got {}", name.symbol(), d))),
        (None, None) => return Err(Error::Invalid(format!("{} needs a degree", name.symbol()))),
    };
    let d = degree;
    let (defining_object, affine_form, aut_generators) = match name {
        CatalogName::Jouanolou => (
            DefiningObject::VectorField(HomogeneousVectorField::from_components([
                p3(&[(1, [0, d, 0])]),
                p3(&[(1, [0, 0, d])]),
                p3(&[(1, [d, 0, 0])]),
            ])?),
            form(p2(&[(1, [d, 1]), (-1, [0, 0])]), p2(&[(1, [0, d]), (-1, [d + 1, 0])])),
            jouanolou_generators(d),
        ),
        CatalogName::Fermat => (
            DefiningObject::VectorField(HomogeneousVectorField::from_components([
                p3(&[(1, [d, 0, 0])]),
                p3(&[(1, [0, d, 0])]),
                p3(&[(1, [0, 0, d])]),
            ])?),
            form(p2(&[(1, [0, 1]), (-1, [0, d])]), p2(&[(-1, [1, 0]), (1, [d, 0])])),
            fermat_generators(d),
        ),
        CatalogName::G => {
            let w = form(
                p2(&[(1, [0, 1]), (1, [0, d]), (-2, [d - 1, 1])]),
                p2(&[(1, [1, 0]), (1, [d, 0]), (-2, [1, d - 1])]),
            );
            (DefiningObject::AffineForm(w.clone()), w, fermat_generators(d))
        }
        CatalogName::S => (
            DefiningObject::VectorField(HomogeneousVectorField::from_components([
                p3(&[(1, [0, 1, 1])]),
                p3(&[(1, [1, 0, 1])]),
                p3(&[(1, [1, 1, 0])]),
            ])?),
            form(p2(&[(-1, [1, 0]), (1, [1, 2])]), p2(&[(1, [0, 1]), (-1, [2, 1])])),
            fermat_generators(3),
        ),
        CatalogName::H4 => {
            let f = p3(&[(1, [3, 0, 0]), (1, [0, 3, 0]), (1, [0, 0, 3])]);
            let g = p3(&[(1, [1, 1, 1])]);
            let (p, q) = foliation_from_pencil(&f, &g)?.field()?.affine_chart();
            (DefiningObject::Pencil(f, g), form(q, -&p), hessian_generators())
        }
        CatalogName::H7 => {
            let p = &(&p2(&[(1, [3, 0]), (-1, [0, 0])]) * &p2(&[(1, [3, 0]), (7, [0, 3]), (1, [0, 0])]))
                * &p2(&[(1, [1, 0])]);
            let q = &(&p2(&[(1, [0, 3]), (-1, [0, 0])]) * &p2(&[(1, [0, 3]), (7, [3, 0]), (1, [0, 0])]))
                * &p2(&[(1, [0, 1])]);
            let w = form(q.clone(), -&p);
            (DefiningObject::AffineField(p, q), w, hessian_generators())
        }
        CatalogName::P5 => {
            let w = bernoulli_form(&octahedral_form());
            (DefiningObject::AffineForm(w.clone()), w, binary_octahedral_ext_generators())
        }
        CatalogName::P11 => {
            let w = bernoulli_form(&icosahedral_form());
            (DefiningObject::AffineForm(w.clone()), w, binary_icosahedral_ext_generators())
        }
    };
    Ok(CatalogEntry {
        name,
        degree,
        expected_aut_order: name.expected_order(degree),
        defining_object,
        affine_form,
        aut_generators,
        aut_structure_note: name.structure_note(),
        description: name.description(),
    })
}

/// `T, U, S, V` generating the Hessian group.
pub fn hessian_generators() -> Vec<Matrix<Cyclo>> {
    vec![hessian_t(), hessian_u(), hessian_s(), hessian_v()]
}

impl CatalogEntry {
    /// Homogeneous defining field on `P²`.
    pub fn field(&self) -> Result<HomogeneousVectorField> {
        match &self.defining_object {
            DefiningObject::VectorField(v) => Ok(v.clone()),
            DefiningObject::Pencil(f, g) => foliation_from_pencil(f, g)?.field(),
            DefiningObject::AffineForm(_) | DefiningObject::AffineField(..) => self.affine_form.to_projective().field(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorCheck {
    pub index: usize,
    pub certified: bool,
    /// `c` with `g_*v = c·v + P·R` (or `g^*ω = c·ω` for affine symmetries).
    pub scalar: Option<Cyclo>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorReport {
    pub name: CatalogName,
    pub degree: u32,
    pub checks: Vec<GeneratorCheck>,
}

impl GeneratorReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.certified)
    }
}

pub fn verify_generators(e: &CatalogEntry) -> GeneratorReport {
    let field = if e.name.acts_on_affine_plane() { None } else { e.field().ok() };
    let checks = e
        .aut_generators
        .iter()
        .enumerate()
        .map(|(index, g)| {
            let scalar = match &field {
                None => e.affine_form.pullback(g).ok().and_then(|p| e.affine_form.proportionality(&p)),
                Some(v) => v
                    .pushforward(g)
                    .ok()
                    .and_then(|w| v.same_foliation(&w).ok().flatten())
                    .map(|(alpha, _)| alpha),
            };
            GeneratorCheck { index, certified: scalar.is_some(), scalar }
        })
        .collect();
    GeneratorReport { name: e.name, degree: e.degree, checks }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalCheck {
    pub expected: u64,
    pub computed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderReport {
    pub name: CatalogName,
    pub degree: u32,
    pub expected: u64,
    /// Order of the generated group in `PGL(3)`, or in `GL(2)` for affine symmetries.
    pub computed: u64,
    pub center: Option<(u64, u64)>,
    pub projective: Option<(u64, u64)>,
    pub diagonal: Option<DiagonalCheck>,
}

impl OrderReport {
    pub fn passed(&self) -> bool {
        self.computed == self.expected
            && self.center.is_none_or(|(c, e)| c == e)
            && self.projective.is_none_or(|(c, e)| c == e)
            && self.diagonal.as_ref().is_none_or(|d| d.computed == Some(d.expected))
    }
}

pub fn verify_order(e: &CatalogEntry) -> Result<OrderReport> {
    verify_order_with(e, DEFAULT_MAX_ORDER, 120)
}

pub fn verify_order_with(e: &CatalogEntry, max_order: usize, conductor_cap: u64) -> Result<OrderReport> {
    let d = e.degree;
    let mut report = OrderReport {
        name: e.name,
        degree: d,
        expected: e.expected_aut_order,
        computed: 0,
        center: None,
        projective: None,
        diagonal: None,
    };
    if e.name.acts_on_affine_plane() {
        let g = FiniteMatrixGroup::closure(&e.aut_generators, max_order, conductor_cap)?;
        report.computed = g.order() as u64;
        let (center, proj) = if e.name == CatalogName::P5 { (4, 24) } else { (10, 60) };
        report.center = Some((g.center().len() as u64, center));
        report.projective = Some((g.projectivize().order() as u64, proj));
    } else {
        let g = ProjectiveGroup::closure(&e.aut_generators, max_order, conductor_cap)?;
        report.computed = g.order() as u64;
    }
    let expected_diagonal = match e.name {
        CatalogName::Jouanolou => Some((d * d + d + 1) as u64),
        CatalogName::Fermat | CatalogName::G => Some(((d - 1) * (d - 1)) as u64),
        CatalogName::S => Some(4),
        _ => None,
    };
    if let Some(expected) = expected_diagonal {
        let computed = diagonal_group(&monomial_set(&e.affine_form)?, false, conductor_cap)?.order;
        report.diagonal = Some(DiagonalCheck { expected, computed });
    }
    Ok(report)
}

/// `f(2) = 24, f(3) = 39, f(4) = 216, f(d) = 6(d−1)²` for `d ≥ 5`.
pub fn bound_f(d: u32) -> Result<u64> {
    match d {
        0 | 1 => Err(Error::Invalid(format!(
            "foliations of degree {} have infinitely many automorphisms",
            d
        ))),
        2 => Ok(24),
        3 => Ok(39),
        4 => Ok(216),
        _ => Ok(6 * (d as u64 - 1) * (d as u64 - 1)),
    }
}

/// Entries named in the classification as attaining `f(d)`.
pub fn listed_extremal(d: u32) -> Vec<CatalogName> {
    match d {
        0 | 1 => vec![],
        2 => vec![CatalogName::S],
        3 => vec![CatalogName::Jouanolou],
        4 => vec![CatalogName::H4],
        5 => vec![CatalogName::G, CatalogName::Fermat, CatalogName::P5],
        _ => vec![CatalogName::G, CatalogName::Fermat],
    }
}

/// All catalog entries that exist at degree `d`.
pub fn entries_at_degree(d: u32) -> Result<Vec<CatalogEntry>> {
    CatalogName::ALL
        .into_iter()
        .filter(|n| n.fixed_degree().is_none_or(|f| f == d))
        .map(|n| build(n, Some(d)))
        .collect()
}

/// Entries at degree `d` whose table order equals `f(d)`.
pub fn attaining_bound(d: u32) -> Result<Vec<CatalogName>> {
    let f = bound_f(d)?;
    Ok(entries_at_degree(d)?.into_iter().filter(|e| e.expected_aut_order == f).map(|e| e.name).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyhedralReport {
    pub name: CatalogName,
    /// `P` recovered from the degree-`d` part `dP`.
    pub recovered: Polynomial,
    pub matches_orbit_polynomial: bool,
    pub top_part_exact: bool,
    /// `α` with linear part `α(x dy − y dx)`.
    pub rotation_coefficient: Option<Cyclo>,
    /// `P∘g = c·P` scalars for the group generators.
    pub semi_invariance: Vec<Option<Cyclo>>,
}

impl PolyhedralReport {
    pub fn passed(&self) -> bool {
        self.matches_orbit_polynomial
            && self.top_part_exact
            && self.rotation_coefficient.is_some()
            && self.semi_invariance.iter().all(Option::is_some)
    }
}

fn homogeneous_piece(w: &AffineOneForm, n: u32) -> Result<AffineOneForm> {
    AffineOneForm::new(w.a().homogeneous_part(n), w.b().homogeneous_part(n))
}

pub fn verify_polyhedral_normal_form(e: &CatalogEntry) -> Result<PolyhedralReport> {
    let orbit = match e.name {
        CatalogName::P5 => octahedral_form(),
        CatalogName::P11 => icosahedral_form(),
        other => {
            return Err(Error::Invalid(format!("{} is not a polyhedral Bernoulli entry", other.symbol())));
        }
    };
    let d = e.degree;
    if e.affine_form.a().homogeneous_part(d) + e.affine_form.a().homogeneous_part(1) != *e.affine_form.a()
        || e.affine_form.b().homogeneous_part(d) + e.affine_form.b().homogeneous_part(1) != *e.affine_form.b()
    {
        return Err(Error::Invalid("form has parts outside degrees 1 and d".into()));
    }
    let (recovered, q_top) = homogeneous_piece(&e.affine_form, d)?.decompose_homogeneous(d)?;
    let (p_lin, q_lin) = homogeneous_piece(&e.affine_form, 1)?.decompose_homogeneous(1)?;
    let rotation_coefficient =
        (p_lin.is_zero() && q_lin.is_constant() && !q_lin.is_zero()).then(|| q_lin.coeff(&crate::poly::Monomial::ONE));
    let semi_invariance = e
        .aut_generators
        .iter()
        .map(|g| {
            let pg = recovered.substitute_linear(g);
            let (m, c) = recovered.leading()?;
            let k = &pg.coeff(m) * &c.inv().ok()?;
            (!k.is_zero() && recovered.scale(&k) == pg).then_some(k)
        })
        .collect();
    Ok(PolyhedralReport {
        name: e.name,
        matches_orbit_polynomial: recovered == orbit,
        recovered,
        top_part_exact: q_top.is_zero(),
        rotation_coefficient,
        semi_invariance,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalFormCheck {
    /// `θ` as a power of `ζ₃`.
    pub theta_power: u32,
    pub fermat: bool,
    pub g: bool,
}

/// `ω_{−1,θ} = (y − θy^d)dx + (θ²x^d − x)dy` and
/// `ω_{1,θ} = (y + θy^d − 2θ²x^{d−1}y)dx + (x + θ²x^d − 2θxy^{d−1})dy`,
/// pulled back by `(x, y) ↦ (αx, βy)` with `α^{d−1} = θ`, `β^{d−1} = θ²`,
/// compared with `αβ` times the `F_d` and `G_d` forms.
pub fn verify_fermat_normal_forms(d: u32) -> Result<Vec<NormalFormCheck>> {
    if d < 2 {
        return Err(Error::Invalid(format!("degree {} is below 2", d)));
    }
    let f = build(CatalogName::Fermat, Some(d))?.affine_form;
    let g = build(CatalogName::G, Some(d))?.affine_form;
    let n = 3 * (d - 1);
    let mut out = Vec::new();
    for j in 0..3u32 {
        let theta = Cyclo::root_of_unity(3, j as i64);
        let t2 = theta.pow(2);
        let c = |k: &Cyclo, i: u32, jj: u32| Polynomial::term(2, k.clone(), crate::poly::Monomial::xy(i, jj));
        let one = Cyclo::one();
        let minus = |k: &Cyclo| -k;
        let w_minus = AffineOneForm::new(
            &c(&one, 0, 1) + &c(&minus(&theta), 0, d),
            &c(&t2, d, 0) + &c(&Cyclo::from_int(-1), 1, 0),
        )?;
        let w_plus = AffineOneForm::new(
            &(&c(&one, 0, 1) + &c(&theta, 0, d)) + &c(&(&t2 * &Cyclo::from_int(-2)), d - 1, 1),
            &(&c(&one, 1, 0) + &c(&t2, d, 0)) + &c(&(&theta * &Cyclo::from_int(-2)), 1, d - 1),
        )?;
        let alpha = Cyclo::root_of_unity(n, j as i64);
        let beta = Cyclo::root_of_unity(n, 2 * j as i64);
        let ab = &alpha * &beta;
        let m = Matrix::diagonal(&[alpha, beta]);
        out.push(NormalFormCheck {
            theta_power: j,
            fermat: w_minus.pullback(&m)? == f.scale(&ab),
            g: w_plus.pullback(&m)? == g.scale(&ab),
        });
    }
    Ok(out)
}
