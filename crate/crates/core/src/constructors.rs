//! The named groups, with generators entered as exact cyclotomic matrices.

use alloc::vec;
use alloc::vec::Vec;

use crate::cyclo::Cyclo;
use crate::error::Result;
use crate::group::{FiniteMatrixGroup, ProjectiveGroup, DEFAULT_MAX_ORDER};
use crate::linalg::Matrix;
use crate::poly::Polynomial;

fn z(n: u32, k: i64) -> Cyclo {
    Cyclo::root_of_unity(n, k)
}

fn int(v: i64) -> Cyclo {
    Cyclo::from_int(v)
}

fn m3(rows: [[Cyclo; 3]; 3]) -> Matrix<Cyclo> {
    Matrix::from_rows(rows.into_iter().map(|r| r.to_vec()).collect())
}

fn m2(rows: [[Cyclo; 2]; 2]) -> Matrix<Cyclo> {
    Matrix::from_rows(rows.into_iter().map(|r| r.to_vec()).collect())
}

/// `λ = ζ₃`.
pub fn lambda() -> Cyclo {
    z(3, 1)
}

/// `√−3 = ζ₃ − ζ₃²`.
pub fn sqrt_minus_3() -> Cyclo {
    &z(3, 1) - &z(3, 2)
}

/// The golden ratio `1 + ζ₅ + ζ₅⁴`.
pub fn golden_ratio() -> Cyclo {
    &(&int(1) + &z(5, 1)) + &z(5, 4)
}

/// `(−1 + √−7)/2 = ζ₇ + ζ₇² + ζ₇⁴`.
pub fn klein_r() -> Cyclo {
    &(&z(7, 1) + &z(7, 2)) + &z(7, 4)
}

/// `[X:Y:Z] ↦ [Y:Z:X]`.
pub fn cyclic_permutation() -> Matrix<Cyclo> {
    Matrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]])
}

/// `[X:Y:Z] ↦ [X:Z:Y]`.
pub fn swap_yz() -> Matrix<Cyclo> {
    Matrix::from_int_rows(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]])
}

pub fn hessian_cover_generators() -> Vec<Matrix<Cyclo>> {
    let l = lambda();
    let l2 = l.pow(2);
    let s = sqrt_minus_3().inv().expect("nonzero");
    let r2 = m3([
        [l.clone(), l2.clone(), l2.clone()],
        [l2.clone(), l.clone(), l2.clone()],
        [l2.clone(), l2.clone(), l.clone()],
    ])
    .scale(&s);
    vec![
        Matrix::diagonal(&[int(1), int(1), l2.clone()]),
        r2,
        Matrix::diagonal(&[int(1), l2, int(1)]),
    ]
}

/// The order-648 triple cover generated by three pseudo-reflections.
pub fn hessian_cover() -> Result<FiniteMatrixGroup> {
    FiniteMatrixGroup::closure(&hessian_cover_generators(), DEFAULT_MAX_ORDER, 120)
}

pub fn hessian_t() -> Matrix<Cyclo> {
    cyclic_permutation()
}

pub fn hessian_u() -> Matrix<Cyclo> {
    Matrix::diagonal(&[int(1), int(1), lambda()])
}

pub fn hessian_s() -> Matrix<Cyclo> {
    Matrix::diagonal(&[int(1), lambda(), lambda().pow(2)])
}

pub fn hessian_v() -> Matrix<Cyclo> {
    let l = lambda();
    let l2 = l.pow(2);
    m3([[int(1), int(1), int(1)], [int(1), l.clone(), l2.clone()], [int(1), l2, l]])
}

/// `U·V·U⁻¹`.
pub fn hessian_uvu() -> Matrix<Cyclo> {
    let u = hessian_u();
    u.mul(&hessian_v()).mul(&u.inverse().expect("invertible"))
}

/// The Hessian group of order 216, generated by `T, U, S, V`.
pub fn hessian_projective() -> Result<ProjectiveGroup> {
    ProjectiveGroup::closure(&[hessian_t(), hessian_u(), hessian_s(), hessian_v()], DEFAULT_MAX_ORDER, 120)
}

/// `E = ⟨T, S, V⟩`, projective order 36.
pub fn subgroup_e() -> Result<ProjectiveGroup> {
    ProjectiveGroup::closure(&[hessian_t(), hessian_s(), hessian_v()], DEFAULT_MAX_ORDER, 120)
}

/// `F = ⟨E, UVU⁻¹⟩`, projective order 72.
pub fn subgroup_f() -> Result<ProjectiveGroup> {
    ProjectiveGroup::closure(&[hessian_t(), hessian_s(), hessian_v(), hessian_uvu()], DEFAULT_MAX_ORDER, 120)
}

pub fn icosahedral_generators() -> Vec<Matrix<Cyclo>> {
    let r = golden_ratio();
    vec![
        m3([[int(-1), int(0), int(0)], [int(0), int(-1), int(0)], [r.clone(), r, int(1)]]),
        cyclic_permutation(),
    ]
}

/// The icosahedral group `A₅` of order 60.
pub fn icosahedral() -> Result<FiniteMatrixGroup> {
    FiniteMatrixGroup::closure(&icosahedral_generators(), DEFAULT_MAX_ORDER, 120)
}

pub fn klein_generators() -> Vec<Matrix<Cyclo>> {
    let r = klein_r();
    let minus_one_minus_r = &int(-1) - &r;
    vec![
        m3([[int(1), minus_one_minus_r, r], [int(0), int(-1), int(0)], [int(0), int(0), int(-1)]]),
        cyclic_permutation(),
    ]
}

/// The Klein group `PSL(2,7)` of order 168.
pub fn klein() -> Result<FiniteMatrixGroup> {
    FiniteMatrixGroup::closure(&klein_generators(), DEFAULT_MAX_ORDER, 120)
}

pub fn valentiner_generators() -> Vec<Matrix<Cyclo>> {
    let alpha = &(-&z(15, 7)) - &z(15, 13);
    let beta = &(-&z(15, 2)) - &z(15, 8);
    vec![
        m3([[int(-1), int(0), int(0)], [int(0), int(0), int(1)], [int(0), int(1), int(0)]]),
        m3([[int(0), int(1), int(0)], [int(-1), int(0), int(0)], [alpha, beta, int(1)]]),
    ]
}

/// The perfect triple cover of the Valentiner group, order 1080.
pub fn valentiner_cover() -> Result<FiniteMatrixGroup> {
    FiniteMatrixGroup::closure(&valentiner_generators(), DEFAULT_MAX_ORDER, 120)
}

/// `x⁵y − xy⁵`.
pub fn octahedral_form() -> Polynomial {
    Polynomial::from_int_terms(2, &[(1, [5, 1, 0]), (-1, [1, 5, 0])])
}

/// `x¹¹y + 11x⁶y⁶ − xy¹¹`.
pub fn icosahedral_form() -> Polynomial {
    Polynomial::from_int_terms(2, &[(1, [11, 1, 0]), (11, [6, 6, 0]), (-1, [1, 11, 0])])
}

/// Generators of the binary octahedral group in `SL(2)`.
pub fn binary_octahedral_generators() -> Vec<Matrix<Cyclo>> {
    let sqrt2 = &z(8, 1) + &z(8, 7);
    let h = sqrt2.inv().expect("nonzero");
    vec![
        Matrix::diagonal(&[z(8, 1), z(8, 7)]),
        m2([[h.clone(), -&h], [h.clone(), h]]),
    ]
}

/// Generators of the binary icosahedral group in `SL(2)` fixing `icosahedral_form`.
pub fn binary_icosahedral_generators() -> Vec<Matrix<Cyclo>> {
    let e = |k| z(5, k);
    let sqrt5 = &int(1) + &(&(&e(1) + &e(4)) * &int(2));
    let s5 = sqrt5.inv().expect("nonzero");
    let a = &e(1) - &e(4);
    let b = &e(2) - &e(3);
    vec![
        Matrix::diagonal(&[e(3), e(2)]),
        m2([[-&(&a * &s5), &b * &s5], [&b * &s5, &a * &s5]]),
    ]
}

/// Twists each `g` by a scalar `λ ∈ μ_n` so that `λg` pulls
/// `x dy − y dx + dP` back to a multiple of itself:
/// `λ² det g = λ^m c(g)` where `P∘g = c(g)·P` and `m = deg P`.
fn twist_for_form(gens: &[Matrix<Cyclo>], p: &Polynomial, roots: u32) -> Vec<Matrix<Cyclo>> {
    let m = p.total_degree().expect("nonzero form") as i64;
    gens.iter()
        .map(|g| {
            let pg = p.substitute_linear(g);
            let (mono, coeff) = p.leading().expect("nonzero");
            let c = &pg.coeff(mono) * &coeff.inv().expect("nonzero");
            assert_eq!(p.scale(&c), pg, "generator does not preserve the form up to scalar");
            let det = g.determinant();
            let lam = (0..roots as i64)
                .map(|k| z(roots, k))
                .find(|l| &l.pow(2) * &det == &l.pow(m) * &c)
                .expect("a twisting root of unity exists");
            g.scale(&lam)
        })
        .collect()
}

/// Binary octahedral generators twisted by eighth roots, plus `i·I`.
pub fn binary_octahedral_ext_generators() -> Vec<Matrix<Cyclo>> {
    let mut gens = twist_for_form(&binary_octahedral_generators(), &octahedral_form(), 8);
    gens.push(Matrix::diagonal(&[z(4, 1), z(4, 1)]));
    gens
}

/// The order-96 group of linear symmetries of `x dy − y dx + d(x⁵y − xy⁵)`.
pub fn binary_octahedral_ext() -> Result<FiniteMatrixGroup> {
    FiniteMatrixGroup::closure(&binary_octahedral_ext_generators(), DEFAULT_MAX_ORDER, 120)
}

/// Binary icosahedral generators twisted by tenth roots, plus `ζ₁₀·I`.
pub fn binary_icosahedral_ext_generators() -> Vec<Matrix<Cyclo>> {
    let mut gens = twist_for_form(&binary_icosahedral_generators(), &icosahedral_form(), 10);
    gens.push(Matrix::diagonal(&[z(10, 1), z(10, 1)]));
    gens
}

/// The order-600 group of linear symmetries of `x dy − y dx + d(x¹¹y + 11x⁶y⁶ − xy¹¹)`.
pub fn binary_icosahedral_ext() -> Result<FiniteMatrixGroup> {
    FiniteMatrixGroup::closure(&binary_icosahedral_ext_generators(), DEFAULT_MAX_ORDER, 120)
}

pub fn jouanolou_generators(d: u32) -> Vec<Matrix<Cyclo>> {
    let n = d * d + d + 1;
    let l = z(n, 1);
    vec![cyclic_permutation(), Matrix::diagonal(&[l.pow(d as i64 + 1), l, int(1)])]
}

/// Linear lift of the automorphism group of the Jouanolou foliation of degree `d`;
/// its projectivization has order `3(d²+d+1)`.
pub fn jouanolou_aut(d: u32) -> Result<FiniteMatrixGroup> {
    FiniteMatrixGroup::closure(&jouanolou_generators(d), DEFAULT_MAX_ORDER, 120)
}

pub fn fermat_generators(d: u32) -> Vec<Matrix<Cyclo>> {
    let l = z(d - 1, 1);
    vec![
        cyclic_permutation(),
        swap_yz(),
        Matrix::diagonal(&[l.clone(), int(1), int(1)]),
        Matrix::diagonal(&[int(1), l, int(1)]),
    ]
}

/// Linear lift of the automorphism group of the Fermat foliation of degree `d`;
/// its projectivization has order `6(d−1)²`.
pub fn fermat_aut(d: u32) -> Result<FiniteMatrixGroup> {
    FiniteMatrixGroup::closure(&fermat_generators(d), DEFAULT_MAX_ORDER, 120)
}
