//! Affine 1-forms, homogeneous vector fields and homogeneous 1-forms on the
//! plane, and the dictionary between them.

use alloc::format;
use alloc::vec::Vec;

use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{dim_homogeneous, monomials_of_degree, Monomial, Polynomial};

/// `ω = a·dx + b·dy`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineOneForm {
    a: Polynomial,
    b: Polynomial,
}

impl AffineOneForm {
    pub fn new(a: Polynomial, b: Polynomial) -> Result<Self> {
        if a.nvars() != 2 || b.nvars() != 2 {
            return Err(Error::Invalid("affine forms use the variables x, y".into()));
        }
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroInput("affine 1-form"));
        }
        Ok(AffineOneForm { a, b })
    }

    pub fn a(&self) -> &Polynomial {
        &self.a
    }

    pub fn b(&self) -> &Polynomial {
        &self.b
    }

    /// Largest total degree among the coefficients.
    pub fn max_degree(&self) -> u32 {
        self.a.total_degree().into_iter().chain(self.b.total_degree()).max().unwrap_or(0)
    }

    /// `(degree, infinity_invariant)`: with `k` the top coefficient degree,
    /// the line at infinity is invariant iff `A_k·x + B_k·y ≠ 0`.
    pub fn foliation_degree(&self) -> (u32, bool) {
        let k = self.max_degree();
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let top = &(&self.a.homogeneous_part(k) * &x) + &(&self.b.homogeneous_part(k) * &y);
        if top.is_zero() {
            (k.saturating_sub(1), false)
        } else {
            (k, true)
        }
    }

    pub fn common_factor_free(&self) -> bool {
        self.a.gcd(&self.b).is_constant()
    }

    /// `g*(ω)` for the linear map `(x, y) ↦ g·(x, y)`.
    pub fn pullback(&self, g: &Matrix<Cyclo>) -> Result<AffineOneForm> {
        if g.rows() != 2 || g.cols() != 2 {
            return Err(Error::Invalid("pullback needs a 2x2 matrix".into()));
        }
        if g.determinant().is_zero() {
            return Err(Error::SingularMatrix);
        }
        let a = self.a.substitute_linear(g);
        let b = self.b.substitute_linear(g);
        let na = &a.scale(g.get(0, 0)) + &b.scale(g.get(1, 0));
        let nb = &a.scale(g.get(0, 1)) + &b.scale(g.get(1, 1));
        AffineOneForm::new(na, nb)
    }

    /// `Some(c)` with `other = c·self`.
    pub fn proportionality(&self, other: &AffineOneForm) -> Option<Cyclo> {
        proportional(&[&self.a, &self.b], &[&other.a, &other.b])
    }

    pub fn scale(&self, c: &Cyclo) -> AffineOneForm {
        AffineOneForm { a: self.a.scale(c), b: self.b.scale(c) }
    }

    /// Homogenizes with `x = X/Z, y = Y/Z` and removes the common power of `Z`.
    pub fn to_projective(&self) -> HomogeneousOneForm {
        let k = self.max_degree();
        let ah = homogenize(&self.a, k);
        let bh = homogenize(&self.b, k);
        let xx = Polynomial::var(3, 0);
        let yy = Polynomial::var(3, 1);
        let zz = Polynomial::var(3, 2);
        let mut comps = [
            &ah * &zz,
            &bh * &zz,
            -&(&(&xx * &ah) + &(&yy * &bh)),
        ];
        while comps.iter().all(|c| c.is_zero() || c.terms().all(|(m, _)| m.exp(2) > 0)) {
            for c in comps.iter_mut() {
                *c = c.div_exact(&zz).expect("Z divides every component");
            }
        }
        HomogeneousOneForm { components: comps }
    }

    /// `(P, Q)` with `ω = dP + Q·(x dy − y dx)` for `ω` homogeneous of degree `n`.
    pub fn decompose_homogeneous(&self, n: u32) -> Result<(Polynomial, Polynomial)> {
        let homogeneous_of = |p: &Polynomial| p.is_zero() || (p.is_homogeneous() && p.total_degree() == Some(n));
        if !homogeneous_of(&self.a) || !homogeneous_of(&self.b) {
            return Err(Error::NotHomogeneous("both coefficients must be homogeneous of the given degree"));
        }
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let k = Cyclo::from_ratio(1, n as i64 + 1);
        let p = (&(&self.a * &x) + &(&self.b * &y)).scale(&k);
        let q = (&self.b.derivative(0) - &self.a.derivative(1)).scale(&k);
        Ok((p, q))
    }
}

fn homogenize(p: &Polynomial, k: u32) -> Polynomial {
    Polynomial::from_terms(
        3,
        p.terms().map(|(m, c)| {
            let [i, j, _] = m.exps();
            (Monomial::xyz(i, j, k - i - j), c.clone())
        }),
    )
}

/// Coefficient-vector proportionality `rhs = c·lhs` with `c ≠ 0`.
fn proportional(lhs: &[&Polynomial], rhs: &[&Polynomial]) -> Option<Cyclo> {
    let mut c: Option<Cyclo> = None;
    for (l, r) in lhs.iter().zip(rhs) {
        if let Some((m, x)) = l.trailing() {
            c = Some(&r.coeff(m) * &x.inv().ok()?);
            break;
        }
        if !r.is_zero() {
            return None;
        }
    }
    let c = c?;
    if c.is_zero() {
        return None;
    }
    for (l, r) in lhs.iter().zip(rhs) {
        if l.scale(&c) != **r {
            return None;
        }
    }
    Some(c)
}

/// `v = A∂X + B∂Y + C∂Z` with homogeneous components of degree `d`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HomogeneousVectorField {
    components: [Polynomial; 3],
    degree: u32,
}

impl HomogeneousVectorField {
    /// The zero field is allowed here; operations that need a foliation reject it.
    pub fn new(components: [Polynomial; 3], degree: u32) -> Result<Self> {
        for c in &components {
            if c.nvars() != 3 {
                return Err(Error::Invalid("vector fields use the variables X, Y, Z".into()));
            }
            if !c.is_zero() && (!c.is_homogeneous() || c.total_degree() != Some(degree)) {
                return Err(Error::NotHomogeneous("vector field components must share one degree"));
            }
        }
        Ok(HomogeneousVectorField { components, degree })
    }

    /// Infers the degree from the nonzero components.
    pub fn from_components(components: [Polynomial; 3]) -> Result<Self> {
        let d = components
            .iter()
            .find_map(|c| c.total_degree())
            .ok_or(Error::ZeroInput("vector field"))?;
        Self::new(components, d)
    }

    pub fn radial() -> Self {
        HomogeneousVectorField {
            components: [Polynomial::var(3, 0), Polynomial::var(3, 1), Polynomial::var(3, 2)],
            degree: 1,
        }
    }

    /// `P·R` for a homogeneous polynomial `P`.
    pub fn radial_multiple(p: &Polynomial, degree: u32) -> Self {
        let r = Self::radial();
        HomogeneousVectorField { components: r.components.map(|c| &c * p), degree }
    }

    pub fn components(&self) -> &[Polynomial; 3] {
        &self.components
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: &Cyclo) -> Self {
        HomogeneousVectorField { components: self.components.clone().map(|p| p.scale(c)), degree: self.degree }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.degree, o.degree);
        HomogeneousVectorField {
            components: [0, 1, 2].map(|i| &self.components[i] + &o.components[i]),
            degree: self.degree,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.degree, o.degree);
        HomogeneousVectorField {
            components: [0, 1, 2].map(|i| &self.components[i] - &o.components[i]),
            degree: self.degree,
        }
    }

    pub fn divergence(&self) -> Polynomial {
        let mut acc = Polynomial::zero(3);
        for (i, c) in self.components.iter().enumerate() {
            acc = &acc + &c.derivative(i);
        }
        acc
    }

    /// `v − div(v)/(d+2)·R`.
    pub fn make_divergence_free(&self) -> Self {
        let div = self.divergence();
        if div.is_zero() {
            return self.clone();
        }
        let p = div.scale(&Cyclo::from_ratio(1, self.degree as i64 + 2));
        self.sub(&Self::radial_multiple(&p, self.degree))
    }

    /// `φ_*v = φ·(v∘φ⁻¹)`.
    pub fn pushforward(&self, phi: &Matrix<Cyclo>) -> Result<Self> {
        if phi.rows() != 3 || phi.cols() != 3 {
            return Err(Error::Invalid("pushforward needs a 3x3 matrix".into()));
        }
        let inv = phi.inverse().ok_or(Error::SingularMatrix)?;
        Ok(self.pushforward_with_inverse(phi, &inv))
    }

    pub fn pushforward_with_inverse(&self, phi: &Matrix<Cyclo>, phi_inv: &Matrix<Cyclo>) -> Self {
        let composed: Vec<Polynomial> = self.components.iter().map(|c| c.substitute_linear(phi_inv)).collect();
        let components = [0, 1, 2].map(|i| {
            let mut acc = Polynomial::zero(3);
            for (j, c) in composed.iter().enumerate() {
                acc = &acc + &c.scale(phi.get(i, j));
            }
            acc
        });
        HomogeneousVectorField { components, degree: self.degree }
    }

    /// `Some(c)` when `φ_*v = c·v` exactly.
    pub fn is_semi_invariant(&self, phi: &Matrix<Cyclo>) -> Option<Cyclo> {
        if self.is_zero() {
            return None;
        }
        let w = self.pushforward(phi).ok()?;
        self.proportionality(&w)
    }

    /// `Some(c)` with `other = c·self`.
    pub fn proportionality(&self, other: &Self) -> Option<Cyclo> {
        if self.degree != other.degree {
            return None;
        }
        let l: Vec<&Polynomial> = self.components.iter().collect();
        let r: Vec<&Polynomial> = other.components.iter().collect();
        proportional(&l, &r)
    }

    /// `i_R i_v (dX∧dY∧dZ) = (BZ − CY) dX + (CX − AZ) dY + (AY − BX) dZ`.
    pub fn form(&self) -> HomogeneousOneForm {
        let [a, b, c] = &self.components;
        let x = Polynomial::var(3, 0);
        let y = Polynomial::var(3, 1);
        let z = Polynomial::var(3, 2);
        HomogeneousOneForm {
            components: [&(b * &z) - &(c * &y), &(c * &x) - &(a * &z), &(a * &y) - &(b * &x)],
        }
    }

    /// `(α, P)` with `w = α·v + P·R`, or `None` when the foliations differ.
    pub fn same_foliation(&self, w: &Self) -> Result<Option<(Cyclo, Polynomial)>> {
        if self.degree != w.degree {
            return Err(Error::DegreeMismatch(format!("{} vs {}", self.degree, w.degree)));
        }
        let fv = self.form();
        let fw = w.form();
        if fv.is_zero() {
            return Err(Error::ZeroInput("field is a multiple of the radial field"));
        }
        let Some(alpha) = fv.proportionality(&fw) else {
            return Ok(None);
        };
        let rest = w.sub(&self.scale(&alpha));
        let p = match rest.components.iter().enumerate().find(|(_, c)| !c.is_zero()) {
            None => Polynomial::zero(3),
            Some((i, c)) => c.div_exact(&Polynomial::var(3, i)).ok_or(Error::Invalid(
                "radial remainder is not a multiple of the radial field".into(),
            ))?,
        };
        debug_assert_eq!(Self::radial_multiple(&p, self.degree), rest);
        Ok(Some((alpha, p)))
    }

    /// Coordinates in the basis `m·∂X, m·∂Y, m·∂Z` (component-major, monomials in order).
    pub fn coefficient_vector(&self) -> Vec<Cyclo> {
        let mut out = Vec::with_capacity(3 * dim_homogeneous(3, self.degree));
        for c in &self.components {
            out.extend(c.dense_coefficients(self.degree));
        }
        out
    }

    pub fn from_coefficient_vector(degree: u32, coeffs: &[Cyclo]) -> Self {
        let n = dim_homogeneous(3, degree);
        assert_eq!(coeffs.len(), 3 * n);
        let components = [0, 1, 2].map(|i| Polynomial::from_dense(3, degree, &coeffs[i * n..(i + 1) * n]));
        HomogeneousVectorField { components, degree }
    }

    /// Restriction to the chart `Z = 1` as `(P, Q)` with `P∂x + Q∂y`
    /// the field `A − X·C, B − Y·C` evaluated at `Z = 1`.
    pub fn affine_chart(&self) -> (Polynomial, Polynomial) {
        let [a, b, c] = &self.components;
        let x = Polynomial::var(3, 0);
        let y = Polynomial::var(3, 1);
        (dehomogenize(&(a - &(&x * c))), dehomogenize(&(b - &(&y * c))))
    }
}

fn dehomogenize(p: &Polynomial) -> Polynomial {
    Polynomial::from_terms(
        2,
        p.terms().map(|(m, c)| {
            let [i, j, _] = m.exps();
            (Monomial::xy(i, j), c.clone())
        }),
    )
}

/// `A dX + B dY + C dZ` with `X·A + Y·B + Z·C = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomogeneousOneForm {
    components: [Polynomial; 3],
}

impl HomogeneousOneForm {
    pub fn new(components: [Polynomial; 3]) -> Result<Self> {
        let mut deg = None;
        for c in &components {
            if c.nvars() != 3 {
                return Err(Error::Invalid("projective forms use the variables X, Y, Z".into()));
            }
            if c.is_zero() {
                continue;
            }
            if !c.is_homogeneous() || deg.is_some_and(|d| Some(d) != c.total_degree()) {
                return Err(Error::NotHomogeneous("form coefficients must share one degree"));
            }
            deg = c.total_degree();
        }
        let f = HomogeneousOneForm { components };
        if !f.radial_contraction().is_zero() {
            return Err(Error::Invalid("form does not vanish on the radial field".into()));
        }
        Ok(f)
    }

    pub fn components(&self) -> &[Polynomial; 3] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    pub fn radial_contraction(&self) -> Polynomial {
        let mut acc = Polynomial::zero(3);
        for (i, c) in self.components.iter().enumerate() {
            acc = &acc + &(c * &Polynomial::var(3, i));
        }
        acc
    }

    /// Common degree of the coefficients.
    pub fn coefficient_degree(&self) -> Option<u32> {
        self.components.iter().find_map(|c| c.total_degree())
    }

    /// Degree of the foliation defined by the form.
    pub fn foliation_degree(&self) -> Option<u32> {
        self.coefficient_degree().map(|k| k - 1)
    }

    pub fn proportionality(&self, other: &Self) -> Option<Cyclo> {
        let l: Vec<&Polynomial> = self.components.iter().collect();
        let r: Vec<&Polynomial> = other.components.iter().collect();
        proportional(&l, &r)
    }

    /// The divergence-free field `v` with `v.form() = ω`: since
    /// `dω = L_R(i_v vol) = (d+2)·i_v vol` when `div v = 0`, `v` is the
    /// curl of `ω` divided by `d + 2`.
    pub fn field(&self) -> Result<HomogeneousVectorField> {
        let k = self.coefficient_degree().ok_or(Error::NoSolution("zero form".into()))?;
        if k == 0 {
            return Err(Error::NoSolution("coefficient degree must be at least 1".into()));
        }
        if !self.radial_contraction().is_zero() {
            return Err(Error::NoSolution("form does not vanish on the radial field".into()));
        }
        let [a, b, c] = &self.components;
        let s = Cyclo::from_ratio(1, k as i64 + 1);
        let comps = [
            (&c.derivative(1) - &b.derivative(2)).scale(&s),
            (&a.derivative(2) - &c.derivative(0)).scale(&s),
            (&b.derivative(0) - &a.derivative(1)).scale(&s),
        ];
        let v = HomogeneousVectorField::new(comps, k - 1)?;
        if v.form() != *self {
            return Err(Error::NoSolution("form is not the contraction of a vector field".into()));
        }
        Ok(v)
    }
}

/// `G·dF − F·dG` with the gcd of its coefficients removed.
pub fn foliation_from_pencil(f: &Polynomial, g: &Polynomial) -> Result<HomogeneousOneForm> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroInput("pencil member"));
    }
    if f.nvars() != 3 || g.nvars() != 3 || !f.is_homogeneous() || !g.is_homogeneous() {
        return Err(Error::NotHomogeneous("pencil members must be homogeneous in X, Y, Z"));
    }
    if f.total_degree() != g.total_degree() {
        return Err(Error::DegreeMismatch(format!(
            "pencil degrees {} and {}",
            f.total_degree().unwrap_or(0),
            g.total_degree().unwrap_or(0)
        )));
    }
    if !f.gcd(g).is_constant() {
        return Err(Error::CommonFactor);
    }
    let comps: [Polynomial; 3] = [0, 1, 2].map(|i| &(g * &f.derivative(i)) - &(f * &g.derivative(i)));
    if comps.iter().all(|c| c.is_zero()) {
        return Err(Error::CommonFactor);
    }
    let common = comps[0].gcd(&comps[1]).gcd(&comps[2]);
    let comps = comps.map(|c| c.div_exact(&common).expect("gcd divides"));
    HomogeneousOneForm::new(comps)
}

/// Degree-`d` monomial fields in coefficient-vector order.
pub fn monomial_field_basis(d: u32) -> Vec<(usize, Monomial)> {
    let ms = monomials_of_degree(3, d);
    (0..3).flat_map(|i| ms.iter().map(move |m| (i, *m))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3(terms: &[(i64, [u32; 3])]) -> Polynomial {
        Polynomial::from_int_terms(3, terms)
    }

    fn p2(terms: &[(i64, [u32; 2])]) -> Polynomial {
        Polynomial::from_int_terms(2, &terms.iter().map(|&(c, [i, j])| (c, [i, j, 0])).collect::<Vec<_>>())
    }

    fn jouanolou(d: u32) -> HomogeneousVectorField {
        HomogeneousVectorField::new([p3(&[(1, [0, d, 0])]), p3(&[(1, [0, 0, d])]), p3(&[(1, [d, 0, 0])])], d).unwrap()
    }

    #[test]
    fn foliation_degrees() {
        let j = AffineOneForm::new(p2(&[(1, [2, 1]), (-1, [0, 0])]), p2(&[(1, [0, 2]), (-1, [3, 0])])).unwrap();
        assert_eq!(j.foliation_degree(), (2, false));
        let f = AffineOneForm::new(p2(&[(1, [0, 1]), (-1, [0, 4])]), p2(&[(-1, [1, 0]), (1, [4, 0])])).unwrap();
        assert_eq!(f.foliation_degree(), (4, true));
        let r = AffineOneForm::new(p2(&[(-1, [0, 1])]), p2(&[(1, [1, 0])])).unwrap();
        assert_eq!(r.foliation_degree(), (0, false));
        assert!(AffineOneForm::new(Polynomial::zero(2), Polynomial::zero(2)).is_err());
    }

    #[test]
    fn divergence_and_normalization() {
        assert!(jouanolou(3).divergence().is_zero());
        assert_eq!(HomogeneousVectorField::radial().divergence(), Polynomial::constant(3, Cyclo::from_int(3)));
        assert!(HomogeneousVectorField::radial().make_divergence_free().is_zero());
        let v = HomogeneousVectorField::new([p3(&[(1, [2, 0, 0])]), Polynomial::zero(3), Polynomial::zero(3)], 2).unwrap();
        let w = v.make_divergence_free();
        assert!(w.divergence().is_zero());
        let half = Cyclo::from_ratio(1, 2);
        assert_eq!(w.components()[0], p3(&[(1, [2, 0, 0])]).scale(&half));
        assert_eq!(w.components()[1], p3(&[(-1, [1, 1, 0])]).scale(&half));
        assert!(v.same_foliation(&w).unwrap().is_some());
    }

    #[test]
    fn pushforward_and_semi_invariance() {
        let t = Matrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        let j = jouanolou(2);
        assert_eq!(j.is_semi_invariant(&t), Some(Cyclo::one()));
        let l = Cyclo::root_of_unity(7, 1);
        let g = Matrix::diagonal(&[l.pow(3), l.clone(), Cyclo::one()]);
        assert!(j.is_semi_invariant(&g).is_some());
        assert_eq!(j.is_semi_invariant(&Matrix::identity(3)), Some(Cyclo::one()));
    }

    #[test]
    fn forms_and_fields() {
        let v = HomogeneousVectorField::new([p3(&[(1, [0, 1, 0])]), Polynomial::zero(3), Polynomial::zero(3)], 1).unwrap();
        let f = v.form();
        assert_eq!(f.components()[1], p3(&[(-1, [0, 1, 1])]));
        assert_eq!(f.components()[2], p3(&[(1, [0, 2, 0])]));
        assert!(f.radial_contraction().is_zero());
        let j = jouanolou(3);
        let back = j.form().field().unwrap();
        assert_eq!(back, j);
        let bad = HomogeneousOneForm { components: [p3(&[(1, [1, 0, 0])]), Polynomial::zero(3), Polynomial::zero(3)] };
        assert!(bad.field().is_err());
    }

    #[test]
    fn same_foliation_recovers_radial_part() {
        let j = jouanolou(2);
        let x = p3(&[(1, [1, 0, 0])]);
        let w = j.scale(&Cyclo::from_int(2)).add(&HomogeneousVectorField::radial_multiple(&x, 2));
        assert_eq!(j.same_foliation(&w).unwrap(), Some((Cyclo::from_int(2), x)));
        let fermat =
            HomogeneousVectorField::new([p3(&[(1, [2, 0, 0])]), p3(&[(1, [0, 2, 0])]), p3(&[(1, [0, 0, 2])])], 2).unwrap();
        assert_eq!(j.same_foliation(&fermat).unwrap(), None);
        assert!(j.same_foliation(&jouanolou(3)).is_err());
    }

    #[test]
    fn pencil_and_projectivization() {
        let f = p3(&[(1, [3, 0, 0]), (1, [0, 3, 0]), (1, [0, 0, 3])]);
        let g = p3(&[(1, [1, 1, 1])]);
        let h4 = foliation_from_pencil(&f, &g).unwrap();
        assert_eq!(h4.foliation_degree(), Some(4));
        let v = h4.field().unwrap();
        assert_eq!(v.degree(), 4);
        assert!(v.divergence().is_zero());
        let lines = foliation_from_pencil(&p3(&[(1, [1, 0, 0])]), &p3(&[(1, [0, 1, 0])])).unwrap();
        assert_eq!(lines.components()[0], p3(&[(1, [0, 1, 0])]));
        assert!(foliation_from_pencil(&f, &f).is_err());

        let radial = AffineOneForm::new(p2(&[(-1, [0, 1])]), p2(&[(1, [1, 0])])).unwrap();
        let pr = radial.to_projective();
        assert_eq!(pr.components(), &[p3(&[(-1, [0, 1, 0])]), p3(&[(1, [1, 0, 0])]), Polynomial::zero(3)]);

        let j = AffineOneForm::new(p2(&[(1, [2, 1]), (-1, [0, 0])]), p2(&[(1, [0, 2]), (-1, [3, 0])])).unwrap();
        let field = j.to_projective().field().unwrap();
        assert!(jouanolou(2).same_foliation(&field).unwrap().is_some());
    }

    #[test]
    fn pullback_and_decomposition() {
        let a = Cyclo::from_int(2);
        let b = Cyclo::from_int(3);
        let w = AffineOneForm::new(p2(&[(1, [2, 1])]), Polynomial::zero(2)).unwrap();
        let pulled = w.pullback(&Matrix::diagonal(&[a.clone(), b.clone()])).unwrap();
        assert_eq!(pulled.a(), &p2(&[(24, [2, 1])]));
        let swap = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        let s = AffineOneForm::new(p2(&[(1, [2, 0])]), p2(&[(1, [0, 1])])).unwrap();
        let ps = s.pullback(&swap).unwrap();
        assert_eq!(ps.a(), &p2(&[(1, [1, 0])]));
        assert_eq!(ps.b(), &p2(&[(1, [0, 2])]));

        let p5 = AffineOneForm::new(p2(&[(5, [4, 1]), (-1, [0, 5])]), p2(&[(1, [5, 0]), (-5, [1, 4])])).unwrap();
        let (p, q) = p5.decompose_homogeneous(5).unwrap();
        assert_eq!(p, p2(&[(1, [5, 1]), (-1, [1, 5])]));
        assert!(q.is_zero());
        let r = AffineOneForm::new(p2(&[(-1, [0, 1])]), p2(&[(1, [1, 0])])).unwrap();
        assert_eq!(r.decompose_homogeneous(1).unwrap(), (Polynomial::zero(2), Polynomial::one(2)));
        assert!(p5.decompose_homogeneous(4).is_err());

        let common = AffineOneForm::new(p2(&[(1, [1, 1])]), p2(&[(1, [2, 0])])).unwrap();
        assert!(!common.common_factor_free());
        assert!(AffineOneForm::new(Polynomial::one(2), Polynomial::zero(2)).unwrap().common_factor_free());
    }
}
