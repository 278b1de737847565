//! Explicit bases of χ-semi-invariant polynomials and divergence-free vector fields.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::geom::HomogeneousVectorField;
use crate::group::{Character, FiniteMatrixGroup};
use crate::linalg::{row_basis, Matrix};
use crate::molien::molien_fields;
use crate::poly::{dim_homogeneous, index_of_monomial3, monomials_of_degree, Monomial, Polynomial};

pub const DEFAULT_DEGREE_CAP: u32 = 20;

/// Dense images of the degree-`d` monomials under `p ↦ p(M·x)`;
/// entry `[i][k]` is the coefficient of monomial `k` in the image of monomial `i`.
pub fn substitution_columns(m: &Matrix<Cyclo>, d: u32) -> Vec<Vec<Cyclo>> {
    let mut prev: Vec<Vec<Cyclo>> = vec![vec![Cyclo::one()]];
    for k in 1..=d {
        let n = dim_homogeneous(3, k);
        let prev_monos = monomials_of_degree(3, k - 1);
        let mut cur = Vec::with_capacity(n);
        for mono in monomials_of_degree(3, k) {
            let i = (0..3).find(|&i| mono.exp(i) > 0).expect("positive degree");
            let src = &prev[index_of_monomial3(&Monomial::var(i).quotient_of(&mono))];
            let mut col = vec![Cyclo::zero(); n];
            for (t, c) in src.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let base = prev_monos[t];
                for j in 0..3 {
                    let mij = m.get(i, j);
                    if mij.is_zero() {
                        continue;
                    }
                    let slot = &mut col[index_of_monomial3(&base.mul(&Monomial::var(j)))];
                    *slot = &*slot + &(c * mij);
                }
            }
            cur.push(col);
        }
        prev = cur;
    }
    prev
}

/// The representation being decomposed: `S^d` (`vector = false`) with
/// `φ·p = p∘φ⁻¹`, or `S^d ⊗ W` with `φ_*v = φ·(v∘φ⁻¹)`.
struct Space<'a> {
    g: &'a FiniteMatrixGroup,
    chi: &'a Character,
    degree: u32,
    vector: bool,
    n: usize,
}

impl<'a> Space<'a> {
    fn new(g: &'a FiniteMatrixGroup, chi: &'a Character, degree: u32, vector: bool) -> Result<Self> {
        if g.dimension() != 3 {
            return Err(Error::Invalid("semi-invariants need a group of 3x3 matrices".into()));
        }
        if chi.values().len() != g.order() {
            return Err(Error::Invalid("character does not match the group".into()));
        }
        Ok(Space { g, chi, degree, vector, n: dim_homogeneous(3, degree) })
    }

    fn ncomp(&self) -> usize {
        if self.vector {
            3
        } else {
            1
        }
    }

    fn dim(&self) -> usize {
        self.ncomp() * self.n
    }

    /// `(coefficient, target index)` images of each basis vector under a monomial element.
    fn monomial_action(&self, e: usize) -> Vec<(Cyclo, usize)> {
        let phi = self.g.element(e);
        let inv = self.g.element(self.g.inverse_index(e));
        let nz = |m: &Matrix<Cyclo>, i: usize| (0..3).find(|&j| !m.get(i, j).is_zero()).expect("invertible");
        let sigma = [0, 1, 2].map(|i| nz(inv, i));
        let monos = monomials_of_degree(3, self.degree);
        let mono_img: Vec<(Cyclo, usize)> = monos
            .iter()
            .map(|m| {
                let mut c = Cyclo::one();
                let mut exps = [0u32; 3];
                for i in 0..3 {
                    let a = m.exp(i);
                    if a > 0 {
                        c = &c * &inv.get(i, sigma[i]).pow(a as i64);
                        exps[sigma[i]] += a;
                    }
                }
                (c, index_of_monomial3(&Monomial::xyz(exps[0], exps[1], exps[2])))
            })
            .collect();
        if !self.vector {
            return mono_img;
        }
        let t = phi.transpose();
        let tau = [0, 1, 2].map(|j| nz(&t, j));
        let mut out = Vec::with_capacity(self.dim());
        for j in 0..3 {
            let s = phi.get(tau[j], j);
            for (c, k) in &mono_img {
                out.push((c * s, tau[j] * self.n + k));
            }
        }
        out
    }

    /// `φ·v` for a general element given the substitution columns of `φ⁻¹`.
    fn act_dense(&self, phi: &Matrix<Cyclo>, subs: &[Vec<Cyclo>], v: &[Cyclo]) -> Vec<Cyclo> {
        let n = self.n;
        let mut u = vec![Cyclo::zero(); self.dim()];
        for j in 0..self.ncomp() {
            for (m, c) in v[j * n..(j + 1) * n].iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (k, a) in subs[m].iter().enumerate() {
                    if !a.is_zero() {
                        let slot = &mut u[j * n + k];
                        *slot = &*slot + &(c * a);
                    }
                }
            }
        }
        if !self.vector {
            return u;
        }
        let mut w = vec![Cyclo::zero(); self.dim()];
        for i in 0..3 {
            for j in 0..3 {
                let p = phi.get(i, j);
                if p.is_zero() {
                    continue;
                }
                for k in 0..n {
                    if !u[j * n + k].is_zero() {
                        w[i * n + k] = &w[i * n + k] + &(p * &u[j * n + k]);
                    }
                }
            }
        }
        w
    }

    fn subs_for(&self, e: usize) -> Vec<Vec<Cyclo>> {
        substitution_columns(self.g.element(self.g.inverse_index(e)), self.degree)
    }

    /// Orbit sums `Σ_h χ(h)⁻¹ h·e_k` over the monomial subgroup, one per
    /// orbit on which `χ` is compatible; they span the image of `R_H`.
    fn monomial_basis(&self, h: &[usize]) -> Vec<BTreeMap<usize, Cyclo>> {
        let actions: Vec<(Cyclo, Vec<(Cyclo, usize)>)> = h
            .iter()
            .map(|&e| (self.chi.value(e).inv().expect("root of unity"), self.monomial_action(e)))
            .collect();
        let mut covered = vec![false; self.dim()];
        let mut out = Vec::new();
        for k in 0..self.dim() {
            if covered[k] {
                continue;
            }
            let mut sum: BTreeMap<usize, Cyclo> = BTreeMap::new();
            for (cinv, act) in &actions {
                let (c, t) = &act[k];
                covered[*t] = true;
                let e = sum.entry(*t).or_insert_with(Cyclo::zero);
                *e = &*e + &(cinv * c);
            }
            sum.retain(|_, c| !c.is_zero());
            if !sum.is_empty() {
                out.push(sum);
            }
        }
        out
    }

    /// Basis of `{v : φ·v = χ(φ)v for all φ}` as dense coordinate vectors.
    fn semi_invariants(&self) -> Vec<Vec<Cyclo>> {
        let h = self.g.monomial_indices();
        let basis = self.monomial_basis(&h);
        if basis.is_empty() {
            return Vec::new();
        }
        let dense: Vec<Vec<Cyclo>> = basis
            .iter()
            .map(|b| {
                let mut v = vec![Cyclo::zero(); self.dim()];
                for (k, c) in b {
                    v[*k] = c.clone();
                }
                v
            })
            .collect();
        let others: Vec<usize> = self
            .g
            .generator_indices()
            .iter()
            .copied()
            .filter(|&e| !self.g.element(e).is_monomial())
            .collect();
        if others.is_empty() {
            return dense;
        }
        // Columns: (φ − χ(φ))·b for each basis vector b, stacked over the generators.
        let mut rows: Vec<Vec<Cyclo>> = Vec::new();
        for &e in &others {
            let subs = self.subs_for(e);
            let chi = self.chi.value(e);
            let cols: Vec<Vec<Cyclo>> = dense
                .iter()
                .map(|b| {
                    let mut w = self.act_dense(self.g.element(e), &subs, b);
                    for (wk, bk) in w.iter_mut().zip(b) {
                        if !bk.is_zero() {
                            *wk = &*wk - &(chi * bk);
                        }
                    }
                    w
                })
                .collect();
            for r in 0..self.dim() {
                if cols.iter().any(|c| !c[r].is_zero()) {
                    rows.push(cols.iter().map(|c| c[r].clone()).collect());
                }
            }
        }
        let kernel = if rows.is_empty() {
            (0..dense.len())
                .map(|i| (0..dense.len()).map(|j| if i == j { Cyclo::one() } else { Cyclo::zero() }).collect())
                .collect()
        } else {
            crate::modular::certified_kernel(&Matrix::from_rows(rows))
        };
        kernel
            .iter()
            .map(|coeffs| {
                let mut v = vec![Cyclo::zero(); self.dim()];
                for (c, b) in coeffs.iter().zip(&basis) {
                    if c.is_zero() {
                        continue;
                    }
                    for (k, x) in b {
                        v[*k] = &v[*k] + &(c * x);
                    }
                }
                v
            })
            .collect()
    }
}

fn field_of(d: u32, v: &[Cyclo]) -> HomogeneousVectorField {
    HomogeneousVectorField::from_coefficient_vector(d, v)
}

/// `R_χ = (1/|G|) Σ χ(φ)⁻¹ φ_*` on degree-`d` vector fields, evaluated as
/// `Σ_r χ(r)⁻¹ r_* ∘ R_H` over left cosets `rH` of the monomial subgroup `H`.
pub struct ReynoldsOperator<'a> {
    space: Space<'a>,
    monomial: Vec<usize>,
    representatives: Vec<usize>,
    substitutions: Vec<Vec<Vec<Cyclo>>>,
}

impl<'a> ReynoldsOperator<'a> {
    pub fn new(g: &'a FiniteMatrixGroup, chi: &'a Character, d: u32) -> Result<Self> {
        let space = Space::new(g, chi, d, true)?;
        let monomial = g.monomial_indices();
        let mut assigned = vec![false; g.order()];
        let mut representatives = Vec::new();
        for e in 0..g.order() {
            if assigned[e] {
                continue;
            }
            representatives.push(e);
            for &h in &monomial {
                assigned[g.mul_indices(e, h)] = true;
            }
        }
        let substitutions = representatives.iter().map(|&r| space.subs_for(r)).collect();
        Ok(ReynoldsOperator { space, monomial, representatives, substitutions })
    }

    pub fn degree(&self) -> u32 {
        self.space.degree
    }

    pub fn apply(&self, v: &HomogeneousVectorField) -> Result<HomogeneousVectorField> {
        if v.degree() != self.space.degree {
            return Err(Error::DegreeMismatch(alloc::format!("{} vs {}", v.degree(), self.space.degree)));
        }
        let x = v.coefficient_vector();
        let sp = &self.space;
        let mut rh = vec![Cyclo::zero(); sp.dim()];
        for &h in &self.monomial {
            let cinv = sp.chi.value(h).inv()?;
            for ((c, t), xk) in sp.monomial_action(h).iter().zip(&x) {
                if !xk.is_zero() {
                    rh[*t] = &rh[*t] + &(&cinv * &(c * xk));
                }
            }
        }
        Ok(field_of(sp.degree, &self.finish(&rh)?))
    }

    fn finish(&self, rh: &[Cyclo]) -> Result<Vec<Cyclo>> {
        let sp = &self.space;
        let mut out = vec![Cyclo::zero(); sp.dim()];
        for (&r, subs) in self.representatives.iter().zip(&self.substitutions) {
            let cinv = sp.chi.value(r).inv()?;
            for (o, w) in out.iter_mut().zip(sp.act_dense(sp.g.element(r), subs, rh)) {
                if !w.is_zero() {
                    *o = &*o + &(&cinv * &w);
                }
            }
        }
        let scale = Cyclo::from_ratio(1, sp.g.order() as i64);
        Ok(out.iter().map(|c| c * &scale).collect())
    }

    /// Row-reduced basis of the image of `R_χ`.
    pub fn image(&self) -> Result<Vec<HomogeneousVectorField>> {
        let sp = &self.space;
        let mut images = Vec::new();
        for b in sp.monomial_basis(&self.monomial) {
            let mut dense = vec![Cyclo::zero(); sp.dim()];
            for (k, c) in b {
                dense[k] = c;
            }
            images.push(self.finish(&dense)?);
        }
        Ok(row_basis(&images).iter().map(|v| field_of(sp.degree, v)).collect())
    }
}

/// Basis of `(S^d ⊗ W)^χ`, the image of the twisted Reynolds operator.
pub fn reynolds_image(g: &FiniteMatrixGroup, chi: &Character, d: u32) -> Result<Vec<HomogeneousVectorField>> {
    ReynoldsOperator::new(g, chi, d)?.image()
}

/// Joint eigenvectors of commuting elements as the columns of a matrix,
/// when every joint eigenspace is a line.
fn joint_eigenbasis(g: &FiniteMatrixGroup, elems: &[usize], conductor_cap: u64) -> Option<Matrix<Cyclo>> {
    let mut spaces: Vec<Vec<Vec<Vec<Cyclo>>>> = Vec::new();
    for &e in elems {
        let m = g.element(e);
        let ord = g.element_order(e) as u32;
        let cond = crate::cyclo::lcm_u32(ord, g.conductor());
        if crate::cyclo::normalize_conductor(cond) as u64 > conductor_cap {
            return None;
        }
        let mut rows_per_value = Vec::new();
        for k in 0..ord {
            let lambda = Cyclo::root_of_unity(ord, k as i64);
            let shifted = m.add(&Matrix::identity(3).scale(&-&lambda));
            if shifted.rank() < 3 {
                rows_per_value.push(shifted.to_rows());
            }
        }
        spaces.push(rows_per_value);
    }
    let mut columns: Vec<Vec<Cyclo>> = Vec::new();
    let mut choice = vec![0usize; spaces.len()];
    loop {
        let rows: Vec<Vec<Cyclo>> = choice.iter().zip(&spaces).flat_map(|(&c, s)| s[c].clone()).collect();
        let kernel = Matrix::from_rows(rows).kernel();
        match kernel.len() {
            0 => {}
            1 => columns.push(kernel.into_iter().next().expect("one vector")),
            _ => return None,
        }
        let mut i = 0;
        loop {
            if i == choice.len() {
                return (columns.len() == 3).then(|| Matrix::from_rows(columns).transpose());
            }
            choice[i] += 1;
            if choice[i] < spaces[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// A change of coordinates `C` making as many elements of `C⁻¹GC` monomial
/// as possible among eigenbases of cyclic and two-generated abelian subgroups.
pub fn monomializing_basis(g: &FiniteMatrixGroup, conductor_cap: u64) -> Option<(Matrix<Cyclo>, Matrix<Cyclo>)> {
    if g.dimension() != 3 {
        return None;
    }
    let mut best_count = g.monomial_indices().len();
    let mut best = None;
    for class in g.conjugacy_classes() {
        let a = class[0];
        if g.element(a).scalar_value().is_some() {
            continue;
        }
        let mut basis = joint_eigenbasis(g, &[a], conductor_cap);
        if basis.is_none() {
            let ma = g.element(a);
            for b in 0..g.order() {
                let mb = g.element(b);
                if mb.scalar_value().is_some() || ma.mul(mb) != mb.mul(ma) {
                    continue;
                }
                basis = joint_eigenbasis(g, &[a, b], conductor_cap);
                if basis.is_some() {
                    break;
                }
            }
        }
        let Some(c) = basis else { continue };
        let c_inv = c.inverse().expect("eigenbasis");
        let count = g.elements().iter().filter(|m| c_inv.mul(m).mul(&c).is_monomial()).count();
        if count > best_count {
            best_count = count;
            best = Some((c, c_inv));
        }
    }
    best
}

/// Semi-invariant computations for one `(G, χ)`, sharing the choice of coordinates across degrees.
pub struct SemiInvariantSolver<'a> {
    group: &'a FiniteMatrixGroup,
    character: &'a Character,
    frame: Option<(FiniteMatrixGroup, Matrix<Cyclo>, Matrix<Cyclo>)>,
}

impl<'a> SemiInvariantSolver<'a> {
    pub fn new(group: &'a FiniteMatrixGroup, character: &'a Character) -> Self {
        let frame = monomializing_basis(group, 120).map(|(c, ci)| (group.conjugate(&c, &ci), c, ci));
        SemiInvariantSolver { group, character, frame }
    }

    /// Semi-invariants computed in the working coordinates, then moved back by `C`.
    fn solve(&self, d: u32, vector: bool) -> Result<Vec<Vec<Cyclo>>> {
        let Some((conj, c, c_inv)) = &self.frame else {
            return Ok(Space::new(self.group, self.character, d, vector)?.semi_invariants());
        };
        let sp = Space::new(conj, self.character, d, vector)?;
        let found = sp.semi_invariants();
        if found.is_empty() {
            return Ok(found);
        }
        let subs = substitution_columns(c_inv, d);
        Ok(found.iter().map(|v| sp.act_dense(c, &subs, v)).collect())
    }

    /// `{v : φ_*v = χ(φ)v}` in degree `d`, radial multiples included, row-reduced.
    pub fn vector_space(&self, d: u32) -> Result<Vec<HomogeneousVectorField>> {
        Ok(row_basis(&self.solve(d, true)?).iter().map(|v| field_of(d, v)).collect())
    }

    /// `{P : P∘φ⁻¹ = χ(φ)P}` in degree `d`, row-reduced.
    pub fn polynomials(&self, d: u32) -> Result<Vec<Polynomial>> {
        Ok(row_basis(&self.solve(d, false)?)
            .iter()
            .map(|v| Polynomial::from_dense(3, d, v))
            .collect())
    }

    /// Divergence-free fields of degree `d`; errors unless there are exactly `expected`.
    pub fn fields(&self, d: u32, expected: usize) -> Result<FieldSpaceBasis> {
        if d > DEFAULT_DEGREE_CAP {
            return Err(Error::Invalid(alloc::format!("degree {} exceeds the cap {}", d, DEFAULT_DEGREE_CAP)));
        }
        let reps: Vec<Vec<Cyclo>> = self
            .solve(d, true)?
            .iter()
            .map(|v| field_of(d, v).make_divergence_free().coefficient_vector())
            .collect();
        let basis: Vec<HomogeneousVectorField> = row_basis(&reps).iter().map(|v| field_of(d, v)).collect();
        if basis.len() != expected {
            return Err(Error::DimensionMismatch { degree: d as usize, computed: basis.len(), expected });
        }
        Ok(FieldSpaceBasis { degree: d, character: self.character.clone(), basis })
    }
}

pub fn semi_invariant_vector_space(g: &FiniteMatrixGroup, chi: &Character, d: u32) -> Result<Vec<HomogeneousVectorField>> {
    SemiInvariantSolver::new(g, chi).vector_space(d)
}

pub fn semi_invariant_polynomials(g: &FiniteMatrixGroup, chi: &Character, d: u32) -> Result<Vec<Polynomial>> {
    SemiInvariantSolver::new(g, chi).polynomials(d)
}

#[derive(Clone, Debug)]
pub struct FieldSpaceBasis {
    pub degree: u32,
    pub character: Character,
    pub basis: Vec<HomogeneousVectorField>,
}

impl FieldSpaceBasis {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// Divergence-free `χ`-semi-invariant fields of degree `d`, checked against
/// the `t^d` coefficient of the Molien series.
pub fn semi_invariant_fields(g: &FiniteMatrixGroup, chi: &Character, d: u32) -> Result<FieldSpaceBasis> {
    let series = molien_fields(g, chi, d as usize)?;
    let expected = usize::try_from(series.coefficient(d as usize)).map_err(|_| Error::Invalid("huge dimension".into()))?;
    SemiInvariantSolver::new(g, chi).fields(d, expected)
}

/// The character `χ` with `φ_*v = χ(φ)v` on all of `G`, if `v` is semi-invariant.
pub fn check_character(v: &HomogeneousVectorField, g: &FiniteMatrixGroup) -> Option<Character> {
    if v.is_zero() || g.dimension() != 3 {
        return None;
    }
    let scalars: Vec<Cyclo> = g.generators().iter().map(|m| v.is_semi_invariant(m)).collect::<Option<_>>()?;
    let mut values: Vec<Option<Cyclo>> = vec![None; g.order()];
    for e in 0..g.order() {
        values[e] = Some(match g.parent(e) {
            None => Cyclo::one(),
            Some((p, s)) => values[p].as_ref().expect("parents precede children") * &scalars[s],
        });
    }
    let values: Vec<Cyclo> = values.into_iter().map(|v| v.expect("assigned")).collect();
    // Every edge of the Cayley graph must respect the scalars.
    for (e, val) in values.iter().enumerate() {
        for (s, &gi) in g.generator_indices().iter().enumerate() {
            if values[g.mul_indices(e, gi)] != val * &scalars[s] {
                return None;
            }
        }
    }
    Character::from_values(values)
}
