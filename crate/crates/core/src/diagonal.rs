//! Diagonal symmetries `(x, y) ↦ (ax, by)` of an affine 1-form, counted and
//! enumerated through the lattice of monomial exponent differences.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::cyclo::{normalize_conductor, Cyclo};
use crate::error::{Error, Result};
use crate::geom::AffineOneForm;
use crate::lattice::{smith_normal_form, SmithForm};
use crate::linalg::Matrix;

/// Exponent pairs `(i, j)` standing for `x^i y^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSet {
    pub monomials: BTreeSet<(u32, u32)>,
}

impl MonomialSet {
    pub fn new(monomials: impl IntoIterator<Item = (u32, u32)>) -> Self {
        MonomialSet { monomials: monomials.into_iter().collect() }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Differences `m − m'` over all ordered pairs, each with common `x^k y^l`
    /// factors stripped, as binomials `x^p y^q − x^r y^s` (deduplicated up to sign).
    pub fn stripped_binomials(&self) -> Vec<Binomial> {
        let ms: Vec<_> = self.monomials.iter().copied().collect();
        let mut out = BTreeSet::new();
        for (i, &(a, b)) in ms.iter().enumerate() {
            for &(c, d) in &ms[i + 1..] {
                let k = a.min(c);
                let l = b.min(d);
                let p = ((a - k, b - l), (c - k, d - l));
                let canon = if p.0 < p.1 { p } else { (p.1, p.0) };
                out.insert(Binomial { first: canon.0, second: canon.1 });
            }
        }
        out.into_iter().collect()
    }
}

/// `x^p y^q − x^r y^s` with no common monomial factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Binomial {
    pub first: (u32, u32),
    pub second: (u32, u32),
}

impl Binomial {
    pub fn degree(&self) -> u32 {
        (self.first.0 + self.first.1).max(self.second.0 + self.second.1)
    }

    pub fn exponent_difference(&self) -> [i64; 2] {
        [
            self.first.0 as i64 - self.second.0 as i64,
            self.first.1 as i64 - self.second.1 as i64,
        ]
    }
}

/// `x^{i+1}y^j` for each `x^i y^j dx` term and `x^i y^{j+1}` for each `x^i y^j dy` term.
pub fn monomial_set(form: &AffineOneForm) -> Result<MonomialSet> {
    if !form.common_factor_free() {
        return Err(Error::CommonFactor);
    }
    let mut set = BTreeSet::new();
    for (m, _) in form.a().terms() {
        set.insert((m.exp(0) + 1, m.exp(1)));
    }
    for (m, _) in form.b().terms() {
        set.insert((m.exp(0), m.exp(1) + 1));
    }
    Ok(MonomialSet { monomials: set })
}

/// The lattice spanned by the differences `m − m₀`, `m₀` the smallest monomial.
#[derive(Clone, Debug)]
pub struct ExponentLattice {
    pub generators: Vec<[i64; 2]>,
    pub snf: SmithForm,
}

impl ExponentLattice {
    pub fn from_vectors(generators: Vec<[i64; 2]>) -> Self {
        let rows: Vec<Vec<i64>> = generators.iter().map(|g| g.to_vec()).collect();
        let snf = smith_normal_form(&rows, 2);
        ExponentLattice { generators, snf }
    }

    pub fn from_monomials(m: &MonomialSet) -> Self {
        let mut it = m.monomials.iter();
        let base = it.next().copied().unwrap_or((0, 0));
        let gens = it
            .map(|&(i, j)| [i as i64 - base.0 as i64, j as i64 - base.1 as i64])
            .collect();
        Self::from_vectors(gens)
    }

    pub fn rank(&self) -> usize {
        self.snf.rank()
    }

    /// `[Z² : Λ]` when the lattice has full rank.
    pub fn index(&self) -> Option<u64> {
        (self.rank() == 2).then(|| (self.snf.invariants[0] * self.snf.invariants[1]) as u64)
    }

    /// Whether `ζ_N^{ka}`, `ζ_N^{kb}` satisfy `a^u b^v = 1` for every generator.
    pub fn contains_exponents(&self, n: u64, ka: i64, kb: i64) -> bool {
        self.generators
            .iter()
            .all(|g| (g[0] * ka + g[1] * kb).rem_euclid(n as i64) == 0)
    }
}

#[derive(Clone, Debug)]
pub struct DiagonalGroup {
    pub finite: bool,
    pub order: Option<u64>,
    /// Common root-of-unity order `N` of the coordinates.
    pub exponent: Option<u64>,
    /// Pairs `(ka, kb)` with `(a, b) = (ζ_N^{ka}, ζ_N^{kb})`, sorted.
    pub exponents: Vec<(u64, u64)>,
    pub lattice: ExponentLattice,
}

impl DiagonalGroup {
    pub fn elements(&self) -> Vec<(Cyclo, Cyclo)> {
        let Some(n) = self.exponent else { return Vec::new() };
        self.exponents
            .iter()
            .map(|&(ka, kb)| {
                (Cyclo::root_of_unity(n as u32, ka as i64), Cyclo::root_of_unity(n as u32, kb as i64))
            })
            .collect()
    }
}

/// Counts the torus solutions of the binomial system of `M` via the Smith
/// form of its difference lattice; enumerates them when `enumerate` is set.
pub fn diagonal_group(m: &MonomialSet, enumerate: bool, conductor_cap: u64) -> Result<DiagonalGroup> {
    let lattice = ExponentLattice::from_monomials(m);
    let Some(order) = lattice.index() else {
        return Ok(DiagonalGroup { finite: false, order: None, exponent: None, exponents: Vec::new(), lattice });
    };
    let d1 = lattice.snf.invariants[0];
    let d2 = lattice.snf.invariants[1];
    let n = d2 as u64;
    let mut exponents = Vec::new();
    if enumerate {
        if normalize_conductor(n as u32) as u64 > conductor_cap {
            return Err(Error::ConductorCap { conductor: n, cap: conductor_cap });
        }
        // (a, b) = (c₁^{V₁₁} c₂^{V₁₂}, c₁^{V₂₁} c₂^{V₂₂}) with c₁ = ζ_{d₁}^s, c₂ = ζ_{d₂}^t.
        let v = &lattice.snf.v;
        let step = d2 / d1;
        for s in 0..d1 {
            for t in 0..d2 {
                let ka = (s * step * v[0][0] + t * v[0][1]).rem_euclid(d2);
                let kb = (s * step * v[1][0] + t * v[1][1]).rem_euclid(d2);
                exponents.push((ka as u64, kb as u64));
            }
        }
        exponents.sort_unstable();
        exponents.dedup();
        debug_assert_eq!(exponents.len() as u64, order);
    }
    Ok(DiagonalGroup { finite: true, order: Some(order), exponent: Some(n), exponents, lattice })
}

/// Whether `diag(a, b)` pulls `ω` back to a nonzero multiple of itself.
pub fn verify_membership(g: (&Cyclo, &Cyclo), form: &AffineOneForm) -> bool {
    if g.0.is_zero() || g.1.is_zero() {
        return false;
    }
    let m = Matrix::diagonal(&[g.0.clone(), g.1.clone()]);
    match form.pullback(&m) {
        Ok(p) => form.proportionality(&p).is_some(),
        Err(_) => false,
    }
}

/// Checks `|V(S)| ≤ N·deg f̃` for every `f̃ ∈ S`, `N` the largest degree.
pub fn bezout_bound_check(s: &[Binomial]) -> Result<bool> {
    let lattice = ExponentLattice::from_vectors(s.iter().map(|b| b.exponent_difference()).collect());
    let order = lattice
        .index()
        .ok_or_else(|| Error::Invalid("binomial system has infinitely many torus solutions".into()))?;
    let n = s.iter().map(|b| b.degree()).max().unwrap_or(0) as u64;
    Ok(s.iter().all(|b| order <= n * b.degree() as u64))
}

/// Parameters `(α, β, ρ)` when `ω = (α + ρ x^d y)dx + (β y^d − ρ x^{d+1})dy`.
pub fn extremal_form_detect(form: &AffineOneForm) -> Option<(Cyclo, Cyclo, Cyclo)> {
    let a: Vec<_> = form.a().terms().collect();
    let b: Vec<_> = form.b().terms().collect();
    if a.len() != 2 || b.len() != 2 {
        return None;
    }
    let (m0, alpha) = a[0];
    let (m1, rho) = a[1];
    if m0.exps() != [0, 0, 0] {
        return None;
    }
    let [dd, one, _] = m1.exps();
    if one != 1 || dd == 0 {
        return None;
    }
    let d = dd;
    let beta = form.b().coeff(&crate::poly::Monomial::xy(0, d));
    let minus_rho = form.b().coeff(&crate::poly::Monomial::xy(d + 1, 0));
    if beta.is_zero() || minus_rho != -rho {
        return None;
    }
    Some((alpha.clone(), beta, rho.clone()))
}
