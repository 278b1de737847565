//! Truncated power series and Molien-type averages over finite matrix groups.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::group::{Character, FiniteMatrixGroup};
use crate::linalg::Matrix;

pub const DEFAULT_TRUNCATION: usize = 40;

/// `Σ c_k t^k` for `k ≤ truncation`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerPowerSeries {
    coefficients: Vec<BigInt>,
}

impl IntegerPowerSeries {
    pub fn new(coefficients: Vec<BigInt>) -> Self {
        assert!(!coefficients.is_empty(), "series keep at least the constant term");
        IntegerPowerSeries { coefficients }
    }

    pub fn from_i64(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn truncation(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn coefficient(&self, k: usize) -> &BigInt {
        &self.coefficients[k]
    }

    pub fn truncate(&self, t: usize) -> Self {
        Self::new(self.coefficients[..=t.min(self.truncation())].to_vec())
    }

    /// `self − t·other`, to the common truncation.
    pub fn minus_shifted(&self, other: &Self) -> Self {
        let n = self.truncation().min(other.truncation() + 1);
        Self::new(
            (0..=n)
                .map(|k| {
                    let s = &self.coefficients[k];
                    if k == 0 {
                        s.clone()
                    } else {
                        s - &other.coefficients[k - 1]
                    }
                })
                .collect(),
        )
    }

    pub fn is_non_negative(&self) -> bool {
        self.coefficients.iter().all(|c| !c.is_negative())
    }
}

impl fmt::Display for IntegerPowerSeries {
    /// `c0 + c1*t + c2*t^2 + …`, zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*t", c)?,
                _ => write!(f, "{}*t^{}", c, k)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.coefficients.len())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloPowerSeries {
    pub coefficients: Vec<Cyclo>,
}

impl CycloPowerSeries {
    pub fn truncation(&self) -> usize {
        self.coefficients.len() - 1
    }
}

/// `(e₁, e₂, …, e_n)` with `det(I − tφ) = 1 − e₁t + e₂t² − …`.
pub fn char_poly_coefficients(phi: &Matrix<Cyclo>) -> Vec<Cyclo> {
    let n = phi.rows();
    let e1 = phi.trace();
    match n {
        1 => vec![e1],
        2 => vec![e1, phi.determinant()],
        3 => {
            let g = |i, j| phi.get(i, j);
            let minor = |a: usize, b: usize| &(g(a, a) * g(b, b)) - &(g(a, b) * g(b, a));
            let e2 = &(&minor(0, 1) + &minor(0, 2)) + &minor(1, 2);
            vec![e1, e2, phi.determinant()]
        }
        _ => panic!("unsupported dimension {}", n),
    }
}

fn series_from_elementary(e: &[Cyclo], t: usize) -> Vec<Cyclo> {
    let mut h: Vec<Cyclo> = Vec::with_capacity(t + 1);
    h.push(Cyclo::one());
    for k in 1..=t {
        let mut acc = Cyclo::zero();
        for (i, ei) in e.iter().enumerate() {
            let j = i + 1;
            if j > k || ei.is_zero() {
                continue;
            }
            let term = ei * &h[k - j];
            acc = if i % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        h.push(acc);
    }
    h
}

/// Coefficients `h_k` of `1/det(I − tφ)` through `t^T`.
pub fn inverse_det_series(phi: &Matrix<Cyclo>, t: usize) -> Result<CycloPowerSeries> {
    if phi.determinant().is_zero() {
        return Err(Error::SingularMatrix);
    }
    Ok(CycloPowerSeries { coefficients: series_from_elementary(&char_poly_coefficients(phi), t) })
}

/// Which Molien average to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MolienKind {
    /// `(1/|G|) Σ χ(φ)/det(I − tφ)`
    Ring,
    /// `(1/|G|) Σ χ(φ) tr(φ⁻¹)/det(I − tφ)`
    VectorPart,
    /// `(1/|G|) Σ χ(φ) (tr(φ⁻¹) − t)/det(I − tφ)`
    Fields,
}

/// How the summands are grouped before expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Summation {
    /// Every element expanded separately.
    Elements,
    /// One expansion per conjugacy class, weighted by class size.
    Classes,
    /// One expansion per distinct `(χ, tr φ⁻¹, det(I − tφ))` datum.
    Deduplicated,
}

fn finish(sum: Vec<Cyclo>, order: usize) -> Result<IntegerPowerSeries> {
    let n = BigInt::from(order);
    let mut out = Vec::with_capacity(sum.len());
    for (k, c) in sum.into_iter().enumerate() {
        let bad = |c: &Cyclo| Error::NonIntegerCoefficient { degree: k, value: format!("({})/{}", c, order) };
        let q = c.to_rational().ok_or_else(|| bad(&c))?;
        let v = q / num_rational::BigRational::from_integer(n.clone());
        if !v.denom().is_one() || v.numer().is_negative() {
            return Err(bad(&c));
        }
        out.push(v.numer().clone());
    }
    Ok(IntegerPowerSeries::new(out))
}

/// The chosen Molien average for `(G, χ)` through `t^T`.
pub fn molien_series(
    g: &FiniteMatrixGroup,
    chi: &Character,
    kind: MolienKind,
    t: usize,
    summation: Summation,
) -> Result<IntegerPowerSeries> {
    let weighted: Vec<(usize, usize)> = match summation {
        Summation::Elements => (0..g.order()).map(|i| (i, 1)).collect(),
        Summation::Classes => g.conjugacy_classes().iter().map(|c| (c[0], c.len())).collect(),
        Summation::Deduplicated => {
            let mut seen: BTreeMap<(Cyclo, Cyclo, Vec<Cyclo>), (usize, usize)> = BTreeMap::new();
            for i in 0..g.order() {
                let key = (
                    chi.value(i).clone(),
                    g.element(g.inverse_index(i)).trace(),
                    char_poly_coefficients(g.element(i)),
                );
                seen.entry(key).or_insert((i, 0)).1 += 1;
            }
            seen.into_values().collect()
        }
    };
    let mut sum = vec![Cyclo::zero(); t + 1];
    for (i, weight) in weighted {
        let phi = g.element(i);
        let h = series_from_elementary(&char_poly_coefficients(phi), t);
        let c = chi.value(i).scale_int(&BigInt::from(weight));
        let tr_inv = g.element(g.inverse_index(i)).trace();
        for k in 0..=t {
            let mut term = match kind {
                MolienKind::Ring => h[k].clone(),
                MolienKind::VectorPart | MolienKind::Fields => &tr_inv * &h[k],
            };
            if kind == MolienKind::Fields && k > 0 {
                term = &term - &h[k - 1];
            }
            sum[k] = &sum[k] + &(&c * &term);
        }
    }
    finish(sum, g.order())
}

/// Molien series of the `χ`-semi-invariant polynomials.
pub fn molien_ring(g: &FiniteMatrixGroup, chi: &Character, t: usize) -> Result<IntegerPowerSeries> {
    molien_series(g, chi, MolienKind::Ring, t, Summation::Deduplicated)
}

/// Series of the `χ`-semi-invariant polynomial vector fields.
pub fn molien_vector_part(g: &FiniteMatrixGroup, chi: &Character, t: usize) -> Result<IntegerPowerSeries> {
    molien_series(g, chi, MolienKind::VectorPart, t, Summation::Deduplicated)
}

/// Series of the divergence-free `χ`-semi-invariant vector fields.
pub fn molien_fields(g: &FiniteMatrixGroup, chi: &Character, t: usize) -> Result<IntegerPowerSeries> {
    molien_series(g, chi, MolienKind::Fields, t, Summation::Deduplicated)
}

/// Expansion of `numerator / Π(1 − t^{a_i})` through `t^T`; `numerator[k]`
/// is the coefficient of `t^k`.
pub fn expand_closed_form(numerator: &[i64], denominator_exponents: &[u32], t: usize) -> IntegerPowerSeries {
    let mut c: Vec<BigInt> = (0..=t).map(|k| BigInt::from(numerator.get(k).copied().unwrap_or(0))).collect();
    for &a in denominator_exponents {
        let a = a as usize;
        assert!(a > 0, "denominator factors must be 1 − t^a with a > 0");
        for k in a..=t {
            let prev = c[k - a].clone();
            c[k] += prev;
        }
    }
    IntegerPowerSeries::new(c)
}

/// Parses `numerator` text like `-t^16 + t^14 + 2*t^9 + 1` into coefficients.
pub fn parse_integer_polynomial(s: &str) -> Result<Vec<i64>> {
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut coeffs: Vec<i64> = Vec::new();
    let bad = || Error::Invalid(format!("cannot parse integer polynomial in t: {}", s));
    let mut terms: Vec<String> = Vec::new();
    let mut cur = String::new();
    for ch in cleaned.chars() {
        if (ch == '+' || ch == '-') && !cur.is_empty() && !cur.ends_with('^') {
            terms.push(core::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    if !cur.is_empty() {
        terms.push(cur);
    }
    for term in terms {
        let (sign, body) = match term.strip_prefix('-') {
            Some(b) => (-1i64, b),
            None => (1, term.strip_prefix('+').unwrap_or(&term)),
        };
        let (coef, pow) = if let Some(pos) = body.find('t') {
            let c = body[..pos].trim_end_matches('*');
            let c: i64 = if c.is_empty() { 1 } else { c.parse().map_err(|_| bad())? };
            let rest = &body[pos + 1..];
            let p: usize = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())?
            };
            (c, p)
        } else {
            (body.parse().map_err(|_| bad())?, 0)
        };
        if coeffs.len() <= pow {
            coeffs.resize(pow + 1, 0);
        }
        coeffs[pow] += sign * coef;
    }
    Ok(coeffs)
}
