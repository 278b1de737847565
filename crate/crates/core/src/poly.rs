//! Sparse multivariate polynomials in two (`x, y`) or three (`X, Y, Z`)
//! variables with cyclotomic coefficients.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::cyclo::Cyclo;
use crate::linalg::Matrix;

/// Exponent vector. Affine monomials leave the third slot at zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u32; 3],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0, 0, 0] };

    pub fn xy(i: u32, j: u32) -> Self {
        Monomial { exps: [i, j, 0] }
    }

    pub fn xyz(i: u32, j: u32, k: u32) -> Self {
        Monomial { exps: [i, j, k] }
    }

    pub fn var(v: usize) -> Self {
        let mut exps = [0; 3];
        exps[v] = 1;
        Monomial { exps }
    }

    pub fn exps(&self) -> [u32; 3] {
        self.exps
    }

    pub fn exp(&self, v: usize) -> u32 {
        self.exps[v]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial {
            exps: [
                self.exps[0] + o.exps[0],
                self.exps[1] + o.exps[1],
                self.exps[2] + o.exps[2],
            ],
        }
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        (0..3).all(|i| self.exps[i] <= o.exps[i])
    }

    /// `o / self`, assuming divisibility.
    pub fn quotient_of(&self, o: &Monomial) -> Monomial {
        Monomial {
            exps: [
                o.exps[0] - self.exps[0],
                o.exps[1] - self.exps[1],
                o.exps[2] - self.exps[2],
            ],
        }
    }

    pub fn with_exp(&self, v: usize, e: u32) -> Monomial {
        let mut exps = self.exps;
        exps[v] = e;
        Monomial { exps }
    }
}

impl Ord for Monomial {
    /// Graded lexicographic with `X < Y < Z` (`x < y` in the affine case).
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then(self.exps[2].cmp(&o.exps[2]))
            .then(self.exps[1].cmp(&o.exps[1]))
            .then(self.exps[0].cmp(&o.exps[0]))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

/// All monomials of total degree `d` in `nvars` variables, increasing in the
/// global monomial order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    match nvars {
        2 => {
            for j in 0..=d {
                out.push(Monomial::xy(d - j, j));
            }
        }
        3 => {
            for k in 0..=d {
                for j in 0..=(d - k) {
                    out.push(Monomial::xyz(d - k - j, j, k));
                }
            }
        }
        _ => panic!("unsupported number of variables {}", nvars),
    }
    out.sort();
    out
}

/// Index of a degree-`d` monomial inside [`monomials_of_degree`] for three variables.
pub fn index_of_monomial3(m: &Monomial) -> usize {
    let d = m.degree() as usize;
    let k = m.exps[2] as usize;
    let j = m.exps[1] as usize;
    // Monomials with smaller Z exponent come first; within fixed k, increasing Y.
    let before: usize = (0..k).map(|kk| d - kk + 1).sum();
    before + j
}

pub fn dim_homogeneous(nvars: usize, d: u32) -> usize {
    let d = d as usize;
    match nvars {
        2 => d + 1,
        3 => (d + 1) * (d + 2) / 2,
        _ => panic!("unsupported number of variables {}", nvars),
    }
}

/// A polynomial with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Cyclo>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars == 2 || nvars == 3, "polynomials have 2 or 3 variables");
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Cyclo) -> Self {
        Self::term(nvars, c, Monomial::ONE)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Cyclo::one())
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        assert!(v < nvars);
        Self::term(nvars, Cyclo::one(), Monomial::var(v))
    }

    pub fn term(nvars: usize, c: Cyclo, m: Monomial) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(m, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Cyclo)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_int_terms(nvars: usize, terms: &[(i64, [u32; 3])]) -> Self {
        Self::from_terms(
            nvars,
            terms.iter().map(|&(c, e)| (Monomial { exps: e }, Cyclo::from_int(c))),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, m: Monomial, c: Cyclo) {
        debug_assert!(self.nvars == 3 || m.exps[2] == 0);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let s = &*old + &c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Cyclo)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Cyclo {
        self.terms.get(m).cloned().unwrap_or_else(Cyclo::zero)
    }

    /// Largest monomial in the global order.
    pub fn leading(&self) -> Option<(&Monomial, &Cyclo)> {
        self.terms.iter().next_back()
    }

    /// Smallest monomial in the global order.
    pub fn trailing(&self) -> Option<(&Monomial, &Cyclo)> {
        self.terms.iter().next()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn degree_in(&self, v: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exps[v]).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Cyclo) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn derivative(&self, v: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exps[v];
            if e > 0 {
                out.add_term(m.with_exp(v, e - 1), c * &Cyclo::from_int(e as i64));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `p(M·v)` where `v` is the column of variables; `M` is `nvars × nvars`.
    pub fn substitute_linear(&self, m: &Matrix<Cyclo>) -> Polynomial {
        let n = self.nvars;
        assert_eq!(m.rows(), n);
        assert_eq!(m.cols(), n);
        let forms: Vec<Polynomial> = (0..n)
            .map(|i| {
                Polynomial::from_terms(n, (0..n).map(|j| (Monomial::var(j), m.get(i, j).clone())))
            })
            .collect();
        self.substitute(&forms)
    }

    /// Replaces variable `i` by `images[i]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        let target_vars = images.first().map(|p| p.nvars).unwrap_or(self.nvars);
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Polynomial::one(p.nvars), p.clone()]).collect();
        let mut out = Polynomial::zero(target_vars);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target_vars, c.clone());
            for v in 0..self.nvars {
                let e = m.exps[v] as usize;
                if e == 0 {
                    continue;
                }
                while powers[v].len() <= e {
                    let next = &powers[v][powers[v].len() - 1] * &images[v];
                    powers[v].push(next);
                }
                t = &t * &powers[v][e];
            }
            out = &out + &t;
        }
        out
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let (lm, lc) = d.leading().map(|(m, c)| (*m, c.clone()))?;
        let lc_inv = lc.inv().ok()?;
        let mut rem = self.clone();
        let mut q = Polynomial::zero(self.nvars);
        while let Some((m, c)) = rem.leading().map(|(m, c)| (*m, c.clone())) {
            if !lm.divides(&m) {
                return None;
            }
            let qm = lm.quotient_of(&m);
            let qc = &c * &lc_inv;
            rem = &rem - &d.mul_monomial(&qm).scale(&qc);
            q.add_term(qm, qc);
        }
        Some(q)
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Greatest common divisor, normalized monic; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        let vars: Vec<usize> = (0..self.nvars).collect();
        crate::poly_gcd::gcd(self, other, &vars).monic()
    }

    /// Evaluates at a point.
    pub fn eval(&self, point: &[Cyclo]) -> Cyclo {
        let mut acc = Cyclo::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, x) in point.iter().enumerate().take(self.nvars) {
                let e = m.exps[v];
                if e > 0 {
                    t = &t * &x.pow(e as i64);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Conductor of the smallest cyclotomic field holding every coefficient.
    pub fn conductor(&self) -> u32 {
        self.terms
            .values()
            .fold(1, |acc, c| crate::cyclo::lcm_u32(acc, c.conductor()))
    }

    /// Dense coefficient vector of the degree-`d` part in the global order.
    pub fn dense_coefficients(&self, d: u32) -> Vec<Cyclo> {
        monomials_of_degree(self.nvars, d)
            .iter()
            .map(|m| self.coeff(m))
            .collect()
    }

    pub fn from_dense(nvars: usize, d: u32, coeffs: &[Cyclo]) -> Polynomial {
        Polynomial::from_terms(
            nvars,
            monomials_of_degree(nvars, d).into_iter().zip(coeffs.iter().cloned()),
        )
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "mixed variable counts");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "mixed variable counts");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "mixed variable counts");
        let mut acc: BTreeMap<Monomial, Cyclo> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let m = m1.mul(m2);
                let p = c1 * c2;
                match acc.get_mut(&m) {
                    Some(x) => *x = &*x + &p,
                    None => {
                        acc.insert(m, p);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Polynomial { nvars: self.nvars, terms: acc }
    }
}

impl<'a> Neg for &'a Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_poly {
    ($tr:ident, $m:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                $tr::$m(&self, &rhs)
            }
        }
    };
}
forward_poly!(Add, add);
forward_poly!(Sub, sub);
forward_poly!(Mul, mul);

const AFFINE_VARS: [&str; 2] = ["x", "y"];
const PROJECTIVE_VARS: [&str; 3] = ["X", "Y", "Z"];

impl fmt::Display for Polynomial {
    /// Each coefficient piece is written as its own term, so the output only
    /// uses the literal grammar `rational[*zeta(n)^k][*x^i*y^j]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names: &[&str] = if self.nvars == 2 { &AFFINE_VARS } else { &PROJECTIVE_VARS };
        let mut first = true;
        for (m, c) in &self.terms {
            let mono: alloc::string::String = (0..self.nvars)
                .filter(|&v| m.exps[v] > 0)
                .map(|v| alloc::format!("*{}^{}", names[v], m.exps[v]))
                .collect();
            let cs = alloc::format!("{}", c);
            for piece in cs.split(" + ") {
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "{}{}", piece, mono)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy(terms: &[(i64, u32, u32)]) -> Polynomial {
        Polynomial::from_terms(2, terms.iter().map(|&(c, i, j)| (Monomial::xy(i, j), Cyclo::from_int(c))))
    }

    #[test]
    fn order_is_graded_with_z_largest() {
        let ms = monomials_of_degree(3, 2);
        assert_eq!(ms[0], Monomial::xyz(2, 0, 0));
        assert_eq!(ms[1], Monomial::xyz(1, 1, 0));
        assert_eq!(*ms.last().unwrap(), Monomial::xyz(0, 0, 2));
        for (i, m) in ms.iter().enumerate() {
            assert_eq!(index_of_monomial3(m), i);
        }
        assert!(Monomial::xy(5, 0) > Monomial::xy(0, 4));
    }

    #[test]
    fn arithmetic_and_division() {
        let a = xy(&[(1, 1, 0), (1, 0, 1)]); // x + y
        let b = xy(&[(1, 1, 0), (-1, 0, 1)]); // x - y
        let p = &a * &b;
        assert_eq!(p, xy(&[(1, 2, 0), (-1, 0, 2)]));
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(xy(&[(1, 2, 0), (1, 0, 0)]).div_exact(&a), None);
    }

    #[test]
    fn gcd_detects_common_factors() {
        let x = xy(&[(1, 1, 0)]);
        let g = xy(&[(1, 1, 1)]).gcd(&xy(&[(1, 2, 0)]));
        assert_eq!(g, x);
        let j_a = xy(&[(1, 2, 1), (-1, 0, 0)]);
        let j_b = xy(&[(1, 0, 2), (-1, 3, 0)]);
        assert!(j_a.gcd(&j_b).is_constant());
        let f = xy(&[(1, 1, 0), (2, 0, 1), (3, 0, 0)]);
        let g1 = &f * &xy(&[(1, 3, 1), (1, 0, 0)]);
        let g2 = &f * &xy(&[(1, 0, 4), (-7, 1, 0)]);
        assert_eq!(g1.gcd(&g2), f.monic());
    }

    #[test]
    fn substitution_and_derivative() {
        let p = xy(&[(1, 2, 1)]);
        assert_eq!(p.derivative(0), xy(&[(2, 1, 1)]));
        let swap = Matrix::from_rows(vec![
            vec![Cyclo::zero(), Cyclo::one()],
            vec![Cyclo::one(), Cyclo::zero()],
        ]);
        assert_eq!(p.substitute_linear(&swap), xy(&[(1, 1, 2)]));
    }

    #[test]
    fn display() {
        let p = xy(&[(1, 2, 1), (-1, 0, 0)]);
        assert_eq!(alloc::format!("{}", p), "-1 + 1*x^2*y^1");
    }
}
