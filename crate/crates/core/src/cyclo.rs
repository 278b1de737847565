//! Exact elements of cyclotomic fields.
//!
//! An element of `Q(ζ_n)` is stored in the power basis `1, ζ_n, …, ζ_n^{φ(n)-1}`
//! reduced modulo the cyclotomic polynomial `Φ_n`, as integer numerators over a
//! single positive denominator. Every value is kept at its minimal conductor,
//! so structural equality, ordering and hashing agree with field equality.
//! Conductors are never `2 (mod 4)` since `Q(ζ_{2m}) = Q(ζ_m)` for odd `m`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::FieldElement;

/// Default upper bound on conductors accepted at construction entry points.
pub const DEFAULT_CONDUCTOR_CAP: u64 = 120;

/// An exact element of a cyclotomic field, canonicalized to its minimal conductor.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cyclo {
    n: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

/// Replaces a conductor `2 (mod 4)` by the equal field of half the conductor.
pub fn normalize_conductor(n: u32) -> u32 {
    if n % 4 == 2 {
        n / 2
    } else {
        n
    }
}

pub fn euler_phi(n: u32) -> usize {
    let mut result = n as u64;
    for p in prime_factors(n) {
        result = result / p as u64 * (p as u64 - 1);
    }
    result as usize
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn lcm_u32(a: u32, b: u32) -> u32 {
    a / a.gcd(&b) * b
}

struct Table {
    n: u32,
    phi: usize,
    /// Coefficients of `Φ_n`, lowest degree first, monic of degree `phi`.
    poly: Vec<i64>,
    /// `pow[j]` is `ζ_n^j` in the power basis, for `0 <= j < n`.
    pow: Vec<Vec<i64>>,
}

struct Descent {
    rows: Vec<usize>,
    /// Integer matrix `inv / denom` inverting the selected rows of `emb`.
    inv: Vec<Vec<BigInt>>,
    denom: BigInt,
    /// `emb[i][j]` is coordinate `i` of `ζ_m^j` inside `Q(ζ_n)`.
    emb: Vec<Vec<i64>>,
}

static TABLES: spin::RwLock<BTreeMap<u32, Arc<Table>>> = spin::RwLock::new(BTreeMap::new());
static DESCENTS: spin::RwLock<BTreeMap<(u32, u32), Arc<Descent>>> =
    spin::RwLock::new(BTreeMap::new());

fn table(n: u32) -> Arc<Table> {
    if let Some(t) = TABLES.read().get(&n) {
        return t.clone();
    }
    let built = Arc::new(build_table(n));
    TABLES.write().entry(n).or_insert(built).clone()
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic polynomial of index 0");
    if n == 1 {
        return vec![-1, 1];
    }
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut rem: Vec<i64> = vec![0; n as usize + 1];
    rem[0] = -1;
    rem[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            rem = div_monic(&rem, &table(d).poly);
        }
    }
    rem
}

fn div_monic(a: &[i64], b: &[i64]) -> Vec<i64> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![0i64; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db];
        q[i] = c;
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                r[i + j] -= c * bj;
            }
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0), "inexact cyclotomic division");
    q
}

fn build_table(n: u32) -> Table {
    let poly = cyclotomic_polynomial(n);
    let phi = poly.len() - 1;
    let mut pow = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..n {
        pow.push(cur.clone());
        let top = cur[phi - 1];
        let mut next = vec![0i64; phi];
        next[1..phi].copy_from_slice(&cur[..(phi - 1)]);
        if top != 0 {
            for (i, slot) in next.iter_mut().enumerate() {
                *slot -= top * poly[i];
            }
        }
        cur = next;
    }
    Table { n, phi, poly, pow }
}

fn descent(n: u32, m: u32) -> Arc<Descent> {
    if let Some(d) = DESCENTS.read().get(&(n, m)) {
        return d.clone();
    }
    let built = Arc::new(build_descent(n, m));
    DESCENTS.write().entry((n, m)).or_insert(built).clone()
}

fn build_descent(n: u32, m: u32) -> Descent {
    let tn = table(n);
    let phi_m = euler_phi(m);
    let step = (n / m) as usize;
    let emb: Vec<Vec<i64>> = (0..tn.phi)
        .map(|i| {
            (0..phi_m)
                .map(|j| tn.pow[(j * step) % n as usize][i])
                .collect()
        })
        .collect();
    // Greedily pick phi_m independent rows, then invert that square block.
    let mut rows = Vec::new();
    let mut basis: Vec<Vec<BigRational>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for (i, row) in emb.iter().enumerate() {
        let mut r: Vec<BigRational> = row.iter().map(|&x| BigRational::from_integer(x.into())).collect();
        for (b, &p) in basis.iter().zip(&pivots) {
            if !r[p].is_zero() {
                let f = r[p].clone() / b[p].clone();
                for k in 0..phi_m {
                    r[k] = r[k].clone() - f.clone() * b[k].clone();
                }
            }
        }
        if let Some(p) = r.iter().position(|x| !x.is_zero()) {
            basis.push(r);
            pivots.push(p);
            rows.push(i);
            if rows.len() == phi_m {
                break;
            }
        }
    }
    let square: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|&i| emb[i].iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let inv = invert_rational(&square);
    let mut denom = BigInt::one();
    for row in &inv {
        for x in row {
            denom = denom.lcm(x.denom());
        }
    }
    let inv = inv
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| x.numer() * (&denom / x.denom()))
                .collect()
        })
        .collect();
    Descent { rows, inv, denom, emb }
}

fn invert_rational(a: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("embedding block is invertible");
        m.swap(col, piv);
        let f = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = x.clone() / f.clone();
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let g = m[r][col].clone();
                for k in 0..2 * n {
                    let v = m[col][k].clone() * g.clone();
                    m[r][k] = m[r][k].clone() - v;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}

fn raw_mul(t: &Table, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let phi = t.phi;
    let mut wide: Vec<BigInt> = vec![BigInt::zero(); 2 * phi - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                wide[i + j] += x * y;
            }
        }
    }
    let mut out: Vec<BigInt> = wide.drain(..phi).collect();
    for (k, c) in wide.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let row = &t.pow[(phi + k) % t.n as usize];
        for (slot, &r) in out.iter_mut().zip(row) {
            if r != 0 {
                *slot += &c * r;
            }
        }
    }
    out
}

/// Applies the Galois automorphism `ζ ↦ ζ^k` to raw coordinates.
fn raw_conjugate(t: &Table, a: &[BigInt], k: u32) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); t.phi];
    for (j, c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let row = &t.pow[(j as u64 * k as u64 % t.n as u64) as usize];
        for (slot, &r) in out.iter_mut().zip(row) {
            if r != 0 {
                *slot += c * r;
            }
        }
    }
    out
}

fn bigrat_to_string(x: &BigRational) -> String {
    use alloc::string::ToString;
    if x.is_integer() {
        x.numer().to_string()
    } else {
        alloc::format!("{}/{}", x.numer(), x.denom())
    }
}

impl Cyclo {
    pub fn zero() -> Self {
        Cyclo { n: 1, num: vec![BigInt::zero()], den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_bigint(BigInt::from(v))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Cyclo { n: 1, num: vec![v], den: BigInt::one() }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Cyclo { n: 1, num: vec![q.numer().clone()], den: q.denom().clone() }
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        Self::from_rational(&BigRational::new(p.into(), q.into()))
    }

    /// `ζ_n^k`. Panics when `n == 0`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n >= 1, "root of unity of order 0");
        let mut sign_flip = false;
        let mut n = n;
        let mut k = k.rem_euclid(n as i64) as u64;
        if n % 4 == 2 {
            // ζ_{2m} = -ζ_m^{(m+1)/2} for odd m.
            let m = n / 2;
            sign_flip = k % 2 == 1;
            k = k * ((m as u64 + 1) / 2) % m as u64;
            n = m;
        }
        let t = table(n);
        let mut num: Vec<BigInt> = t.pow[k as usize].iter().map(|&x| BigInt::from(x)).collect();
        if sign_flip {
            for x in num.iter_mut() {
                *x = -x.clone();
            }
        }
        Self::canonical(n, num, BigInt::one())
    }

    /// `ζ_n^k`, rejecting conductors above `cap`.
    pub fn root_of_unity_checked(n: u32, k: i64, cap: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("root of unity of order 0".into()));
        }
        let c = normalize_conductor(n) as u64;
        if c > cap {
            return Err(Error::ConductorCap { conductor: c, cap });
        }
        Ok(Self::root_of_unity(n, k))
    }

    /// Builds `Σ coeffs[j] ζ_n^j` from rational coordinates (any length).
    pub fn from_power_coefficients(n: u32, coeffs: &[BigRational]) -> Self {
        let mut acc = Cyclo::zero();
        for (j, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &(&Cyclo::from_rational(c) * &Cyclo::root_of_unity(n, j as i64));
            }
        }
        acc
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.num.len()
    }

    /// Power-basis coordinates at the stored (minimal) conductor.
    pub fn coefficients(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|x| BigRational::new(x.clone(), self.den.clone()))
            .collect()
    }

    /// Power-basis coordinates inside `Q(ζ_l)`; `l` must be a multiple of the conductor.
    pub fn coefficients_in(&self, l: u32) -> Vec<BigRational> {
        let l = normalize_conductor(l);
        assert!(l % self.n == 0, "conductor {} does not divide {}", self.n, l);
        let num = self.promote_raw(l);
        num.into_iter()
            .map(|x| BigRational::new(x, self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.n == 1 && self.num[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.n == 1 && self.num[0].is_one() && self.den.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.n == 1
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.n == 1 {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.n == 1 && self.den.is_one() {
            Some(self.num[0].clone())
        } else {
            None
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|v| v.to_i64())
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    fn promote_raw(&self, l: u32) -> Vec<BigInt> {
        if l == self.n {
            return self.num.clone();
        }
        let t = table(l);
        let step = (l / self.n) as usize;
        let mut out = vec![BigInt::zero(); t.phi];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &t.pow[(j * step) % l as usize];
            for (slot, &r) in out.iter_mut().zip(row) {
                if r != 0 {
                    *slot += c * r;
                }
            }
        }
        out
    }

    fn canonical(n: u32, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        if num.iter().all(|x| x.is_zero()) {
            return Cyclo::zero();
        }
        if den.is_negative() {
            den = -den;
            for x in num.iter_mut() {
                *x = -x.clone();
            }
        }
        let mut g = den.clone();
        for x in &num {
            if g.is_one() {
                break;
            }
            g = g.gcd(x);
        }
        if !g.is_one() {
            den /= &g;
            for x in num.iter_mut() {
                *x /= &g;
            }
        }
        let mut c = Cyclo { n, num, den };
        c.descend();
        c
    }

    /// Re-expresses the value in the smallest cyclotomic subfield containing it.
    fn descend(&mut self) {
        loop {
            if self.n == 1 {
                return;
            }
            if self.num[1..].iter().all(|x| x.is_zero()) {
                self.num.truncate(1);
                self.n = 1;
                return;
            }
            let mut moved = false;
            for p in prime_factors(self.n) {
                let m = normalize_conductor(self.n / p);
                if m == self.n || m == 1 {
                    continue;
                }
                if let Some(sub) = self.try_descend(m) {
                    self.num = sub;
                    self.n = m;
                    moved = true;
                    break;
                }
            }
            if !moved {
                return;
            }
        }
    }

    fn try_descend(&self, m: u32) -> Option<Vec<BigInt>> {
        let d = descent(self.n, m);
        let sel: Vec<&BigInt> = d.rows.iter().map(|&r| &self.num[r]).collect();
        let b: Vec<BigInt> = d
            .inv
            .iter()
            .map(|row| row.iter().zip(&sel).map(|(x, y)| x * *y).sum())
            .collect();
        for (i, row) in d.emb.iter().enumerate() {
            let mut acc = BigInt::zero();
            for (e, bj) in row.iter().zip(&b) {
                if *e != 0 {
                    acc += bj * *e;
                }
            }
            if acc != &self.num[i] * &d.denom {
                return None;
            }
        }
        // Elements of Z[ζ_n] lying in Q(ζ_m) lie in Z[ζ_m], so this division is exact.
        Some(b.into_iter().map(|x| x / &d.denom).collect())
    }

    fn binary(&self, other: &Self, op: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        let l = lcm_u32(self.n, other.n);
        let a = self.promote_raw(l);
        let b = other.promote_raw(l);
        let (num, den) = if self.den == other.den {
            (a.iter().zip(&b).map(|(x, y)| op(x, y)).collect(), self.den.clone())
        } else {
            let num = a
                .iter()
                .zip(&b)
                .map(|(x, y)| op(&(x * &other.den), &(y * &self.den)))
                .collect();
            (num, &self.den * &other.den)
        };
        Self::canonical(l, num, den)
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        Self::canonical(self.n, self.num.iter().map(|x| x * k).collect(), self.den.clone())
    }

    /// Galois conjugate `ζ ↦ ζ^k`; `k` must be coprime to the conductor.
    pub fn conjugate(&self, k: i64) -> Self {
        if self.n == 1 {
            return self.clone();
        }
        let k = k.rem_euclid(self.n as i64) as u32;
        assert_eq!(k.gcd(&self.n), 1, "exponent not coprime to conductor");
        let t = table(self.n);
        Self::canonical(self.n, raw_conjugate(&t, &self.num, k), self.den.clone())
    }

    /// Complex conjugate.
    pub fn complex_conjugate(&self) -> Self {
        self.conjugate(-1)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.n == 1 {
            return Ok(Self::canonical(1, vec![self.den.clone()], self.num[0].clone()));
        }
        let t = table(self.n);
        let mut prod: Vec<BigInt> = vec![BigInt::zero(); t.phi];
        prod[0] = BigInt::one();
        for k in 2..self.n {
            if k.gcd(&self.n) == 1 {
                let conj = raw_conjugate(&t, &self.num, k);
                prod = raw_mul(&t, &prod, &conj);
            }
        }
        let norm = raw_mul(&t, &self.num, &prod);
        debug_assert!(norm[1..].iter().all(|x| x.is_zero()));
        let norm = norm[0].clone();
        let num: Vec<BigInt> = prod.into_iter().map(|x| x * &self.den).collect();
        Ok(Self::canonical(self.n, num, norm))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        let mut base = self.clone();
        let mut acc = Cyclo::one();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative order if the value is a root of unity.
    pub fn root_of_unity_order(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        // Roots of unity in Q(ζ_n) all have order dividing lcm(2, n).
        let bound = lcm_u32(2, self.n);
        if !self.pow(bound as i64).is_one() {
            return None;
        }
        (1..=bound)
            .filter(|d| bound % d == 0)
            .find(|&d| self.pow(d as i64).is_one())
    }

    /// For a root of unity of order `m`, the exponent `k` with `self = ζ_m^k`.
    pub fn root_of_unity_log(&self) -> Option<(u32, u32)> {
        let m = self.root_of_unity_order()?;
        (0..m)
            .find(|&k| Cyclo::root_of_unity(m, k as i64) == *self)
            .map(|k| (m, k))
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let q = bigrat_to_string(&BigRational::new(c.clone(), self.den.clone()));
            if j == 0 {
                write!(f, "{}", q)?;
            } else {
                write!(f, "{}*zeta({})^{}", q, self.n, j)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Default for Cyclo {
    fn default() -> Self {
        Cyclo::zero()
    }
}

impl From<i64> for Cyclo {
    fn from(v: i64) -> Self {
        Cyclo::from_int(v)
    }
}

impl<'a> Add<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        self.binary(rhs, |x, y| x + y)
    }
}

impl<'a> Sub<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        if rhs.is_zero() {
            return self.clone();
        }
        self.binary(rhs, |x, y| x - y)
    }
}

impl<'a> Mul<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        if self.is_zero() || rhs.is_zero() {
            return Cyclo::zero();
        }
        if self.n == 1 {
            return Cyclo::canonical(
                rhs.n,
                rhs.num.iter().map(|x| x * &self.num[0]).collect(),
                &rhs.den * &self.den,
            );
        }
        if rhs.n == 1 {
            return rhs * self;
        }
        let l = lcm_u32(self.n, rhs.n);
        let t = table(l);
        let a = self.promote_raw(l);
        let b = rhs.promote_raw(l);
        Cyclo::canonical(l, raw_mul(&t, &a, &b), &self.den * &rhs.den)
    }
}

impl<'a> Neg for &'a Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            n: self.n,
            num: self.num.iter().map(|x| -x).collect(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: Cyclo) -> Cyclo {
                $tr::$m(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: &Cyclo) -> Cyclo {
                $tr::$m(&self, rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

impl FieldElement for Cyclo {
    fn is_zero(&self) -> bool {
        Cyclo::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Cyclo::zero()
    }
    fn one_like(&self) -> Self {
        Cyclo::one()
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Cyclo::from_int(v)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        Cyclo::inv(self).ok()
    }
    fn is_one(&self) -> bool {
        Cyclo::is_one(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> Cyclo {
        Cyclo::root_of_unity(n, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(15).len() - 1, 8);
        assert_eq!(euler_phi(120), 32);
    }

    #[test]
    fn roots_of_unity_basics() {
        assert_eq!(z(1, 0), Cyclo::one());
        assert_eq!(&z(3, 1) + &z(3, 2), Cyclo::from_int(-1));
        assert_eq!(z(12, 6), Cyclo::from_int(-1));
        assert_eq!(z(12, 4), z(3, 1));
        assert_eq!(z(6, 1), -&z(3, 2));
        assert_eq!(z(10, 3).conductor(), 5);
    }

    #[test]
    fn sqrt_minus_three() {
        let s = &z(3, 1) - &z(3, 2);
        assert_eq!(&s * &s, Cyclo::from_int(-3));
    }

    #[test]
    fn klein_r() {
        let r = &(&z(7, 1) + &z(7, 2)) + &z(7, 4);
        let two_r_plus_one = &(&r + &r) + &Cyclo::one();
        assert_eq!(&two_r_plus_one * &two_r_plus_one, Cyclo::from_int(-7));
    }

    #[test]
    fn division_and_zero() {
        let x = &z(5, 1) + &Cyclo::from_int(2);
        assert_eq!(x.checked_div(&x).unwrap(), Cyclo::one());
        assert_eq!(x.checked_div(&Cyclo::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn root_orders() {
        assert_eq!(z(12, 5).root_of_unity_order(), Some(12));
        assert_eq!(Cyclo::from_int(2).root_of_unity_order(), None);
        assert_eq!((-&z(3, 1)).root_of_unity_order(), Some(6));
        assert_eq!(Cyclo::from_int(-1).root_of_unity_order(), Some(2));
        assert_eq!(Cyclo::zero().root_of_unity_order(), None);
    }

    #[test]
    fn golden_ratio_descends() {
        // (1 + √5)/2 = 1 + ζ5 + ζ5⁴ lives in Q(ζ5); its square is r + 1.
        let r = &(&Cyclo::one() + &z(5, 1)) + &z(5, 4);
        assert_eq!(&r * &r, &r + &Cyclo::one());
        // i·i computed inside Q(ζ_20) descends to a rational.
        let i20 = z(20, 5);
        assert_eq!((&i20 * &i20).conductor(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(Cyclo::root_of_unity_checked(121, 1, DEFAULT_CONDUCTOR_CAP).is_err());
        assert!(Cyclo::root_of_unity_checked(242, 1, 121).is_ok());
        assert!(Cyclo::root_of_unity_checked(120, 1, DEFAULT_CONDUCTOR_CAP).is_ok());
    }

    #[test]
    fn display_literal() {
        let x = &Cyclo::from_ratio(1, 2) - &(&Cyclo::from_ratio(1, 2) * &z(3, 1));
        assert_eq!(alloc::format!("{}", x), "1/2 + -1/2*zeta(3)^1");
        assert_eq!(alloc::format!("{}", Cyclo::zero()), "0");
    }
}
