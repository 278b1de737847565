//! Prime-field images of cyclotomic data.
//!
//! For a prime `p ≡ 1 (mod N)` the ring `Z[ζ_N]` maps onto `F_p` by sending
//! `ζ_N` to a primitive `N`-th root of unity `ω`. Linear algebra on the image
//! gives ranks that never exceed the exact ranks.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::cyclo::{prime_factors, Cyclo};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::linalg::Matrix;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    v: u64,
    p: u64,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

impl Fp {
    pub fn new(v: u64, p: u64) -> Self {
        Fp { v: v % p, p }
    }

    pub fn from_i64(v: i64, p: u64) -> Self {
        let r = v.rem_euclid(p as i64) as u64;
        Fp { v: r, p }
    }

    pub fn value(&self) -> u64 {
        self.v
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn pow(&self, e: u64) -> Self {
        Fp { v: pow_mod(self.v, e, self.p), p: self.p }
    }
}

impl core::fmt::Debug for Fp {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{} (mod {})", self.v, self.p)
    }
}

impl FieldElement for Fp {
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn zero_like(&self) -> Self {
        Fp { v: 0, p: self.p }
    }
    fn one_like(&self) -> Self {
        Fp { v: 1, p: self.p }
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Fp::from_i64(v, self.p)
    }
    fn add(&self, o: &Self) -> Self {
        let s = self.v + o.v;
        Fp { v: if s >= self.p { s - self.p } else { s }, p: self.p }
    }
    fn sub(&self, o: &Self) -> Self {
        Fp { v: if self.v >= o.v { self.v - o.v } else { self.v + self.p - o.v }, p: self.p }
    }
    fn mul(&self, o: &Self) -> Self {
        Fp { v: mul_mod(self.v, o.v, self.p), p: self.p }
    }
    fn neg(&self) -> Self {
        Fp { v: if self.v == 0 { 0 } else { self.p - self.v }, p: self.p }
    }
    fn inv(&self) -> Option<Self> {
        if self.v == 0 {
            None
        } else {
            Some(self.pow(self.p - 2))
        }
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        let s = (self.v as u128 + a.v as u128 * b.v as u128) % self.p as u128;
        self.v = s as u64;
    }
}

/// A reduction map `Z[ζ_N] → F_p`.
#[derive(Clone, Debug)]
pub struct Reduction {
    p: u64,
    n: u32,
    /// `ω^k` for `k = 0..N`.
    powers: Vec<u64>,
}

impl Reduction {
    /// Picks the first prime `p ≡ 1 (mod N)` above `2^61` coprime to
    /// `avoid`, together with a primitive `N`-th root of unity.
    pub fn new(n: u32, avoid: u64) -> Self {
        let n64 = n as u64;
        let start = (1u64 << 61) / n64 * n64 + 1;
        let mut p = start;
        loop {
            if is_prime_u64(p) && (avoid == 0 || avoid % p != 0) {
                break;
            }
            p += n64;
        }
        Self::with_prime(n, p).expect("p is congruent to 1 modulo n")
    }

    pub fn with_prime(n: u32, p: u64) -> Result<Self> {
        if (p - 1) % n as u64 != 0 || !is_prime_u64(p) {
            return Err(Error::Invalid(alloc::format!("{} is not a prime congruent to 1 mod {}", p, n)));
        }
        let qs = prime_factors(n);
        let e = (p - 1) / n as u64;
        let mut g = 2u64;
        let omega = loop {
            let w = pow_mod(g, e, p);
            if qs.iter().all(|&q| pow_mod(w, n as u64 / q as u64, p) != 1) {
                break w;
            }
            g += 1;
        };
        let mut powers = Vec::with_capacity(n as usize);
        let mut acc = 1u64;
        for _ in 0..n {
            powers.push(acc);
            acc = mul_mod(acc, omega, p);
        }
        Ok(Reduction { p, n, powers })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn fp(&self, v: i64) -> Fp {
        Fp::from_i64(v, self.p)
    }

    fn big_mod(&self, x: &BigInt) -> u64 {
        x.mod_floor(&BigInt::from(self.p)).to_u64().expect("reduced below p")
    }

    /// Image of `x`; fails if the conductor of `x` does not divide `N` or the
    /// denominator vanishes mod `p`.
    pub fn reduce(&self, x: &Cyclo) -> Result<Fp> {
        let m = x.conductor();
        if self.n % m != 0 {
            return Err(Error::Invalid(alloc::format!(
                "conductor {} does not divide the reduction conductor {}",
                m,
                self.n
            )));
        }
        let step = (self.n / m) as usize;
        let mut acc = Fp { v: 0, p: self.p };
        for (j, c) in x.numerators().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let w = Fp { v: self.powers[j * step % self.n as usize], p: self.p };
            acc = acc.add(&Fp { v: self.big_mod(c), p: self.p }.mul(&w));
        }
        let d = self.big_mod(x.denominator());
        let dinv = Fp { v: d, p: self.p }.inv().ok_or(Error::DivisionByZero)?;
        Ok(acc.mul(&dinv))
    }
}

/// Indices of a maximal set of rows independent modulo a large prime, or
/// `None` when some entry does not reduce.
pub fn independent_rows_mod_p(m: &Matrix<Cyclo>) -> Option<Vec<usize>> {
    let red = Reduction::new(m.conductor(), 0);
    let mut echelon: Vec<(usize, Vec<Fp>)> = Vec::new();
    let mut chosen = Vec::new();
    for i in 0..m.rows() {
        let mut row: Vec<Fp> = m.row(i).iter().map(|x| red.reduce(x)).collect::<Result<_>>().ok()?;
        for (c, e) in &echelon {
            let f = row[*c];
            if f.v != 0 {
                for (x, y) in row.iter_mut().zip(e) {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        let Some(c) = row.iter().position(|x| x.v != 0) else { continue };
        let inv = row[c].inv().expect("nonzero");
        let row: Vec<Fp> = row.iter().map(|x| x.mul(&inv)).collect();
        echelon.push((c, row));
        chosen.push(i);
        if chosen.len() == m.cols() {
            break;
        }
    }
    Some(chosen)
}

/// Exact null space, eliminating only rows found independent mod `p` and
/// checking the result against every row.
pub fn certified_kernel(m: &Matrix<Cyclo>) -> Vec<Vec<Cyclo>> {
    if let Some(rows) = independent_rows_mod_p(m) {
        if rows.len() < m.rows() {
            let sub = Matrix::from_rows(rows.iter().map(|&i| m.row(i).to_vec()).collect());
            let kernel = sub.kernel();
            if kernel.iter().all(|v| m.mul_vec(v).iter().all(Cyclo::is_zero)) {
                return kernel;
            }
        }
    }
    m.kernel()
}
