//! Recursive multivariate gcd: content/primitive-part split on the main
//! variable and a subresultant remainder sequence over the remaining ones.

use alloc::vec::Vec;

use crate::poly::{Monomial, Polynomial};

fn to_univariate(p: &Polynomial, v: usize) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::new();
    for (m, c) in p.terms() {
        let e = m.exp(v) as usize;
        while out.len() <= e {
            out.push(Polynomial::zero(p.nvars()));
        }
        out[e].add_term(m.with_exp(v, 0), c.clone());
    }
    out
}

fn from_univariate(coeffs: &[Polynomial], v: usize, nvars: usize) -> Polynomial {
    let mut out = Polynomial::zero(nvars);
    for (e, c) in coeffs.iter().enumerate() {
        for (m, x) in c.terms() {
            out.add_term(m.with_exp(v, e as u32), x.clone());
        }
    }
    out
}

fn trim(u: &mut Vec<Polynomial>) {
    while u.last().is_some_and(|c| c.is_zero()) {
        u.pop();
    }
}

fn deg(u: &[Polynomial]) -> usize {
    u.len() - 1
}

fn prem(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    let n = deg(b);
    let lb = b[n].clone();
    let mut r: Vec<Polynomial> = a.to_vec();
    let mut steps = (deg(a) + 1 - n) as u32;
    while !r.is_empty() && deg(&r) >= n {
        let k = deg(&r) - n;
        let lr = r[deg(&r)].clone();
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + k] = &r[i + k] - &(bc * &lr);
        }
        trim(&mut r);
        steps -= 1;
    }
    if steps > 0 {
        let f = lb.pow(steps);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    r
}

fn content(u: &[Polynomial], rest: &[usize], nvars: usize) -> Polynomial {
    let mut g = Polynomial::zero(nvars);
    for c in u {
        g = gcd(&g, c, rest);
        if g.is_constant() && !g.is_zero() {
            return Polynomial::one(nvars);
        }
    }
    g
}

fn divide_all(u: &[Polynomial], d: &Polynomial) -> Vec<Polynomial> {
    u.iter()
        .map(|c| c.div_exact(d).expect("content divides every coefficient"))
        .collect()
}

/// Gcd over the variables listed in `vars` (other variables never occur).
/// The result is defined up to a unit.
pub(crate) fn gcd(a: &Polynomial, b: &Polynomial, vars: &[usize]) -> Polynomial {
    let nvars = a.nvars();
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let present = |v: usize| {
        a.terms().chain(b.terms()).any(|(m, _): (&Monomial, _)| m.exp(v) > 0)
    };
    let Some(pos) = vars.iter().rposition(|&v| present(v)) else {
        return Polynomial::one(nvars);
    };
    let v = vars[pos];
    let rest: Vec<usize> = vars[..pos].to_vec();

    let ua = to_univariate(a, v);
    let ub = to_univariate(b, v);
    let ca = content(&ua, &rest, nvars);
    let cb = content(&ub, &rest, nvars);
    let gc = gcd(&ca, &cb, &rest);
    let mut pa = divide_all(&ua, &ca);
    let mut pb = divide_all(&ub, &cb);
    if deg(&pa) < deg(&pb) {
        core::mem::swap(&mut pa, &mut pb);
    }
    if deg(&pb) == 0 {
        return gc;
    }

    let mut g = Polynomial::one(nvars);
    let mut h = Polynomial::one(nvars);
    let last = loop {
        let delta = (deg(&pa) - deg(&pb)) as u32;
        let r = prem(&pa, &pb);
        if r.is_empty() {
            break pb;
        }
        if deg(&r) == 0 {
            return gc;
        }
        let divisor = &g * &h.pow(delta);
        pa = pb;
        pb = divide_all(&r, &divisor);
        g = pa[deg(&pa)].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant division is exact"),
        };
    };
    let c = content(&last, &rest, nvars);
    let pp = divide_all(&last, &c);
    &from_univariate(&pp, v, nvars) * &gc
}
