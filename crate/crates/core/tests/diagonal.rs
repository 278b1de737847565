use std::collections::BTreeSet;

use folsym_core::catalog::{build, CatalogName};
use folsym_core::diagonal::*;
use folsym_core::geom::AffineOneForm;
use folsym_core::{Cyclo, Matrix, Polynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn affine_form(name: CatalogName, d: u32) -> AffineOneForm {
    build(name, Some(d)).unwrap().affine_form
}

fn group_of(w: &AffineOneForm, enumerate: bool) -> DiagonalGroup {
    diagonal_group(&monomial_set(w).unwrap(), enumerate, 10_000).unwrap()
}

fn brute_force(w: &AffineOneForm, n: u32) -> BTreeSet<(Cyclo, Cyclo)> {
    let roots: Vec<Cyclo> = (0..n).map(|k| Cyclo::root_of_unity(n, k as i64)).collect();
    let mut out = BTreeSet::new();
    for a in &roots {
        for b in &roots {
            if verify_membership((a, b), w) {
                out.insert((a.clone(), b.clone()));
            }
        }
    }
    out
}

fn oracle_agrees(w: &AffineOneForm) -> u64 {
    let g = group_of(w, true);
    let order = g.order.unwrap();
    let snf: BTreeSet<_> = g.elements().into_iter().collect();
    assert_eq!(snf.len() as u64, order);
    assert_eq!(brute_force(w, g.exponent.unwrap() as u32), snf);
    order
}

#[test]
fn snf_matches_brute_force() {
    for d in 2..=6 {
        assert_eq!(oracle_agrees(&affine_form(CatalogName::Jouanolou, d)), (d * d + d + 1) as u64);
    }
    for d in 2..=7 {
        let n = ((d - 1) * (d - 1)) as u64;
        assert_eq!(oracle_agrees(&affine_form(CatalogName::Fermat, d)), n);
        assert_eq!(oracle_agrees(&affine_form(CatalogName::G, d)), n);
    }
    assert_eq!(oracle_agrees(&affine_form(CatalogName::S, 2)), 4);
}

fn random_form(rng: &mut ChaCha8Rng) -> AffineOneForm {
    let d = rng.gen_range(1..=4u32);
    let side = |rng: &mut ChaCha8Rng| {
        let terms: Vec<(i64, [u32; 3])> = (0..rng.gen_range(1..=3))
            .map(|_| {
                let i = rng.gen_range(0..=d);
                let j = rng.gen_range(0..=d - i);
                let c = rng.gen_range(1..=3) * if rng.gen() { 1 } else { -1 };
                (c, [i, j, 0])
            })
            .collect();
        Polynomial::from_int_terms(2, &terms)
    };
    loop {
        let (a, b) = (side(rng), side(rng));
        if let Ok(w) = AffineOneForm::new(a, b) {
            return w;
        }
    }
}

#[test]
fn random_forms_respect_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    while checked < 100 {
        let w = random_form(&mut rng);
        if !w.common_factor_free() {
            continue;
        }
        let m = monomial_set(&w).unwrap();
        let g = diagonal_group(&m, false, 10_000).unwrap();
        let Some(order) = g.order else { continue };
        assert!(bezout_bound_check(&m.stripped_binomials()).unwrap(), "{w:?}");
        let d = w.foliation_degree().0 as u64;
        assert!(order <= d * d + d + 1, "order {order} at degree {d}: {w:?}");
        if order <= 200 {
            oracle_agrees(&w);
        }
        checked += 1;
    }
}

fn support(p: &Polynomial) -> BTreeSet<(u32, u32)> {
    p.terms().map(|(m, _)| (m.exps()[0], m.exps()[1])).collect()
}

/// Some `(x, y) ↦ (μy, νx)` with `μ, ν` of order dividing `n` preserving `ω` up to scalar.
fn twisted_swap(w: &AffineOneForm, n: u32) -> Option<(Cyclo, Cyclo)> {
    for i in 0..n {
        for j in 0..n {
            let (mu, nu) = (Cyclo::root_of_unity(n, i as i64), Cyclo::root_of_unity(n, j as i64));
            let m = Matrix::from_rows(vec![vec![Cyclo::zero(), mu.clone()], vec![nu.clone(), Cyclo::zero()]]);
            if w.proportionality(&w.pullback(&m).unwrap()).is_some() {
                return Some((mu, nu));
            }
        }
    }
    None
}

#[test]
fn swap_symmetry_matches_supports() {
    let mut forms = vec![affine_form(CatalogName::S, 2)];
    for d in 2..=7 {
        forms.push(affine_form(CatalogName::Fermat, d));
        forms.push(affine_form(CatalogName::G, d));
    }
    for w in forms {
        assert!(twisted_swap(&w, 6).is_some());
        let a = support(w.a());
        let b: BTreeSet<_> = support(w.b()).into_iter().map(|(i, j)| (j, i)).collect();
        assert_eq!(a, b);
    }
    // Breaking the support symmetry removes every twisted swap.
    let w = affine_form(CatalogName::Jouanolou, 3);
    assert!(twisted_swap(&w, 12).is_none());
}
