use folsym_core::catalog::*;
use folsym_core::Polynomial;

fn p2(terms: &[(i64, [u32; 2])]) -> Polynomial {
    Polynomial::from_int_terms(2, &terms.iter().map(|&(c, [i, j])| (c, [i, j, 0])).collect::<Vec<_>>())
}

fn instances() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for n in CatalogName::ALL {
        match n.fixed_degree() {
            Some(_) => out.push(build(n, None).unwrap()),
            None => out.extend((2..=7).map(|d| build(n, Some(d)).unwrap())),
        }
    }
    out
}

#[test]
fn every_entry_verifies() {
    for e in instances() {
        let gens = verify_generators(&e);
        assert!(gens.passed(), "{} d={}: {:?}", e.name.symbol(), e.degree, gens);
        let order = verify_order(&e).unwrap();
        assert!(order.passed(), "{} d={}: {:?}", e.name.symbol(), e.degree, order);
    }
}

#[test]
fn table_orders() {
    let order = |n, d| verify_order(&build(n, d).unwrap()).unwrap();
    assert_eq!(order(CatalogName::Jouanolou, Some(2)).computed, 21);
    assert_eq!(order(CatalogName::G, Some(6)).computed, 150);
    let p5 = order(CatalogName::P5, None);
    assert_eq!((p5.computed, p5.center), (96, Some((4, 4))));
    let p11 = order(CatalogName::P11, None);
    assert_eq!((p11.computed, p11.center), (600, Some((10, 10))));
    assert_eq!(order(CatalogName::H7, None).computed, 216);
    assert_eq!(order(CatalogName::S, None).computed, 24);
}

#[test]
fn hypothesis_window() {
    // Rows of the table: J_d for all d, F_d and G_d for d ≥ 5, the fixed entries at their degree.
    for e in instances() {
        if matches!(e.name, CatalogName::Fermat | CatalogName::G) && e.degree < 5 {
            continue;
        }
        let d = e.degree as u64;
        assert!(3 * (d * d + d + 1) <= e.expected_aut_order);
        assert!(e.expected_aut_order <= bound_f(e.degree).unwrap());
    }
}

#[test]
fn extremal_entries() {
    for d in 2..=12u32 {
        let attained = attaining_bound(d).unwrap();
        for n in listed_extremal(d) {
            assert!(attained.contains(&n), "{:?} at {}", n, d);
        }
        let extra: Vec<_> = attained.iter().filter(|n| !listed_extremal(d).contains(n)).copied().collect();
        match d {
            7 => assert_eq!(extra, vec![CatalogName::H7]),
            11 => assert_eq!(extra, vec![CatalogName::P11]),
            _ => assert!(extra.is_empty(), "{:?} at {}", extra, d),
        }
    }
}

#[test]
fn polyhedral_normal_forms() {
    let r5 = verify_polyhedral_normal_form(&build(CatalogName::P5, None).unwrap()).unwrap();
    assert!(r5.passed());
    assert_eq!(r5.recovered, p2(&[(1, [5, 1]), (-1, [1, 5])]));
    let r11 = verify_polyhedral_normal_form(&build(CatalogName::P11, None).unwrap()).unwrap();
    assert!(r11.passed());
    assert_eq!(r11.recovered, p2(&[(1, [11, 1]), (11, [6, 6]), (-1, [1, 11])]));
    assert!(verify_polyhedral_normal_form(&build(CatalogName::Fermat, Some(5)).unwrap()).is_err());
}

#[test]
fn fermat_and_g_normal_forms() {
    let checks = verify_fermat_normal_forms(5).unwrap();
    assert_eq!(checks.len(), 3);
    assert!(checks.iter().all(|c| c.fermat && c.g));
}

#[test]
fn first_integrals() {
    let d = 5;
    let g = build(CatalogName::G, Some(d)).unwrap();
    let (n, den) = g_first_integral(d);
    assert!(annihilates_quotient(&g.affine_form, &n, &den));
    // (x^{1−d} − 1)/(y^{1−d} − 1) = y^{d−1}(1 − x^{d−1}) / (x^{d−1}(1 − y^{d−1})).
    let f = build(CatalogName::Fermat, Some(d)).unwrap();
    let e = d - 1;
    let num = &p2(&[(1, [0, e])]) * &p2(&[(1, [0, 0]), (-1, [e, 0])]);
    let den = &p2(&[(1, [e, 0])]) * &p2(&[(1, [0, 0]), (-1, [0, e])]);
    assert!(annihilates_quotient(&f.affine_form, &num, &den));
    let s = build(CatalogName::S, None).unwrap();
    assert!(annihilates_quotient(&s.affine_form, &p2(&[(1, [0, 0]), (-1, [2, 0])]), &p2(&[(1, [0, 0]), (-1, [0, 2])])));
    assert!(!annihilates_quotient(&g.affine_form, &num, &den));
}

#[test]
fn affine_forms_define_the_fields() {
    for e in instances() {
        if e.name.acts_on_affine_plane() {
            continue;
        }
        let v = e.field().unwrap();
        let w = e.affine_form.to_projective().field().unwrap();
        assert!(v.same_foliation(&w).unwrap().is_some(), "{} d={}", e.name.symbol(), e.degree);
        assert_eq!(v.degree(), e.degree);
    }
}

#[test]
fn jouanolou_extends_its_diagonal_group_by_three() {
    for d in 2..=7u32 {
        let r = verify_order(&build(CatalogName::Jouanolou, Some(d)).unwrap()).unwrap();
        let diag = r.diagonal.unwrap().computed.unwrap();
        assert_eq!(diag, (d * d + d + 1) as u64);
        assert_eq!(r.computed, 3 * diag);
    }
}
