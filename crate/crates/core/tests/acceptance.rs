//! Acceptance suite: one PASS/FAIL line per criterion.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use folsym_core::catalog::*;
use folsym_core::constructors::*;
use folsym_core::cyclo::{lcm_u32, normalize_conductor};
use folsym_core::diagonal::*;
use folsym_core::geom::{foliation_from_pencil, AffineOneForm, HomogeneousVectorField};
use folsym_core::group::{Character, FiniteMatrixGroup, ProjectivePoint};
use folsym_core::molien::*;
use folsym_core::semi::{semi_invariant_fields, ReynoldsOperator, SemiInvariantSolver};
use folsym_core::{Cyclo, Matrix, Monomial, Polynomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

struct Pair {
    label: &'static str,
    group: FiniteMatrixGroup,
    chi: Character,
    closed_form: (&'static str, [u32; 3]),
    prefix: &'static [(usize, i64)],
    ring: IntegerPowerSeries,
    vector: IntegerPowerSeries,
    fields: IntegerPowerSeries,
}

fn pairs() -> Vec<Pair> {
    let hessian = hessian_cover().unwrap();
    let chars = hessian.linear_characters();
    let (ico, kle, val) = (icosahedral().unwrap(), klein().unwrap(), valentiner_cover().unwrap());
    let table: Vec<(&'static str, FiniteMatrixGroup, Character, &'static str, [u32; 3], &'static [(usize, i64)])> = vec![
        ("hessian χ0", hessian.clone(), chars[0].clone(), "t^19+t^16+t^13+t^10+t^7+t^4", [9, 12, 18],
            &[(4, 1), (7, 1), (10, 1), (13, 2), (16, 3)]),
        ("hessian χ1", hessian.clone(), chars[1].clone(), "t^31+t^28+t^25+t^22+t^19+t^16", [9, 12, 18], &[(16, 1)]),
        ("hessian χ2", hessian.clone(), chars[2].clone(), "-t^37+t^28+t^25+t^22+2*t^19+t^16+t^13", [9, 12, 18],
            &[(13, 1), (16, 1), (19, 2)]),
        ("icosahedral", ico.clone(), ico.trivial_character(),
            "-t^16+t^14+t^10+t^9+t^6+t^5", [10, 6, 2], &[(5, 1), (6, 1), (7, 1), (8, 1), (9, 2)]),
        ("klein", kle.clone(), kle.trivial_character(), "-t^22+t^18+t^16+t^11+t^9+t^8",
            [14, 6, 4], &[(8, 1), (9, 1), (11, 1), (12, 1), (13, 1)]),
        ("valentiner", val.clone(), val.trivial_character(),
            "-t^46+t^40+t^34+t^25+t^19+t^16", [30, 12, 6], &[(16, 1), (19, 1), (22, 1), (25, 2)]),
    ];
    table.into_iter()
        .map(|(label, group, chi, num, den, prefix)| {
            let t = DEFAULT_TRUNCATION;
            let ring = molien_ring(&group, &chi, t).unwrap();
            let vector = molien_vector_part(&group, &chi, t).unwrap();
            let fields = molien_fields(&group, &chi, t).unwrap();
            Pair { label, group, chi, closed_form: (num, den), prefix, ring, vector, fields }
        })
        .collect()
}

fn p2(terms: &[(i64, [u32; 2])]) -> Polynomial {
    Polynomial::from_int_terms(2, &terms.iter().map(|&(c, [i, j])| (c, [i, j, 0])).collect::<Vec<_>>())
}

fn p3(terms: &[(i64, [u32; 3])]) -> Polynomial {
    Polynomial::from_int_terms(3, terms)
}

fn group_orders() -> Outcome {
    let cover = hessian_cover().map_err(|e| e.to_string())?;
    let checks: Vec<(&str, usize, usize)> = vec![
        ("hessian cover", cover.order(), 648),
        ("hessian projective", cover.projectivize().order(), 216),
        ("E", subgroup_e().unwrap().order(), 36),
        ("F", subgroup_f().unwrap().order(), 72),
        ("icosahedral", icosahedral().unwrap().order(), 60),
        ("klein", klein().unwrap().order(), 168),
        ("valentiner cover", valentiner_cover().unwrap().order(), 1080),
        ("order-96 group", binary_octahedral_ext().unwrap().order(), 96),
        ("order-96 center", binary_octahedral_ext().unwrap().center().len(), 4),
        ("order-600 group", binary_icosahedral_ext().unwrap().order(), 600),
        ("order-600 center", binary_icosahedral_ext().unwrap().center().len(), 10),
    ];
    for (name, got, want) in checks {
        ensure!(got == want, "{name}: {got} != {want}");
    }
    for d in 2..=7u32 {
        let j = jouanolou_aut(d).unwrap().projectivize().order() as u32;
        ensure!(j == 3 * (d * d + d + 1), "jouanolou_aut({d}) = {j}");
        let f = fermat_aut(d).unwrap().projectivize().order() as u32;
        ensure!(f == 6 * (d - 1) * (d - 1), "fermat_aut({d}) = {f}");
    }
    Ok(())
}

fn molien_closed_forms(pairs: &[Pair]) -> Outcome {
    for p in pairs {
        let num = parse_integer_polynomial(p.closed_form.0).map_err(|e| e.to_string())?;
        let expected = expand_closed_form(&num, &p.closed_form.1, DEFAULT_TRUNCATION);
        ensure!(p.fields == expected, "{}: {} != {}", p.label, p.fields, expected);
        let last = p.prefix.last().unwrap().0;
        for k in 0..=last {
            let want = p.prefix.iter().find(|(e, _)| *e == k).map_or(0, |(_, c)| *c);
            ensure!(*p.fields.coefficient(k) == BigInt::from(want), "{}: coefficient of t^{k}", p.label);
        }
    }
    Ok(())
}

fn exact_sequence(pairs: &[Pair]) -> Outcome {
    for p in pairs {
        let rebuilt = p.vector.minus_shifted(&p.ring).truncate(DEFAULT_TRUNCATION);
        ensure!(p.fields == rebuilt, "{}: fields != vector − t·ring", p.label);
    }
    Ok(())
}

fn hessian_characters() -> Outcome {
    let g = hessian_cover().unwrap();
    let chars = g.linear_characters();
    ensure!(chars.len() == 3, "{} Hessian characters", chars.len());
    let r1 = g.generator_indices()[0];
    let values: BTreeSet<Cyclo> = chars.iter().map(|c| c.value(r1).clone()).collect();
    let l = Cyclo::root_of_unity(3, 1);
    ensure!(values == BTreeSet::from([Cyclo::one(), l.clone(), l.pow(2)]), "χ(R₁) values {values:?}");
    for (name, g) in [("klein", klein()), ("icosahedral", icosahedral()), ("valentiner", valentiner_cover())] {
        let n = g.unwrap().linear_characters().len();
        ensure!(n == 1, "{name} has {n} characters");
    }
    Ok(())
}

fn oracle_order(w: &AffineOneForm) -> Result<u64, String> {
    let g = diagonal_group(&monomial_set(w).unwrap(), true, 10_000).map_err(|e| e.to_string())?;
    let order = g.order.ok_or("infinite diagonal group")?;
    if order <= 200 {
        let n = g.exponent.unwrap() as u32;
        let roots: Vec<Cyclo> = (0..n).map(|k| Cyclo::root_of_unity(n, k as i64)).collect();
        let brute: BTreeSet<(Cyclo, Cyclo)> = roots
            .iter()
            .flat_map(|a| roots.iter().map(move |b| (a.clone(), b.clone())))
            .filter(|(a, b)| verify_membership((a, b), w))
            .collect();
        let snf: BTreeSet<_> = g.elements().into_iter().collect();
        ensure!(brute == snf, "SNF and brute force disagree on {w:?}");
    }
    Ok(order)
}

fn diagonal_counting() -> Outcome {
    let form = |n, d| build(n, Some(d)).unwrap().affine_form;
    for d in 2..=6u32 {
        let o = oracle_order(&form(CatalogName::Jouanolou, d))?;
        ensure!(o == (d * d + d + 1) as u64, "J_{d}: {o}");
    }
    for d in 2..=7u32 {
        for n in [CatalogName::Fermat, CatalogName::G] {
            let o = oracle_order(&form(n, d))?;
            ensure!(o == ((d - 1) * (d - 1)) as u64, "{}_{d}: {o}", n.symbol());
        }
    }
    let o = oracle_order(&form(CatalogName::S, 2))?;
    ensure!(o == 4, "S: {o}");
    Ok(())
}

fn random_affine_form(rng: &mut ChaCha8Rng) -> Option<AffineOneForm> {
    let d = rng.gen_range(1..=4u32);
    let side = |rng: &mut ChaCha8Rng| {
        let terms: Vec<(i64, [u32; 3])> = (0..rng.gen_range(1..=3))
            .map(|_| {
                let i = rng.gen_range(0..=d);
                let j = rng.gen_range(0..=d - i);
                (rng.gen_range(1..=3) * if rng.gen() { 1 } else { -1 }, [i, j, 0])
            })
            .collect();
        Polynomial::from_int_terms(2, &terms)
    };
    let (a, b) = (side(rng), side(rng));
    AffineOneForm::new(a, b).ok().filter(|w| w.common_factor_free())
}

fn bezout() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(54);
    let mut checked = 0;
    while checked < 100 {
        let Some(w) = random_affine_form(&mut rng) else { continue };
        let m = monomial_set(&w).unwrap();
        let Some(order) = diagonal_group(&m, false, 10_000).unwrap().order else { continue };
        ensure!(bezout_bound_check(&m.stripped_binomials()).unwrap(), "Bézout bound fails for {w:?}");
        let d = w.foliation_degree().0 as u64;
        ensure!(order <= d * d + d + 1, "order {order} exceeds d²+d+1 at d = {d}");
        checked += 1;
    }
    Ok(())
}

fn semi_invariants(pairs: &[Pair]) -> Outcome {
    let hessian = &pairs[0];
    let b4 = semi_invariant_fields(&hessian.group, &hessian.chi, 4).map_err(|e| e.to_string())?;
    ensure!(b4.dimension() == 1, "Hessian degree 4 dimension {}", b4.dimension());
    let pencil = foliation_from_pencil(&p3(&[(1, [3, 0, 0]), (1, [0, 3, 0]), (1, [0, 0, 3])]), &p3(&[(1, [1, 1, 1])]))
        .and_then(|f| f.field())
        .map_err(|e| e.to_string())?;
    ensure!(b4.basis[0].same_foliation(&pencil).unwrap().is_some(), "degree 4 field is not the pencil");
    let b7 = semi_invariant_fields(&hessian.group, &hessian.chi, 7).map_err(|e| e.to_string())?;
    ensure!(b7.dimension() == 1, "Hessian degree 7 dimension {}", b7.dimension());
    let h7 = build(CatalogName::H7, None).unwrap().affine_form.to_projective().field().unwrap();
    ensure!(b7.basis[0].same_foliation(&h7).unwrap().is_some(), "degree 7 field is not H₇");
    for p in pairs {
        let solver = SemiInvariantSolver::new(&p.group, &p.chi);
        for d in 0..=16u32 {
            let expected = usize::try_from(p.fields.coefficient(d as usize)).unwrap();
            let got = solver.fields(d, expected).map_err(|e| format!("{}: {e}", p.label))?;
            ensure!(got.dimension() == expected, "{} degree {d}", p.label);
        }
    }
    Ok(())
}

fn catalog() -> Outcome {
    for n in CatalogName::ALL {
        let degrees: Vec<u32> = match n.fixed_degree() {
            Some(d) => vec![d],
            None => (2..=7).collect(),
        };
        for d in degrees {
            let e = build(n, Some(d)).map_err(|e| e.to_string())?;
            ensure!(verify_generators(&e).passed(), "{} d={d}: generators", n.symbol());
            let r = verify_order(&e).map_err(|e| e.to_string())?;
            ensure!(r.passed(), "{} d={d}: order {:?}", n.symbol(), r);
        }
    }
    for (d, f) in [(2, 24), (3, 39), (4, 216)] {
        ensure!(bound_f(d).unwrap() == f, "f({d})");
    }
    for d in 5..=12u32 {
        ensure!(bound_f(d).unwrap() == 6 * (d as u64 - 1).pow(2), "f({d})");
    }
    for d in 2..=12u32 {
        let attained = attaining_bound(d).map_err(|e| e.to_string())?;
        for n in listed_extremal(d) {
            ensure!(attained.contains(&n), "{} does not attain f({d})", n.symbol());
            let e = build(n, Some(d)).unwrap();
            ensure!(e.expected_aut_order == bound_f(d).unwrap(), "{} at {d}", n.symbol());
        }
    }
    Ok(())
}

fn orbits() -> Outcome {
    let f = subgroup_f().unwrap();
    let o12 = f.orbit(&ProjectivePoint::from_ints(&[0, 0, 1]).unwrap()).len();
    ensure!(o12 == 12, "orbit of [0:0:1] has {o12} points");
    let o9 = f.orbit(&ProjectivePoint::from_ints(&[0, 1, -1]).unwrap()).len();
    ensure!(o9 == 9, "orbit of [0:1:-1] has {o9} points");
    let e = subgroup_e().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(36);
    let mut sampled = 0;
    while sampled < 20 {
        let c: Vec<i64> = (0..3).map(|_| rng.gen_range(-10..=10)).collect();
        let Ok(p) = ProjectivePoint::from_ints(&c) else { continue };
        let n = e.orbit(&p).len();
        ensure!(n >= 6, "E-orbit of {c:?} has {n} points");
        sampled += 1;
    }
    Ok(())
}

fn polyhedral() -> Outcome {
    let r5 = verify_polyhedral_normal_form(&build(CatalogName::P5, None).unwrap()).map_err(|e| e.to_string())?;
    ensure!(r5.passed() && r5.recovered == p2(&[(1, [5, 1]), (-1, [1, 5])]), "P₅: {r5:?}");
    let r11 = verify_polyhedral_normal_form(&build(CatalogName::P11, None).unwrap()).map_err(|e| e.to_string())?;
    ensure!(
        r11.passed() && r11.recovered == p2(&[(1, [11, 1]), (11, [6, 6]), (-1, [1, 11])]),
        "P₁₁: {r11:?}"
    );
    Ok(())
}

fn random_cyclo(rng: &mut ChaCha8Rng, n: u32) -> Cyclo {
    let divisors: Vec<u32> = (1..=n).filter(|k| n % k == 0).collect();
    let m = divisors[rng.gen_range(0..divisors.len())];
    let den = rng.gen_range(1..=5);
    (0..m).fold(Cyclo::zero(), |acc, j| {
        &acc + &(&Cyclo::from_ratio(rng.gen_range(-6..=6), den) * &Cyclo::root_of_unity(m, j as i64))
    })
}

fn random_field(rng: &mut ChaCha8Rng, d: u32) -> HomogeneousVectorField {
    let n = 3 * (d as usize + 1) * (d as usize + 2) / 2;
    let c: Vec<Cyclo> = (0..n).map(|_| Cyclo::from_int(rng.gen_range(-3..=3))).collect();
    HomogeneousVectorField::from_coefficient_vector(d, &c)
}

fn random_homogeneous2(rng: &mut ChaCha8Rng, d: u32) -> Polynomial {
    Polynomial::from_terms(2, (0..=d).map(|j| (Monomial::xy(d - j, j), Cyclo::from_int(rng.gen_range(-4..=4)))))
}

fn property_suites(pairs: &[Pair]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let n = rng.gen_range(1..=24);
        let (a, b, c) = (random_cyclo(&mut rng, n), random_cyclo(&mut rng, n), random_cyclo(&mut rng, n));
        ensure!(&(&a * &b) * &c == &a * &(&b * &c), "associativity");
        ensure!(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "distributivity");
        ensure!(a.is_zero() || (&a * &a.inv().unwrap()).is_one(), "inverse of {a}");
        let l = normalize_conductor(lcm_u32(a.conductor(), b.conductor()) * 2);
        ensure!(Cyclo::from_power_coefficients(l, &a.coefficients_in(l)) == a, "canonical form of {a}");
        let (ca, cb) = (a.coefficients_in(l), b.coefficients_in(l));
        let mut conv = vec![BigRational::zero(); l as usize];
        for (i, x) in ca.iter().enumerate() {
            for (j, y) in cb.iter().enumerate() {
                conv[(i + j) % l as usize] += x * y;
            }
        }
        ensure!(Cyclo::from_power_coefficients(l, &conv) == &a * &b, "promoted product of {a} and {b}");
    }
    let (x, y) = (Polynomial::var(2, 0), Polynomial::var(2, 1));
    for m in 0..=6u32 {
        let p = random_homogeneous2(&mut rng, m);
        let euler = &(&x * &p.derivative(0)) + &(&y * &p.derivative(1));
        ensure!(euler == p.scale(&Cyclo::from_int(m as i64)), "Euler relation at degree {m}");
        if m == 0 {
            continue;
        }
        let Ok(w) = AffineOneForm::new(random_homogeneous2(&mut rng, m), random_homogeneous2(&mut rng, m)) else {
            continue;
        };
        let (pp, q) = w.decompose_homogeneous(m).map_err(|e| e.to_string())?;
        ensure!(&pp.derivative(0) - &(&q * &y) == *w.a(), "dx part at degree {m}");
        ensure!(&pp.derivative(1) + &(&q * &x) == *w.b(), "dy part at degree {m}");
    }
    let mats: Vec<Matrix<Cyclo>> = [hessian_t(), hessian_u(), klein_generators()[0].clone(), icosahedral_generators()[1].clone()].to_vec();
    for d in 0..=3 {
        let v = random_field(&mut rng, d);
        for phi in &mats {
            for psi in &mats {
                let lhs = v.pushforward(&phi.mul(psi)).unwrap();
                let rhs = v.pushforward(psi).unwrap().pushforward(phi).unwrap();
                ensure!(lhs == rhs, "pushforward action law at degree {d}");
            }
        }
        let w = v.make_divergence_free();
        ensure!(w.divergence().is_zero(), "divergence after normalization");
        ensure!(v.form().is_zero() || v.same_foliation(&w).unwrap().is_some(), "normalization changed the foliation");
    }
    let g = &pairs[0].group;
    for chi in g.linear_characters() {
        for d in 1..=4 {
            let r = ReynoldsOperator::new(g, &chi, d).map_err(|e| e.to_string())?;
            let once = r.apply(&random_field(&mut rng, d)).unwrap();
            ensure!(r.apply(&once).unwrap() == once, "Reynolds idempotence at degree {d}");
        }
    }
    for p in pairs {
        for s in [&p.ring, &p.vector, &p.fields] {
            ensure!(s.is_non_negative(), "{}: negative coefficient", p.label);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    std::panic::set_hook(Box::new(|_| {}));
    let start = Instant::now();
    let series = catch_unwind(pairs);
    let mut failures = 0;
    let mut report = |n: usize, name: &str, outcome: std::thread::Result<Outcome>| {
        let verdict = match outcome {
            Ok(Ok(())) => "PASS".to_string(),
            Ok(Err(msg)) => format!("FAIL ({msg})"),
            Err(_) => "FAIL (panicked)".to_string(),
        };
        if !verdict.starts_with("PASS") {
            failures += 1;
        }
        println!("criterion {n:>2} {name:<30} {verdict}");
    };
    let Ok(pairs) = series else {
        println!("series computation panicked");
        return ExitCode::FAILURE;
    };
    report(1, "group orders", catch_unwind(group_orders));
    report(2, "molien closed forms", catch_unwind(AssertUnwindSafe(|| molien_closed_forms(&pairs))));
    report(3, "exact-sequence identity", catch_unwind(AssertUnwindSafe(|| exact_sequence(&pairs))));
    report(4, "hessian characters", catch_unwind(hessian_characters));
    report(5, "diagonal counting", catch_unwind(diagonal_counting));
    report(6, "bezout property", catch_unwind(bezout));
    report(7, "semi-invariant reconstruction", catch_unwind(AssertUnwindSafe(|| semi_invariants(&pairs))));
    report(8, "catalog verification", catch_unwind(catalog));
    report(9, "orbit facts", catch_unwind(orbits));
    report(10, "polyhedral structure", catch_unwind(polyhedral));
    report(11, "property suites", catch_unwind(AssertUnwindSafe(|| property_suites(&pairs))));
    println!("{} of 11 criteria passed in {:.1}s", 11 - failures, start.elapsed().as_secs_f64());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
