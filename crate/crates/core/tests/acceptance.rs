//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on failure.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use hopf_designs::algebra::{Algebra, AlgebraElement};
use hopf_designs::cli::hopf_table;
use hopf_designs::construct::{collapse, lift, random_basepoints, LiftSpec};
use hopf_designs::designs::{
    catalog, fiber_design, verify_projective, verify_spherical, verify_spherical_gegenbauer,
    Method, WeightedDesign, DEFAULT_TOL,
};
use hopf_designs::geometry::{Fibration, Space};
use hopf_designs::moments::{fiber_average, MultiIndex, Polynomial};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn ok<T>(r: hopf_designs::error::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn hopf_c() -> Fibration {
    Fibration::hopf(Algebra::Complex)
}

fn poles_triangle() -> Outcome {
    let x = ok(lift(&LiftSpec::new(hopf_c(), ok(catalog("poles"))?, ok(catalog("polygon(3)"))?)))?;
    let mut expected = Vec::new();
    for m in 0..3 {
        let (s, c) = (2.0 * PI * m as f64 / 3.0).sin_cos();
        expected.push(vec![c, s, 0.0, 0.0]);
    }
    for m in 0..3 {
        let (s, c) = (2.0 * PI * m as f64 / 3.0).sin_cos();
        expected.push(vec![0.0, 0.0, c, s]);
    }
    ensure(x.len() == 6, format!("{} points", x.len()))?;
    for (p, q) in x.points().iter().zip(&expected) {
        let dist = p.iter().zip(q).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        ensure(dist < 1e-15, format!("point {p:?} differs from {q:?}"))?;
    }
    ensure(ok(verify_spherical(&x, 2, DEFAULT_TOL))?.passes(), "fails t=2")?;
    let r3 = ok(verify_spherical(&x, 3, DEFAULT_TOL))?;
    ensure(!r3.passes(), "passes t=3")?;
    Ok(format!("6 listed points, 2-design, first failure at degree {}", r3.first_failure().unwrap()))
}

fn octahedron_octagon() -> Outcome {
    let start = Instant::now();
    let x = ok(lift(&LiftSpec::new(hopf_c(), ok(catalog("octahedron"))?, ok(catalog("polygon(8)"))?)))?;
    ensure(x.len() == 48, format!("{} points", x.len()))?;
    ensure(ok(verify_spherical(&x, 7, DEFAULT_TOL))?.passes(), "fails t=7")?;
    let r8 = ok(verify_spherical(&x, 8, DEFAULT_TOL))?;
    ensure(!r8.passes(), "passes t=8")?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(5), format!("took {elapsed:?}"))?;
    Ok(format!("48 points, 7-design, fails at 8, {elapsed:.2?}"))
}

fn sorted(points: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut v = points.to_vec();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    v
}

fn cross_polytopes() -> Outcome {
    for n in [1, 2, 3, 7, 15] {
        let cp = ok(catalog(&format!("cross_polytope({n})")))?;
        ensure(ok(verify_spherical(&cp, 3, DEFAULT_TOL))?.passes(), format!("n={n} fails t=3"))?;
        ensure(!ok(verify_spherical(&cp, 4, DEFAULT_TOL))?.passes(), format!("n={n} passes t=4"))?;
        let basis: Vec<Vec<f64>> = (0..=n)
            .map(|i| (0..=n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect();
        let base = ok(WeightedDesign::uniform(ok(Space::projective(Algebra::Real, n))?, basis))?;
        let fib = ok(Fibration::projective(Algebra::Real, n))?;
        let x = ok(lift(&LiftSpec::new(fib, base, ok(catalog("cross_polytope(0)"))?)))?;
        ensure(sorted(x.points()) == sorted(cp.points()), format!("n={n}: lift differs"))?;
    }
    Ok("n in {1,2,3,7,15}: 3-designs failing at 4, equal to the real projective lift".into())
}

fn hopf_table_rows() -> Outcome {
    let rows = ok(hopf_table())?;
    let expected = [(0, 1, 1), (1, 1, 2), (2, 2, 6), (3, 2, 8), (4, 4, 20), (5, 4, 24), (6, 6, 42), (7, 6, 48)];
    for (t, y, x) in expected {
        let row = rows.iter().find(|r| r.t == t).ok_or(format!("row t={t} missing"))?;
        ensure(row.base_size == y && row.lifted_size == x, format!("t={t}: |Y|={}, |X|={}", row.base_size, row.lifted_size))?;
        ensure(row.verified, format!("t={t}: lift does not verify"))?;
    }
    Ok("|X| = 1,2,6,8,20,24,42,48 for t = 0..7, all verified".into())
}

fn iff_negative() -> Outcome {
    let poles = ok(catalog("poles"))?;
    for (fiber, t) in [("polygon(5)", 4), ("polygon(6)", 5)] {
        let x = ok(lift(&LiftSpec::new(hopf_c(), poles.clone(), ok(catalog(fiber))?)))?;
        let lifted: BTreeSet<usize> = ok(verify_spherical(&x, t, DEFAULT_TOL))?.failing_degrees().into_iter().collect();
        let base_fail = ok(verify_spherical(&poles, t / 2, DEFAULT_TOL))?.failing_degrees();
        // Even lifted degrees from twice the first base failure up to t fail.
        let predicted: BTreeSet<usize> = match base_fail.first() {
            Some(&f) => (2 * f..=t).step_by(2).collect(),
            None => BTreeSet::new(),
        };
        ensure(lifted == predicted, format!("{fiber}: lifted fails at {lifted:?}, base predicts {predicted:?}"))?;
    }
    Ok("lifted failures {4} = 2 x base failures {2} for V_5 (t=4) and V_6 (t=5)".into())
}

fn converse() -> Outcome {
    let d4 = ok(catalog("d4_roots"))?;
    let y = ok(collapse(&d4, hopf_c(), 5))?;
    ensure(y.len() == 4, format!("{} points", y.len()))?;
    ensure(ok(verify_spherical(&y, 2, DEFAULT_TOL))?.passes(), "not a 2-design")?;
    for i in 0..4 {
        for j in i + 1..4 {
            let ip: f64 = y.points()[i].iter().zip(&y.points()[j]).map(|(a, b)| a * b).sum();
            ensure((ip + 1.0 / 3.0).abs() < 1e-9, format!("<y{i}, y{j}> = {ip}"))?;
        }
    }
    ensure(y.weights().iter().all(|w| (w - 0.25).abs() < 1e-15), "weights are not 1/4")?;
    Ok("4 points, 2-design, pairwise inner products -1/3".into())
}

fn octonionic() -> Outcome {
    let start = Instant::now();
    let fib = Fibration::hopf(Algebra::Octonion);
    let base = ok(catalog("poles(8)"))?;
    let x = ok(lift(&LiftSpec::new(fib, base.clone(), ok(catalog("cross_polytope(7)"))?)))?;
    ensure(x.len() == 32 && x.space() == Space::sphere(15), "wrong size or space")?;
    ensure(ok(verify_spherical(&x, 3, DEFAULT_TOL))?.passes(), "fails t=3")?;
    let y = ok(collapse(&x, fib, 3))?;
    ensure(y.len() == 2, format!("collapse gives {} points", y.len()))?;
    ensure(sorted(y.points()) == sorted(base.points()), "collapse moved the base")?;
    ensure(y.weights().iter().all(|w| *w == 0.5), "weights are not 1/2")?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), format!("took {elapsed:?}"))?;
    Ok(format!("32 points on S^15 pass t=3, collapse gives the poles with weight 1/2, {elapsed:.2?}"))
}

fn basepoint_invariance() -> Outcome {
    let base = ok(catalog("octahedron"))?;
    let fiber = ok(catalog("polygon(8)"))?;
    let mut worst = 0.0f64;
    for seed in 0..20 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bps = ok(random_basepoints(&hopf_c(), &base, &mut rng))?;
        let x = ok(lift(&LiftSpec::new(hopf_c(), base.clone(), fiber.clone()).with_basepoints(bps)))?;
        let r = ok(verify_spherical(&x, 7, DEFAULT_TOL))?;
        ensure(r.passes(), format!("seed {seed} fails"))?;
        worst = r.per_degree_deviation.iter().copied().fold(worst, f64::max);
    }
    Ok(format!("20 seeded re-liftings pass t=7, worst deviation {worst:.1e}"))
}

fn catalog_names() -> Vec<String> {
    let mut names: Vec<String> = ["octahedron", "tetrahedron", "icosahedron", "pole_pair_s2", "d4_roots", "e8_roots"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    names.extend((1..=10).map(|n| format!("polygon({n})")));
    for m in 0..=8 {
        names.extend([format!("poles({m})"), format!("cross_polytope({m})"), format!("point({m})"), format!("simplex({m})")]);
    }
    names.push("cross_polytope(15)".into());
    names
}

fn projective_test_designs() -> Result<Vec<WeightedDesign>, String> {
    use hopf_designs::construct::sphere_to_projective_line;
    let mut out = Vec::new();
    for (algebra, n) in [(Algebra::Real, 2), (Algebra::Complex, 1), (Algebra::Complex, 2), (Algebra::Quaternion, 1), (Algebra::Quaternion, 2)] {
        let space = ok(Space::projective(algebra, n))?;
        let dim = space.ambient_dim();
        let basis = (0..n + 1)
            .map(|i| (0..dim).map(|j| if j == i * algebra.dim() { 1.0 } else { 0.0 }).collect())
            .collect();
        out.push(ok(WeightedDesign::uniform(space, basis))?);
    }
    for (name, algebra) in [
        ("polygon(3)", Algebra::Real),
        ("polygon(5)", Algebra::Real),
        ("octahedron", Algebra::Complex),
        ("tetrahedron", Algebra::Complex),
        ("icosahedron", Algebra::Complex),
        ("cross_polytope(4)", Algebra::Quaternion),
        ("simplex(4)", Algebra::Quaternion),
    ] {
        out.push(ok(sphere_to_projective_line(&ok(catalog(name))?, algebra))?);
    }
    Ok(out)
}

fn cross_validation() -> Outcome {
    let mut sphere_checks = 0;
    for name in catalog_names() {
        let d = ok(catalog(&name))?;
        for t in 0..=8 {
            let a = ok(verify_spherical(&d, t, DEFAULT_TOL))?.passes();
            let b = ok(verify_spherical_gegenbauer(&d, t, DEFAULT_TOL))?.passes();
            ensure(a == b, format!("{name} t={t}: moment {a}, gegenbauer {b}"))?;
            sphere_checks += 1;
        }
    }
    let mut projective_checks = 0;
    for d in projective_test_designs()? {
        for t in 0..=3 {
            let a = ok(verify_projective(&d, t, DEFAULT_TOL, Method::LiftOracle))?.passes();
            let b = ok(verify_projective(&d, t, DEFAULT_TOL, Method::InnerProduct))?.passes();
            ensure(a == b, format!("{} t={t}: lift-oracle {a}, innerproduct {b}", d.space()))?;
            projective_checks += 1;
        }
    }
    Ok(format!("{sphere_checks} sphere and {projective_checks} projective verdict pairs agree"))
}

fn random_polynomial(rng: &mut ChaCha8Rng, vars: usize, max_degree: u32) -> Polynomial {
    let terms = (0..12)
        .map(|_| {
            let deg = rng.gen_range(0..=max_degree);
            let mut exps = vec![0u32; vars];
            for _ in 0..deg {
                exps[rng.gen_range(0..vars)] += 1;
            }
            (MultiIndex::new(exps), rng.sample::<f64, _>(StandardNormal))
        })
        .collect();
    Polynomial::new(terms)
}

fn fiber_integration() -> Outcome {
    let fib = hopf_c();
    let quadrature = ok(fiber_design(1, 5))?;
    let base = ok(catalog("icosahedron"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let p = random_polynomial(&mut rng, 4, 5);
        let f = |x: &[f64]| p.evaluate(x);
        let mut base_average = 0.0;
        for (y, w) in base.points().iter().zip(base.weights()) {
            base_average += w * ok(fiber_average(&f, &fib, y, &quadrature))?;
        }
        let exact = ok(p.sphere_average(3))?;
        worst = worst.max((base_average - exact).abs());
    }
    ensure(worst < 1e-9, format!("worst error {worst:e}"))?;
    Ok(format!("50 random polynomials of degree <= 5 on S^3, worst error {worst:.1e}"))
}

fn algebra_suite() -> Outcome {
    let o = Algebra::Octonion;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut random = || {
        let c: Vec<f64> = (0..8).map(|_| rng.sample(StandardNormal)).collect();
        AlgebraElement::new(o, &c).unwrap()
    };
    let close = |a: &AlgebraElement, b: &AlgebraElement| {
        a.coeffs().iter().zip(b.coeffs()).all(|(x, y)| (x - y).abs() <= 1e-12 * (1.0 + x.abs()))
    };
    for _ in 0..1000 {
        let (a, b) = (random(), random());
        ensure(close(&((a * a) * b), &(a * (a * b))), "left alternativity")?;
        ensure(close(&((a * b) * b), &(a * (b * b))), "right alternativity")?;
        let lhs = (a * b).norm();
        ensure((lhs - a.norm() * b.norm()).abs() <= 1e-12 * lhs.max(1.0), "norm multiplicativity")?;
    }
    for i in 1..8 {
        for j in 1..8 {
            if i != j {
                let (ei, ej) = (AlgebraElement::basis(o, i).unwrap(), AlgebraElement::basis(o, j).unwrap());
                ensure(close(&(ei * ej), &-(ej * ei)), format!("e{i} e{j} does not anticommute"))?;
            }
        }
    }
    let e = |i| AlgebraElement::basis(o, i).unwrap();
    let left = (e(1) * e(2)) * e(4);
    let right = e(1) * (e(2) * e(4));
    ensure(close(&left, &-right) && !close(&left, &right), "no associator witness")?;
    Ok("alternativity and norm over 1000 samples, anticommutation, (e1e2)e4 = -e1(e2e4)".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("lift of the poles with triangle fibers", poles_triangle),
        ("octahedron with octagon fibers", octahedron_octagon),
        ("cross-polytopes from the real projective lift", cross_polytopes),
        ("Hopf table", hopf_table_rows),
        ("lift fails where the base fails", iff_negative),
        ("collapse of the D4 roots", converse),
        ("octonionic lift and collapse", octonionic),
        ("base-point invariance", basepoint_invariance),
        ("verifier cross-validation", cross_validation),
        ("fiber integration", fiber_integration),
        ("octonion algebra", algebra_suite),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{:.2?}]", i + 1, start.elapsed()),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {why} [{:.2?}]", i + 1, start.elapsed());
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
