//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; exits nonzero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use elltrace::finite::{self, FiniteField};
use elltrace::linalg::trailing_zeros;
use elltrace::oracle::{
    random_curve, random_point, GeneratorPlan, InstanceGenerator, PointKind,
};
use elltrace::selftest::{run_selftest, SelftestOptions};
use elltrace::{
    ell_trace, kernel_echelon, CurvePoint, Extension, Field, Matrix, Poly, PrimeField,
    Rationals, TraceProblem, WeierstrassCurve,
};

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: f64) -> std::result::Result<(), String> {
    ensure(elapsed.as_secs_f64() < limit, || {
        format!("took {:.3} s, limit {limit} s", elapsed.as_secs_f64())
    })
}

/// `a = c * b` for some nonzero scalar `c`.
fn proportional<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let Some(j) = b.iter().rposition(|v| !k.is_zero(v)) else {
        return a.iter().all(|v| k.is_zero(v));
    };
    let Ok(c) = k.div(&a[j], &b[j]) else {
        return false;
    };
    !k.is_zero(&c) && a.iter().zip(b).all(|(x, y)| *x == k.mul(&c, y))
}

fn padded<F: Field>(k: &F, p: &Poly<F>, n: usize) -> Vec<F::Elem> {
    (0..n).map(|i| p.coeff(k, i)).collect()
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn criterion1() -> Check {
    let start = Instant::now();
    let k = Rationals;
    let w = ell_trace(&example1(), true).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let r = w.sep.as_ref().ok_or("no record")?;
    let z = r.kernel.as_ref().ok_or("no kernel")?;
    let printed = [-22, 5, -4, 8].map(|v| k.from_i64(v));
    ensure(proportional(&k, z, &printed), || format!("kernel {z:?}"))?;
    // scale by which this kernel differs from the printed one
    let c = k.div(&printed[3], &z[3]).unwrap();
    let u = r.u.as_ref().unwrap().scale(&k, &c);
    let v = r.v.as_ref().unwrap().scale(&k, &c);
    ensure(u == Poly::from_i64s(&k, &[-22, 5, 8]), || format!("U = {u:?}"))?;
    ensure(v == Poly::from_i64s(&k, &[-4]), || format!("V = {v:?}"))?;
    let x = Poly::from_coeffs(&k, vec![q(-61, 32), q(57, 64), q(3, 1), q(1, 1)]);
    ensure(r.minpoly.as_ref() == Some(&x), || "X differs".into())?;
    let c2 = k.square(&c);
    let rr = r.r.as_ref().unwrap().scale(&k, &c2);
    ensure(
        rr == Poly::from_i64s(&k, &[-244, 236, 327, -64, -64]),
        || format!("R = {rr:?}"),
    )?;
    let s = r.s.as_ref().unwrap().scale(&k, &c2);
    ensure(s == Poly::from_i64s(&k, &[128, -64]), || format!("S = {s:?}"))?;
    let two_five = CurvePoint::Affine {
        x: k.from_i64(2),
        y: k.from_i64(5),
    };
    ensure(r.q.as_ref() == Some(&two_five), || "Q differs".into())?;
    ensure(r.d_p == Some(3), || format!("d_P = {:?}", r.d_p))?;
    let expected = CurvePoint::Affine {
        x: k.from_i64(2),
        y: k.from_i64(-5),
    };
    ensure(w.result == expected, || format!("trace {:?}", w.result))?;
    within(elapsed, 0.1)?;
    Ok(format!("trace (2, -5), U V X R S Q d_P match ({:.4} s)", elapsed.as_secs_f64()))
}

fn criterion2() -> Check {
    let start = Instant::now();
    let k = PrimeField::new(3).unwrap();
    let w = ell_trace(&example2(), true).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let r = w.sep.as_ref().ok_or("no record")?;
    let dim = kernel_echelon(&k, r.matrix.as_ref().unwrap()).cols();
    ensure(dim == 4, || format!("kernel dimension {dim}"))?;
    let u = r.u.as_ref().unwrap();
    let v = r.v.as_ref().unwrap();
    // f_P = U + V y proportional to x^2 + 2y
    let mut f = padded(&k, u, 3);
    f.extend(padded(&k, v, 1));
    ensure(proportional(&k, &f, &[0, 0, 1, 2]), || format!("f_P = {f:?}"))?;
    let x = Poly::from_i64s(&k, &[2, 1, 1, 1]);
    ensure(r.minpoly.as_ref() == Some(&x), || "X differs".into())?;
    let expected_r = Poly::from_i64s(&k, &[2, 2]).mul(&k, &x);
    let rr = r.r.as_ref().unwrap();
    ensure(
        proportional(&k, &padded(&k, rr, 5), &padded(&k, &expected_r, 5)),
        || format!("R = {rr:?}"),
    )?;
    ensure(r.d_p == Some(3), || format!("d_P = {:?}", r.d_p))?;
    ensure(r.multiplier == Some(-2), || format!("scalar {:?}", r.multiplier))?;
    ensure(w.result == CurvePoint::Affine { x: 2, y: 1 }, || {
        format!("trace {:?}", w.result)
    })?;
    within(elapsed, 0.1)?;
    Ok(format!(
        "trace (2, 1), dim ker M = 4, f_P ~ 2y + x^2, R = 2(x+1)X, scalar -2 ({:.4} s)",
        elapsed.as_secs_f64()
    ))
}

fn criterion3() -> Check {
    let start = Instant::now();
    let k = f2l();
    let problem = example3();
    let w = ell_trace(&problem, true).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let r = w.sep.as_ref().ok_or("no record")?;
    let lam = |s: &str| elltrace::parse::parse_scalar(&k, s).unwrap();
    let s_expected = Poly::from_coeffs(&k, vec![lam("l^4 + l^3 + l"), lam("l^4 + 1")]);
    let s = r.s.as_ref().unwrap();
    ensure(
        proportional(&k, &padded(&k, s, 2), &padded(&k, &s_expected, 2)),
        || format!("R/X = {s:?}"),
    )?;
    ensure(r.d_p == Some(5), || format!("d_P = {:?}", r.d_p))?;
    let expected = CurvePoint::Affine {
        x: lam("(l^4 + l^3 + l)/(l^4 + 1)"),
        y: lam("l^2/(l^6 + l^4 + l^2 + 1)"),
    };
    ensure(w.result == expected, || {
        problem.curve().format_point(&w.result)
    })?;
    within(elapsed, 0.5)?;
    Ok(format!(
        "trace {}, d_P = 5 ({:.4} s)",
        problem.curve().format_point(&w.result),
        elapsed.as_secs_f64()
    ))
}

fn criterion4() -> Check {
    let start = Instant::now();
    let k = f2l();
    let problem = example4();
    let w = ell_trace(&problem, true).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let r = w.insep.as_ref().ok_or("no inseparable record")?;
    let lam = |s: &str| elltrace::parse::parse_scalar(&k, s).unwrap();
    ensure(r.d == 1, || format!("d = {}", r.d))?;
    let s = elltrace::parse::parse_poly(&k, "t^2 + t + l^4 + l^3").unwrap();
    ensure(r.s == s, || format!("S = {:?}", r.s))?;
    let big = problem.curve_over_extension();
    let q2 = big.mul(2, &problem.point()).unwrap();
    let q_expected = CurvePoint::Affine {
        x: Poly::constant(&k, lam("l^4 + l^3 + l^2 + l + 1")),
        y: elltrace::parse::parse_poly(&k, "(l^4 + l^3 + l^2 + 1)*t^2 + l^5 + l").unwrap(),
    };
    ensure(r.q == q_expected && q2 == q_expected, || {
        format!("Q = {}", big.format_point(&r.q))
    })?;
    ensure(w.result == CurvePoint::Infinity, || "trace is not O".into())?;
    within(elapsed, 0.5)?;
    Ok(format!("trace O via d = 1, S, Q = [2]P ({:.4} s)", elapsed.as_secs_f64()))
}

fn criterion5() -> Check {
    let start = Instant::now();
    let opts = SelftestOptions::default();
    let report = run_selftest(&opts).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(report.passed(), || report.to_string())?;
    ensure(
        opts.chars == [2, 3, 5, 7, 101]
            && report.per_char.iter().all(|(_, n)| *n >= 500)
            && opts.degrees == (2..=12),
        || format!("plan {opts:?}, counts {:?}", report.per_char),
    )?;
    let c = report.coverage;
    ensure(c.all_fired(), || format!("coverage {c:?}"))?;
    within(elapsed, 60.0)?;
    Ok(format!(
        "{} instances, 0 mismatches; trivial {} V=0 {} degS=0 {} general {} ({:.2} s)",
        report.instances(),
        c.trivial,
        c.v_zero,
        c.deg_s_zero,
        c.general,
        elapsed.as_secs_f64()
    ))
}

fn criterion6() -> Check {
    let mut pairs = 0;
    for (i, p) in [2u64, 3, 5, 7, 101].into_iter().enumerate() {
        let plan = GeneratorPlan { p, degrees: 2..=8 };
        let mut gen = InstanceGenerator::new(600 + i as u64, plan).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(6000 + p);
        for _ in 0..20 {
            let problem = gen.next_instance().map_err(|e| e.to_string())?.problem;
            let curve = problem.curve();
            let big = problem.curve_over_extension();
            let (p2, _) = random_point(&big, PointKind::General, &mut rng).unwrap();
            let sum = big.add(&problem.point(), &p2).unwrap();
            let tr = |pt: &CurvePoint<FiniteField>| -> CurvePoint<PrimeField> {
                problem_for(&problem, problem.extension(), pt)
                    .map_or(CurvePoint::Infinity, |pr| ell_trace(&pr, false).unwrap().result)
            };
            let lhs = tr(&sum);
            let rhs = curve
                .add(&ell_trace(&problem, false).unwrap().result, &tr(&p2))
                .unwrap();
            ensure(lhs == rhs, || {
                format!("p = {p}: Tr(P1+P2) = {lhs:?}, Tr P1 + Tr P2 = {rhs:?}")
            })?;
            pairs += 1;
        }
    }
    ensure(pairs >= 100, || format!("only {pairs} pairs"))?;
    Ok(format!("{pairs} pairs, Tr(P1+P2) = Tr P1 + Tr P2"))
}

fn criterion7() -> Check {
    let shapes: [(u64, usize, usize); 14] = [
        (2, 1, 2),
        (2, 2, 2),
        (2, 2, 3),
        (2, 3, 2),
        (2, 2, 4),
        (2, 4, 2),
        (3, 1, 3),
        (3, 2, 2),
        (3, 3, 2),
        (3, 2, 3),
        (5, 1, 2),
        (5, 2, 2),
        (7, 1, 2),
        (7, 2, 2),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut cases = 0;
    for (p, a, b) in shapes {
        let k = PrimeField::new(p).unwrap();
        let small = Extension::new(k, finite::random_irreducible(&k, a, &mut rng)).unwrap();
        let big = Extension::new(k, finite::random_irreducible(&k, a * b, &mut rng)).unwrap();
        let root = embedding_root(&small, &big).ok_or("no embedding root")?;
        for _ in 0..2 {
            let curve = random_curve(&k, &mut rng);
            let (pt, _) = random_point(&curve.over(&small), PointKind::General, &mut rng).unwrap();
            let (x, y) = pt.coords().unwrap();
            let small_problem =
                TraceProblem::new(curve.clone(), small.modulus().clone(), x.clone(), y.clone())
                    .unwrap();
            let big_problem = TraceProblem::new(
                curve.clone(),
                big.modulus().clone(),
                embed(&big, x, &root),
                embed(&big, y, &root),
            )
            .map_err(|e| e.to_string())?;
            let t_small = ell_trace(&small_problem, false).unwrap().result;
            let t_big = ell_trace(&big_problem, false).unwrap().result;
            let scaled = curve.mul(b as i64, &t_small).unwrap();
            ensure(t_big == scaled, || {
                format!("p = {p}, a = {a}, b = {b}: {t_big:?} vs [b] {t_small:?}")
            })?;
            cases += 1;
        }
    }
    ensure(cases >= 20, || format!("only {cases} cases"))?;
    Ok(format!("{cases} cases, Tr big = [b] Tr small"))
}

fn axioms<F: Field>(curve: &WeierstrassCurve<F>, elements: &[F::Elem]) -> (usize, usize) {
    let pts = curve.points_over(elements);
    let mut bad = 0;
    let add = |a: &CurvePoint<F>, b: &CurvePoint<F>| curve.add(a, b).unwrap();
    for a in &pts {
        bad += usize::from(add(a, &CurvePoint::Infinity) != *a);
        let neg = curve.neg(a);
        bad += usize::from(!pts.contains(&neg));
        bad += usize::from(add(a, &neg) != CurvePoint::Infinity);
        for b in &pts {
            let ab = add(a, b);
            bad += usize::from(ab != add(b, a));
            bad += usize::from(!pts.contains(&ab));
            for c in &pts {
                bad += usize::from(add(&ab, c) != add(a, &add(b, c)));
            }
        }
    }
    (pts.len(), bad)
}

fn criterion8() -> Check {
    let mut summary = Vec::new();
    let mut total_bad = 0;
    let prime_curves: [(u64, [i64; 5]); 6] = [
        (2, [1, 0, 0, 0, 1]),
        (2, [0, 0, 1, 1, 0]),
        (3, [0, 1, 0, 0, 1]),
        (3, [1, 0, 0, 1, 1]),
        (5, [0, 0, 0, 1, 1]),
        (5, [1, 0, 1, 0, 2]),
    ];
    for (p, a) in prime_curves {
        let k = PrimeField::new(p).unwrap();
        let e = WeierstrassCurve::from_i64s(k, a).map_err(|e| format!("{p} {a:?}: {e}"))?;
        let elems: Vec<u64> = (0..p).collect();
        let (n, bad) = axioms(&e, &elems);
        summary.push(format!("F_{p}:{n}"));
        total_bad += bad;
    }
    let ext_fields: [(u64, &[i64]); 3] = [(2, &[1, 1, 0, 0, 1]), (3, &[1, 0, 1]), (5, &[2, 0, 1])];
    for (p, t) in ext_fields {
        let k = PrimeField::new(p).unwrap();
        let ext = Extension::new(k, Poly::from_i64s(&k, t)).unwrap();
        let th = ext.generator();
        let (z, o) = (ext.zero(), ext.one());
        let e = WeierstrassCurve::new(ext.clone(), [o.clone(), z.clone(), z.clone(), o, th])
            .map_err(|e| e.to_string())?;
        let (n, bad) = axioms(&e, &finite::elements(&ext));
        summary.push(format!("F_{}:{n}", p.pow(ext.degree() as u32)));
        total_bad += bad;
    }
    ensure(total_bad == 0, || format!("{total_bad} violations"))?;
    Ok(format!("0 violations; points per curve {}", summary.join(" ")))
}

/// `t^n - 2` over `F_5` (irreducible for n a power of 2) with a point on
/// `y^2 = x^3 + x + 1`, found by Tonelli-Shanks with `θ` as non-residue.
fn smoke_instance(n: usize, rng: &mut ChaCha8Rng) -> TraceProblem<PrimeField> {
    let k = PrimeField::new(5).unwrap();
    let mut c = vec![0u64; n + 1];
    c[0] = 3;
    c[n] = 1;
    let t = Poly::from_coeffs(&k, c);
    let ext = Extension::new(k, t.clone()).unwrap();
    let curve = WeierstrassCurve::from_i64s(k, [0, 0, 0, 1, 1]).unwrap();
    let theta = ext.generator();
    loop {
        let x = finite::random_element(&ext, rng);
        let rhs = ext.add(&ext.mul(&x, &ext.add(&ext.square(&x), &ext.one())), &ext.one());
        if let Some(y) = finite::sqrt_with_nonresidue(&ext, &rhs, &theta) {
            return TraceProblem::new(curve, t, x, y).unwrap();
        }
    }
}

/// Times the first instance of degree `n` that takes the general branch.
fn time_general(n: usize, rng: &mut ChaCha8Rng) -> std::result::Result<Duration, String> {
    for _ in 0..16 {
        let problem = smoke_instance(n, rng);
        let start = Instant::now();
        let w = ell_trace(&problem, false).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        if w.branch() == Some(elltrace::SepBranch::General) {
            return Ok(elapsed);
        }
    }
    Err(format!("no general instance of degree {n}"))
}

fn criterion9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let t256 = time_general(256, &mut rng)?;
    within(t256, 5.0)?;
    let t512 = time_general(512, &mut rng)?;
    let ratio = t512.as_secs_f64() / t256.as_secs_f64();
    ensure(ratio <= 12.0, || format!("growth factor {ratio:.2}"))?;
    Ok(format!(
        "d = 256: {:.3} s, d = 512: {:.3} s, factor {ratio:.2}",
        t256.as_secs_f64(),
        t512.as_secs_f64(),
    ))
}

fn kernel_contract<F: Field>(k: &F, m: &Matrix<F>) -> std::result::Result<(), String> {
    let z = kernel_echelon(k, m);
    ensure(z.rows() == m.cols(), || "kernel has wrong height".into())?;
    ensure(m.mul(k, &z).is_zero(k), || "M Z != 0".into())?;
    ensure(rank(k, &z) == z.cols(), || "dependent kernel columns".into())?;
    let tz: Vec<usize> = z.columns().iter().map(|c| trailing_zeros(k, c)).collect();
    ensure(tz.windows(2).all(|w| w[0] > w[1]), || {
        format!("trailing zeros {tz:?}")
    })?;
    let r = rank(k, m);
    ensure(z.cols() == m.cols() - r, || {
        format!("{} columns for rank {r} of {} columns", z.cols(), m.cols())
    })
}

fn random_low_rank<F: Field>(
    k: &F,
    rng: &mut ChaCha8Rng,
    sample: &mut dyn FnMut(&mut ChaCha8Rng) -> F::Elem,
) -> Matrix<F> {
    let rows = rng.random_range(1..=8);
    let cols = rng.random_range(1..=10);
    let inner = rng.random_range(0..=rows.min(cols));
    let mut gen = |r, c, rng: &mut ChaCha8Rng| {
        Matrix::from_rows((0..r).map(|_| (0..c).map(|_| sample(rng)).collect()).collect())
    };
    if inner == 0 {
        return Matrix::zeros(k, rows, cols);
    }
    let a: Matrix<F> = gen(rows, inner, rng);
    let b: Matrix<F> = gen(inner, cols, rng);
    a.mul(k, &b)
}

fn criterion10() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut checked = 0;
    for i in 0..100 {
        let p = [2u64, 3, 7, 101, 65521][i % 5];
        let k = PrimeField::new(p).unwrap();
        let m = random_low_rank(&k, &mut rng, &mut |r| r.random_range(0..p));
        kernel_contract(&k, &m).map_err(|e| format!("F_{p}: {e}: {m:?}"))?;
        checked += 1;
    }
    for _ in 0..100 {
        let k = Rationals;
        let m = random_low_rank(&k, &mut rng, &mut |r| {
            BigRational::new(r.random_range(-5..=5).into(), r.random_range(1..=4).into())
        });
        kernel_contract(&k, &m).map_err(|e| format!("Q: {e}: {m:?}"))?;
        checked += 1;
    }
    Ok(format!("{checked} random matrices, 0 violations"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("cubic point over Q", criterion1),
        ("sextic point over F_3", criterion2),
        ("quintic point over F_2(l)", criterion3),
        ("inseparable quartic over F_2(l)", criterion4),
        ("differential suite against Frobenius orbits", criterion5),
        ("trace is a group morphism", criterion6),
        ("subfield scaling", criterion7),
        ("group law axioms", criterion8),
        ("complexity smoke", criterion9),
        ("kernel contract", criterion10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
