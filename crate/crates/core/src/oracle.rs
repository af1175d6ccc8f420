//! Ground truth and random instances for differential testing.
//!
//! Over a prime field the conjugates of `P` are its Frobenius images, so the
//! trace can be summed directly in `E(L)` ([`frobenius_trace`]). The
//! generators produce reproducible random problems over `F_p`, and
//! Eisenstein-family problems over `F_p(l)` and `Q` (including inseparable
//! moduli) where no such oracle exists.

use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curve::{CurvePoint, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::finite::{self, FiniteField};
use crate::linalg::{kernel_echelon, Matrix};
use crate::poly::Poly;
use crate::trace::TraceProblem;
use crate::{BaseField, Field, GroundField, PrimeField, RationalFunctions, Rationals};

/// Sample attempts per point kind before falling back or giving up.
pub const MAX_ATTEMPTS: usize = 64;

/// The Frobenius conjugates `(x^(p^i), y^(p^i))`, `0 <= i < deg T`.
pub fn frobenius_orbit(problem: &TraceProblem<PrimeField>) -> Vec<CurvePoint<FiniteField>> {
    let ext = problem.extension();
    let p = ext.base().modulus();
    let mut x = problem.x().clone();
    let mut y = problem.y().clone();
    let mut orbit = Vec::with_capacity(ext.degree());
    for _ in 0..ext.degree() {
        orbit.push(CurvePoint::Affine {
            x: x.clone(),
            y: y.clone(),
        });
        x = ext.pow(&x, p);
        y = ext.pow(&y, p);
    }
    orbit
}

/// Sum of the Frobenius orbit in `E(L)`.
pub fn orbit_sum(problem: &TraceProblem<PrimeField>) -> Result<CurvePoint<FiniteField>> {
    let big = problem.curve_over_extension();
    frobenius_orbit(problem)
        .iter()
        .try_fold(CurvePoint::Infinity, |acc, q| big.add(&acc, q))
}

/// The trace by direct summation of conjugates.
pub fn frobenius_trace(problem: &TraceProblem<PrimeField>) -> Result<CurvePoint<PrimeField>> {
    let k = problem.extension().base();
    match orbit_sum(problem)? {
        CurvePoint::Infinity => Ok(CurvePoint::Infinity),
        CurvePoint::Affine { x, y } => {
            if !x.is_constant() || !y.is_constant() {
                return Err(Error::inconsistent(
                    "orbit sum is not rational; the modulus is reducible",
                ));
            }
            Ok(CurvePoint::Affine {
                x: x.constant_term(k),
                y: y.constant_term(k),
            })
        }
    }
}

/// How the x-coordinate of a generated point was sampled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointKind {
    /// Uniform in `L`.
    General,
    /// In the subfield of the given degree (a proper divisor of `deg T`).
    Subfield(usize),
}

/// Characteristic and degree range for [`InstanceGenerator`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorPlan {
    pub p: u64,
    pub degrees: RangeInclusive<usize>,
}

pub struct GeneratedInstance {
    pub problem: TraceProblem<PrimeField>,
    pub kind: PointKind,
    /// Regenerates this instance through [`instance_from_seed`].
    pub seed: u64,
}

/// A reproducible stream of random problems over `F_p`.
pub struct InstanceGenerator {
    seed: u64,
    plan: GeneratorPlan,
    field: PrimeField,
    index: u64,
}

impl InstanceGenerator {
    pub fn new(seed: u64, plan: GeneratorPlan) -> Result<Self> {
        let field = PrimeField::new(plan.p)?;
        if plan.degrees.is_empty() || *plan.degrees.start() == 0 {
            return Err(Error::Usage(format!(
                "degree range {:?} must be nonempty and start at 1 or more",
                plan.degrees
            )));
        }
        Ok(InstanceGenerator {
            seed,
            plan,
            field,
            index: 0,
        })
    }

    pub fn plan(&self) -> &GeneratorPlan {
        &self.plan
    }

    pub fn next_instance(&mut self) -> Result<GeneratedInstance> {
        let seed = derive_seed(self.seed, self.index);
        self.index += 1;
        instance_from_seed(self.field, &self.plan.degrees, seed)
    }
}

/// Next problem from `gen`.
pub fn generate_instance(gen: &mut InstanceGenerator) -> Result<TraceProblem<PrimeField>> {
    Ok(gen.next_instance()?.problem)
}

/// SplitMix64 finalizer, used to derive per-instance seeds.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn derive_seed(seed: u64, index: u64) -> u64 {
    mix(seed ^ mix(index))
}

/// A random nonsingular curve over `F_p`.
pub fn random_curve<R: Rng + ?Sized>(k: &PrimeField, rng: &mut R) -> WeierstrassCurve<PrimeField> {
    loop {
        let a = [(); 5].map(|_| rng.random_range(0..k.modulus()));
        if let Ok(e) = WeierstrassCurve::new(*k, a) {
            return e;
        }
    }
}

/// Some `y` with `(x, y)` on `curve` over `ext`, if one exists.
pub fn solve_for_y<R: Rng + ?Sized>(
    curve: &WeierstrassCurve<FiniteField>,
    x: &Poly<PrimeField>,
    rng: &mut R,
) -> Option<Poly<PrimeField>> {
    let ext = curve.field();
    let [a1, a2, a3, a4, a6] = curve.coefficients();
    let h = ext.add(&ext.mul(a1, x), a3);
    let g = ext.add(&ext.mul(x, &ext.add(&ext.mul(x, &ext.add(x, a2)), a4)), a6);
    let y = if ext.characteristic() == 2 {
        if ext.is_zero(&h) {
            finite::sqrt(ext, &g, rng)?
        } else {
            // y = h z with z^2 + z = g / h^2
            let c = ext.div(&g, &ext.square(&h)).ok()?;
            let mut z = finite::solve_artin_schreier(ext, &c)?;
            if rng.random_bool(0.5) {
                z = ext.add(&z, &ext.one());
            }
            ext.mul(&h, &z)
        }
    } else {
        // (y + h/2)^2 = g + h^2/4
        let half_h = ext.div(&h, &ext.from_i64(2)).ok()?;
        let disc = ext.add(&g, &ext.square(&half_h));
        let mut s = finite::sqrt(ext, &disc, rng)?;
        if rng.random_bool(0.5) {
            s = ext.neg(&s);
        }
        ext.sub(&s, &half_h)
    };
    debug_assert!(ext.is_zero(&curve.residual(x, &y)));
    Some(y)
}

fn sample_x<R: Rng + ?Sized>(ext: &FiniteField, kind: PointKind, rng: &mut R) -> Poly<PrimeField> {
    let w = finite::random_element(ext, rng);
    match kind {
        PointKind::General => w,
        PointKind::Subfield(k) => finite::subfield_trace(ext, &w, k),
    }
}

/// A random point of `curve` over its field with x-coordinate of the given
/// kind; falls back to uniform x after [`MAX_ATTEMPTS`] failures.
pub fn random_point<R: Rng + ?Sized>(
    curve: &WeierstrassCurve<FiniteField>,
    kind: PointKind,
    rng: &mut R,
) -> Result<(CurvePoint<FiniteField>, PointKind)> {
    let ext = curve.field();
    let kinds: &[PointKind] = if kind == PointKind::General {
        &[PointKind::General]
    } else {
        &[kind, PointKind::General]
    };
    for &kind in kinds {
        for _ in 0..MAX_ATTEMPTS {
            let x = sample_x(ext, kind, rng);
            if let Some(y) = solve_for_y(curve, &x, rng) {
                return Ok((CurvePoint::Affine { x, y }, kind));
            }
        }
    }
    Err(Error::ResourceLimit(format!(
        "no point found after {} attempts",
        MAX_ATTEMPTS * kinds.len()
    )))
}

fn pick_kind<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PointKind {
    let proper: Vec<usize> = (1..n).filter(|k| n.is_multiple_of(*k)).collect();
    let roll = rng.random_range(0..10);
    if proper.is_empty() || roll >= 3 {
        PointKind::General
    } else if roll == 0 {
        PointKind::Subfield(1)
    } else {
        PointKind::Subfield(proper[rng.random_range(0..proper.len())])
    }
}

/// The instance determined by `seed`: random irreducible `T`, random curve,
/// random point. About 10% of points have constant x, 20% have x in a random
/// proper subfield.
pub fn instance_from_seed(
    k: PrimeField,
    degrees: &RangeInclusive<usize>,
    seed: u64,
) -> Result<GeneratedInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(degrees.clone());
    let t = finite::random_irreducible(&k, n, &mut rng);
    let ext = Extension::new(k, t.clone())?;
    let mut curve = random_curve(&k, &mut rng);
    let kind = pick_kind(n, &mut rng);
    // tiny fields have curves with no affine points at all
    for _ in 0..MAX_ATTEMPTS {
        match random_point(&curve.over(&ext), kind, &mut rng) {
            Ok((p, kind)) => {
                let (x, y) = p.coords().expect("affine");
                let problem = TraceProblem::new(curve, t, x.clone(), y.clone())?;
                return Ok(GeneratedInstance {
                    problem,
                    kind,
                    seed,
                });
            }
            Err(Error::ResourceLimit(_)) => curve = random_curve(&k, &mut rng),
            Err(e) => return Err(e),
        }
    }
    Err(Error::ResourceLimit(format!(
        "no curve with a point found after {MAX_ATTEMPTS} attempts"
    )))
}

/// Ground fields with a notion of small random elements, for the
/// Eisenstein-family generators.
pub trait SmallSampler: GroundField {
    /// A prime element of the coefficient ring, used for Eisenstein
    /// moduli: `2` for `Q`, `l` for `k(l)`.
    fn eisenstein_prime(&self) -> Self::Elem;
    fn small<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    /// A small element not divisible by the Eisenstein prime.
    fn small_unit<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
}

impl SmallSampler for Rationals {
    fn eisenstein_prime(&self) -> Self::Elem {
        self.from_i64(2)
    }

    fn small<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        self.from_i64(rng.random_range(-3..=3))
    }

    fn small_unit<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        self.from_i64(*[-3, -1, 1, 3].get(rng.random_range(0..4)).unwrap())
    }
}

impl<B: BaseField> RationalFunctions<B> {
    fn small_base<R: Rng + ?Sized>(&self, rng: &mut R, nonzero: bool) -> B::Elem {
        let p = self.characteristic();
        let hi = if p == 0 { 3 } else { (p as i64 - 1).min(3) };
        let lo = if nonzero { 1 } else { 0 };
        let v = rng.random_range(lo..=hi);
        let b = self.base();
        if p == 0 && rng.random_bool(0.5) {
            b.from_i64(-v)
        } else {
            b.from_i64(v)
        }
    }

    fn small_poly<R: Rng + ?Sized>(&self, rng: &mut R, deg: usize) -> Poly<B> {
        let c = (0..=deg).map(|_| self.small_base(rng, false)).collect();
        Poly::from_coeffs(self.base(), c)
    }
}

impl<B: BaseField> SmallSampler for RationalFunctions<B> {
    fn eisenstein_prime(&self) -> Self::Elem {
        self.indeterminate().expect("function field")
    }

    fn small<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        let num = self.small_poly(rng, 2);
        if rng.random_bool(0.7) {
            return self.from_poly(num);
        }
        let mut den = self.small_poly(rng, 1);
        if den.is_zero() {
            den = Poly::one(self.base());
        }
        self.fraction(num, den).expect("nonzero denominator")
    }

    fn small_unit<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        // constant term nonzero, so not divisible by l
        let mut c = self.small_poly(rng, 1).into_coeffs();
        c.resize(2, self.base().zero());
        c[0] = self.small_base(rng, true);
        self.from_poly(Poly::from_coeffs(self.base(), c))
    }
}

/// A random monic polynomial Eisenstein at the field's prime element, of
/// degree `sep_degree * p^insep_exp` and lying in `K[t^(p^insep_exp)]`.
/// Eisenstein polynomials are irreducible.
pub fn eisenstein_modulus<F: SmallSampler, R: Rng + ?Sized>(
    k: &F,
    sep_degree: usize,
    insep_exp: u32,
    rng: &mut R,
) -> Poly<F> {
    assert!(sep_degree >= 1);
    let pi = k.eisenstein_prime();
    let mut s: Vec<F::Elem> = (0..sep_degree)
        .map(|_| k.mul(&pi, &k.small(rng)))
        .collect();
    // pi exactly divides the constant term
    s[0] = k.mul(&pi, &k.small_unit(rng));
    s.push(k.one());
    let s = Poly::from_coeffs(k, s);
    let step = if insep_exp == 0 {
        1
    } else {
        (k.characteristic() as usize).pow(insep_exp)
    };
    s.inflate(k, step)
}

/// Finds `a1..a6` in `K` making `(x, y)` a point, choosing randomly among
/// solutions when the linear system is underdetermined. `None` when there is
/// no nonsingular solution.
pub fn solve_for_curve<F: SmallSampler, R: Rng + ?Sized>(
    ext: &Extension<F>,
    x: &Poly<F>,
    y: &Poly<F>,
    rng: &mut R,
) -> Option<WeierstrassCurve<F>> {
    let k = ext.base();
    let n = ext.degree();
    // a1 (xy) + a2 (-x^2) + a3 (y) + a4 (-x) + a6 (-1) = x^3 - y^2
    let x2 = ext.square(x);
    let rhs = ext.sub(&ext.mul(&x2, x), &ext.square(y));
    let columns = vec![
        ext.coords(&ext.mul(x, y)),
        ext.coords(&ext.neg(&x2)),
        ext.coords(y),
        ext.coords(&ext.neg(x)),
        ext.coords(&ext.neg(&ext.one())),
        ext.coords(&ext.neg(&rhs)),
    ];
    let z = kernel_echelon(k, &Matrix::from_columns(n, &columns));
    let last = z.cols().checked_sub(1)?;
    if k.is_zero(z.get(5, last)) {
        return None;
    }
    let mut a = z.column(last)[..5].to_vec();
    for j in 0..last {
        let r = k.small(rng);
        for (i, ai) in a.iter_mut().enumerate() {
            *ai = k.add(ai, &k.mul(&r, z.get(i, j)));
        }
    }
    let [a1, a2, a3, a4, a6]: [F::Elem; 5] = a.try_into().ok()?;
    WeierstrassCurve::new(k.clone(), [a1, a2, a3, a4, a6]).ok()
}

/// A random problem over `K` with an Eisenstein modulus of degree
/// `sep_degree * p^insep_exp <= 5` and a random non-constant point, the
/// curve being solved for from the point.
pub fn eisenstein_instance<F: SmallSampler, R: Rng + ?Sized>(
    k: &F,
    sep_degree: usize,
    insep_exp: u32,
    rng: &mut R,
) -> Result<TraceProblem<F>> {
    for _ in 0..MAX_ATTEMPTS {
        let t = eisenstein_modulus(k, sep_degree, insep_exp, rng);
        let ext = Extension::new(k.clone(), t.clone())?;
        let n = ext.degree();
        let rand_elem = |rng: &mut R| {
            Poly::from_coeffs(k, (0..n).map(|_| k.small(rng)).collect::<Vec<_>>())
        };
        let x = rand_elem(rng);
        let y = rand_elem(rng);
        if x.is_constant() {
            continue;
        }
        if let Some(curve) = solve_for_curve(&ext, &x, &y, rng) {
            return TraceProblem::new(curve, t, x, y);
        }
    }
    Err(Error::ResourceLimit(format!(
        "no Eisenstein instance of degree {sep_degree}*p^{insep_exp} after {MAX_ATTEMPTS} attempts"
    )))
}
