//! Traces of algebraic points.
//!
//! [`ell_trace_sep`] handles a separable modulus by finding the
//! lowest-degree function over `K` vanishing at every conjugate of `P` and
//! reading the trace off its remaining zero. [`ell_trace`] first strips the
//! purely inseparable part of the extension.

use crate::curve::{CurvePoint, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::linalg::{kernel_echelon, minimal_polynomial, Matrix};
use crate::poly::Poly;
use crate::Field;

/// A point `P = (x(θ), y(θ))` on `E` over `L = K[t]/T(t)`.
pub struct TraceProblem<F: Field> {
    curve: WeierstrassCurve<F>,
    ext: Extension<F>,
    x: Poly<F>,
    y: Poly<F>,
}

impl<F: Field> Clone for TraceProblem<F> {
    fn clone(&self) -> Self {
        TraceProblem {
            curve: self.curve.clone(),
            ext: self.ext.clone(),
            x: self.x.clone(),
            y: self.y.clone(),
        }
    }
}

impl<F: Field> std::fmt::Debug for TraceProblem<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TraceProblem")
            .field("curve", &self.curve)
            .field("modulus", self.ext.modulus())
            .field("x", &self.x)
            .field("y", &self.y)
            .finish()
    }
}

impl<F: Field> TraceProblem<F> {
    /// Reduces `x` and `y` modulo `T` and checks the curve equation in `L`.
    /// Irreducibility of `T` is not checked here.
    pub fn new(curve: WeierstrassCurve<F>, modulus: Poly<F>, x: Poly<F>, y: Poly<F>) -> Result<Self> {
        let ext = Extension::new(curve.field().clone(), modulus)?;
        let x = ext.element(&x);
        let y = ext.element(&y);
        curve.over(&ext).point(x.clone(), y.clone())?;
        Ok(TraceProblem { curve, ext, x, y })
    }

    pub fn curve(&self) -> &WeierstrassCurve<F> {
        &self.curve
    }

    pub fn extension(&self) -> &Extension<F> {
        &self.ext
    }

    pub fn modulus(&self) -> &Poly<F> {
        self.ext.modulus()
    }

    pub fn x(&self) -> &Poly<F> {
        &self.x
    }

    pub fn y(&self) -> &Poly<F> {
        &self.y
    }

    pub fn degree(&self) -> usize {
        self.ext.degree()
    }

    /// `P` as a point of `E(L)`.
    pub fn point(&self) -> CurvePoint<Extension<F>> {
        CurvePoint::Affine {
            x: self.x.clone(),
            y: self.y.clone(),
        }
    }

    /// `E` base-changed to `L`.
    pub fn curve_over_extension(&self) -> WeierstrassCurve<Extension<F>> {
        self.curve.over(&self.ext)
    }

    /// Shorthand for `ell_trace(self, false)?.result`.
    pub fn trace(&self) -> Result<CurvePoint<F>> {
        Ok(ell_trace(self, false)?.result)
    }
}

/// Which exit of the separable algorithm produced the result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SepBranch {
    /// `P` is in `E(K)`; the trace is `[d] P`.
    RationalPoint,
    /// `x(P)` is in `K` but `y(P)` is not; the two conjugates cancel.
    VerticalPair,
    /// `V = 0`: the conjugates pair into opposites.
    EvenFunction,
    /// `R / X` is constant.
    TraceVanishes,
    /// `R / X` is linear and yields `Q`.
    General,
}

impl SepBranch {
    pub fn name(self) -> &'static str {
        match self {
            SepBranch::RationalPoint => "rational-point",
            SepBranch::VerticalPair => "vertical-pair",
            SepBranch::EvenFunction => "even-function",
            SepBranch::TraceVanishes => "trace-vanishes",
            SepBranch::General => "general",
        }
    }
}

/// Intermediate values of [`ell_trace_sep`]. Fields past the branch that
/// returned are `None`.
pub struct SepRecord<F: Field> {
    pub branch: SepBranch,
    pub degree: usize,
    /// Values of `1, x, y, x^2, x y, ...` at `P`.
    pub values: Option<Vec<Poly<F>>>,
    pub matrix: Option<Matrix<F>>,
    /// Leftmost echelon kernel column, last nonzero entry 1.
    pub kernel: Option<Vec<F::Elem>>,
    pub u: Option<Poly<F>>,
    pub v: Option<Poly<F>>,
    /// Minimal polynomial of `x(P)`.
    pub minpoly: Option<Poly<F>>,
    pub r: Option<Poly<F>>,
    pub s: Option<Poly<F>>,
    pub q: Option<CurvePoint<F>>,
    pub d_p: Option<usize>,
    /// The final scalar applied to `Q` (or to `P` on the rational branch).
    pub multiplier: Option<i64>,
}

/// Intermediate values of the inseparable reduction in [`ell_trace`].
pub struct InsepRecord<F: Field> {
    pub p: u64,
    /// `T(t) = S(t^(p^d))`.
    pub d: u32,
    pub s: Poly<F>,
    /// `[p^d] P` in `E(L)`.
    pub q: CurvePoint<Extension<F>>,
    /// Coordinates of `Q` rewritten in powers of `θ^(p^d)`; `None` if `Q = O`.
    pub xq: Option<Poly<F>>,
    pub yq: Option<Poly<F>>,
}

pub struct TraceWitness<F: Field> {
    pub result: CurvePoint<F>,
    /// Exit of the separable algorithm; `None` if `[p^d] P = O` ended the
    /// computation before it ran.
    pub branch: Option<SepBranch>,
    pub insep: Option<InsepRecord<F>>,
    pub sep: Option<SepRecord<F>>,
}

impl<F: Field> TraceWitness<F> {
    pub fn branch(&self) -> Option<SepBranch> {
        self.branch
    }
}

/// Splits `T = S(t^(p^d))` with `d` maximal.
pub fn insep_decompose<F: Field>(k: &F, t: &Poly<F>, p: u64) -> (u32, Poly<F>) {
    assert!(p >= 2, "insep_decompose needs a positive characteristic");
    let p = p as usize;
    let support: Vec<usize> = t
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !k.is_zero(c))
        .map(|(i, _)| i)
        .collect();
    if t.degree().unwrap_or(0) == 0 {
        return (0, t.clone());
    }
    let mut d = 0u32;
    let mut step = 1usize;
    while let Some(next) = step.checked_mul(p) {
        if support.iter().all(|i| i % next == 0) {
            d += 1;
            step = next;
        } else {
            break;
        }
    }
    let s = t.coeffs().iter().step_by(step).cloned().collect();
    (d, Poly::from_coeffs(k, s))
}

fn finish<F: Field>(
    result: CurvePoint<F>,
    branch: SepBranch,
    mut record: Option<SepRecord<F>>,
) -> Result<TraceWitness<F>> {
    if let Some(r) = record.as_mut() {
        r.branch = branch;
    }
    Ok(TraceWitness {
        result,
        branch: Some(branch),
        insep: None,
        sep: record,
    })
}

/// Trace of `P` for a separable modulus.
///
/// With `record` set, the witness carries every intermediate value.
pub fn ell_trace_sep<F: Field>(problem: &TraceProblem<F>, record: bool) -> Result<TraceWitness<F>> {
    let k = problem.curve.field();
    let ext = &problem.ext;
    let curve = &problem.curve;
    let d = ext.degree();
    if ext.modulus().derivative(k).is_zero() {
        return Err(Error::inconsistent("modulus is inseparable"));
    }
    let mut rec = record.then(|| SepRecord {
        branch: SepBranch::General,
        degree: d,
        values: None,
        matrix: None,
        kernel: None,
        u: None,
        v: None,
        minpoly: None,
        r: None,
        s: None,
        q: None,
        d_p: None,
        multiplier: None,
    });
    let set = |rec: &mut Option<SepRecord<F>>, f: &mut dyn FnMut(&mut SepRecord<F>)| {
        if let Some(r) = rec.as_mut() {
            f(r);
        }
    };

    if problem.x.is_constant() {
        if problem.y.is_constant() {
            let p = CurvePoint::Affine {
                x: problem.x.constant_term(k),
                y: problem.y.constant_term(k),
            };
            let n = i64::try_from(d).map_err(|_| Error::inconsistent("degree overflow"))?;
            set(&mut rec, &mut |r| r.multiplier = Some(n));
            return finish(curve.mul(n, &p)?, SepBranch::RationalPoint, rec);
        }
        return finish(CurvePoint::Infinity, SepBranch::VerticalPair, rec);
    }

    // values of 1, x, y, x^2, x y, x^3, ... at P
    let mut values: Vec<Poly<F>> = Vec::with_capacity(d + 1);
    values.push(ext.one());
    values.push(problem.x.clone());
    values.push(problem.y.clone());
    for j in 3..=d {
        let next = ext.mul(&problem.x, &values[j - 2]);
        values.push(next);
    }
    values.truncate(d + 1);

    let columns: Vec<Vec<F::Elem>> = values.iter().map(|v| ext.coords(v)).collect();
    let m = Matrix::from_columns(d, &columns);
    drop(columns);
    let kernel = kernel_echelon(k, &m);
    let z = kernel.column(0);

    let mut u = vec![z[0].clone()];
    u.extend(z.iter().skip(1).step_by(2).cloned());
    let u = Poly::from_coeffs(k, u);
    let v = Poly::from_coeffs(k, z.iter().skip(2).step_by(2).cloned().collect());
    let d_p = z
        .iter()
        .rposition(|c| !k.is_zero(c))
        .expect("kernel column is nonzero");

    if let Some(r) = rec.as_mut() {
        r.values = Some(values);
        r.matrix = Some(m);
        r.kernel = Some(z);
        r.u = Some(u.clone());
        r.v = Some(v.clone());
    }

    if v.is_zero() {
        return finish(CurvePoint::Infinity, SepBranch::EvenFunction, rec);
    }

    let minpoly = minimal_polynomial(ext, &problem.x);
    let [a1, a2, a3, a4, a6] = curve.coefficients();
    let cubic = Poly::from_coeffs(k, vec![a6.clone(), a4.clone(), a2.clone(), k.one()]);
    let linear = Poly::from_coeffs(k, vec![a3.clone(), a1.clone()]);
    let r_poly = cubic
        .mul(k, &v.square(k))
        .add(k, &linear.mul(k, &u.mul(k, &v)))
        .sub(k, &u.square(k));
    let s_poly = r_poly.exact_div(k, &minpoly)?;

    if let Some(r) = rec.as_mut() {
        r.minpoly = Some(minpoly);
        r.r = Some(r_poly);
        r.s = Some(s_poly.clone());
    }

    match s_poly.degree() {
        Some(0) => {
            return finish(CurvePoint::Infinity, SepBranch::TraceVanishes, rec);
        }
        Some(1) => {}
        None => return Err(Error::inconsistent("R vanishes identically")),
        Some(n) => return Err(Error::inconsistent(format!("R/X has degree {n}"))),
    }

    let s0 = s_poly.coeff(k, 0);
    let s1 = s_poly.coeff(k, 1);
    let xq = k.neg(&k.div(&s0, &s1)?);
    let vq = v.eval(k, &xq);
    if k.is_zero(&vq) {
        return Err(Error::inconsistent("V vanishes at the root of R/X"));
    }
    let yq = k.neg(&k.div(&u.eval(k, &xq), &vq)?);
    let q = curve
        .point(xq, yq)
        .map_err(|_| Error::inconsistent("recovered Q is not on the curve"))?;

    if d_p == 0 || !d.is_multiple_of(d_p) {
        return Err(Error::inconsistent(format!(
            "d_P = {d_p} does not divide d = {d}"
        )));
    }
    let multiplier = -i64::try_from(d / d_p).map_err(|_| Error::inconsistent("degree overflow"))?;
    let result = curve.mul(multiplier, &q)?;
    set(&mut rec, &mut |r| {
        r.q = Some(q.clone());
        r.d_p = Some(d_p);
        r.multiplier = Some(multiplier);
    });
    finish(result, SepBranch::General, rec)
}

/// Trace of `P` for any irreducible modulus.
///
/// In characteristic `p` the modulus is written `T = S(t^(p^d))`; then
/// `Q = [p^d] P` lies over `K(θ^(p^d))` and its trace is computed with `S`.
pub fn ell_trace<F: Field>(problem: &TraceProblem<F>, record: bool) -> Result<TraceWitness<F>> {
    let k = problem.curve.field();
    let p = k.characteristic();
    if p == 0 {
        return ell_trace_sep(problem, record);
    }
    let (d, s) = insep_decompose(k, problem.modulus(), p);
    if d == 0 {
        let mut w = ell_trace_sep(problem, record)?;
        if record {
            w.insep = Some(InsepRecord {
                p,
                d,
                s,
                q: problem.point(),
                xq: Some(problem.x.clone()),
                yq: Some(problem.y.clone()),
            });
        }
        return Ok(w);
    }
    let pd = usize::try_from(p)
        .ok()
        .and_then(|p| p.checked_pow(d))
        .expect("p^d divides deg T");
    let big = problem.curve_over_extension();
    let pd_i64 = i64::try_from(pd).map_err(|_| Error::inconsistent("p^d overflow"))?;
    let q = big.mul(pd_i64, &problem.point())?;
    let Some((qx, qy)) = q.coords() else {
        return Ok(TraceWitness {
            result: CurvePoint::Infinity,
            branch: None,
            insep: record.then(|| InsepRecord {
                p,
                d,
                s,
                q: CurvePoint::Infinity,
                xq: None,
                yq: None,
            }),
            sep: None,
        });
    };
    let target = s.degree().expect("S is nonzero");
    let xq = problem.ext.subfield_coeffs(qx, pd, target)?;
    let yq = problem.ext.subfield_coeffs(qy, pd, target)?;
    let reduced = TraceProblem::new(problem.curve.clone(), s.clone(), xq.clone(), yq.clone())
        .map_err(|e| match e {
            Error::NotOnCurve { .. } => Error::inconsistent("[p^d] P left the curve"),
            other => other,
        })?;
    let mut w = ell_trace_sep(&reduced, record)?;
    if record {
        w.insep = Some(InsepRecord {
            p,
            d,
            s,
            q,
            xq: Some(xq),
            yq: Some(yq),
        });
    }
    Ok(w)
}
