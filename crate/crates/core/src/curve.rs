//! Elliptic curves in long Weierstrass form
//! `y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6`
//! with the chord-and-tangent group law in affine coordinates.
//!
//! The formulas are the unified long-form ones, valid in every
//! characteristic, so curves over `F_2` and `F_3` need no special cases.

use std::fmt;

use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::Field;

/// `O` or an affine point with coordinates in the curve's field.
pub enum CurvePoint<F: Field> {
    Infinity,
    Affine { x: F::Elem, y: F::Elem },
}

impl<F: Field> CurvePoint<F> {
    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn coords(&self) -> Option<(&F::Elem, &F::Elem)> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { x, y } => Some((x, y)),
        }
    }
}

impl<F: Field> Clone for CurvePoint<F> {
    fn clone(&self) -> Self {
        match self {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine {
                x: x.clone(),
                y: y.clone(),
            },
        }
    }
}

impl<F: Field> PartialEq for CurvePoint<F> {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (CurvePoint::Infinity, CurvePoint::Infinity) => true,
            (CurvePoint::Affine { x, y }, CurvePoint::Affine { x: x2, y: y2 }) => {
                x == x2 && y == y2
            }
            _ => false,
        }
    }
}

impl<F: Field> Eq for CurvePoint<F> {}

impl<F: Field> fmt::Debug for CurvePoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => write!(f, "O"),
            CurvePoint::Affine { x, y } => write!(f, "({x:?}, {y:?})"),
        }
    }
}

pub struct WeierstrassCurve<F: Field> {
    field: F,
    a1: F::Elem,
    a2: F::Elem,
    a3: F::Elem,
    a4: F::Elem,
    a6: F::Elem,
}

impl<F: Field> Clone for WeierstrassCurve<F> {
    fn clone(&self) -> Self {
        WeierstrassCurve {
            field: self.field.clone(),
            a1: self.a1.clone(),
            a2: self.a2.clone(),
            a3: self.a3.clone(),
            a4: self.a4.clone(),
            a6: self.a6.clone(),
        }
    }
}

impl<F: Field> fmt::Debug for WeierstrassCurve<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeierstrassCurve")
            .field("a1", &self.a1)
            .field("a2", &self.a2)
            .field("a3", &self.a3)
            .field("a4", &self.a4)
            .field("a6", &self.a6)
            .finish()
    }
}

impl<F: Field> WeierstrassCurve<F> {
    /// Coefficients in the order `[a1, a2, a3, a4, a6]`.
    pub fn new(field: F, coeffs: [F::Elem; 5]) -> Result<Self> {
        let [a1, a2, a3, a4, a6] = coeffs;
        let curve = WeierstrassCurve {
            field,
            a1,
            a2,
            a3,
            a4,
            a6,
        };
        if curve.field.is_zero(&curve.discriminant()) {
            return Err(Error::SingularCurve);
        }
        Ok(curve)
    }

    pub fn from_i64s(field: F, coeffs: [i64; 5]) -> Result<Self> {
        let c = coeffs.map(|a| field.from_i64(a));
        Self::new(field, c)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coefficients(&self) -> [&F::Elem; 5] {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6]
    }

    pub fn discriminant(&self) -> F::Elem {
        let k = &self.field;
        let int = |n: i64| k.from_i64(n);
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let b2 = k.add(&k.square(a1), &k.mul(&int(4), a2));
        let b4 = k.add(&k.mul(&int(2), a4), &k.mul(a1, a3));
        let b6 = k.add(&k.square(a3), &k.mul(&int(4), a6));
        let b8 = {
            let t1 = k.mul(&k.square(a1), a6);
            let t2 = k.mul(&int(4), &k.mul(a2, a6));
            let t3 = k.mul(a1, &k.mul(a3, a4));
            let t4 = k.mul(a2, &k.square(a3));
            let t5 = k.square(a4);
            k.sub(&k.add(&k.sub(&k.add(&t1, &t2), &t3), &t4), &t5)
        };
        let b2sq_b8 = k.mul(&k.square(&b2), &b8);
        let b4cube = k.mul(&k.square(&b4), &b4);
        let b6sq = k.square(&b6);
        let b2b4b6 = k.mul(&b2, &k.mul(&b4, &b6));
        let mut d = k.neg(&b2sq_b8);
        d = k.sub(&d, &k.mul(&int(8), &b4cube));
        d = k.sub(&d, &k.mul(&int(27), &b6sq));
        k.add(&d, &k.mul(&int(9), &b2b4b6))
    }

    /// `y^2 + a1 x y + a3 y - (x^3 + a2 x^2 + a4 x + a6)`.
    pub fn residual(&self, x: &F::Elem, y: &F::Elem) -> F::Elem {
        let k = &self.field;
        let lhs = k.mul(y, &k.add(&k.add(y, &k.mul(&self.a1, x)), &self.a3));
        let rhs = k.add(
            &k.mul(x, &k.add(&k.mul(x, &k.add(x, &self.a2)), &self.a4)),
            &self.a6,
        );
        k.sub(&lhs, &rhs)
    }

    pub fn contains(&self, p: &CurvePoint<F>) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => self.field.is_zero(&self.residual(x, y)),
        }
    }

    /// An affine point, checked against the curve equation.
    pub fn point(&self, x: F::Elem, y: F::Elem) -> Result<CurvePoint<F>> {
        let r = self.residual(&x, &y);
        if self.field.is_zero(&r) {
            Ok(CurvePoint::Affine { x, y })
        } else {
            Err(Error::NotOnCurve {
                residual: self.field.format_elem(&r),
            })
        }
    }

    /// `-(x, y) = (x, -y - a1 x - a3)`.
    pub fn neg(&self, p: &CurvePoint<F>) -> CurvePoint<F> {
        let k = &self.field;
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine {
                x: x.clone(),
                y: k.sub(&k.neg(y), &k.add(&k.mul(&self.a1, x), &self.a3)),
            },
        }
    }

    /// The group law. Errors only if a coordinate field fails to invert a
    /// nonzero element (a reducible extension modulus).
    pub fn add(&self, p: &CurvePoint<F>, q: &CurvePoint<F>) -> Result<CurvePoint<F>> {
        let k = &self.field;
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Infinity, _) => return Ok(q.clone()),
            (_, CurvePoint::Infinity) => return Ok(p.clone()),
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => {
                (x1, y1, x2, y2)
            }
        };
        let slope = if x1 == x2 {
            // q = -p, or p = q with vanishing 2-division polynomial
            let s = k.add(&k.add(y1, y2), &k.add(&k.mul(&self.a1, x2), &self.a3));
            if k.is_zero(&s) {
                return Ok(CurvePoint::Infinity);
            }
            // tangent: (3x^2 + 2 a2 x + a4 - a1 y) / (2y + a1 x + a3)
            let num = k.sub(
                &k.add(
                    &k.add(
                        &k.mul(&k.from_i64(3), &k.square(x1)),
                        &k.mul(&k.from_i64(2), &k.mul(&self.a2, x1)),
                    ),
                    &self.a4,
                ),
                &k.mul(&self.a1, y1),
            );
            k.div(&num, &s)?
        } else {
            k.div(&k.sub(y2, y1), &k.sub(x2, x1))?
        };
        let nu = k.sub(y1, &k.mul(&slope, x1));
        let x3 = k.sub(
            &k.sub(
                &k.sub(&k.add(&k.square(&slope), &k.mul(&self.a1, &slope)), &self.a2),
                x1,
            ),
            x2,
        );
        let y3 = k.sub(
            &k.sub(&k.neg(&k.mul(&k.add(&slope, &self.a1), &x3)), &nu),
            &self.a3,
        );
        let r = CurvePoint::Affine { x: x3, y: y3 };
        debug_assert!(self.contains(&r), "group law left the curve");
        Ok(r)
    }

    pub fn double(&self, p: &CurvePoint<F>) -> Result<CurvePoint<F>> {
        self.add(p, p)
    }

    pub fn sub(&self, p: &CurvePoint<F>, q: &CurvePoint<F>) -> Result<CurvePoint<F>> {
        self.add(p, &self.neg(q))
    }

    /// `[n] p` by double-and-add; negative `n` multiplies `-p`.
    pub fn mul(&self, n: i64, p: &CurvePoint<F>) -> Result<CurvePoint<F>> {
        let base = if n < 0 { self.neg(p) } else { p.clone() };
        let mut m = n.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        let mut run = base;
        while m > 0 {
            if m & 1 == 1 {
                acc = self.add(&acc, &run)?;
            }
            m >>= 1;
            if m > 0 {
                run = self.double(&run)?;
            }
        }
        Ok(acc)
    }

    /// The same curve with coefficients mapped into another field.
    pub fn map_field<G: Field>(&self, g: G, f: impl Fn(&F::Elem) -> G::Elem) -> WeierstrassCurve<G> {
        WeierstrassCurve {
            a1: f(&self.a1),
            a2: f(&self.a2),
            a3: f(&self.a3),
            a4: f(&self.a4),
            a6: f(&self.a6),
            field: g,
        }
    }

    /// The curve over a simple extension of its field.
    pub fn over(&self, ext: &Extension<F>) -> WeierstrassCurve<Extension<F>> {
        self.map_field(ext.clone(), |c| ext.embed(c.clone()))
    }

    /// `O` or `(x, y)` in the element grammar.
    pub fn format_point(&self, p: &CurvePoint<F>) -> String {
        match p {
            CurvePoint::Infinity => "O".to_string(),
            CurvePoint::Affine { x, y } => format!(
                "({}, {})",
                self.field.format_elem(x),
                self.field.format_elem(y)
            ),
        }
    }

    /// All affine points by brute force over a finite list of field elements.
    pub fn points_over(&self, elements: &[F::Elem]) -> Vec<CurvePoint<F>> {
        let mut pts = vec![CurvePoint::Infinity];
        for x in elements {
            for y in elements {
                if self.field.is_zero(&self.residual(x, y)) {
                    pts.push(CurvePoint::Affine {
                        x: x.clone(),
                        y: y.clone(),
                    });
                }
            }
        }
        pts
    }
}
