//! Dense univariate polynomials over a [`Field`].
//!
//! Coefficients are stored in ascending degree with no trailing zeros, so the
//! zero polynomial has no coefficients and structural equality is polynomial
//! equality. Arithmetic is schoolbook: multiplication and division are
//! quadratic.

use std::fmt;

use crate::error::{Error, Result};
use crate::Field;

pub struct Poly<F: Field> {
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Clone for Poly<F> {
    fn clone(&self) -> Self {
        Poly {
            coeffs: self.coeffs.clone(),
        }
    }
}

impl<F: Field> PartialEq for Poly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<F: Field> Eq for Poly<F> {}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Poly").field(&self.coeffs).finish()
    }
}

impl<F: Field> Default for Poly<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> Poly<F> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// Builds a polynomial from ascending coefficients, dropping trailing zeros.
    pub fn from_coeffs(k: &F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| k.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(k: &F, coeffs: &[i64]) -> Self {
        Self::from_coeffs(k, coeffs.iter().map(|&c| k.from_i64(c)).collect())
    }

    pub fn constant(k: &F, c: F::Elem) -> Self {
        Self::from_coeffs(k, vec![c])
    }

    pub fn one(k: &F) -> Self {
        Poly {
            coeffs: vec![k.one()],
        }
    }

    /// `c * x^n`.
    pub fn monomial(k: &F, c: F::Elem, n: usize) -> Self {
        if k.is_zero(&c) {
            return Self::zero();
        }
        let mut coeffs = vec![k.zero(); n + 1];
        coeffs[n] = c;
        Poly { coeffs }
    }

    /// The indeterminate `x`.
    pub fn x(k: &F) -> Self {
        Self::monomial(k, k.one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True for the zero polynomial and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F::Elem> {
        self.coeffs
    }

    pub fn coeff(&self, k: &F, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| k.zero())
    }

    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    /// The constant coefficient, zero for the zero polynomial.
    pub fn constant_term(&self, k: &F) -> F::Elem {
        self.coeff(k, 0)
    }

    pub fn add(&self, k: &F, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => k.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::from_coeffs(k, coeffs)
    }

    pub fn sub(&self, k: &F, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => k.sub(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => k.neg(b),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::from_coeffs(k, coeffs)
    }

    pub fn neg(&self, k: &F) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| k.neg(c)).collect(),
        }
    }

    pub fn scale(&self, k: &F, c: &F::Elem) -> Self {
        if k.is_zero(c) {
            return Self::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| k.mul(a, c)).collect(),
        }
    }

    pub fn mul(&self, k: &F, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (a, b) = (&self.coeffs, &other.coeffs);
        let n = a.len() + b.len() - 1;
        let coeffs = (0..n)
            .map(|m| {
                let lo = m.saturating_sub(b.len() - 1);
                let hi = m.min(a.len() - 1);
                k.dot((lo..=hi).map(|i| (&a[i], &b[m - i])))
            })
            .collect();
        // leading coefficients are nonzero in a field, so no trimming needed
        Poly { coeffs }
    }

    pub fn square(&self, k: &F) -> Self {
        self.mul(k, self)
    }

    pub fn pow(&self, k: &F, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(k);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(k, &base);
            }
            n >>= 1;
            if n > 0 {
                base = base.square(k);
            }
        }
        acc
    }

    /// Euclidean division: `self = q * den + r` with `deg r < deg den`.
    pub fn divrem(&self, k: &F, den: &Self) -> Result<(Self, Self)> {
        let lead = den.leading().ok_or(Error::DivisionByZero)?;
        let dn = den.coeffs.len();
        if self.coeffs.len() < dn {
            return Ok((Self::zero(), self.clone()));
        }
        let lead_inv = k.inv(lead)?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![k.zero(); rem.len() - dn + 1];
        for i in (0..quot.len()).rev() {
            let c = k.mul(&rem[i + dn - 1], &lead_inv);
            if !k.is_zero(&c) {
                for (j, d) in den.coeffs.iter().enumerate() {
                    rem[i + j] = k.sub(&rem[i + j], &k.mul(&c, d));
                }
            }
            quot[i] = c;
        }
        rem.truncate(dn - 1);
        Ok((Self::from_coeffs(k, quot), Self::from_coeffs(k, rem)))
    }

    pub fn rem(&self, k: &F, den: &Self) -> Result<Self> {
        Ok(self.divrem(k, den)?.1)
    }

    /// Division that must be exact; a nonzero remainder is an error.
    pub fn exact_div(&self, k: &F, den: &Self) -> Result<Self> {
        let (q, r) = self.divrem(k, den)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::inconsistent("polynomial division is not exact"))
        }
    }

    /// Scales to leading coefficient one; the zero polynomial is returned as is.
    pub fn monic(&self, k: &F) -> Self {
        match self.leading() {
            Some(lc) if !k.is_one(lc) => {
                let inv = k.inv(lc).expect("leading coefficient is nonzero");
                self.scale(k, &inv)
            }
            _ => self.clone(),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(k: &F, a: &Self, b: &Self) -> Self {
        let mut a = a.monic(k);
        let mut b = b.monic(k);
        while !b.is_zero() {
            let r = a.rem(k, &b).expect("nonzero divisor");
            a = b;
            b = r.monic(k);
        }
        a
    }

    /// Returns `(g, u, v)` with `u*a + v*b = g` and `g` the monic gcd.
    pub fn ext_gcd(k: &F, a: &Self, b: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(k), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one(k));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(k, &r1).expect("nonzero divisor");
            // normalize each remainder to keep coefficients small
            let lc_inv = match r.leading() {
                Some(lc) => k.inv(lc).expect("nonzero"),
                None => k.one(),
            };
            let s = s0.sub(k, &q.mul(k, &s1)).scale(k, &lc_inv);
            let t = t0.sub(k, &q.mul(k, &t1)).scale(k, &lc_inv);
            r0 = std::mem::replace(&mut r1, r.scale(k, &lc_inv));
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading() {
            Some(lc) => {
                let inv = k.inv(lc).expect("nonzero");
                (r0.scale(k, &inv), s0.scale(k, &inv), t0.scale(k, &inv))
            }
            None => (r0, s0, t0),
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, k: &F, a: &F::Elem) -> F::Elem {
        self.coeffs
            .iter()
            .rev()
            .fold(k.zero(), |acc, c| k.add(&k.mul(&acc, a), c))
    }

    pub fn derivative(&self, k: &F) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| k.mul(&k.from_i64(i as i64), c))
            .collect();
        Self::from_coeffs(k, coeffs)
    }

    /// `self(x^m)`.
    pub fn inflate(&self, k: &F, m: usize) -> Self {
        assert!(m >= 1);
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![k.zero(); (self.coeffs.len() - 1) * m + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * m] = c.clone();
        }
        Poly { coeffs }
    }

    /// Maps every coefficient into another field.
    pub fn map<G: Field>(&self, g: &G, f: impl Fn(&F::Elem) -> G::Elem) -> Poly<G> {
        Poly::from_coeffs(g, self.coeffs.iter().map(f).collect())
    }

    /// Human-readable form in descending degree, parseable by [`crate::parse`]
    /// when `var` is `t` or `l`.
    pub fn format(&self, k: &F, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if k.is_zero(c) {
                continue;
            }
            let negative = k.is_negative(c);
            let mag = if negative { k.neg(c) } else { c.clone() };
            let body = k.format_elem(&mag);
            let term = if i == 0 {
                if negative && has_top_level_sum(&body) {
                    format!("({body})")
                } else {
                    body
                }
            } else {
                let mono = if i == 1 {
                    var.to_string()
                } else {
                    format!("{var}^{i}")
                };
                if k.is_one(&mag) {
                    mono
                } else if has_top_level_sum(&body) {
                    format!("({body})*{mono}")
                } else {
                    format!("{body}*{mono}")
                }
            };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&term);
        }
        out
    }
}

/// True when `s` contains a `+` or binary `-` outside parentheses.
pub(crate) fn has_top_level_sum(s: &str) -> bool {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && i > 0 => return true,
            _ => {}
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{PrimeField, Rationals};
    use num::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn qpoly(cs: &[(i64, i64)]) -> Poly<Rationals> {
        Poly::from_coeffs(&Rationals, cs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    /// X(x) = x^3 + 3x^2 + 57/64 x - 61/32 from the degree-3 worked example.
    fn example_minpoly() -> Poly<Rationals> {
        qpoly(&[(-61, 32), (57, 64), (3, 1), (1, 1)])
    }

    #[test]
    fn divrem_reproduces_worked_example() {
        let k = Rationals;
        let r = Poly::from_i64s(&k, &[-244, 236, 327, -64, -64]);
        let (s, rem) = r.divrem(&k, &example_minpoly()).unwrap();
        assert!(rem.is_zero());
        assert_eq!(s, Poly::from_i64s(&k, &[128, -64]));
    }

    #[test]
    fn divrem_by_unit_and_zero() {
        let k = Rationals;
        let f = Poly::from_i64s(&k, &[-408, -135, 0, 1]);
        let (qt, r) = f.divrem(&k, &Poly::one(&k)).unwrap();
        assert_eq!(qt, f);
        assert!(r.is_zero());
        assert_eq!(f.divrem(&k, &Poly::zero()), Err(Error::DivisionByZero));
        assert_eq!(f.mul(&k, &Poly::one(&k)), f);
    }

    #[test]
    fn gcd_of_multiple_recovers_factor() {
        let k = Rationals;
        let x = example_minpoly();
        let prod = Poly::from_i64s(&k, &[-2, 1]).mul(&k, &x);
        assert_eq!(Poly::gcd(&k, &prod, &x), x);
        assert_eq!(Poly::gcd(&k, &prod, &Poly::zero()), prod.monic(&k));
        assert!(Poly::<Rationals>::gcd(&k, &Poly::zero(), &Poly::zero()).is_zero());
    }

    #[test]
    fn coprime_gcd_over_f3_with_bezout() {
        let k = PrimeField::new(3).unwrap();
        let a = Poly::from_i64s(&k, &[1, 0, 1]);
        let b = Poly::from_i64s(&k, &[2, 0, 1]);
        let (g, u, v) = Poly::ext_gcd(&k, &a, &b);
        assert_eq!(g, Poly::one(&k));
        assert_eq!(u.mul(&k, &a).add(&k, &v.mul(&k, &b)), g);
    }

    #[test]
    fn evaluation_at_worked_example_root() {
        let k = Rationals;
        let r = Poly::from_i64s(&k, &[-244, 236, 327, -64, -64]);
        assert_eq!(r.eval(&k, &q(2, 1)), q(0, 1));
        let u = Poly::from_i64s(&k, &[-22, 5, 8]);
        let v = Poly::from_i64s(&k, &[-4]);
        let two = q(2, 1);
        assert_eq!(u.eval(&k, &two), q(20, 1));
        assert_eq!(v.eval(&k, &two), q(-4, 1));
        let yq = k.neg(&k.div(&u.eval(&k, &two), &v.eval(&k, &two)).unwrap());
        assert_eq!(yq, q(5, 1));
        assert_eq!(Poly::constant(&k, q(7, 3)).eval(&k, &q(-9, 1)), q(7, 3));
    }

    #[test]
    fn f3_factor_identity() {
        let k = PrimeField::new(3).unwrap();
        let x = Poly::from_i64s(&k, &[2, 1, 1, 1]);
        let r = Poly::from_i64s(&k, &[1, 0, 1, 1, 2]);
        let two_x_plus_two = Poly::from_i64s(&k, &[2, 2]);
        assert_eq!(two_x_plus_two.mul(&k, &x), r);
    }

    #[test]
    fn derivative_and_inflate() {
        let k = PrimeField::new(3).unwrap();
        let f = Poly::from_i64s(&k, &[1, 1, 1]);
        assert_eq!(f.derivative(&k), Poly::from_i64s(&k, &[1, 2]));
        let g = Poly::from_i64s(&k, &[2, 0, 0, 1]);
        assert!(g.derivative(&k).is_zero());
        assert_eq!(Poly::from_i64s(&k, &[2, 1]).inflate(&k, 3), g);
    }

    #[test]
    fn formatting() {
        let k = Rationals;
        assert_eq!(example_minpoly().format(&k, "x"), "x^3 + 3*x^2 + 57/64*x - 61/32");
        assert_eq!(
            qpoly(&[(-19, 4), (-11, 32), (1, 32)]).format(&k, "t"),
            "1/32*t^2 - 11/32*t - 19/4"
        );
        assert_eq!(Poly::from_i64s(&k, &[0, -1]).format(&k, "t"), "-t");
        assert_eq!(Poly::<Rationals>::zero().format(&k, "t"), "0");
    }

    #[test]
    fn top_level_sum_detection() {
        assert!(has_top_level_sum("l + 1"));
        assert!(!has_top_level_sum("-3/4"));
        assert!(!has_top_level_sum("(l + 1)/(l^2 + 1)"));
        assert!(has_top_level_sum("l^2 - l"));
    }
}
