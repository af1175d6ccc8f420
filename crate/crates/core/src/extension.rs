//! Simple extensions `L = K[t]/T(t)`.
//!
//! Elements are polynomials of degree `< deg T`, always fully reduced. The
//! modulus is stored monic. Irreducibility of `T` is the caller's
//! responsibility; a violation shows up as [`Error::ReducibleModulus`] when a
//! zero divisor is inverted. Over prime fields it can be checked up front with
//! [`crate::finite::is_irreducible`].

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::Field;

pub struct Extension<F: Field> {
    base: F,
    modulus: Poly<F>,
    /// Nonzero coefficients of the modulus below its leading term.
    tail: Vec<(usize, F::Elem)>,
}

impl<F: Field> Clone for Extension<F> {
    fn clone(&self) -> Self {
        Extension {
            base: self.base.clone(),
            modulus: self.modulus.clone(),
            tail: self.tail.clone(),
        }
    }
}

impl<F: Field> fmt::Debug for Extension<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Extension")
            .field("base", &self.base)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl<F: Field> Extension<F> {
    /// `modulus` may be non-monic; it must have degree at least one.
    pub fn new(base: F, modulus: Poly<F>) -> Result<Self> {
        match modulus.degree() {
            None | Some(0) => {
                return Err(Error::Usage(
                    "extension modulus must have degree at least 1".into(),
                ))
            }
            Some(_) => {}
        }
        let modulus = modulus.monic(&base);
        let d = modulus.degree().unwrap();
        let tail = modulus.coeffs()[..d]
            .iter()
            .enumerate()
            .filter(|(_, c)| !base.is_zero(c))
            .map(|(i, c)| (i, c.clone()))
            .collect();
        Ok(Extension {
            base,
            modulus,
            tail,
        })
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    /// The monic modulus `T`.
    pub fn modulus(&self) -> &Poly<F> {
        &self.modulus
    }

    /// `[L : K] = deg T`.
    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    /// Reduces an arbitrary polynomial modulo `T`.
    pub fn element(&self, p: &Poly<F>) -> Poly<F> {
        if p.coeffs().len() <= self.degree() {
            return p.clone();
        }
        self.reduce(p.coeffs().to_vec())
    }

    fn reduce(&self, mut c: Vec<F::Elem>) -> Poly<F> {
        let k = &self.base;
        let d = self.degree();
        for i in (d..c.len()).rev() {
            if k.is_zero(&c[i]) {
                continue;
            }
            let lead = std::mem::replace(&mut c[i], k.zero());
            for (j, t) in &self.tail {
                let idx = i - d + j;
                c[idx] = k.sub(&c[idx], &k.mul(&lead, t));
            }
        }
        c.truncate(d);
        Poly::from_coeffs(k, c)
    }

    /// The class `θ` of `t`.
    pub fn generator(&self) -> Poly<F> {
        self.element(&Poly::x(&self.base))
    }

    pub fn embed(&self, c: F::Elem) -> Poly<F> {
        Poly::constant(&self.base, c)
    }

    /// Coordinates on the power basis `1, θ, ..., θ^(d-1)`.
    pub fn coords(&self, a: &Poly<F>) -> Vec<F::Elem> {
        (0..self.degree()).map(|i| a.coeff(&self.base, i)).collect()
    }

    /// True when `a` lies in `K`.
    pub fn is_in_base(&self, a: &Poly<F>) -> bool {
        a.is_constant()
    }

    /// Given `a` in the subfield `K(θ^pd)` with `[K(θ^pd) : K] = target_deg`,
    /// returns `q` with `deg q < target_deg` and `a = q(θ^pd)`.
    ///
    /// Coefficient `n` of `q` is coefficient `n * pd` of `a`; every other
    /// coefficient of `a` must vanish.
    pub fn subfield_coeffs(&self, a: &Poly<F>, pd: usize, target_deg: usize) -> Result<Poly<F>> {
        if pd == 0 || !self.degree().is_multiple_of(pd) || self.degree() / pd != target_deg {
            return Err(Error::Usage(format!(
                "subfield step {pd} with target degree {target_deg} does not fit degree {}",
                self.degree()
            )));
        }
        let k = &self.base;
        let mut out = Vec::with_capacity(target_deg);
        for (i, c) in a.coeffs().iter().enumerate() {
            if i % pd == 0 {
                out.push(c.clone());
            } else if !k.is_zero(c) {
                return Err(Error::NotInSubfield { index: i });
            }
        }
        Ok(Poly::from_coeffs(k, out))
    }
}

impl<F: Field> Field for Extension<F> {
    type Elem = Poly<F>;

    fn zero(&self) -> Poly<F> {
        Poly::zero()
    }

    fn one(&self) -> Poly<F> {
        Poly::one(&self.base)
    }

    fn is_zero(&self, a: &Poly<F>) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        a.add(&self.base, b)
    }

    fn sub(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        a.sub(&self.base, b)
    }

    fn neg(&self, a: &Poly<F>) -> Poly<F> {
        a.neg(&self.base)
    }

    fn mul(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        let prod = a.mul(&self.base, b);
        if prod.coeffs().len() <= self.degree() {
            prod
        } else {
            self.reduce(prod.into_coeffs())
        }
    }

    /// Inverse through the extended gcd with `T`; a nontrivial gcd means `T`
    /// is reducible.
    fn inv(&self, a: &Poly<F>) -> Result<Poly<F>> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if a.is_constant() {
            let c = self.base.inv(&a.coeffs()[0])?;
            return Ok(self.embed(c));
        }
        let (g, u, _) = Poly::ext_gcd(&self.base, a, &self.modulus);
        if g.degree() != Some(0) {
            return Err(Error::ReducibleModulus);
        }
        Ok(self.element(&u))
    }

    fn from_i64(&self, n: i64) -> Poly<F> {
        self.embed(self.base.from_i64(n))
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn format_elem(&self, a: &Poly<F>) -> String {
        a.format(&self.base, "t")
    }

    fn is_negative(&self, a: &Poly<F>) -> bool {
        a.leading().is_some_and(|c| self.base.is_negative(c))
    }
}
