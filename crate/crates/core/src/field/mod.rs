//! Exact fields.
//!
//! Every algorithm in this crate is generic over [`Field`], a context object
//! that owns the arithmetic while elements stay plain values. Three ground
//! fields are provided: [`Rationals`], [`PrimeField`] and
//! [`RationalFunctions`] over either of those. Simple extensions
//! ([`crate::Extension`]) implement [`Field`] as well, so the curve code runs
//! unchanged over `K` and over `K[t]/T(t)`.

mod prime;
mod ratfunc;
mod rational;

use std::fmt;

use num::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use prime::{is_prime_u64, PrimeField};
pub use ratfunc::{RatFunc, RationalFunctions};
pub use rational::Rationals;

/// Exact arithmetic on the elements of one field.
///
/// Elements are in canonical form, so `==` on elements is field equality.
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + fmt::Debug {
    type Elem: Clone + PartialEq + Eq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse; `DivisionByZero` on zero.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn from_i64(&self, n: i64) -> Self::Elem;

    /// 0 or the prime `p`.
    fn characteristic(&self) -> u64;

    fn square(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(a, a)
    }

    fn pow(&self, a: &Self::Elem, mut n: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.square(&base);
            }
        }
        acc
    }

    fn pow_big(&self, a: &Self::Elem, n: &BigUint) -> Self::Elem {
        let mut acc = self.one();
        for i in (0..n.bits()).rev() {
            acc = self.square(&acc);
            if n.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    /// `sum a_i * b_i`. Fields with cheap lazy reduction override this.
    fn dot<'a, I>(&self, pairs: I) -> Self::Elem
    where
        I: IntoIterator<Item = (&'a Self::Elem, &'a Self::Elem)>,
        Self::Elem: 'a,
    {
        pairs
            .into_iter()
            .fold(self.zero(), |acc, (a, b)| self.add(&acc, &self.mul(a, b)))
    }

    /// Text in the element grammar accepted by [`crate::parse`].
    fn format_elem(&self, a: &Self::Elem) -> String;

    /// Whether `a` prints with a leading minus sign.
    fn is_negative(&self, _a: &Self::Elem) -> bool {
        false
    }
}

/// A field that can appear as the ground field `K` of a problem: it has a
/// descriptor and its elements can be built from integer literals and the
/// function-field indeterminate.
#[allow(clippy::wrong_self_convention)]
pub trait GroundField: Field {
    fn descriptor(&self) -> FieldDescriptor;

    fn from_bigint(&self, n: &BigInt) -> Self::Elem;

    /// The indeterminate `l` of a rational function field.
    fn indeterminate(&self) -> Option<Self::Elem> {
        None
    }
}

/// Ground fields that may serve as the constants of a rational function
/// field. Function fields of function fields are not supported.
pub trait BaseField: GroundField {}

impl BaseField for Rationals {}
impl BaseField for PrimeField {}

/// Serializable description of a ground field.
///
/// JSON form: `{"kind":"Q"}`, `{"kind":"Fp","p":3}` or
/// `{"kind":"RatFunc","base":{"kind":"Fp","p":2}}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldDescriptor {
    #[serde(rename = "Q")]
    Rationals,
    #[serde(rename = "Fp")]
    PrimeField { p: u64 },
    #[serde(rename = "RatFunc")]
    RationalFunctions { base: Box<FieldDescriptor> },
}

impl FieldDescriptor {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Rationals => 0,
            FieldDescriptor::PrimeField { p } => *p,
            FieldDescriptor::RationalFunctions { base } => base.characteristic(),
        }
    }

    /// Checks primality of `p` and the no-nesting rule.
    pub fn validate(&self) -> Result<()> {
        match self {
            FieldDescriptor::Rationals => Ok(()),
            FieldDescriptor::PrimeField { p } => {
                if is_prime_u64(*p) {
                    Ok(())
                } else {
                    Err(Error::InvalidField(format!("{p} is not prime")))
                }
            }
            FieldDescriptor::RationalFunctions { base } => match **base {
                FieldDescriptor::RationalFunctions { .. } => Err(Error::InvalidField(
                    "nested rational function fields are not supported".into(),
                )),
                _ => base.validate(),
            },
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::PrimeField { p } => write!(f, "F_{p}"),
            FieldDescriptor::RationalFunctions { base } => write!(f, "{base}(l)"),
        }
    }
}
