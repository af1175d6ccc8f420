use std::fmt;

use num::BigInt;

use super::{BaseField, FieldDescriptor, GroundField};
use crate::error::{Error, Result};
use crate::poly::{has_top_level_sum, Poly};
use crate::Field;

/// The field `k(l)` of rational functions in one indeterminate over `k`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct RationalFunctions<B: BaseField> {
    base: B,
}

/// `num / den` with `gcd(num, den) = 1` and `den` monic; zero is `0/1`.
pub struct RatFunc<B: Field> {
    num: Poly<B>,
    den: Poly<B>,
}

impl<B: Field> RatFunc<B> {
    pub fn numerator(&self) -> &Poly<B> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<B> {
        &self.den
    }
}

impl<B: Field> Clone for RatFunc<B> {
    fn clone(&self) -> Self {
        RatFunc {
            num: self.num.clone(),
            den: self.den.clone(),
        }
    }
}

impl<B: Field> PartialEq for RatFunc<B> {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}

impl<B: Field> Eq for RatFunc<B> {}

impl<B: Field> fmt::Debug for RatFunc<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({:?} / {:?})", self.num, self.den)
    }
}

impl<B: BaseField> RationalFunctions<B> {
    pub fn new(base: B) -> Self {
        RationalFunctions { base }
    }

    pub fn base(&self) -> &B {
        &self.base
    }

    /// Reduces `num/den` to canonical form.
    pub fn fraction(&self, num: Poly<B>, den: Poly<B>) -> Result<RatFunc<B>> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let k = &self.base;
        if num.is_zero() {
            return Ok(self.zero());
        }
        let g = Poly::gcd(k, &num, &den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.exact_div(k, &g).expect("gcd divides"),
                den.exact_div(k, &g).expect("gcd divides"),
            )
        };
        let lc = den.leading().expect("nonzero").clone();
        if !k.is_one(&lc) {
            let inv = k.inv(&lc).expect("nonzero");
            num = num.scale(k, &inv);
            den = den.scale(k, &inv);
        }
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(&self, num: Poly<B>) -> RatFunc<B> {
        RatFunc {
            num,
            den: Poly::one(&self.base),
        }
    }

    pub fn from_base(&self, c: B::Elem) -> RatFunc<B> {
        self.from_poly(Poly::constant(&self.base, c))
    }

    fn format_part(&self, p: &Poly<B>) -> String {
        let s = p.format(&self.base, "l");
        if has_top_level_sum(&s) {
            format!("({s})")
        } else {
            s
        }
    }
}

impl<B: BaseField> Field for RationalFunctions<B> {
    type Elem = RatFunc<B>;

    fn zero(&self) -> RatFunc<B> {
        self.from_poly(Poly::zero())
    }

    fn one(&self) -> RatFunc<B> {
        self.from_poly(Poly::one(&self.base))
    }

    fn is_zero(&self, a: &RatFunc<B>) -> bool {
        a.num.is_zero()
    }

    fn is_one(&self, a: &RatFunc<B>) -> bool {
        a.den.is_constant() && a.num.degree() == Some(0) && self.base.is_one(&a.num.coeffs()[0])
    }

    fn add(&self, a: &RatFunc<B>, b: &RatFunc<B>) -> RatFunc<B> {
        let k = &self.base;
        if a.den == b.den {
            return self
                .fraction(a.num.add(k, &b.num), a.den.clone())
                .expect("nonzero denominator");
        }
        let num = a.num.mul(k, &b.den).add(k, &b.num.mul(k, &a.den));
        self.fraction(num, a.den.mul(k, &b.den))
            .expect("nonzero denominator")
    }

    fn sub(&self, a: &RatFunc<B>, b: &RatFunc<B>) -> RatFunc<B> {
        self.add(a, &self.neg(b))
    }

    fn neg(&self, a: &RatFunc<B>) -> RatFunc<B> {
        RatFunc {
            num: a.num.neg(&self.base),
            den: a.den.clone(),
        }
    }

    fn mul(&self, a: &RatFunc<B>, b: &RatFunc<B>) -> RatFunc<B> {
        let k = &self.base;
        if a.num.is_zero() || b.num.is_zero() {
            return self.zero();
        }
        // cross-cancel before multiplying
        let g1 = Poly::gcd(k, &a.num, &b.den);
        let g2 = Poly::gcd(k, &b.num, &a.den);
        let n1 = a.num.exact_div(k, &g1).expect("gcd divides");
        let d2 = b.den.exact_div(k, &g1).expect("gcd divides");
        let n2 = b.num.exact_div(k, &g2).expect("gcd divides");
        let d1 = a.den.exact_div(k, &g2).expect("gcd divides");
        self.fraction(n1.mul(k, &n2), d1.mul(k, &d2))
            .expect("nonzero denominator")
    }

    fn inv(&self, a: &RatFunc<B>) -> Result<RatFunc<B>> {
        if a.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.fraction(a.den.clone(), a.num.clone())
    }

    fn from_i64(&self, n: i64) -> RatFunc<B> {
        self.from_base(self.base.from_i64(n))
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn format_elem(&self, a: &RatFunc<B>) -> String {
        if a.den.is_constant() {
            return a.num.format(&self.base, "l");
        }
        format!("{}/{}", self.format_part(&a.num), self.format_part(&a.den))
    }

    fn is_negative(&self, a: &RatFunc<B>) -> bool {
        a.num
            .leading()
            .is_some_and(|lc| self.base.is_negative(lc))
    }
}

impl<B: BaseField> GroundField for RationalFunctions<B> {
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::RationalFunctions {
            base: Box::new(self.base.descriptor()),
        }
    }

    fn from_bigint(&self, n: &BigInt) -> RatFunc<B> {
        self.from_base(self.base.from_bigint(n))
    }

    fn indeterminate(&self) -> Option<RatFunc<B>> {
        Some(self.from_poly(Poly::x(&self.base)))
    }
}
