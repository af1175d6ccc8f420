//! Finite fields `F_p[t]/T(t)`: irreducibility, sampling, square roots and
//! Artin-Schreier equations.

use num::{BigUint, Integer, One};
use rand::Rng;

use crate::extension::Extension;
use crate::linalg::{kernel_echelon, Matrix};
use crate::poly::Poly;
use crate::{Field, PrimeField};

/// `F_q` presented as a simple extension of its prime field.
pub type FiniteField = Extension<PrimeField>;

/// `q = p^n`.
pub fn order(ext: &FiniteField) -> BigUint {
    num::pow(BigUint::from(ext.base().modulus()), ext.degree())
}

/// Ben-Or: `T` of degree `n` is irreducible iff `gcd(T, t^(p^i) - t) = 1`
/// for every `1 <= i <= n/2`.
pub fn is_irreducible(k: &PrimeField, t: &Poly<PrimeField>) -> bool {
    let n = match t.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let ext = Extension::new(*k, t.clone()).expect("degree >= 2");
    let x = ext.generator();
    let mut h = x.clone();
    for _ in 0..n / 2 {
        h = ext.pow(&h, k.modulus());
        let g = Poly::gcd(k, ext.modulus(), &h.sub(k, &x));
        if g.degree() != Some(0) {
            return false;
        }
    }
    true
}

pub fn random_monic<R: Rng + ?Sized>(k: &PrimeField, n: usize, rng: &mut R) -> Poly<PrimeField> {
    let mut c: Vec<u64> = (0..n).map(|_| rng.random_range(0..k.modulus())).collect();
    c.push(1);
    Poly::from_coeffs(k, c)
}

/// A uniformly random monic irreducible polynomial of degree `n >= 1`.
pub fn random_irreducible<R: Rng + ?Sized>(
    k: &PrimeField,
    n: usize,
    rng: &mut R,
) -> Poly<PrimeField> {
    assert!(n >= 1, "degree must be positive");
    loop {
        let t = random_monic(k, n, rng);
        if is_irreducible(k, &t) {
            return t;
        }
    }
}

pub fn random_element<R: Rng + ?Sized>(ext: &FiniteField, rng: &mut R) -> Poly<PrimeField> {
    let k = ext.base();
    let c = (0..ext.degree())
        .map(|_| rng.random_range(0..k.modulus()))
        .collect();
    Poly::from_coeffs(k, c)
}

/// Every element of `ext`, zero first. Meant for tiny fields.
pub fn elements(ext: &FiniteField) -> Vec<Poly<PrimeField>> {
    let k = ext.base();
    let p = k.modulus();
    let n = ext.degree();
    let count = p.checked_pow(n as u32).expect("field too large to enumerate");
    (0..count)
        .map(|mut i| {
            let c = (0..n)
                .map(|_| {
                    let d = i % p;
                    i /= p;
                    d
                })
                .collect();
            Poly::from_coeffs(k, c)
        })
        .collect()
}

/// `a^(p^times)`.
pub fn frobenius(ext: &FiniteField, a: &Poly<PrimeField>, times: usize) -> Poly<PrimeField> {
    let p = ext.base().modulus();
    (0..times).fold(a.clone(), |acc, _| ext.pow(&acc, p))
}

/// `sum_{i < n/k} w^(p^(k i))`, which lies in the subfield of degree `k`.
pub fn subfield_trace(ext: &FiniteField, w: &Poly<PrimeField>, k: usize) -> Poly<PrimeField> {
    let n = ext.degree();
    assert!(k >= 1 && n.is_multiple_of(k), "subfield degree must divide {n}");
    let mut sum = ext.zero();
    let mut cur = w.clone();
    for _ in 0..n / k {
        sum = ext.add(&sum, &cur);
        cur = frobenius(ext, &cur, k);
    }
    sum
}

/// Euler's criterion; zero counts as a square.
pub fn is_square(ext: &FiniteField, a: &Poly<PrimeField>) -> bool {
    if ext.characteristic() == 2 || a.is_zero() {
        return true;
    }
    let e = (order(ext) - 1u32) >> 1;
    ext.is_one(&ext.pow_big(a, &e))
}

/// A square root of `a`, or `None` if `a` is not a square. In odd
/// characteristic a non-residue is found by sampling.
pub fn sqrt<R: Rng + ?Sized>(
    ext: &FiniteField,
    a: &Poly<PrimeField>,
    rng: &mut R,
) -> Option<Poly<PrimeField>> {
    if ext.characteristic() == 2 {
        // squaring is bijective; its inverse is a -> a^(q/2)
        let e = order(ext) >> 1;
        return Some(ext.pow_big(a, &e));
    }
    let z = loop {
        let z = random_element(ext, rng);
        if !is_square(ext, &z) {
            break z;
        }
    };
    sqrt_with_nonresidue(ext, a, &z)
}

/// Tonelli-Shanks in odd characteristic given a quadratic non-residue `z`.
pub fn sqrt_with_nonresidue(
    ext: &FiniteField,
    a: &Poly<PrimeField>,
    z: &Poly<PrimeField>,
) -> Option<Poly<PrimeField>> {
    assert!(ext.characteristic() != 2, "Tonelli-Shanks needs odd characteristic");
    if a.is_zero() {
        return Some(ext.zero());
    }
    let q1 = order(ext) - 1u32;
    let s = q1.trailing_zeros().expect("q - 1 is nonzero") as u32;
    let m = &q1 >> s;
    // x = a^((m+1)/2), t = a^m
    let w = ext.pow_big(a, &((&m - BigUint::one()) >> 1));
    let mut x = ext.mul(a, &w);
    let mut t = ext.mul(&x, &w);
    // Euler's criterion: t^(2^(s-1)) = a^((q-1)/2)
    let mut e = t.clone();
    for _ in 1..s {
        e = ext.square(&e);
    }
    if !ext.is_one(&e) {
        return None;
    }
    let mut c = ext.pow_big(z, &m);
    let mut r = s;
    while !ext.is_one(&t) {
        let mut i = 0;
        let mut tt = t.clone();
        while !ext.is_one(&tt) {
            tt = ext.square(&tt);
            i += 1;
        }
        let mut b = c.clone();
        for _ in 0..r - i - 1 {
            b = ext.square(&b);
        }
        x = ext.mul(&x, &b);
        c = ext.square(&b);
        t = ext.mul(&t, &c);
        r = i;
    }
    debug_assert!(m.is_odd());
    Some(x)
}

/// A root of `z^2 + z = c` in characteristic 2, or `None`.
///
/// `z -> z^2 + z` is `F_2`-linear, so this is a linear system on the power
/// basis: a kernel vector of `[A | -c]` with last coordinate 1 is a solution.
pub fn solve_artin_schreier(ext: &FiniteField, c: &Poly<PrimeField>) -> Option<Poly<PrimeField>> {
    assert_eq!(ext.characteristic(), 2, "Artin-Schreier solver is for characteristic 2");
    let k = ext.base();
    let n = ext.degree();
    let th = ext.generator();
    let mut columns = Vec::with_capacity(n + 1);
    let mut power = ext.one();
    for _ in 0..n {
        columns.push(ext.coords(&ext.add(&ext.square(&power), &power)));
        power = ext.mul(&power, &th);
    }
    columns.push(ext.coords(&ext.neg(c)));
    let z = kernel_echelon(k, &Matrix::from_columns(n, &columns));
    let last = z.cols().checked_sub(1)?;
    let v = z.column(last);
    if k.is_zero(&v[n]) {
        return None;
    }
    Some(Poly::from_coeffs(k, v[..n].to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn count_irreducible(p: u64, n: usize) -> usize {
        let k = PrimeField::new(p).unwrap();
        let total = p.pow(n as u32);
        (0..total)
            .filter(|&i| {
                let mut i = i;
                let mut c: Vec<u64> = (0..n)
                    .map(|_| {
                        let d = i % p;
                        i /= p;
                        d
                    })
                    .collect();
                c.push(1);
                is_irreducible(&k, &Poly::from_coeffs(&k, c))
            })
            .count()
    }

    #[test]
    fn irreducible_counts_match_necklace_formula() {
        // (1/n) sum_{d | n} mu(d) p^(n/d)
        assert_eq!(count_irreducible(2, 4), 3);
        assert_eq!(count_irreducible(2, 6), 9);
        assert_eq!(count_irreducible(3, 2), 3);
        assert_eq!(count_irreducible(3, 4), 18);
        assert_eq!(count_irreducible(5, 3), 40);
    }

    #[test]
    fn binomial_moduli() {
        let k = PrimeField::new(5).unwrap();
        // 2 is a non-residue mod 5 and 5 = 1 mod 4
        for n in [2, 4, 8, 16] {
            let mut c = vec![0u64; n + 1];
            c[0] = 3;
            c[n] = 1;
            assert!(is_irreducible(&k, &Poly::from_coeffs(&k, c)));
        }
        let k = PrimeField::new(3).unwrap();
        assert!(!is_irreducible(&k, &Poly::from_i64s(&k, &[-1, 0, 0, 0, 1])));
    }

    #[test]
    fn square_roots() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in [2, 3, 5, 13, 101] {
            let k = PrimeField::new(p).unwrap();
            for n in 1..5 {
                let ext = Extension::new(k, random_irreducible(&k, n, &mut rng)).unwrap();
                for _ in 0..10 {
                    let a = random_element(&ext, &mut rng);
                    let sq = ext.square(&a);
                    let r = sqrt(&ext, &sq, &mut rng).unwrap();
                    assert_eq!(ext.square(&r), sq);
                }
            }
        }
    }

    #[test]
    fn non_squares_have_no_root() {
        let k = PrimeField::new(7).unwrap();
        let ext = Extension::new(k, Poly::from_i64s(&k, &[1, 0, 1])).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let squares: Vec<_> = elements(&ext).iter().map(|a| ext.square(a)).collect();
        for a in elements(&ext) {
            let r = sqrt(&ext, &a, &mut rng);
            assert_eq!(r.is_some(), squares.contains(&a));
        }
    }

    #[test]
    fn artin_schreier() {
        let k = PrimeField::new(2).unwrap();
        let ext = Extension::new(k, Poly::from_i64s(&k, &[1, 1, 0, 0, 1])).unwrap();
        let mut solvable = 0;
        for c in elements(&ext) {
            if let Some(z) = solve_artin_schreier(&ext, &c) {
                assert_eq!(ext.add(&ext.square(&z), &z), c);
                solvable += 1;
            }
        }
        // the image of z^2 + z is the trace-zero hyperplane
        assert_eq!(solvable, 8);
    }

    #[test]
    fn subfield_trace_lands_in_subfield() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let k = PrimeField::new(3).unwrap();
        let ext = Extension::new(k, random_irreducible(&k, 6, &mut rng)).unwrap();
        let w = random_element(&ext, &mut rng);
        for sub in [1, 2, 3] {
            let s = subfield_trace(&ext, &w, sub);
            assert_eq!(frobenius(&ext, &s, sub), s);
        }
        assert!(subfield_trace(&ext, &w, 1).is_constant());
    }

    #[test]
    fn enumeration_is_complete() {
        let k = PrimeField::new(3).unwrap();
        let ext = Extension::new(k, Poly::from_i64s(&k, &[1, 0, 1])).unwrap();
        let all = elements(&ext);
        assert_eq!(all.len(), 9);
        assert_eq!(order(&ext), BigUint::from(9u32));
        for (i, a) in all.iter().enumerate() {
            assert!(!all[i + 1..].contains(a));
        }
    }
}
