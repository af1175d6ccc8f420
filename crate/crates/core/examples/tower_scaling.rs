//! A point defined over `F_(p^a)` presented in `F_(p^(ab))` has `b` times the
//! trace.
//!
//! ```text
//! cargo run --example tower_scaling
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use elltrace::finite::{self, FiniteField};
use elltrace::oracle::{random_curve, random_point, PointKind};
use elltrace::{ell_trace, Extension, Field, Poly, PrimeField, TraceProblem};

/// Image of `a` under the embedding sending the small generator to `root`.
fn embed(big: &FiniteField, a: &Poly<PrimeField>, root: &Poly<PrimeField>) -> Poly<PrimeField> {
    a.map(big, |c| big.embed(*c)).eval(big, root)
}

fn main() -> elltrace::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let k = PrimeField::new(3)?;
    let small = Extension::new(k, finite::random_irreducible(&k, 2, &mut rng))?;
    let big = Extension::new(k, finite::random_irreducible(&k, 6, &mut rng))?;
    let lifted = small.modulus().map(&big, |c| big.embed(*c));
    let root = finite::elements(&big)
        .into_iter()
        .find(|r| big.is_zero(&lifted.eval(&big, r)))
        .expect("F_9 embeds in F_729");

    for _ in 0..3 {
        let curve = random_curve(&k, &mut rng);
        let (p, _) = random_point(&curve.over(&small), PointKind::General, &mut rng)?;
        let (x, y) = p.coords().expect("affine");
        let over_small = TraceProblem::new(curve.clone(), small.modulus().clone(), x.clone(), y.clone())?;
        let over_big = TraceProblem::new(
            curve.clone(),
            big.modulus().clone(),
            embed(&big, x, &root),
            embed(&big, y, &root),
        )?;
        let t = ell_trace(&over_small, false)?.result;
        let t3 = ell_trace(&over_big, false)?.result;
        println!(
            "Tr_F9 = {:<10} Tr_F729 = {:<10} [3] Tr_F9 = {}",
            curve.format_point(&t),
            curve.format_point(&t3),
            curve.format_point(&curve.mul(3, &t)?)
        );
    }
    Ok(())
}
