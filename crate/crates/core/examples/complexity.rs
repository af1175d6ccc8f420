//! Running time against extension degree over `F_5`, with `T = t^n - 2`
//! for `n` a power of 2 and the curve `y^2 = x^3 + x + 1`.
//!
//! ```text
//! cargo run --release --example complexity
//! ```

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use elltrace::finite;
use elltrace::{ell_trace, Extension, Field, Poly, PrimeField, TraceProblem, WeierstrassCurve};

fn main() -> elltrace::Result<()> {
    let k = PrimeField::new(5)?;
    let curve = WeierstrassCurve::from_i64s(k, [0, 0, 0, 1, 1])?;
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut previous = None;
    for n in [16usize, 32, 64, 128, 256, 512] {
        let mut c = vec![0; n + 1];
        c[0] = 3;
        c[n] = 1;
        let t = Poly::from_coeffs(&k, c);
        let ext = Extension::new(k, t.clone())?;
        // θ has norm 3, a non-residue mod 5
        let theta = ext.generator();
        let (x, y) = loop {
            let x = finite::random_element(&ext, &mut rng);
            let rhs = ext.add(&ext.mul(&x, &ext.add(&ext.square(&x), &ext.one())), &ext.one());
            if let Some(y) = finite::sqrt_with_nonresidue(&ext, &rhs, &theta) {
                break (x, y);
            }
        };
        let problem = TraceProblem::new(curve.clone(), t, x, y)?;
        let start = Instant::now();
        let w = ell_trace(&problem, false)?;
        let secs = start.elapsed().as_secs_f64();
        let ratio = previous.map_or(String::new(), |p: f64| format!("  x{:.1}", secs / p));
        println!(
            "n = {n:>3}: {secs:>8.4} s  {:<15}{ratio}",
            w.branch().map_or("none", |b| b.name())
        );
        previous = Some(secs);
    }
    Ok(())
}
