//! The chord-and-tangent group law over a prime field and over one of its
//! extensions, including a curve with `a1 != 0` in characteristic 2.
//!
//! ```text
//! cargo run --example group_law
//! ```

use elltrace::finite;
use elltrace::{CurvePoint, Extension, Field, Poly, PrimeField, WeierstrassCurve};

fn main() -> elltrace::Result<()> {
    let f5 = PrimeField::new(5)?;
    let e = WeierstrassCurve::from_i64s(f5, [0, 0, 0, 1, 1])?;
    let pts = e.points_over(&(0..5).collect::<Vec<_>>());
    let shown: Vec<String> = pts.iter().map(|p| e.format_point(p)).collect();
    println!("y^2 = x^3 + x + 1 over F_5 has {} points: {}", pts.len(), shown.join(" "));
    let p = e.point(0, 1)?;
    for n in 1..=pts.len() as i64 {
        println!("  [{n}](0, 1) = {}", e.format_point(&e.mul(n, &p)?));
    }

    let f2 = PrimeField::new(2)?;
    let f16 = Extension::new(f2, Poly::from_i64s(&f2, &[1, 1, 0, 0, 1]))?;
    let g = f16.generator();
    let e16 = WeierstrassCurve::new(
        f16.clone(),
        [f16.one(), f16.zero(), f16.zero(), f16.zero(), g],
    )?;
    let pts = e16.points_over(&finite::elements(&f16));
    let orders: Vec<usize> = pts
        .iter()
        .map(|p| {
            (1..=pts.len())
                .find(|&n| e16.mul(n as i64, p).unwrap() == CurvePoint::Infinity)
                .unwrap()
        })
        .collect();
    println!(
        "y^2 + xy = x^3 + θ over F_16 has {} points; orders {:?}",
        pts.len(),
        orders
    );
    Ok(())
}
