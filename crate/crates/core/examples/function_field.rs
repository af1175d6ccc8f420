//! A trace over the rational function field `F_2(l)` in characteristic 2
//! with `a1 != 0`, showing the intermediate polynomials.
//!
//! ```text
//! cargo run --example function_field
//! ```

use elltrace::parse::{parse_poly, parse_scalar};
use elltrace::{ell_trace, PrimeField, RationalFunctions, TraceProblem, WeierstrassCurve};

fn main() -> elltrace::Result<()> {
    let k = RationalFunctions::new(PrimeField::new(2)?);
    let a = ["l", "l", "1", "l", "0"].map(|s| parse_scalar(&k, s).unwrap());
    let curve = WeierstrassCurve::new(k, a)?;
    let problem = TraceProblem::new(
        curve,
        parse_poly(&k, "t^5 + l*t^3 + l*t + l")?,
        parse_poly(&k, "t^4 + l*t^2 + t + l")?,
        parse_poly(&k, "l*t^4 + t^3 + l^2*t^2 + l^2 + 1")?,
    )?;
    let w = ell_trace(&problem, true)?;
    let r = w.sep.as_ref().expect("recorded");
    for (name, p) in [("U", &r.u), ("V", &r.v), ("X", &r.minpoly), ("S", &r.s)] {
        if let Some(p) = p {
            println!("{name} = {}", p.format(&k, "x"));
        }
    }
    println!("d_P = {}", r.d_p.unwrap());
    println!("Tr(P) = {}", problem.curve().format_point(&w.result));
    Ok(())
}
