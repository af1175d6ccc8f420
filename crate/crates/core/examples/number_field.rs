//! Building a problem through the API: a point of `y^2 = x^3 + x + 15`
//! defined over the cubic field `Q[t]/(t^3 - 135 t - 408)`.
//!
//! ```text
//! cargo run --example number_field
//! ```

use elltrace::parse::parse_poly;
use elltrace::{ell_trace, Rationals, TraceProblem, WeierstrassCurve};

fn main() -> elltrace::Result<()> {
    let k = Rationals;
    let curve = WeierstrassCurve::from_i64s(k, [0, 0, 0, 1, 15])?;
    let problem = TraceProblem::new(
        curve,
        parse_poly(&k, "t^3 - 135*t - 408")?,
        parse_poly(&k, "t/8 - 1")?,
        parse_poly(&k, "t^2/32 - 11*t/32 - 19/4")?,
    )?;
    let big = problem.curve_over_extension();
    println!("P = {}", big.format_point(&problem.point()));

    let w = ell_trace(&problem, true)?;
    let sep = w.sep.as_ref().expect("recorded");
    println!("branch {}", w.branch().map_or("none", |b| b.name()));
    println!("minimal polynomial of x(P): {}", sep.minpoly.as_ref().unwrap().format(&k, "x"));
    println!("Tr(P) = {}", problem.curve().format_point(&w.result));
    Ok(())
}
