//! Inseparable extensions of `F_p(l)`: the modulus is rewritten as
//! `S(t^(p^d))`, `P` is multiplied by `p^d`, and the separable algorithm runs
//! on the smaller field. Also checks that inflating a modulus multiplies the
//! trace by `p`.
//!
//! ```text
//! cargo run --example inseparable
//! ```

use elltrace::document::{format_witness, ProblemDocument};
use elltrace::{ell_trace, PrimeField, RationalFunctions, TraceProblem};

fn main() -> elltrace::Result<()> {
    let k = RationalFunctions::new(PrimeField::new(2)?);
    let doc = ProblemDocument::from_json(include_str!("../fixtures/example4.json"))?;
    let problem = doc.problem(&k)?;
    print!("{}", format_witness(&problem, &ell_trace(&problem, true)?));

    let base = ProblemDocument::from_json(include_str!("../fixtures/example3.json"))?.problem(&k)?;
    let tower = TraceProblem::new(
        base.curve().clone(),
        base.modulus().inflate(&k, 2),
        base.x().inflate(&k, 2),
        base.y().inflate(&k, 2),
    )?;
    let e = base.curve();
    let t = ell_trace(&base, false)?.result;
    let t2 = ell_trace(&tower, false)?.result;
    println!();
    println!("Tr over T(t)   = {}", e.format_point(&t));
    println!("Tr over T(t^2) = {}", e.format_point(&t2));
    println!("[2] Tr over T  = {}", e.format_point(&e.double(&t)?));
    Ok(())
}
