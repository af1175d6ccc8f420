//! Helpers shared by the integration test targets. Each target uses a
//! different subset.
#![allow(dead_code)]

use std::path::PathBuf;

use elltrace::document::ProblemDocument;
use elltrace::finite::{self, FiniteField};
use elltrace::{
    CurvePoint, Extension, Field, GroundField, Matrix, Poly, PrimeField, RationalFunctions,
    Rationals, TraceProblem,
};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub fn fixture(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).expect("fixture exists")
}

pub fn fixture_problem<F: GroundField>(name: &str, k: &F) -> TraceProblem<F> {
    ProblemDocument::from_json(&fixture(name))
        .unwrap()
        .problem(k)
        .unwrap()
}

pub fn example1() -> TraceProblem<Rationals> {
    fixture_problem("example1.json", &Rationals)
}

pub fn example2() -> TraceProblem<PrimeField> {
    fixture_problem("example2.json", &PrimeField::new(3).unwrap())
}

pub fn f2l() -> RationalFunctions<PrimeField> {
    RationalFunctions::new(PrimeField::new(2).unwrap())
}

pub fn example3() -> TraceProblem<RationalFunctions<PrimeField>> {
    fixture_problem("example3.json", &f2l())
}

pub fn example4() -> TraceProblem<RationalFunctions<PrimeField>> {
    fixture_problem("example4.json", &f2l())
}

/// Rank by plain forward elimination, independent of the library's RREF.
pub fn rank<F: Field>(k: &F, m: &Matrix<F>) -> usize {
    let mut rows: Vec<Vec<F::Elem>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    let mut rank = 0;
    for c in 0..m.cols() {
        let Some(p) = (rank..rows.len()).find(|&i| !k.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = k.inv(&rows[rank][c]).unwrap();
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            let f = k.mul(&row[c], &inv);
            for (x, y) in row.iter_mut().zip(&pivot).skip(c) {
                *x = k.sub(x, &k.mul(&f, y));
            }
        }
        rank += 1;
    }
    rank
}

/// A root of `small`'s modulus in `big`, by trying every element of `big`.
pub fn embedding_root(small: &FiniteField, big: &FiniteField) -> Option<Poly<PrimeField>> {
    let t = small.modulus().map(big, |c| big.embed(*c));
    finite::elements(big)
        .into_iter()
        .find(|r| big.is_zero(&t.eval(big, r)))
}

/// Image of `a` under `θ_small -> root`.
pub fn embed(big: &FiniteField, a: &Poly<PrimeField>, root: &Poly<PrimeField>) -> Poly<PrimeField> {
    a.map(big, |c| big.embed(*c)).eval(big, root)
}

/// `P` presented as a problem over `ext`, or `None` for the point at infinity.
pub fn problem_for<F: Field>(
    base: &TraceProblem<F>,
    ext: &Extension<F>,
    p: &CurvePoint<Extension<F>>,
) -> Option<TraceProblem<F>> {
    let (x, y) = p.coords()?;
    Some(
        TraceProblem::new(
            base.curve().clone(),
            ext.modulus().clone(),
            x.clone(),
            y.clone(),
        )
        .unwrap(),
    )
}
