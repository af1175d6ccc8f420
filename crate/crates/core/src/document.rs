//! JSON problem documents and the text output of the `trace` command.
//!
//! ```json
//! {
//!   "field": {"kind": "Fp", "p": 3},
//!   "curve": ["0", "1", "0", "0", "1"],
//!   "modulus": "t^6 + t^5 + t^4 + t^3 + t^2 + t + 1",
//!   "x": "t^5 + t^2",
//!   "y": "t^4 + t^3 + 2"
//! }
//! ```
//!
//! `curve` lists `a1, a2, a3, a4, a6`. All strings use the element grammar
//! of [`crate::parse`].

use serde::{Deserialize, Serialize};

use crate::curve::WeierstrassCurve;
use crate::error::{Error, Result};
use crate::finite;
use crate::linalg::Matrix;
use crate::parse::{parse_poly, parse_scalar};
use crate::poly::Poly;
use crate::trace::{ell_trace, TraceProblem, TraceWitness};
use crate::{
    Field, FieldDescriptor, GroundField, PrimeField, RationalFunctions, Rationals,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    pub field: FieldDescriptor,
    pub curve: [String; 5],
    pub modulus: String,
    pub x: String,
    pub y: String,
}

const CURVE_KEYS: [&str; 5] = ["a1", "a2", "a3", "a4", "a6"];

fn in_key(key: &str, e: Error) -> Error {
    match e {
        Error::Parse { position, message } => Error::Parse {
            position,
            message: format!("in {key}: {message}"),
        },
        other => other,
    }
}

impl ProblemDocument {
    /// JSON errors report the line and column; element errors report the
    /// key and the offset within its string.
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| {
            let offset = text
                .split_inclusive('\n')
                .take(e.line().saturating_sub(1))
                .map(str::len)
                .sum::<usize>()
                + e.column().saturating_sub(1);
            Error::parse(offset, format!("line {}, column {}: {e}", e.line(), e.column()))
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain strings serialize")
    }

    /// The document describing `problem`.
    pub fn from_problem<F: GroundField>(problem: &TraceProblem<F>) -> Self {
        let k = problem.curve().field();
        ProblemDocument {
            field: k.descriptor(),
            curve: problem.curve().coefficients().map(|a| k.format_elem(a)),
            modulus: problem.modulus().format(k, "t"),
            x: problem.x().format(k, "t"),
            y: problem.y().format(k, "t"),
        }
    }

    /// Builds the problem over `k`, which must match the document's field.
    pub fn problem<F: GroundField>(&self, k: &F) -> Result<TraceProblem<F>> {
        if k.descriptor() != self.field {
            return Err(Error::Usage(format!(
                "document is over {}, not {}",
                self.field,
                k.descriptor()
            )));
        }
        let mut a = Vec::with_capacity(5);
        for (key, text) in CURVE_KEYS.iter().zip(&self.curve) {
            a.push(parse_scalar(k, text).map_err(|e| in_key(key, e))?);
        }
        let a: [F::Elem; 5] = a.try_into().expect("five coefficients");
        let curve = WeierstrassCurve::new(k.clone(), a)?;
        let modulus = parse_poly(k, &self.modulus).map_err(|e| in_key("modulus", e))?;
        let x = parse_poly(k, &self.x).map_err(|e| in_key("x", e))?;
        let y = parse_poly(k, &self.y).map_err(|e| in_key("y", e))?;
        TraceProblem::new(curve, modulus, x, y)
    }
}

/// Parses a document, computes the trace and renders it: the point alone,
/// or with `witness` the full `key: value` listing ending in `result`.
pub fn run_trace(text: &str, witness: bool) -> Result<String> {
    let doc = ProblemDocument::from_json(text)?;
    doc.field.validate()?;
    match &doc.field {
        FieldDescriptor::Rationals => render(&doc, &Rationals, witness),
        FieldDescriptor::PrimeField { p } => {
            let k = PrimeField::new(*p)?;
            let problem = doc.problem(&k)?;
            if !finite::is_irreducible(&k, problem.modulus()) {
                return Err(Error::ReducibleModulus);
            }
            render_problem(&problem, witness)
        }
        FieldDescriptor::RationalFunctions { base } => match **base {
            FieldDescriptor::Rationals => {
                render(&doc, &RationalFunctions::new(Rationals), witness)
            }
            FieldDescriptor::PrimeField { p } => {
                render(&doc, &RationalFunctions::new(PrimeField::new(p)?), witness)
            }
            FieldDescriptor::RationalFunctions { .. } => unreachable!("rejected by validate"),
        },
    }
}

fn render<F: GroundField>(doc: &ProblemDocument, k: &F, witness: bool) -> Result<String> {
    render_problem(&doc.problem(k)?, witness)
}

fn render_problem<F: GroundField>(problem: &TraceProblem<F>, witness: bool) -> Result<String> {
    let w = ell_trace(problem, witness)?;
    if witness {
        Ok(format_witness(problem, &w))
    } else {
        Ok(format!("{}\n", problem.curve().format_point(&w.result)))
    }
}

fn join<F: Field>(k: &F, v: &[F::Elem]) -> String {
    v.iter().map(|c| k.format_elem(c)).collect::<Vec<_>>().join(", ")
}

fn push(out: &mut String, key: &str, value: impl AsRef<str>) {
    out.push_str(key);
    out.push_str(": ");
    out.push_str(value.as_ref());
    out.push('\n');
}

fn push_matrix<F: Field>(out: &mut String, k: &F, m: &Matrix<F>) {
    push(out, "M.size", format!("{}x{}", m.rows(), m.cols()));
    for i in 0..m.rows() {
        push(out, &format!("M[{i}]"), join(k, m.row(i)));
    }
}

/// The intermediate record as stable `key: value` lines. Polynomials in the
/// curve coordinate use `x`; elements of `L` use `t`.
pub fn format_witness<F: GroundField>(problem: &TraceProblem<F>, w: &TraceWitness<F>) -> String {
    let k = problem.curve().field();
    let ext = problem.extension();
    let big = problem.curve_over_extension();
    let mut out = String::new();
    push(&mut out, "field", k.descriptor().to_string());
    push(&mut out, "degree", problem.degree().to_string());
    if let Some(r) = &w.insep {
        push(&mut out, "p", r.p.to_string());
        push(&mut out, "insep.d", r.d.to_string());
        push(&mut out, "insep.S", r.s.format(k, "t"));
        if r.d > 0 {
            push(&mut out, "insep.Q", big.format_point(&r.q));
            if let (Some(xq), Some(yq)) = (&r.xq, &r.yq) {
                push(&mut out, "insep.xQ", xq.format(k, "t"));
                push(&mut out, "insep.yQ", yq.format(k, "t"));
            }
        }
    }
    let branch = w.branch.map_or("none", |b| b.name());
    push(&mut out, "branch", branch);
    if let Some(r) = &w.sep {
        if let Some(values) = &r.values {
            push(&mut out, "L", join(ext, values));
        }
        if let Some(m) = &r.matrix {
            push_matrix(&mut out, k, m);
        }
        if let Some(z) = &r.kernel {
            push(&mut out, "Z", join(k, z));
        }
        let polys: [(&str, &Option<Poly<F>>); 5] = [
            ("U", &r.u),
            ("V", &r.v),
            ("X", &r.minpoly),
            ("R", &r.r),
            ("S", &r.s),
        ];
        for (key, p) in polys {
            if let Some(p) = p {
                push(&mut out, key, p.format(k, "x"));
            }
        }
        if let Some(q) = &r.q {
            push(&mut out, "Q", problem.curve().format_point(q));
        }
        if let Some(d_p) = r.d_p {
            push(&mut out, "d_P", d_p.to_string());
        }
        if let Some(m) = r.multiplier {
            push(&mut out, "multiplier", m.to_string());
        }
    }
    push(&mut out, "result", problem.curve().format_point(&w.result));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE1: &str = r#"{
        "field": {"kind": "Q"},
        "curve": ["0", "0", "0", "1", "15"],
        "modulus": "t^3 - 135*t - 408",
        "x": "t/8 - 1",
        "y": "t^2/32 - 11*t/32 - 19/4"
    }"#;

    #[test]
    fn example1_document() {
        assert_eq!(run_trace(EXAMPLE1, false).unwrap(), "(2, -5)\n");
        let w = run_trace(EXAMPLE1, true).unwrap();
        assert!(w.contains("d_P: 3\n"), "{w}");
        assert!(w.ends_with("result: (2, -5)\n"));
    }

    #[test]
    fn off_curve_document_names_residual() {
        let doc = EXAMPLE1.replace("19/4", "17/4");
        let err = run_trace(&doc, false).unwrap_err();
        assert!(matches!(err, Error::NotOnCurve { .. }), "{err}");
        assert!(err.to_string().contains("residual"));
    }

    #[test]
    fn json_errors_have_line_and_column() {
        let err = run_trace("{\n  \"field\": }", false).unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        let doc = EXAMPLE1.replace("t/8 - 1", "t/8 - ");
        let err = run_trace(&doc, false).unwrap_err();
        assert!(err.to_string().contains("in x"), "{err}");
    }

    #[test]
    fn reducible_modulus_over_prime_field_is_rejected() {
        let doc = r#"{"field":{"kind":"Fp","p":5},"curve":["0","0","0","1","2"],
            "modulus":"t^2 - 1","x":"t","y":"t + 1"}"#;
        assert_eq!(run_trace(doc, false), Err(Error::ReducibleModulus));
    }

    #[test]
    fn nested_function_field_is_rejected() {
        let doc = r#"{"field":{"kind":"RatFunc","base":{"kind":"RatFunc","base":{"kind":"Q"}}},
            "curve":["0","0","0","1","2"],"modulus":"t","x":"0","y":"0"}"#;
        assert!(matches!(run_trace(doc, false), Err(Error::InvalidField(_))));
    }

    #[test]
    fn document_round_trip() {
        let doc = ProblemDocument::from_json(EXAMPLE1).unwrap();
        let problem = doc.problem(&Rationals).unwrap();
        let again = ProblemDocument::from_problem(&problem);
        assert_eq!(again.modulus, "t^3 - 135*t - 408");
        assert_eq!(again.x, "1/8*t - 1");
        let reparsed = ProblemDocument::from_json(&again.to_json()).unwrap();
        assert_eq!(reparsed, again);
    }
}
