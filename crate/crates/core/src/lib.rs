//! Exact traces of algebraic points on elliptic curves.
//!
//! Given an elliptic curve `E` in long Weierstrass form over an exact field
//! `K`, an irreducible `T(t) in K[t]` and a point `P = (x(θ), y(θ))` with
//! `θ` the class of `t` in `L = K[t]/T(t)`, [`ell_trace`] returns the sum of
//! the conjugates of `P` (weighted by the inseparable degree of `L/K`) as a
//! point of `E(K)`. It works in every characteristic, including when `T` is
//! inseparable, and never leaves `K` and `L`: no splitting fields, no
//! floating point.
//!
//! Ground fields: [`Rationals`], [`PrimeField`] and [`RationalFunctions`]
//! over either. All arithmetic goes through the [`Field`] trait, which
//! [`Extension`] also implements, so [`WeierstrassCurve`] runs over `K` and
//! over `L` alike.
//!
//! The runnable programs in this crate's `examples/` directory walk through
//! each capability; the `elltrace` binary exposes the `trace` and
//! `selftest` commands.

pub mod curve;
pub mod document;
pub mod error;
pub mod extension;
pub mod field;
pub mod finite;
pub mod linalg;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod selftest;
pub mod trace;

pub use curve::{CurvePoint, WeierstrassCurve};
pub use error::{Error, Result};
pub use extension::Extension;
pub use field::{
    BaseField, Field, FieldDescriptor, GroundField, PrimeField, RatFunc, RationalFunctions,
    Rationals,
};
pub use linalg::{kernel_echelon, minimal_polynomial, Matrix};
pub use poly::Poly;
pub use trace::{
    ell_trace, ell_trace_sep, insep_decompose, InsepRecord, SepBranch, SepRecord, TraceProblem,
    TraceWitness,
};
