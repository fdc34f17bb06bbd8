//! Exact symbolic calculus of stable graphs.
//!
//! Stable graphs are the dual graphs of boundary strata of the moduli
//! spaces of curves. This crate enumerates them up to isomorphism, acts on
//! formal linear combinations of them with the edge-cutting and
//! leg-adding operators, realizes graph sums as polynomials through Feynman
//! rules, and solves the quadratic recursions satisfied by the resulting
//! free energies. An independent Wick-expansion oracle and a collection of
//! concrete models (one-dimensional gravity, the Airy and Catalan curves,
//! graph enumeration) sit on top.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals.

pub mod algebra;
pub mod applications;
pub mod calculus;
pub mod checks;
pub mod error;
pub mod feynman;
pub mod graphs;
pub mod oracle;
pub mod reference;

pub use error::{Error, Result};
