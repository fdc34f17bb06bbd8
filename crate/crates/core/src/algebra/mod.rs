//! Exact arithmetic: rationals, Laurent polynomials over symbolic atoms,
//! rational functions, truncated power series and derivations.

pub mod atom;
pub mod derivation;
pub mod graded;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ratfn;
pub mod rational;
pub mod series;

pub use atom::Atom;
pub use derivation::Derivation;
pub use graded::GradedFreeEnergy;
pub use monomial::Monomial;
pub use parse::{parse_poly, parse_ratfn};
pub use poly::Poly;
pub use ratfn::{substitute, RationalFn};
pub use rational::{int, rat, Rational};
pub use series::TruncatedSeries;

/// Integrate a polynomial in `kappa` term by term and add a constant.
pub fn integrate_kappa(p: &Poly, kappa: &Atom, constant: &Poly) -> Result<Poly, crate::Error> {
    p.integrate(kappa, constant)
}
