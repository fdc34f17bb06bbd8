//! Independent evaluation of the free energies from the Wick expansion of
//! the formal Gaussian integral, and the closed partition sum of 1D gravity.

pub mod wick;

pub use wick::{
    lambda, one_d_partition_coefficients, one_d_wick_partition, oracle_equivalence, pairing_permutation_sum,
    pairing_polynomial, wick_expansion, wick_free_energies, wick_terms, VertexType, WickTerm,
};
