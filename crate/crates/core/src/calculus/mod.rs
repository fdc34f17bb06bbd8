//! Formal linear combinations of stable graphs and the operators acting on
//! them.

pub mod free_energy;
pub mod graphsum;
pub mod ops;
pub mod theorems;

pub use free_energy::{abstract_free_energy, abstract_free_energy_labelled, FreeEnergies};
pub use graphsum::GraphSum;
pub use ops::{op_attach, op_attach_i, op_cut, op_cut_ij, op_d, op_d_i, op_glue_i, op_glue_leg};
pub use theorems::{verify_cut_recursion, verify_lemma_d, verify_quadratic_recursion, verify_recursion_labelled};
