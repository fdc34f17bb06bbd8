//! Feynman rules: graphs become polynomials in vertex symbols and
//! propagators, the graph operators become derivations, and the quadratic
//! recursion is solved by integrating in the propagator.

pub mod context;
pub mod presets;
pub mod realize;
pub mod recursion;

pub use context::FeynmanContext;
pub use presets::PropagatorPreset;
pub use realize::{
    covariant_from_gradient, covariant_second, feynman_weight, gradient, realize_sum, realized_free_energy,
    verify_operator_realization, wf1_t_derivative,
};
pub use recursion::{recursion_rhs, recursion_solve, verify_recursion_n};
