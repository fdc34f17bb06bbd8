//! Concrete models built on 1D gravity: the Airy and Catalan curves and the
//! enumeration of stable graphs and of all graphs.

pub mod counting;
pub mod curves;
pub mod one_d;

pub use counting::*;
pub use curves::{
    airy_s_coefficient, catalan_lemma_holds, catalan_t_recursion_holds, curve_free_energies, curve_free_energy,
    curve_ode_check, curve_ode_residuals, curve_ode_residuals_with_sign, curve_recursion_check, first_failing_order,
    CurveOperator, CurvePreset,
};
pub use one_d::{
    coordinates_i_from_t, coordinates_round_trip, coordinates_t_from_i, d_x, is_homogeneous, one_d_free_energy,
    one_d_free_energy_realized, one_d_recursion, one_d_recursion_rhs,
};
