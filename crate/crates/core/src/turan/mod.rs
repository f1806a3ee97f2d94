//! Turán-type inequalities for modified Bessel functions, checked on grids.

mod grid;
mod margins;
mod sharpness;
mod sweep;
mod threshold;

pub use grid::{EvaluationGrid, Spacing};
pub use margins::{
    fig1_value, margin_edin, margin_ineq9, margin_lower_turan, margin_new_turan, margin_turanb,
    margin_turaninter, sharp_bound_value, signed_margin_turanb, SignedLog,
};
pub use sharpness::{beta_limit, gamma_limit, lambda_leading_term, lambda_nu, xi_nu};
pub use sweep::{sweep, Claim, InequalityId, InequalityReport};
pub use threshold::{
    find_omega_threshold, ln_gamma_relaxed_ratio, omega_relaxation, omega_relaxation_at_origin,
    omega_relaxation_sup, x_nu_root,
};
