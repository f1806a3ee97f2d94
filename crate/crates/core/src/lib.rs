//! Order parameter of the noisy Kuramoto model with a Bessel-ratio
//! self-consistency equation, the modified Bessel kernels it rests on, and
//! grid checks of the Turán-type inequalities around it.
//!
//! Everything is generic over [`Scalar`] (`f32`, `f64`); the aliases below fix
//! `f64`. [`rational_lpol`](approx::rational_lpol) also accepts exact rationals.

pub mod approx;
pub mod bessel;
pub mod error;
pub mod scalar;
pub mod solver;
pub mod turan;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub type Order64 = bessel::Order<f64>;
pub type Coupling64 = solver::CouplingStrength<f64>;
pub type Solution64 = solver::OrderParameterSolution<f64>;
pub type Grid64 = turan::EvaluationGrid<f64>;
pub type Report64 = turan::InequalityReport<f64>;
pub type Row64 = approx::ApproximationRow<f64>;
/// Exact rational type for [`approx::rational_lpol`].
pub type ExactRational = num_rational::BigRational;
