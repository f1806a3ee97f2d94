use thiserror::Error;

/// Failures raised by the kernels, the solver and the verification sweeps.
///
/// Numeric payloads are widened to `f64` so the error type does not depend on the scalar.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error in {op}: {detail}")]
    Domain { op: &'static str, detail: String },

    #[error("overflow in {op}: unscaled value exceeds the floating point range at x = {x}")]
    Overflow { op: &'static str, x: f64 },

    #[error("no nontrivial root (K ≤ ν+1): K = {k}, ν = {nu}")]
    NoNontrivialRoot { nu: f64, k: f64 },

    #[error("bracket [{lo}, {hi}] does not straddle a sign change (f = {f_lo}, {f_hi})")]
    NoBracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    #[error("{op} did not converge after {iterations} iterations")]
    NotConverged { op: &'static str, iterations: usize },

    #[error("division guard in {op}: denominator vanished at {at}")]
    ZeroDenominator { op: &'static str, at: f64 },

    #[error("{op}: {detail}")]
    SearchFailed { op: &'static str, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain { op, detail: detail.into() }
}
