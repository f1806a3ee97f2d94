//! Log-ratio functionals whose suprema give the best exponents in the bounds on r.

use crate::bessel::{psi, psi_complement, Order};
use crate::error::{domain, Result};
use crate::scalar::Scalar;

/// λ_ν(x) = log(1 − (2/x)Ψ_ν(x)) / log Ψ_ν(x).
///
/// log Ψ_ν is taken as log1p(−(1 − Ψ_ν)) with the complement computed
/// directly. The numerator is log1p(−2Ψ_ν/x) when 2Ψ_ν/x is small, and
/// log Ψ_ν + log(2ν/x + Ψ_{ν+1}) otherwise, which avoids the cancellation in
/// 1 − (2/x)Ψ_ν near x = 0.
pub fn lambda_nu<T: Scalar>(order: Order<T>, x: T) -> Result<T> {
    check("lambda_nu", x)?;
    let nu = order.nu();
    let (p, ln_p) = psi_and_log(order, x)?;
    let t = T::lit(2.0) * p / x;
    if t <= T::lit(0.5) {
        return log_ratio("lambda_nu", (-t).ln_1p(), ln_p);
    }
    let a = psi(order.shifted(1), x)?.value;
    let inner = T::lit(2.0) * nu / x + a;
    if inner <= T::zero() {
        return Err(domain(
            "lambda_nu",
            format!("1 - (2/x)psi is not positive at nu = {nu}, x = {x}"),
        ));
    }
    log_ratio("lambda_nu", ln_p + inner.ln(), ln_p)
}

/// ξ_ν(x) = log(1 − (2(ν+1)/x)Ψ_ν(x)) / log Ψ_ν(x). For larger 2(ν+1)Ψ_ν/x
/// the numerator is log(I_{ν+2}/I_ν) = log Ψ_ν + log Ψ_{ν+1}.
pub fn xi_nu<T: Scalar>(order: Order<T>, x: T) -> Result<T> {
    check("xi_nu", x)?;
    order.require_nonnegative("xi_nu")?;
    let (p, ln_p) = psi_and_log(order, x)?;
    let t = T::lit(2.0) * (order.nu() + T::one()) * p / x;
    if t <= T::lit(0.5) {
        return log_ratio("xi_nu", (-t).ln_1p(), ln_p);
    }
    let a = psi(order.shifted(1), x)?.value;
    log_ratio("xi_nu", ln_p + a.ln(), ln_p)
}

fn psi_and_log<T: Scalar>(order: Order<T>, x: T) -> Result<(T, T)> {
    let p = psi(order, x)?.value;
    if p <= T::lit(0.5) {
        return Ok((p, p.ln()));
    }
    let c = psi_complement(order, x)?;
    Ok((T::one() - c, (-c).ln_1p()))
}

fn log_ratio<T: Scalar>(op: &'static str, numerator: T, denominator: T) -> Result<T> {
    if denominator == T::zero() || !denominator.is_finite() {
        return Err(domain(op, format!("log psi is {denominator}; argument out of resolvable range")));
    }
    Ok(numerator / denominator)
}

fn check<T: Scalar>(op: &'static str, x: T) -> Result<()> {
    if x.is_nan() || x <= T::zero() || x.is_infinite() {
        return Err(domain(op, format!("x must be positive and finite, got {x}")));
    }
    Ok(())
}

/// β_ν = 4/(2ν+1), the limit of λ_ν at infinity.
pub fn beta_limit<T: Scalar>(order: Order<T>) -> T {
    T::lit(4.0) / (T::lit(2.0) * order.nu() + T::one())
}

/// γ_ν = 4(ν+1)/(2ν+1), the limit of ξ_ν at infinity.
pub fn gamma_limit<T: Scalar>(order: Order<T>) -> T {
    T::lit(4.0) * (order.nu() + T::one()) / (T::lit(2.0) * order.nu() + T::one())
}

/// Leading term (log 8 − 2 log x)/(log 2 − log x) of λ_0 near the origin.
pub fn lambda_leading_term<T: Scalar>(x: T) -> T {
    let l2 = T::LN_2();
    (T::lit(3.0) * l2 - T::lit(2.0) * x.ln()) / (l2 - x.ln())
}
