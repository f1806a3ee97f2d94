//! Algebraic bounds bracketing Ψ_ν from both sides for ν ≥ 0.

use super::Order;
use crate::error::{domain, Result};
use crate::scalar::Scalar;

/// Ω_ν(x) = x / (√(x² + (ν+½)(ν+3/2)) + ν + ½), an upper bound for Ψ_ν(x).
pub fn omega_amos<T: Scalar>(order: Order<T>, x: T) -> Result<T> {
    let nu = check("omega_amos", order, x)?;
    let half = T::lit(0.5);
    let c = (nu + half) * (nu + T::lit(1.5));
    Ok(x / ((x * x + c).sqrt() + nu + half))
}

/// Γ_ν(x) = x / (√(x² + (ν+3/2)²) + ν + ½), a lower bound for Ψ_ν(x).
pub fn gamma_amos<T: Scalar>(order: Order<T>, x: T) -> Result<T> {
    let nu = check("gamma_amos", order, x)?;
    let a = nu + T::lit(1.5);
    Ok(x / ((x * x + a * a).sqrt() + nu + T::lit(0.5)))
}

fn check<T: Scalar>(op: &'static str, order: Order<T>, x: T) -> Result<T> {
    if x.is_nan() || x <= T::zero() {
        return Err(domain(op, format!("x must be positive, got {x}")));
    }
    if order.nu() < T::zero() {
        return Err(domain(op, format!("order must be non-negative, got {}", order.nu())));
    }
    Ok(order.nu())
}
