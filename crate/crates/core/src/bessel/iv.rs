//! I_ν(x) for real order ν ≥ −1/2 and x ≥ 0.
//!
//! Two regimes: the ascending power series (all terms positive, so no
//! cancellation) for moderate x, and the large-argument Hankel expansion
//! summed until its terms drop below machine precision. The expansion is used
//! only when it actually reaches that precision; otherwise the series is used,
//! which is valid everywhere.

use super::gamma::ln_gamma;
use super::Order;
use crate::error::{domain, Error, Result};
use crate::scalar::Scalar;

/// A modified Bessel value, optionally carrying the e^{−x} scaling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselValue<T> {
    pub value: T,
    /// When set, `value` is e^{−x}·I_ν(x).
    pub scaled: bool,
}

/// Argument above which the Hankel expansion is attempted.
pub(crate) fn asymptotic_seam<T: Scalar>(nu: T) -> T {
    T::lit(25.0).max(nu * nu)
}

/// I_ν(x), or e^{−x}·I_ν(x) when `scaled` is set.
pub fn iv<T: Scalar>(order: Order<T>, x: T, scaled: bool) -> Result<BesselValue<T>> {
    check_argument("iv", x)?;
    let nu = order.nu();
    if x == T::zero() {
        let value = if nu == T::zero() {
            T::one()
        } else if nu > T::zero() {
            T::zero()
        } else {
            T::infinity()
        };
        return Ok(BesselValue { value, scaled });
    }
    let ln_scaled = ln_iv_scaled(nu, x);
    let value = if scaled {
        ln_scaled.exp()
    } else {
        let ln_value = ln_scaled + x;
        if ln_value > T::max_value().ln() {
            return Err(Error::Overflow { op: "iv", x: x.as_f64() });
        }
        ln_value.exp()
    };
    Ok(BesselValue { value, scaled })
}

/// ln(e^{−x}·I_ν(x)) for x > 0. Never overflows.
pub(crate) fn ln_iv_scaled<T: Scalar>(nu: T, x: T) -> T {
    if x > asymptotic_seam(nu) {
        if let Some(sum) = hankel_sum(nu, x) {
            return sum.ln() - T::lit(0.5) * (T::TAU() * x).ln();
        }
    }
    ln_series(nu, x) - x
}

/// ln I_ν(x) from the ascending series Σ (x/2)^{2k+ν} / (k! Γ(ν+k+1)).
fn ln_series<T: Scalar>(nu: T, x: T) -> T {
    let half_x = x * T::lit(0.5);
    let q = half_x * half_x;
    let eps = T::epsilon();
    // Running sum is renormalised whenever it grows large so that very large
    // arguments stay representable.
    let big = T::lit(1e200);
    let mut ln_offset = T::zero();
    let mut term = T::one();
    let mut sum = T::one();
    let mut k = 1usize;
    loop {
        let kf = T::of_usize(k);
        term = term * q / (kf * (nu + kf));
        sum = sum + term;
        if term <= eps * sum * T::lit(0.25) {
            break;
        }
        if sum > big {
            ln_offset = ln_offset + sum.ln();
            term = term / sum;
            sum = T::one();
        }
        k += 1;
    }
    nu * half_x.ln() - ln_gamma(nu + T::one()) + ln_offset + sum.ln()
}

/// Σ (−1)^k a_k(ν) / x^k summed to machine precision, or `None` when the
/// asymptotic terms start growing before they are negligible.
fn hankel_sum<T: Scalar>(nu: T, x: T) -> Option<T> {
    let mu = T::lit(4.0) * nu * nu;
    let eps = T::epsilon();
    let mut term = T::one();
    let mut sum = T::one();
    for k in 1..400usize {
        let odd = T::of_usize(2 * k - 1);
        let next = -term * (mu - odd * odd) / (T::lit(8.0) * T::of_usize(k) * x);
        if next == T::zero() {
            return Some(sum);
        }
        if next.abs() > term.abs() {
            return None;
        }
        sum = sum + next;
        term = next;
        if term.abs() <= eps * sum.abs() * T::lit(0.25) {
            return Some(sum);
        }
    }
    None
}

/// The large-argument expansion truncated after `terms` terms (1 to 4):
///
/// e^x/√(2πx) · (1 − (μ−1)/(8x) + (μ−1)(μ−9)/(2!·8²x²) − (μ−1)(μ−9)(μ−25)/(3!·8³x³)),  μ = 4ν².
///
/// With `scaled` set the e^x factor is dropped.
pub fn iv_asymptotic<T: Scalar>(order: Order<T>, x: T, terms: usize, scaled: bool) -> Result<T> {
    if x.is_nan() || x <= T::zero() {
        return Err(domain("iv_asymptotic", format!("x must be positive, got {x}")));
    }
    if !(1..=4).contains(&terms) {
        return Err(domain("iv_asymptotic", format!("terms must be in 1..=4, got {terms}")));
    }
    let nu = order.nu();
    let mu = T::lit(4.0) * nu * nu;
    let mut term = T::one();
    let mut sum = T::one();
    for k in 1..terms {
        let odd = T::of_usize(2 * k - 1);
        term = -term * (mu - odd * odd) / (T::lit(8.0) * T::of_usize(k) * x);
        sum = sum + term;
    }
    let envelope = (T::TAU() * x).sqrt().recip();
    if scaled {
        Ok(envelope * sum)
    } else {
        Ok(x.exp() * envelope * sum)
    }
}

fn check_argument<T: Scalar>(op: &'static str, x: T) -> Result<()> {
    if x.is_nan() || x < T::zero() {
        return Err(domain(op, format!("x must be non-negative, got {x}")));
    }
    if x.is_infinite() {
        return Err(domain(op, "x must be finite"));
    }
    Ok(())
}
