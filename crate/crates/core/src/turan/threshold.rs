//! The Ω-relaxation threshold in ν and the x_ν root of the Γ-relaxed ratio inequality.

use crate::bessel::{gamma_amos, omega_amos, Order};
use crate::error::{domain, Error, Result};
use crate::scalar::Scalar;
use crate::turan::EvaluationGrid;

/// h_ν(x) = (Ω_ν(x)⁴)^{1/(2ν+1)} + (2/x)Ω_ν(x) − 1.
pub fn omega_relaxation<T: Scalar>(order: Order<T>, x: T) -> Result<T> {
    let omega = omega_amos(order, x)?;
    let exponent = T::lit(4.0) / (T::lit(2.0) * order.nu() + T::one());
    Ok(omega.powf(exponent) + T::lit(2.0) / x * omega - T::one())
}

/// lim_{x→0⁺} h_ν(x) = 2/(√((ν+½)(ν+3/2)) + ν + ½) − 1, which vanishes at ν = 3/10.
pub fn omega_relaxation_at_origin<T: Scalar>(order: Order<T>) -> T {
    let nu = order.nu();
    let half = T::lit(0.5);
    let c = ((nu + half) * (nu + T::lit(1.5))).sqrt() + nu + half;
    T::lit(2.0) / c - T::one()
}

/// sup_{x>0} h_ν(x): the origin limit, a log grid on [1e−6, 1e4] and a
/// golden-section refinement around the best interior grid point.
pub fn omega_relaxation_sup<T: Scalar>(order: Order<T>) -> Result<T> {
    let grid = EvaluationGrid::logarithmic(T::lit(1e-6), T::lit(1e4), 2000)?;
    let xs = grid.values();
    let mut best = omega_relaxation_at_origin(order);
    let mut best_idx = None;
    for (i, &x) in xs.iter().enumerate() {
        let h = omega_relaxation(order, x)?;
        if h > best {
            best = h;
            best_idx = Some(i);
        }
    }
    if let Some(i) = best_idx {
        if i > 0 && i + 1 < xs.len() {
            let refined = golden_max(|x| omega_relaxation(order, x), xs[i - 1], xs[i + 1])?;
            best = best.max(refined);
        }
    }
    Ok(best)
}

fn golden_max<T: Scalar>(f: impl Fn(T) -> Result<T>, mut lo: T, mut hi: T) -> Result<T> {
    let ratio = T::lit(0.618_033_988_749_894_8);
    let mut c = hi - ratio * (hi - lo);
    let mut d = lo + ratio * (hi - lo);
    let (mut fc, mut fd) = (f(c)?, f(d)?);
    for _ in 0..80 {
        if fc > fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - ratio * (hi - lo);
            fc = f(c)?;
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + ratio * (hi - lo);
            fd = f(d)?;
        }
    }
    Ok(fc.max(fd))
}

/// Smallest ν ∈ [0, 1] for which h_ν(x) < 0 for every x > 0, located by
/// bisection on the sign of sup_x h_ν to within `tolerance`.
///
/// Assumes sup_x h_ν changes sign once on [0, 1]; fails if the endpoint
/// signs do not show that pattern.
pub fn find_omega_threshold<T: Scalar>(tolerance: T) -> Result<T> {
    if tolerance.is_nan() || tolerance <= T::zero() {
        return Err(domain("find_omega_threshold", format!("tolerance must be positive, got {tolerance}")));
    }
    let sup_at = |nu: T| -> Result<T> { omega_relaxation_sup(Order::new(nu)?) };
    let (mut lo, mut hi) = (T::zero(), T::one());
    let (sup_lo, sup_hi) = (sup_at(lo)?, sup_at(hi)?);
    if !(sup_lo > T::zero() && sup_hi < T::zero()) {
        return Err(Error::SearchFailed {
            op: "find_omega_threshold",
            detail: format!(
                "sign pattern not monotone on [0, 1]: sup h_0 = {sup_lo}, sup h_1 = {sup_hi}"
            ),
        });
    }
    while hi - lo > tolerance {
        let mid = T::lit(0.5) * (lo + hi);
        if sup_at(mid)? < T::zero() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(T::lit(0.5) * (lo + hi))
}

/// log of Γ_{ν+1}(x)^{2ν+1} · (2(ν+1)/x + Γ_{ν+1}(x))^{2ν+3}.
pub fn ln_gamma_relaxed_ratio<T: Scalar>(order: Order<T>, x: T) -> Result<T> {
    let nu = order.require_nonnegative("x_nu_root")?;
    let g = gamma_amos(order.shifted(1), x)?;
    let two_nu = T::lit(2.0) * nu;
    Ok((two_nu + T::one()) * g.ln()
        + (two_nu + T::lit(3.0)) * (T::lit(2.0) * (nu + T::one()) / x + g).ln())
}

/// The positive root x_ν of Γ_{ν+1}(x)^{2ν+1}·(2(ν+1)/x + Γ_{ν+1}(x))^{2ν+3} = 1.
///
/// The left side is scanned on a log grid over [1e−6, 1e6] for the first
/// change from above 1 to below 1, then bisected until |LHS − 1| ≤ tolerance.
pub fn x_nu_root<T: Scalar>(order: Order<T>, tolerance: T) -> Result<T> {
    if tolerance.is_nan() || tolerance <= T::zero() {
        return Err(domain("x_nu_root", format!("tolerance must be positive, got {tolerance}")));
    }
    order.require_nonnegative("x_nu_root")?;
    let f = |x: T| ln_gamma_relaxed_ratio(order, x);
    let xs = EvaluationGrid::logarithmic(T::lit(1e-6), T::lit(1e6), 600)?.values();
    let mut bracket = None;
    let mut prev = (xs[0], f(xs[0])?);
    for &x in &xs[1..] {
        let fx = f(x)?;
        if prev.1 > T::zero() && fx <= T::zero() {
            bracket = Some((prev.0, x));
            break;
        }
        prev = (x, fx);
    }
    let (mut lo, mut hi) = bracket.ok_or_else(|| Error::SearchFailed {
        op: "x_nu_root",
        detail: "no sign change of LHS - 1 on [1e-6, 1e6]".into(),
    })?;
    for _ in 0..400 {
        let mid = T::lit(0.5) * (lo + hi);
        let ln_lhs = f(mid)?;
        if ln_lhs.exp_m1().abs() <= tolerance {
            return Ok(mid);
        }
        if ln_lhs > T::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= T::lit(4.0) * T::epsilon() * hi {
            break;
        }
    }
    Err(Error::NotConverged { op: "x_nu_root", iterations: 400 })
}
