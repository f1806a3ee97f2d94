//! Turán-type inequality margins.
//!
//! Every margin is arranged so that "the inequality holds at x" is exactly
//! "margin > 0". Products of Bessel functions are formed from scaled values
//! S_μ = e^{−x} I_μ(x); a margin homogeneous of degree d in I carries the
//! factor e^{−dx}, which does not change its sign. The bracketed differences
//! are evaluated through the ratios a = Ψ_{ν+1}(x), b = 2(ν+1)/x, using
//!
//! Ψ_ν = 1/(a + b),   I_ν I_{ν+2} / I²_{ν+1} = a(a + b),
//!
//! so that the cancellation between terms of size 1/x happens on quantities
//! known to full relative precision.

use serde::Serialize;

use crate::bessel::{ln_iv_scaled, psi, Order};
use crate::error::{domain, Result};
use crate::scalar::Scalar;

/// Ratios shared by the margins at a single point.
struct Ratios<T> {
    nu: T,
    x: T,
    /// Ψ_ν(x)
    psi: T,
    /// Ψ_{ν+1}(x)
    a: T,
    /// 2(ν+1)/x
    b: T,
}

impl<T: Scalar> Ratios<T> {
    fn at(op: &'static str, order: Order<T>, x: T) -> Result<Self> {
        if x.is_nan() || x <= T::zero() || x.is_infinite() {
            return Err(domain(op, format!("x must be positive and finite, got {x}")));
        }
        let nu = order.nu();
        let a = psi(order.shifted(1), x)?.value;
        let b = T::lit(2.0) * (nu + T::one()) / x;
        Ok(Self { nu, x, psi: (a + b).recip(), a, b })
    }

    /// (I²_{ν+1} − I_ν I_{ν+2}) / I²_{ν+1} = (1 − a)(1 + a) − ab.
    fn turanian(&self) -> T {
        let one = T::one();
        (one - self.a) * (one + self.a) - self.a * self.b
    }

    /// e^{−2x} I²_{ν+1}(x)
    fn scaled_square(&self) -> T {
        (T::lit(2.0) * ln_iv_scaled(self.nu + T::one(), self.x)).exp()
    }
}

fn nonnegative_order<T: Scalar>(op: &'static str, order: Order<T>) -> Result<()> {
    order.require_nonnegative(op).map(|_| ())
}

/// A real number kept as sign and natural log of its magnitude, so that
/// margins far below the floating-point range keep their sign.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SignedLog<T> {
    /// −1, 0 or 1. Zero also covers a margin that is not a number.
    pub sign: i8,
    pub ln_abs: T,
}

impl<T: Scalar> SignedLog<T> {
    pub fn from_value(v: T) -> Self {
        let sign = if v > T::zero() {
            1
        } else if v < T::zero() {
            -1
        } else {
            0
        };
        Self { sign, ln_abs: v.abs().ln() }
    }

    /// sign·e^{ln_abs}; may underflow to zero.
    pub fn value(self) -> T {
        match self.sign {
            0 if self.ln_abs.is_nan() => T::nan(),
            0 => T::zero(),
            s => T::lit(f64::from(s)) * self.ln_abs.exp(),
        }
    }

    pub fn is_positive(self) -> bool {
        self.sign > 0 && !self.ln_abs.is_nan()
    }

    /// Strict order on the represented values; not-a-number sorts first.
    pub fn less_than(self, other: Self) -> bool {
        match (self.ln_abs.is_nan(), other.ln_abs.is_nan()) {
            (true, false) => return true,
            (_, true) => return false,
            _ => {}
        }
        if self.sign != other.sign {
            return self.sign < other.sign;
        }
        match self.sign {
            1 => self.ln_abs < other.ln_abs,
            -1 => self.ln_abs > other.ln_abs,
            _ => false,
        }
    }
}

/// I²_{ν+1}/x − (I²_{ν+1} − I_ν I_{ν+2}), scaled by e^{−2x}. Valid for ν ≥ −½.
///
/// At ν = −½ the two sides agree up to a term of relative size e^{−2x}, and
/// the margin is taken from its closed form (see [`signed_margin_turanb`]).
pub fn margin_turanb<T: Scalar>(order: Order<T>, x: T) -> Result<T> {
    if order.nu() == T::lit(-0.5) {
        return signed_margin_turanb(order, x).map(SignedLog::value);
    }
    let r = Ratios::at("margin_turanb", order, x)?;
    Ok(r.scaled_square() * (x.recip() - r.turanian()))
}

/// [`margin_turanb`] as sign and log-magnitude. At ν = −½,
///
/// e^{−2x}(I²_{1/2}/x − I²_{1/2} + I_{−1/2}I_{3/2}) = (2/(πx))·e^{−2x}·(1 − (1 − e^{−2x})/(2x)),
///
/// which is positive for every x > 0 and underflows for x beyond about 350.
pub fn signed_margin_turanb<T: Scalar>(order: Order<T>, x: T) -> Result<SignedLog<T>> {
    if order.nu() != T::lit(-0.5) {
        return margin_turanb(order, x).map(SignedLog::from_value);
    }
    if x.is_nan() || x <= T::zero() || x.is_infinite() {
        return Err(domain("margin_turanb", format!("x must be positive and finite, got {x}")));
    }
    let y = T::lit(2.0) * x;
    // 1 − (1 − e^{−y})/y, by its series for small y.
    let bracket = if y < T::lit(1e-3) {
        y * (T::lit(0.5) - y * (T::one() / T::lit(6.0) - y * (T::one() / T::lit(24.0) - y / T::lit(120.0))))
    } else {
        T::one() + (-y).exp_m1() / y
    };
    let ln_abs = (T::lit(2.0) / (T::PI() * x)).ln() - y + bracket.ln();
    Ok(SignedLog { sign: 1, ln_abs })
}

/// I²_{ν+1} − I_ν I_{ν+2}, scaled by e^{−2x}.
pub fn margin_lower_turan<T: Scalar>(order: Order<T>, x: T) -> Result<T> {
    let r = Ratios::at("margin_lower_turan", order, x)?;
    Ok(r.scaled_square() * r.turanian())
}

/// I₀³ I₂ − I₁⁴, scaled by e^{−4x}.
pub fn margin_edin<T: Scalar>(x: T) -> Result<T> {
    let r = Ratios::at("margin_edin", Order::new(T::zero())?, x)?;
    // I₀³I₂ / I₁⁴ = Ψ₁ / Ψ₀³ = a (a + b)³
    let ab = r.a + r.b;
    let excess = r.a * ab * ab * ab - T::one();
    let s1sq = r.scaled_square();
    Ok(s1sq * s1sq * excess)
}

/// (2ν/x) I_ν I_{ν+1} − (I²_{ν+1} − I_ν I_{ν+2}), scaled by e^{−2x}.
pub fn margin_turaninter<T: Scalar>(order: Order<T>, x: T) -> Result<T> {
    nonnegative_order("margin_turaninter", order)?;
    let r = Ratios::at("margin_turaninter", order, x)?;
    // I_ν I_{ν+1} / I²_{ν+1} = 1/Ψ_ν = a + b
    let lead = T::lit(2.0) * r.nu / x * (r.a + r.b);
    Ok(r.scaled_square() * (lead - r.turanian()))
}

/// (2ν+1) log Ψ_{ν+1}(x) − (2ν+3) log Ψ_ν(x), the log form of
/// I_{ν+1}^{4ν+4} < I_{ν+2}^{2ν+1} I_ν^{2ν+3}.
pub fn margin_ineq9<T: Scalar>(order: Order<T>, x: T) -> Result<T> {
    nonnegative_order("margin_ineq9", order)?;
    let r = Ratios::at("margin_ineq9", order, x)?;
    let two_nu = T::lit(2.0) * r.nu;
    Ok((two_nu + T::one()) * r.a.ln() + (two_nu + T::lit(3.0)) * (r.a + r.b).ln())
}

/// 1 + (2ν/x)·I_{ν+1}/I_{ν+2} − Ψ_ν^{4/(2ν+1)}·I_ν/I_{ν+2}.
pub fn margin_new_turan<T: Scalar>(order: Order<T>, x: T) -> Result<T> {
    nonnegative_order("margin_new_turan", order)?;
    let r = Ratios::at("margin_new_turan", order, x)?;
    let two_nu = T::lit(2.0) * r.nu;
    let power = r.psi.powf(T::lit(4.0) / (two_nu + T::one()));
    // I_{ν+1}/I_{ν+2} = 1/a,  I_ν/I_{ν+2} = 1/(Ψ_ν a)
    Ok(T::one() + two_nu / x / r.a - power / (r.psi * r.a))
}

/// g_a(x) = (Ψ_a(x)⁴)^{1/(2a+1)} + (2/x)Ψ_a(x) − 1; negative where the
/// quarter-power bound on r holds at x.
pub fn fig1_value<T: Scalar>(order: Order<T>, x: T) -> Result<T> {
    nonnegative_order("fig1_value", order)?;
    let r = Ratios::at("fig1_value", order, x)?;
    let two_nu = T::lit(2.0) * r.nu;
    let power = r.psi.powf(T::lit(4.0) / (two_nu + T::one()));
    // 1 − (2/x)Ψ_ν = Ψ_ν (2ν/x + Ψ_{ν+1})
    Ok(power - r.psi * (two_nu / x + r.a))
}

/// Ψ_ν^{4(ν+1)/(2ν+1)} + (2(ν+1)/x)Ψ_ν − 1; negative where the sharp
/// conjectured bound on r holds at x.
pub fn sharp_bound_value<T: Scalar>(order: Order<T>, x: T) -> Result<T> {
    nonnegative_order("sharp_bound_value", order)?;
    let r = Ratios::at("sharp_bound_value", order, x)?;
    let two_nu = T::lit(2.0) * r.nu;
    let power = r.psi.powf(T::lit(4.0) * (r.nu + T::one()) / (two_nu + T::one()));
    // 1 − (2(ν+1)/x)Ψ_ν = Ψ_ν Ψ_{ν+1}
    Ok(power - r.psi * r.a)
}
