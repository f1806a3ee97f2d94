//! Modified Bessel functions of the first kind and the ratio Ψ_ν = I_{ν+1}/I_ν.

mod amos;
mod gamma;
mod iv;
mod ratio;
mod zeros;

use serde::Serialize;

use crate::error::{domain, Result};
use crate::scalar::Scalar;

pub use amos::{gamma_amos, omega_amos};
pub use gamma::ln_gamma;
pub use iv::{iv, iv_asymptotic, BesselValue};
pub use ratio::{mittag_leffler_partial_sum, psi, psi_complement, psi_derivative, psi_mittag_leffler, RatioValue};
pub use zeros::j0_zeros;

pub(crate) use iv::ln_iv_scaled;

/// Bessel order ν. Always finite and at least −½.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct Order<T>(T);

impl<T: Scalar> Order<T> {
    pub fn new(nu: T) -> Result<Self> {
        if !nu.is_finite() {
            return Err(domain("Order::new", format!("order must be finite, got {nu}")));
        }
        if nu < T::lit(-0.5) {
            return Err(domain("Order::new", format!("order must be at least -1/2, got {nu}")));
        }
        Ok(Order(nu))
    }

    #[inline]
    pub fn nu(self) -> T {
        self.0
    }

    /// The order ν + k.
    #[inline]
    pub fn shifted(self, k: usize) -> Self {
        Order(self.0 + T::of_usize(k))
    }

    pub(crate) fn require_nonnegative(self, op: &'static str) -> Result<T> {
        if self.0 < T::zero() {
            return Err(domain(op, format!("order must be non-negative, got {}", self.0)));
        }
        Ok(self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn order_validation() {
        assert!(Order::new(-0.5_f64).is_ok());
        assert!(Order::new(-0.6_f64).is_err());
        assert!(Order::new(f64::NAN).is_err());
        assert!(Order::new(f64::INFINITY).is_err());
        assert_eq!(Order::new(0.25_f64).unwrap().shifted(2).nu(), 2.25);
    }

    fn grid() -> Vec<f64> {
        let (lo, hi, n) = (1e-3_f64, 30.0_f64, 200);
        (0..n)
            .map(|i| lo * (hi / lo).powf(i as f64 / (n - 1) as f64))
            .collect()
    }

    const ORDERS: [f64; 6] = [0.0, 0.25, 0.5, 1.0, 2.0, 5.0];

    #[test]
    fn three_term_recurrence() {
        for &nu in &ORDERS {
            let o = Order::new(nu).unwrap();
            for &x in &grid() {
                let i0 = iv(o, x, true).unwrap().value;
                let i1 = iv(o.shifted(1), x, true).unwrap().value;
                let i2 = iv(o.shifted(2), x, true).unwrap().value;
                let residual = (x * i0 - x * i2 - 2.0 * (nu + 1.0) * i1).abs();
                assert!(residual <= 1e-12 * x * i0, "nu = {nu}, x = {x}");
            }
        }
    }

    #[test]
    fn ratio_recurrence_soni_and_monotonicity() {
        for &nu in &ORDERS {
            let o = Order::new(nu).unwrap();
            let mut prev = 0.0;
            for &x in &grid() {
                let p = psi(o, x).unwrap().value;
                let p1 = psi(o.shifted(1), x).unwrap().value;
                assert!((p * (2.0 * (nu + 1.0) / x + p1) - 1.0).abs() <= 1e-12);
                assert!(p > 0.0 && p < 1.0);
                assert!(p > prev, "psi not increasing at nu = {nu}, x = {x}");
                assert!(p < x / (2.0 * (nu + 1.0)));
                prev = p;
            }
        }
    }

    #[test]
    fn amos_sandwich_on_grid() {
        for &nu in &ORDERS {
            let o = Order::new(nu).unwrap();
            for &x in &grid() {
                let p = psi(o, x).unwrap().value;
                assert!(gamma_amos(o, x).unwrap() < p, "nu = {nu}, x = {x}");
                assert!(p < omega_amos(o, x).unwrap(), "nu = {nu}, x = {x}");
            }
        }
    }

    #[test]
    fn mittag_leffler_agreement() {
        for i in 0..=40 {
            let x = 0.1 * (200.0_f64).powf(i as f64 / 40.0);
            let ml = psi_mittag_leffler(x, 500).unwrap();
            let p = psi(Order::new(0.0).unwrap(), x).unwrap().value;
            assert!((ml - p).abs() <= 1e-5, "x = {x}");
        }
    }

    proptest! {
        #[test]
        fn positivity(nu in -0.5_f64..8.0, x in 1e-4_f64..200.0) {
            let v = iv(Order::new(nu).unwrap(), x, true).unwrap().value;
            prop_assert!(v > 0.0);
        }

        #[test]
        fn ratio_is_iv_quotient(nu in 0.0_f64..6.0, x in 1e-3_f64..30.0) {
            let o = Order::new(nu).unwrap();
            let q = iv(o.shifted(1), x, true).unwrap().value / iv(o, x, true).unwrap().value;
            let p = psi(o, x).unwrap().value;
            prop_assert!(((p - q) / q).abs() <= 1e-12);
        }
    }
}
