//! The self-consistency equation r = Ψ_ν(2Kr) for the asymptotic order parameter.

use crate::bessel::{psi, psi_derivative, Order};
use crate::error::{domain, Error, Result};
use crate::scalar::Scalar;

/// Coupling strength K > 0.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct CouplingStrength<T>(T);

impl<T: Scalar> CouplingStrength<T> {
    pub fn new(k: T) -> Result<Self> {
        if !k.is_finite() || k <= T::zero() {
            return Err(domain("CouplingStrength::new", format!("K must be positive and finite, got {k}")));
        }
        Ok(Self(k))
    }

    #[inline]
    pub fn value(self) -> T {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderParameterSolution<T> {
    pub coupling: CouplingStrength<T>,
    pub order: Order<T>,
    pub r: T,
    /// |r − Ψ_ν(2Kr)| at the returned r.
    pub residual: T,
    pub bracket_lo: T,
    pub bracket_hi: T,
    pub iterations: usize,
    /// Sign changes of f seen on the 64-cell pre-scan of the bracket. More
    /// than one means the nontrivial root is not unique there; the lowest
    /// crossing from negative to positive is returned.
    pub sign_changes: usize,
}

const PRESCAN_CELLS: usize = 64;
const MAX_ITERATIONS: usize = 200;

/// Whether the origin slope 1 − K/(ν+1) is negative, which guarantees a
/// nontrivial root.
pub fn existence<T: Scalar>(order: Order<T>, k: CouplingStrength<T>) -> bool {
    k.value() > order.nu() + T::one()
}

/// d/dr [r − Ψ_ν(2Kr)] at r = 0.
pub fn origin_slope<T: Scalar>(order: Order<T>, k: CouplingStrength<T>) -> T {
    T::one() - k.value() / (order.nu() + T::one())
}

/// f(r) = r − Ψ_ν(2Kr), with f(0) = 0.
pub fn residual<T: Scalar>(order: Order<T>, k: CouplingStrength<T>, r: T) -> Result<T> {
    if r.is_nan() || r < T::zero() {
        return Err(domain("residual", format!("r must be non-negative, got {r}")));
    }
    if r == T::zero() {
        return Ok(T::zero());
    }
    Ok(r - psi(order, T::lit(2.0) * k.value() * r)?.value)
}

fn residual_slope<T: Scalar>(order: Order<T>, k: CouplingStrength<T>, r: T) -> Result<T> {
    let two_k = T::lit(2.0) * k.value();
    Ok(T::one() - two_k * psi_derivative(order, two_k * r)?)
}

/// Initial bracket: the two-sided bound √(1−1/K) < r < (1−1/K)^{1/4} for ν = 0,
/// otherwise [1e−12, √(1−1/(2K))].
pub fn initial_bracket<T: Scalar>(order: Order<T>, k: CouplingStrength<T>) -> (T, T) {
    let k = k.value();
    let eps = T::lit(1e-12);
    if order.nu() == T::zero() {
        let base = T::one() - k.recip();
        (base.sqrt().max(eps), base.sqrt().sqrt())
    } else {
        (eps, (T::one() - (T::lit(2.0) * k).recip()).sqrt())
    }
}

/// Nontrivial root of r = Ψ_ν(2Kr) with |r − Ψ_ν(2Kr)| ≤ `tolerance`.
///
/// Safeguarded Newton: Newton steps that leave the current bracket, or fail
/// to halve it, are replaced by bisection.
pub fn solve_r<T: Scalar>(
    order: Order<T>,
    k: CouplingStrength<T>,
    tolerance: T,
) -> Result<OrderParameterSolution<T>> {
    if tolerance.is_nan() || tolerance <= T::zero() {
        return Err(domain("solve_r", format!("tolerance must be positive, got {tolerance}")));
    }
    order.require_nonnegative("solve_r")?;
    if !existence(order, k) {
        return Err(Error::NoNontrivialRoot { nu: order.nu().as_f64(), k: k.value().as_f64() });
    }
    let f = |r: T| residual(order, k, r);

    let (mut bracket_lo, mut bracket_hi) = initial_bracket(order, k);
    let (mut f_lo, mut f_hi) = (f(bracket_lo)?, f(bracket_hi)?);
    if !(f_lo < T::zero() && f_hi > T::zero()) && order.nu() == T::zero() {
        // Bound bracket lost to rounding very close to K = 1.
        bracket_lo = T::lit(1e-12);
        bracket_hi = (T::one() - (T::lit(2.0) * k.value()).recip()).sqrt();
        f_lo = f(bracket_lo)?;
        f_hi = f(bracket_hi)?;
    }
    if !(f_lo < T::zero() && f_hi > T::zero()) {
        return Err(Error::NoBracket {
            lo: bracket_lo.as_f64(),
            hi: bracket_hi.as_f64(),
            f_lo: f_lo.as_f64(),
            f_hi: f_hi.as_f64(),
        });
    }

    // Pre-scan for multiple crossings.
    let width = bracket_hi - bracket_lo;
    let mut sign_changes = 0;
    let mut cell = None;
    let mut prev = (bracket_lo, f_lo);
    for i in 1..=PRESCAN_CELLS {
        let r = if i == PRESCAN_CELLS {
            bracket_hi
        } else {
            bracket_lo + width * T::of_usize(i) / T::of_usize(PRESCAN_CELLS)
        };
        let fr = if i == PRESCAN_CELLS { f_hi } else { f(r)? };
        if (prev.1 < T::zero()) != (fr < T::zero()) {
            sign_changes += 1;
            if cell.is_none() && prev.1 < T::zero() {
                cell = Some((prev.0, r));
            }
        }
        prev = (r, fr);
    }
    let (mut lo, mut hi) = cell.expect("bracket endpoints straddle a sign change");

    let mut r = T::lit(0.5) * (lo + hi);
    let mut previous_width = hi - lo;
    for iteration in 1..=MAX_ITERATIONS {
        let fr = f(r)?;
        if fr.abs() <= tolerance {
            return Ok(OrderParameterSolution {
                coupling: k,
                order,
                r,
                residual: fr.abs(),
                bracket_lo,
                bracket_hi,
                iterations: iteration,
                sign_changes,
            });
        }
        if fr < T::zero() {
            lo = r;
        } else {
            hi = r;
        }
        if hi - lo <= T::lit(2.0) * T::epsilon() * hi {
            break;
        }
        let slope = residual_slope(order, k, r)?;
        let newton = r - fr / slope;
        let width = hi - lo;
        r = if slope != T::zero() && newton > lo && newton < hi && width < T::lit(0.75) * previous_width
            || iteration == 1 && newton > lo && newton < hi
        {
            newton
        } else {
            T::lit(0.5) * (lo + hi)
        };
        previous_width = width;
    }
    Err(Error::NotConverged { op: "solve_r", iterations: MAX_ITERATIONS })
}
