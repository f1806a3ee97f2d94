//! Positive zeros of the ordinary Bessel function J_0.

use crate::error::{domain, Error, Result};
use crate::scalar::Scalar;

/// (J_0(x), J_1(x)) for x ≥ 0 by Miller's backward recurrence, normalised with
/// J_0 + 2 Σ_{k≥1} J_{2k} = 1.
pub(crate) fn j0_j1<T: Scalar>(x: T) -> (T, T) {
    if x == T::zero() {
        return (T::one(), T::zero());
    }
    let xf = x.as_f64();
    let start = (1.1 * xf + 6.0 * xf.cbrt() + 60.0) as usize;
    let start = start + start % 2;
    let big = T::max_value().sqrt().sqrt();
    let two_over_x = T::lit(2.0) / x;

    let mut above = T::zero();
    let mut current = T::one();
    let mut norm = T::zero();
    let mut j1 = T::zero();
    for k in (1..=start).rev() {
        // current holds J_k, above holds J_{k+1}.
        let below = two_over_x * T::of_usize(k) * current - above;
        above = current;
        current = below;
        let idx = k - 1;
        if idx == 1 {
            j1 = current;
        }
        if idx > 0 && idx % 2 == 0 {
            norm = norm + T::lit(2.0) * current;
        }
        if current.abs() > big {
            above = above / big;
            current = current / big;
            norm = norm / big;
            j1 = j1 / big;
        }
    }
    norm = norm + current;
    (current / norm, j1 / norm)
}

/// The first `count` positive zeros j_{0,1} < j_{0,2} < … of J_0.
///
/// Each zero starts from (n − ¼)π and is refined by Newton's method with
/// J_0' = −J_1.
pub fn j0_zeros<T: Scalar>(count: usize) -> Result<Vec<T>> {
    if count == 0 {
        return Err(domain("j0_zeros", "count must be at least 1"));
    }
    let mut zeros = Vec::with_capacity(count);
    for n in 1..=count {
        let mut z = (T::of_usize(n) - T::lit(0.25)) * T::PI();
        let mut converged = false;
        for _ in 0..60 {
            let (j0, j1) = j0_j1(z);
            let step = j0 / j1;
            z = z + step;
            if step.abs() <= T::lit(4.0) * T::epsilon() * z {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NotConverged { op: "j0_zeros", iterations: 60 });
        }
        zeros.push(z);
    }
    Ok(zeros)
}
