//! Closed-form bounds on r(K), the one-step Lagrange inversion L(K), the
//! rational approximation L_pol(K), and the difference table against the
//! solved r(K).

use num_traits::{FromPrimitive, Num};
use rayon::prelude::*;
use serde::Serialize;

use crate::bessel::{psi, Order};
use crate::error::{domain, Error, Result};
use crate::scalar::Scalar;
use crate::solver::{solve_r, CouplingStrength};
use crate::turan::{Claim, EvaluationGrid};

fn require_supercritical<T: Scalar>(op: &'static str, k: T) -> Result<()> {
    if k.is_nan() || k <= T::one() || k.is_infinite() {
        return Err(domain(op, format!("K must be finite and > 1, got {k}")));
    }
    Ok(())
}

/// √(1 − 1/K).
pub fn bound_lower_sqrt<T: Scalar>(k: T) -> Result<T> {
    require_supercritical("bound_lower_sqrt", k)?;
    Ok((T::one() - k.recip()).sqrt())
}

/// √(1 − 1/(2K)).
pub fn bound_upper_half<T: Scalar>(k: T) -> Result<T> {
    require_supercritical("bound_upper_half", k)?;
    Ok((T::one() - (T::lit(2.0) * k).recip()).sqrt())
}

/// A(K) = (1 − 1/K)^{1/4}.
pub fn bound_a<T: Scalar>(k: T) -> Result<T> {
    require_supercritical("bound_a", k)?;
    Ok((T::one() - k.recip()).sqrt().sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// r < √(1 − 1/(2K)).
    Half,
    /// √(1 − 1/K): below r at ν = 0, above r for ν ≥ ½.
    Sqrt,
    /// r < (1 − 1/K)^{(2ν+1)/4}.
    QuarterPower,
    /// r < (1 − (ν+1)/K)^{(2ν+1)/(4(ν+1))}.
    Sharp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSide {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundValue<T> {
    pub kind: BoundKind,
    pub value: T,
    pub side: BoundSide,
    /// Status of the bound at this order.
    pub claim: Claim,
}

/// The order-ν bound of the given kind, tagged with whether it is proven at ν.
pub fn bound_general<T: Scalar>(order: Order<T>, k: T, kind: BoundKind) -> Result<BoundValue<T>> {
    let nu = order.require_nonnegative("bound_general")?;
    let one = T::one();
    let two_nu_one = T::lit(2.0) * nu + one;
    let mut side = BoundSide::Upper;
    let (value, claim) = match kind {
        BoundKind::Half => (bound_upper_half(k)?, Claim::Proven),
        BoundKind::Sqrt => {
            let claim = if nu == T::zero() {
                side = BoundSide::Lower;
                Claim::Proven
            } else if nu >= T::lit(0.5) {
                Claim::Proven
            } else {
                Claim::NotClaimed
            };
            (bound_lower_sqrt(k)?, claim)
        }
        BoundKind::QuarterPower => {
            require_supercritical("bound_general", k)?;
            let claim = if nu == T::zero() || nu >= T::lit(0.3) { Claim::Proven } else { Claim::Conjectured };
            ((one - k.recip()).powf(two_nu_one / T::lit(4.0)), claim)
        }
        BoundKind::Sharp => {
            if k.is_nan() || k <= nu + one || k.is_infinite() {
                return Err(domain("bound_general", format!("sharp bound needs finite K > nu + 1, got K = {k}")));
            }
            let claim = if nu == T::zero() { Claim::Proven } else { Claim::Conjectured };
            let exponent = two_nu_one / (T::lit(4.0) * (nu + one));
            ((one - (nu + one) / k).powf(exponent), claim)
        }
    };
    Ok(BoundValue { kind, value, side, claim })
}

/// L(K) = A + (Ψ(s) − A) / (1 − Ψ(s)/A + 2KΨ(s)² − 2K·I₂(s)/I₀(s)),  s = 2K·A(K),
/// with I₂/I₀ taken as Ψ₀(s)·Ψ₁(s).
pub fn lagrange_l<T: Scalar>(k: T) -> Result<T> {
    require_supercritical("lagrange_l", k)?;
    let a = bound_a(k)?;
    let two_k = T::lit(2.0) * k;
    let s = two_k * a;
    let p0 = psi(Order::new(T::zero())?, s)?.value;
    let p1 = psi(Order::new(T::one())?, s)?.value;
    let denominator = T::one() - p0 / a + two_k * p0 * (p0 - p1);
    if denominator == T::zero() || !denominator.is_finite() {
        return Err(Error::ZeroDenominator { op: "lagrange_l", at: k.as_f64() });
    }
    Ok(a + (p0 - a) / denominator)
}

const LPOL_NUMERATOR: [i64; 6] = [1_048_576, -393_216, -276_480, 40_320, -7_560, -1_575];
const LPOL_DENOMINATOR: [i64; 7] = [4_194_304, -524_288, -843_776, 376_320, 3_936, 540, 3_375];

fn horner<T: Clone + Num + FromPrimitive>(coefficients: &[i64], k: &T) -> T {
    coefficients.iter().fold(T::zero(), |acc, &c| {
        acc * k.clone() + T::from_i64(c).expect("coefficient representable")
    })
}

/// Denominator of L_pol; positive for K ≥ 1.
pub fn lpol_denominator<T: Clone + Num + FromPrimitive>(k: T) -> T {
    horner(&LPOL_DENOMINATOR, &k)
}

/// L_pol(K) = 4K(1048576K⁵ − 393216K⁴ − 276480K³ + 40320K² − 7560K − 1575)
///          / (4194304K⁶ − 524288K⁵ − 843776K⁴ + 376320K³ + 3936K² + 540K + 3375).
///
/// Works over any numeric type with integer embedding, including exact rationals.
pub fn rational_lpol<T: Clone + Num + FromPrimitive>(k: T) -> T {
    let four = T::from_i64(4).expect("4 representable");
    four * k.clone() * horner(&LPOL_NUMERATOR, &k) / horner(&LPOL_DENOMINATOR, &k)
}

/// One row of the difference table. Differences are signed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ApproximationRow<T> {
    pub k: T,
    pub r: T,
    pub lower_sqrt: T,
    pub upper_half: T,
    pub a: T,
    pub l: T,
    pub lpol: T,
    pub delta_a: T,
    pub delta_lpol: T,
    pub delta_l: T,
}

impl<T: Scalar> ApproximationRow<T> {
    /// Builds a row for ν = 0 with r solved to `tolerance`.
    pub fn at(k: T, tolerance: T) -> Result<Self> {
        require_supercritical("ApproximationRow::at", k)?;
        let r = solve_r(Order::new(T::zero())?, CouplingStrength::new(k)?, tolerance)?.r;
        let a = bound_a(k)?;
        let l = lagrange_l(k)?;
        let lpol = rational_lpol(k);
        Ok(Self {
            k,
            r,
            lower_sqrt: bound_lower_sqrt(k)?,
            upper_half: bound_upper_half(k)?,
            a,
            l,
            lpol,
            delta_a: a - r,
            delta_lpol: lpol - r,
            delta_l: l - r,
        })
    }
}

/// Rows for each K, in input order.
pub fn error_table<T: Scalar>(k_values: &[T], tolerance: T) -> Result<Vec<ApproximationRow<T>>> {
    k_values.par_iter().map(|&k| ApproximationRow::at(k, tolerance)).collect()
}

/// A tabulated difference together with the unit of its last printed digit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrintedValue {
    pub value: f64,
    pub last_digit: f64,
}

impl PrintedValue {
    const fn new(value: f64, last_digit: f64) -> Self {
        Self { value, last_digit }
    }

    /// Significant digits shown in the printed value.
    pub fn significant_digits(&self) -> usize {
        let lead = self.value.abs().log10().floor();
        (lead - self.last_digit.log10().round()) as usize + 1
    }
}

/// Coupling strengths of the reference difference table.
pub const REFERENCE_K: [f64; 5] = [1.5, 2.0, 5.0, 10.0, 100.0];

/// Reference A(K) − r(K) at [`REFERENCE_K`].
pub const REFERENCE_DELTA_A: [PrintedValue; 5] = [
    PrintedValue::new(0.035677, 1e-6),
    PrintedValue::new(0.009434, 1e-6),
    PrintedValue::new(0.0001994, 1e-7),
    PrintedValue::new(0.00001936, 1e-8),
    PrintedValue::new(1.59e-8, 1e-10),
];

/// Reference L_pol(K) − r(K) at [`REFERENCE_K`].
pub const REFERENCE_DELTA_LPOL: [PrintedValue; 5] = [
    PrintedValue::new(0.02818, 1e-5),
    PrintedValue::new(0.0042565, 1e-7),
    PrintedValue::new(-0.000234, 1e-6),
    PrintedValue::new(-0.0000372, 1e-7),
    PrintedValue::new(-4.25e-8, 1e-10),
];

/// Points in [lo, hi] where |L_pol − r| − |A − r| changes sign, located on a
/// `points`-point log grid and refined by bisection to `tolerance`.
pub fn lpol_crossovers<T: Scalar>(lo: T, hi: T, points: usize, tolerance: T) -> Result<Vec<T>> {
    require_supercritical("lpol_crossovers", lo)?;
    if tolerance.is_nan() || tolerance <= T::zero() {
        return Err(domain("lpol_crossovers", format!("tolerance must be positive, got {tolerance}")));
    }
    let gap = |k: T| -> Result<T> {
        let row = ApproximationRow::at(k, T::lit(1e-13).max(T::epsilon()))?;
        Ok(row.delta_lpol.abs() - row.delta_a.abs())
    };
    let ks = EvaluationGrid::logarithmic(lo, hi, points)?.values();
    let gaps = ks.par_iter().map(|&k| gap(k)).collect::<Result<Vec<T>>>()?;
    let mut crossings = Vec::new();
    for i in 1..ks.len() {
        let below = gaps[i - 1] < T::zero();
        if below == (gaps[i] < T::zero()) {
            continue;
        }
        let (mut left, mut right) = (ks[i - 1], ks[i]);
        while right - left > tolerance {
            let mid = T::lit(0.5) * (left + right);
            if (gap(mid)? < T::zero()) == below {
                left = mid;
            } else {
                right = mid;
            }
        }
        crossings.push(T::lit(0.5) * (left + right));
    }
    Ok(crossings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn o(nu: f64) -> Order<f64> {
        Order::new(nu).unwrap()
    }

    #[test]
    fn closed_forms_at_two() {
        assert!((bound_lower_sqrt(2.0_f64).unwrap() - 0.5_f64.sqrt()).abs() < 1e-16);
        assert!((bound_upper_half(2.0_f64).unwrap() - 0.75_f64.sqrt()).abs() < 1e-16);
        assert!((bound_a(2.0_f64).unwrap() - 0.840_896_415_253_714_6).abs() < 1e-15);
        let k = 1.2_f64;
        assert!(bound_lower_sqrt(k).unwrap() < bound_a(k).unwrap());
        assert!(bound_a(k).unwrap() < bound_upper_half(k).unwrap());
        for f in [bound_lower_sqrt::<f64>, bound_upper_half, bound_a] {
            assert!(f(1.0).is_err());
            assert!((f(1e12).unwrap() - 1.0).abs() < 1e-11);
        }
    }

    #[test]
    fn general_bounds() {
        for &k in &[1.5, 2.0, 7.0] {
            let a = bound_a(k).unwrap();
            assert!((bound_general(o(0.0), k, BoundKind::QuarterPower).unwrap().value - a).abs() < 1e-15);
            assert!((bound_general(o(0.0), k, BoundKind::Sharp).unwrap().value - a).abs() < 1e-15);
        }
        let sharp = bound_general(o(1.0), 4.0, BoundKind::Sharp).unwrap();
        let quarter = bound_general(o(1.0), 4.0, BoundKind::QuarterPower).unwrap();
        assert!((sharp.value - 0.5_f64.powf(0.375)).abs() < 1e-15);
        assert!((quarter.value - 0.75_f64.powf(0.75)).abs() < 1e-15);
        assert!(sharp.value < quarter.value);
        assert_eq!(sharp.claim, Claim::Conjectured);
        assert_eq!(quarter.claim, Claim::Proven);
        assert_eq!(bound_general(o(0.1), 4.0, BoundKind::QuarterPower).unwrap().claim, Claim::Conjectured);
        assert_eq!(bound_general(o(0.25), 4.0, BoundKind::Sqrt).unwrap().claim, Claim::NotClaimed);
        assert_eq!(bound_general(o(0.0), 4.0, BoundKind::Sqrt).unwrap().side, BoundSide::Lower);
        assert_eq!(bound_general(o(1.0), 4.0, BoundKind::Sqrt).unwrap().side, BoundSide::Upper);
        assert!(bound_general(o(1.0), 2.0, BoundKind::Sharp).is_err());
        assert!(bound_general(o(1.0), 1.0, BoundKind::Half).is_err());
    }

    /// Exact L(K) with A = 1, s = 2K and the Bessel ratios replaced by the
    /// four-term large-argument expansion whose last coefficient is
    /// `last` (k!·8^k gives 3072).
    fn truncated_lagrange(k: &BigRational, last: i64) -> BigRational {
        let int = |v: i64| BigRational::from_i64(v).unwrap();
        let s = int(2) * k.clone();
        let series = |nu: i64| {
            let mu = int(4 * nu * nu);
            let c1 = mu.clone() - int(1);
            let c2 = c1.clone() * (mu.clone() - int(9));
            let c3 = c2.clone() * (mu - int(25));
            int(1) - c1 / (int(8) * s.clone()) + c2 / (int(128) * s.clone() * s.clone())
                - c3 / (int(last) * s.clone() * s.clone() * s.clone())
        };
        let (p0, p1, p2) = (series(0), series(1), series(2));
        let psi = p1 / p0.clone();
        let i2_i0 = p2 / p0;
        let two_k = int(2) * k.clone();
        let one = int(1);
        one.clone() + (psi.clone() - one.clone()) / (one - psi.clone() + two_k.clone() * psi.clone() * psi - two_k * i2_i0)
    }

    #[test]
    fn lpol_is_truncated_lagrange_with_1536() {
        for &(num, den) in &[(3, 2), (2, 1), (5, 1), (37, 7), (100, 1)] {
            let k = BigRational::new(num.into(), den.into());
            assert_eq!(rational_lpol(k.clone()), truncated_lagrange(&k, 1536));
            assert_ne!(rational_lpol(k.clone()), truncated_lagrange(&k, 3072));
        }
    }

    #[test]
    fn lpol_float_matches_exact() {
        for &k in &[1.01, 1.5, 2.0, 5.0, 10.0, 100.0, 1e4] {
            let exact = rational_lpol(BigRational::from_f64(k).unwrap());
            let approx = rational_lpol(k);
            let exact = num_traits::ToPrimitive::to_f64(&exact).unwrap();
            assert!(((approx - exact) / exact).abs() < 1e-13, "K = {k}");
        }
    }

    #[test]
    fn lpol_denominator_positive_from_one() {
        // Exact: every coefficient sum bound holds on a rational grid.
        for i in 0..=2000 {
            let k = BigRational::new((1000 + i).into(), 1000.into());
            assert!(lpol_denominator(k) > BigRational::from_i64(0).unwrap());
        }
        let xs = EvaluationGrid::logarithmic(1.0, 1e6, 5000).unwrap().values();
        assert!(xs.into_iter().all(|k| lpol_denominator(k) > 0.0));
    }

    #[test]
    fn lagrange_beats_a() {
        for &k in &[1.5_f64, 2.0, 2.8, 5.0, 10.0, 100.0] {
            let row = ApproximationRow::at(k, 1e-13).unwrap();
            assert!(row.delta_l.abs() < row.delta_a.abs(), "K = {k}");
        }
        assert!(lagrange_l(1.0_f64).is_err());
    }

    #[test]
    fn table_rows_are_consistent() {
        let rows = error_table(&REFERENCE_K, 1e-13).unwrap();
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.k, REFERENCE_K[i]);
            assert_eq!(row.delta_a, row.a - row.r);
            assert_eq!(row.delta_lpol, row.lpol - row.r);
            assert!(row.lower_sqrt < row.r && row.r < row.a && row.a < row.upper_half);
            if i > 0 {
                assert!(row.delta_a < rows[i - 1].delta_a);
            }
        }
        assert!(error_table(&[1.0_f64], 1e-13).is_err());
    }

    #[test]
    fn printed_digit_counts() {
        let digits: Vec<usize> = REFERENCE_DELTA_A.iter().map(PrintedValue::significant_digits).collect();
        assert_eq!(digits, [5, 4, 4, 4, 3]);
        let digits: Vec<usize> = REFERENCE_DELTA_LPOL.iter().map(PrintedValue::significant_digits).collect();
        assert_eq!(digits, [4, 5, 3, 3, 3]);
    }

    #[test]
    fn lpol_wins_on_a_middle_band() {
        let ks = lpol_crossovers(1.01_f64, 100.0, 200, 1e-6).unwrap();
        assert_eq!(ks.len(), 2, "{ks:?}");
        assert!(ks[0] > 1.2 && ks[0] < 1.3, "{ks:?}");
        assert!(ks[1] > 4.0 && ks[1] < 5.0, "{ks:?}");
    }
}
