use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::{
    fig1_value, margin_edin, margin_ineq9, margin_lower_turan, margin_new_turan,
    margin_turanb, margin_turaninter, signed_margin_turanb, EvaluationGrid, SignedLog,
};
use crate::bessel::Order;
use crate::error::{domain, Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InequalityId {
    Turanb,
    LowerTuran,
    Edin,
    Turaninter,
    Ineq9,
    NewTuran,
    Fig1,
}

impl InequalityId {
    pub const ALL: [InequalityId; 7] = [
        Self::Turanb,
        Self::LowerTuran,
        Self::Edin,
        Self::Turaninter,
        Self::Ineq9,
        Self::NewTuran,
        Self::Fig1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Turanb => "turanb",
            Self::LowerTuran => "lower_turan",
            Self::Edin => "edin",
            Self::Turaninter => "turaninter",
            Self::Ineq9 => "ineq9",
            Self::NewTuran => "new_turan",
            Self::Fig1 => "fig1",
        }
    }

    /// Positive where the inequality holds. For `fig1` this is −g_a(x).
    pub fn margin<T: Scalar>(self, order: Order<T>, x: T) -> Result<T> {
        match self {
            Self::Turanb => margin_turanb(order, x),
            Self::LowerTuran => margin_lower_turan(order, x),
            Self::Edin => margin_edin(x),
            Self::Turaninter => margin_turaninter(order, x),
            Self::Ineq9 => margin_ineq9(order, x),
            Self::NewTuran => margin_new_turan(order, x),
            Self::Fig1 => fig1_value(order, x).map(|g| -g),
        }
    }

    /// [`margin`](Self::margin) as sign and log-magnitude, exact in sign even
    /// where the value underflows.
    pub fn signed_margin<T: Scalar>(self, order: Order<T>, x: T) -> Result<SignedLog<T>> {
        match self {
            Self::Turanb => signed_margin_turanb(order, x),
            _ => self.margin(order, x).map(SignedLog::from_value),
        }
    }

    /// What is established about the inequality at this order.
    pub fn claim<T: Scalar>(self, order: Order<T>) -> Claim {
        let nu = order.nu();
        match self {
            Self::Turanb => Claim::Proven,
            Self::LowerTuran | Self::Edin => Claim::Proven,
            Self::Turaninter if nu >= T::lit(0.5) => Claim::Proven,
            Self::Turaninter => Claim::NotClaimed,
            Self::Ineq9 => Claim::Conjectured,
            Self::NewTuran | Self::Fig1 if nu == T::zero() || nu >= T::lit(0.3) => Claim::Proven,
            Self::NewTuran | Self::Fig1 => Claim::Conjectured,
        }
    }
}

impl fmt::Display for InequalityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InequalityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| domain("InequalityId", format!("unknown inequality '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    Proven,
    Conjectured,
    NotClaimed,
}

/// Grid evidence for one inequality at one order. This is a numerical check
/// on finitely many points, not a proof.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InequalityReport<T> {
    pub inequality_id: InequalityId,
    pub order: Order<T>,
    pub grid: EvaluationGrid<T>,
    /// Smallest margin on the grid; may underflow to zero for a positive margin.
    pub min_margin: T,
    /// log |smallest margin|, finite where `min_margin` underflows.
    pub min_margin_ln_abs: T,
    pub argmin_x: T,
    /// Grid points with margin ≤ 0 (or not a number).
    pub violations: usize,
    pub claim: Claim,
    pub evidence: &'static str,
}

impl<T> InequalityReport<T> {
    pub fn holds(&self) -> bool {
        self.violations == 0
    }
}

/// Evaluates the margin at every grid point. Points are evaluated in parallel;
/// the reduction walks them in grid order, so the first index attaining the
/// minimum is reported.
pub fn sweep<T: Scalar>(
    id: InequalityId,
    order: Order<T>,
    grid: &EvaluationGrid<T>,
) -> Result<InequalityReport<T>> {
    let order = if id == InequalityId::Edin { Order::new(T::zero())? } else { order };
    let xs = grid.values();
    let margins: Vec<SignedLog<T>> = xs
        .par_iter()
        .map(|&x| id.signed_margin(order, x))
        .collect::<Result<_>>()?;
    let mut min = margins[0];
    let mut argmin_x = xs[0];
    let mut violations = 0;
    for (&x, &m) in xs.iter().zip(&margins) {
        if !m.is_positive() {
            violations += 1;
        }
        if m.less_than(min) {
            min = m;
            argmin_x = x;
        }
    }
    Ok(InequalityReport {
        inequality_id: id,
        order,
        grid: *grid,
        min_margin: min.value(),
        min_margin_ln_abs: min.ln_abs,
        argmin_x,
        violations,
        claim: id.claim(order),
        evidence: "numerical grid verification, not a proof",
    })
}
