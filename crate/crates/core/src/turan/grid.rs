use serde::Serialize;

use crate::error::{domain, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Linear,
    Logarithmic,
}

/// Sample points over [lo, hi], both ends included.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvaluationGrid<T> {
    pub lo: T,
    pub hi: T,
    pub points: usize,
    pub spacing: Spacing,
}

impl<T: Scalar> EvaluationGrid<T> {
    pub fn new(lo: T, hi: T, points: usize, spacing: Spacing) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) || lo <= T::zero() || lo >= hi {
            return Err(domain("EvaluationGrid", format!("need 0 < lo < hi, got [{lo}, {hi}]")));
        }
        if points < 2 {
            return Err(domain("EvaluationGrid", format!("need at least 2 points, got {points}")));
        }
        Ok(Self { lo, hi, points, spacing })
    }

    pub fn linear(lo: T, hi: T, points: usize) -> Result<Self> {
        Self::new(lo, hi, points, Spacing::Linear)
    }

    pub fn logarithmic(lo: T, hi: T, points: usize) -> Result<Self> {
        Self::new(lo, hi, points, Spacing::Logarithmic)
    }

    pub fn value(&self, i: usize) -> T {
        let last = self.points - 1;
        if i == 0 {
            return self.lo;
        }
        if i >= last {
            return self.hi;
        }
        let t = T::of_usize(i) / T::of_usize(last);
        match self.spacing {
            Spacing::Linear => self.lo + t * (self.hi - self.lo),
            Spacing::Logarithmic => (self.lo.ln() + t * (self.hi.ln() - self.lo.ln())).exp(),
        }
    }

    pub fn values(&self) -> Vec<T> {
        (0..self.points).map(|i| self.value(i)).collect()
    }
}
