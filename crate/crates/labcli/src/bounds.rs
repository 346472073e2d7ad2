//! Exponential bound constants for the sign of `chi` at `p = c/n`.
//!
//! Below `c = 3` the probability that `chi >= 0` is at most `lambda^(n^2)`;
//! above it the probability that `chi > 0` fails is at most `mu^(n^2)`. Both
//! are reported next to the empirical frequencies and never used as
//! thresholds.

use complex2::Float;

use crate::{LabError, Result};

#[derive(Copy, Clone, Debug, PartialEq)]
pub enum BoundConstant<F> {
    /// `c < 3`: `lambda = exp(-(1 - c/3)^2 / 8)`.
    Lambda(F),
    /// `c > 3`: `mu = exp(-(c/3 - 1) / 8)`.
    Mu(F),
}

impl<F: Float> BoundConstant<F> {
    pub fn value(self) -> F {
        match self {
            BoundConstant::Lambda(x) | BoundConstant::Mu(x) => x,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BoundConstant::Lambda(_) => "lambda",
            BoundConstant::Mu(_) => "mu",
        }
    }
}

pub fn theoretical_bounds<F: Float>(c: F) -> Result<BoundConstant<F>> {
    if c.is_nan() || c <= F::zero() || !c.is_finite() {
        return Err(LabError::Invalid(format!("c must be positive and finite, got {:?}", c.to_f64())));
    }
    let three = F::from(3.0).unwrap();
    let eighth = F::from(0.125).unwrap();
    let r = c / three;
    if c < three {
        let d = F::one() - r;
        Ok(BoundConstant::Lambda((-(d * d) * eighth).exp()))
    } else if c > three {
        Ok(BoundConstant::Mu((-(r - F::one()) * eighth).exp()))
    } else {
        Err(LabError::CriticalCase)
    }
}
