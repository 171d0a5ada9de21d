//! Special functions for real orders and positive real arguments.
//!
//! Every evaluation reports an absolute error bound together with the method
//! that produced it, so independent routes can be cross-checked against each
//! other within their stated accuracy.

mod bessel;
mod misc;
mod struve;

pub use bessel::{bessel_k, bessel_y, bessel_y_integral, csch_k1, csch_k32, scaled_k1};
pub use misc::{dirichlet_eta, polylog, sech2_moment, upper_incomplete_gamma_half, Polylog};
pub use struve::{
    struve_h, struve_k, struve_k_asymptotic, struve_k_quadrature, struve_k_series,
    ASYMPTOTIC_MIN_Z, SERIES_MAX_Z,
};

use crate::error::{Error, Result};

/// How a value was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Series,
    Asymptotic,
    IntegralRep,
    ClosedForm,
    ContinuedFraction,
}

/// A function value with an absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FnEval {
    pub value: f64,
    pub abs_error_bound: f64,
    /// Whether `abs_error_bound` is a proven bound (truncation plus a
    /// worst-case rounding model) or an estimate.
    pub rigorous: bool,
    pub method: Method,
}

impl FnEval {
    /// Whether two evaluations agree within their combined error bounds.
    pub fn agrees_with(&self, other: &FnEval) -> bool {
        (self.value - other.value).abs() <= self.abs_error_bound + other.abs_error_bound
    }
}

/// The four orders the Struve and Bessel kernels are implemented for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Order {
    Half,
    One,
    ThreeHalves,
    Two,
}

impl Order {
    pub(crate) fn from_f64(nu: f64) -> Result<Order> {
        if nu == 0.5 {
            Ok(Order::Half)
        } else if nu == 1.0 {
            Ok(Order::One)
        } else if nu == 1.5 {
            Ok(Order::ThreeHalves)
        } else if nu == 2.0 {
            Ok(Order::Two)
        } else {
            Err(Error::UnsupportedOrder(nu))
        }
    }

    pub(crate) fn nu(self) -> f64 {
        match self {
            Order::Half => 0.5,
            Order::One => 1.0,
            Order::ThreeHalves => 1.5,
            Order::Two => 2.0,
        }
    }

    /// `Γ(ν + 1/2)`
    pub(crate) fn gamma_nu_half(self) -> f64 {
        match self {
            Order::Half => 1.0,
            Order::One => SQRT_PI / 2.0,
            Order::ThreeHalves => 1.0,
            Order::Two => 3.0 * SQRT_PI / 4.0,
        }
    }

    /// `Γ(ν + 3/2)`
    pub(crate) fn gamma_nu_three_halves(self) -> f64 {
        match self {
            Order::Half => 1.0,
            Order::One => 3.0 * SQRT_PI / 4.0,
            Order::ThreeHalves => 2.0,
            Order::Two => 15.0 * SQRT_PI / 8.0,
        }
    }
}

pub(crate) const SQRT_PI: f64 = 1.772_453_850_905_516_027_298_167_483_341_145_2;
pub(crate) const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082_402_4;
pub(crate) const EPS: f64 = f64::EPSILON;

/// Spacing between `|x|` and the next larger double.
pub(crate) fn ulp(x: f64) -> f64 {
    let a = x.abs();
    if !a.is_finite() {
        return f64::NAN;
    }
    f64::from_bits(a.to_bits() + 1) - a
}

pub(crate) fn check_positive(z: f64) -> Result<()> {
    if z > 0.0 && z.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain("argument must be positive and finite"))
    }
}
