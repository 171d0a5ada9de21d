use core::f64::consts::PI;

use super::{LengthSpectrum, SeriesEvaluation};
use crate::error::{Error, Result};
use crate::specfun::{csch_k1, csch_k32};
use crate::sum::Neumaier;

/// Default accuracy of the sum over powers of each geodesic.
pub const DEFAULT_N_TAIL_TOL: f64 = 1e-15;

const MAX_POWERS: u32 = 10_000_000;
/// Relative error of one `csch·K_1` evaluation (continued fraction or series).
const TERM_REL_ERROR: f64 = 32.0 * f64::EPSILON;

/// `(1/n) csch(nℓ/2) K_1(nℓ/2)`, the `n`-th power of a geodesic of length `ℓ`.
pub fn hyperbolic_term(ell: f64, n: u32) -> f64 {
    let nf = f64::from(n);
    csch_k1(0.5 * nf * ell) / nf
}

/// `(1/n) csch(nℓ/2) K_{3/2}(nℓ/2)`, an upper bound for [`hyperbolic_term`].
/// Consecutive majorants shrink at least by `e^{-ℓ}`.
pub fn hyperbolic_majorant(ell: f64, n: u32) -> f64 {
    let nf = f64::from(n);
    csch_k32(0.5 * nf * ell) / nf
}

/// `Σ_n hyperbolic_term(ℓ, n)` stopped once the majorant tail is small.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeodesicSum {
    pub value: f64,
    /// Bound on the omitted powers, `majorant(M+1)/(1 - e^{-ℓ})`.
    pub tail_bound: f64,
    pub eval_error: f64,
    pub terms: u32,
}

pub fn geodesic_sum(ell: f64, n_tail_tol: f64) -> Result<GeodesicSum> {
    if !(ell > 0.0 && ell.is_finite()) {
        return Err(Error::Domain("geodesic length must be positive"));
    }
    let ratio = -libm::expm1(-ell);
    let mut acc = Neumaier::new();
    let mut tail = f64::INFINITY;
    let mut terms = 0;
    for n in 1..=MAX_POWERS {
        acc.add(hyperbolic_term(ell, n));
        terms = n;
        tail = hyperbolic_majorant(ell, n + 1) / ratio;
        if tail <= n_tail_tol {
            break;
        }
    }
    let value = acc.value();
    Ok(GeodesicSum {
        value,
        tail_bound: tail,
        eval_error: TERM_REL_ERROR * acc.abs_sum() + f64::EPSILON * value,
        terms,
    })
}

/// `A(γ) = -(s/4π) Σ_n (1/n) csch(nℓ/2) K_1(nℓ/2)` for a class of length
/// `ℓ` counted `s` times.
pub fn geodesic_contribution(ell: f64, s: u32, n_tail_tol: f64) -> Result<f64> {
    Ok(-f64::from(s) * geodesic_sum(ell, n_tail_tol)?.value / (4.0 * PI))
}

/// Hyperbolic term `-(1/4π) Σ_{(ℓ, mult)} mult · Σ_n term(ℓ, n)`.
pub fn hyperbolic_contribution(spec: &LengthSpectrum, n_tail_tol: f64) -> Result<SeriesEvaluation> {
    if spec.is_empty() {
        return Err(Error::EmptySpectrum);
    }
    let mut value = Neumaier::new();
    let mut truncation = 0.0;
    let mut eval_error = 0.0;
    let mut terms = 0;
    for e in spec.entries() {
        let g = geodesic_sum(e.length, n_tail_tol)?;
        let m = f64::from(e.multiplicity);
        value.add(m * g.value);
        truncation += m * g.tail_bound;
        eval_error += m * g.eval_error;
        terms = terms.max(g.terms as usize);
    }
    let w = 1.0 / (4.0 * PI);
    Ok(SeriesEvaluation {
        value: -w * value.value(),
        truncation_bound: w * truncation,
        eval_error: w * eval_error,
        rounding_error: w * f64::EPSILON * value.abs_sum(),
        terms,
    })
}

/// First index at which `ℓ_j >= log j + log log j` fails.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Violation {
    pub index: u64,
    pub length: f64,
    pub threshold: f64,
}

/// Outcome of checking `ℓ_j >= log j + log log j` along a spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AssumptionReport {
    pub holds: bool,
    pub first_violation: Option<Violation>,
    /// Indices below 3 are not checked (`log log j` needs `j > e`).
    pub skipped: u64,
    /// Largest index checked.
    pub verified_through: u64,
}

/// Checks `ℓ_j >= log j + log log j` for every represented `j >= max(start, 3)`,
/// with lengths repeated by multiplicity.
pub fn assumption_check(spec: &LengthSpectrum, start_index: u64) -> AssumptionReport {
    let first = start_index.max(3);
    let mut skipped = 0;
    let mut verified_through = 0;
    let mut first_violation = None;
    for (j, ell) in spec.indexed_lengths() {
        if j < 3 {
            skipped += 1;
            continue;
        }
        if j < first {
            continue;
        }
        let x = libm::log(j as f64);
        let threshold = x + libm::log(x);
        if ell < threshold && first_violation.is_none() {
            first_violation = Some(Violation {
                index: j,
                length: ell,
                threshold,
            });
        }
        verified_through = j;
    }
    AssumptionReport {
        holds: first_violation.is_none(),
        first_violation,
        skipped,
        verified_through,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contributions::{Provenance, SpectrumEntry};
    use alloc::vec;

    #[test]
    fn rrll_row() {
        let ell = 1.736_005_750_8;
        let a = geodesic_contribution(ell, 1, DEFAULT_N_TAIL_TOL).unwrap();
        assert!((a - -0.064_746).abs() < 5e-7);
    }

    #[test]
    fn term_monotonicity() {
        for ell in [0.5, 1.0, 3.0] {
            for n in 1..30 {
                assert!(hyperbolic_term(ell, n + 1) < hyperbolic_term(ell, n));
                assert!(hyperbolic_term(ell, n) <= hyperbolic_majorant(ell, n));
            }
            assert!(hyperbolic_term(ell + 0.1, 1) < hyperbolic_term(ell, 1));
        }
    }

    #[test]
    fn tail_bound_is_honest() {
        let ell = 0.3;
        let loose = geodesic_sum(ell, 1e-6).unwrap();
        let tight = geodesic_sum(ell, 1e-16).unwrap();
        assert!(tight.value - loose.value <= loose.tail_bound);
        assert!(tight.terms > loose.terms);
    }

    #[test]
    fn linear_in_multiplicity() {
        let one = LengthSpectrum::new(vec![SpectrumEntry::new(1.2, 1)], Provenance::File).unwrap();
        let two = LengthSpectrum::new(vec![SpectrumEntry::new(1.2, 2)], Provenance::File).unwrap();
        let a = hyperbolic_contribution(&one, DEFAULT_N_TAIL_TOL)
            .unwrap()
            .value;
        let b = hyperbolic_contribution(&two, DEFAULT_N_TAIL_TOL)
            .unwrap()
            .value;
        assert!((2.0 * a - b).abs() < 1e-16);
        assert!(a < 0.0);
    }

    #[test]
    fn empty_spectrum_is_an_error() {
        let s = LengthSpectrum::empty(Provenance::File);
        assert_eq!(
            hyperbolic_contribution(&s, 1e-15),
            Err(Error::EmptySpectrum)
        );
    }

    #[test]
    fn assumption_scan() {
        let s = LengthSpectrum::new(
            vec![SpectrumEntry::new(1.0, 2), SpectrumEntry::new(20.0, 49)],
            Provenance::File,
        )
        .unwrap();
        let r = assumption_check(&s, 1);
        assert!(r.holds);
        assert_eq!(r.skipped, 2);
        assert_eq!(r.verified_through, 51);
    }

    #[test]
    fn assumption_violation_is_located() {
        let s = LengthSpectrum::new(vec![SpectrumEntry::new(1.0, 51)], Provenance::File).unwrap();
        let v = assumption_check(&s, 51).first_violation.unwrap();
        assert_eq!(v.index, 51);
        let x = libm::log(51.0);
        assert!((v.threshold - (x + libm::log(x))).abs() < 1e-15);
        let v = assumption_check(&s, 1).first_violation.unwrap();
        assert_eq!(v.index, 3);
        assert!((v.threshold - 1.193).abs() < 1e-3);
    }
}
