use super::{EPS, SQRT_PI};
use crate::error::{Error, Result};
use crate::sum::Neumaier;

const ETA_TERMS: usize = 40;

/// Dirichlet eta function `η(s) = Σ_{k≥1} (-1)^{k-1} k^{-s}` for real
/// `s > -1`, by Borwein's accelerated alternating sum.
pub fn dirichlet_eta(s: f64) -> f64 {
    let n = ETA_TERMS;
    let nf = n as f64;
    let mut d = [0.0f64; ETA_TERMS + 1];
    let mut term = 1.0 / nf;
    let mut partial = term;
    d[0] = 1.0;
    for i in 0..n {
        let fi = i as f64;
        term *= 4.0 * (nf + fi) * (nf - fi) / ((2.0 * fi + 1.0) * (2.0 * fi + 2.0));
        partial += term;
        d[i + 1] = nf * partial;
    }
    let dn = d[n];
    let mut acc = Neumaier::new();
    for (k, dk) in d.iter().take(n).enumerate() {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        acc.add(sign * (dk - dn) / libm::pow((k + 1) as f64, s));
    }
    -acc.value() / dn
}

/// `∫_0^∞ x^{b-1} sech² x dx = 2^{2-b}(1 - 2^{2-b}) Γ(b) ζ(b-1)`.
///
/// Evaluated as `2^{2-b} Γ(b) η(b-1)`, which is the same expression without
/// the zeta pole. `b = 2` is still rejected because the closed form above
/// is indeterminate there.
pub fn sech2_moment(b: f64) -> Result<f64> {
    if !(b > 0.0 && b.is_finite()) {
        return Err(Error::Domain("sech2_moment needs b > 0"));
    }
    if b == 2.0 {
        return Err(Error::Domain(
            "sech2_moment closed form has a pole at b = 2",
        ));
    }
    Ok(libm::exp2(2.0 - b) * libm::tgamma(b) * dirichlet_eta(b - 1.0))
}

/// Upper incomplete gamma `Γ(a, 1/2) = ∫_a^∞ t^{-1/2} e^{-t} dt = √π erfc(√a)`.
///
/// NaN for negative `a`.
pub fn upper_incomplete_gamma_half(a: f64) -> f64 {
    SQRT_PI * libm::erfc(libm::sqrt(a))
}

/// A polylogarithm value with the bound on its neglected tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Polylog {
    pub value: f64,
    pub tail_bound: f64,
    pub terms: usize,
}

const POLYLOG_MAX_TERMS: usize = 10_000_000;

/// `Li_s(x) = Σ_{n≥1} x^n / n^s` for `s ∈ {1, 3/2}` and `0 <= x < 1`.
///
/// `Li_1(x) = -log(1-x)` exactly; `Li_{3/2}` is summed directly until the
/// geometric tail bound `x^{N+1} / ((N+1)^{3/2}(1-x))` drops below half an
/// ulp of the partial sum.
pub fn polylog(s: f64, x: f64) -> Result<Polylog> {
    if !(0.0..1.0).contains(&x) {
        return Err(Error::Domain("polylog needs 0 <= x < 1"));
    }
    if s == 1.0 {
        return Ok(Polylog {
            value: -libm::log1p(-x),
            tail_bound: 0.0,
            terms: 0,
        });
    }
    if s != 1.5 {
        return Err(Error::UnsupportedOrder(s));
    }
    let mut acc = Neumaier::new();
    let mut power = 1.0;
    let mut tail = 0.0;
    let mut terms = 0;
    for n in 1..=POLYLOG_MAX_TERMS {
        power *= x;
        if power == 0.0 {
            tail = 0.0;
            break;
        }
        let nf = n as f64;
        acc.add(power / (nf * libm::sqrt(nf)));
        terms = n;
        let m = nf + 1.0;
        tail = power * x / (m * libm::sqrt(m) * (1.0 - x));
        if tail <= 0.5 * EPS * acc.value() {
            break;
        }
    }
    Ok(Polylog {
        value: acc.value(),
        tail_bound: tail,
        terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    #[test]
    fn eta_reference_values() {
        assert!((dirichlet_eta(0.0) - 0.5).abs() < 1e-15);
        assert!((dirichlet_eta(2.0) - PI * PI / 12.0).abs() < 1e-15);
        assert!((dirichlet_eta(3.0) - 0.901_542_677_369_695_7).abs() < 1e-15);
        assert!((dirichlet_eta(-0.5) - 0.380_104_812_609_684).abs() < 1e-14);
        assert!((dirichlet_eta(1.0) - core::f64::consts::LN_2).abs() < 1e-15);
    }

    #[test]
    fn sech2_moments() {
        assert!((sech2_moment(1.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((sech2_moment(3.0).unwrap() - PI * PI / 12.0).abs() < 1e-14);
        let pi4 = PI * PI * PI * PI;
        assert!((sech2_moment(5.0).unwrap() - 7.0 * pi4 / 240.0).abs() < 1e-13);
        assert!(sech2_moment(2.0).is_err());
        assert!(sech2_moment(0.0).is_err());
    }

    #[test]
    fn incomplete_gamma() {
        assert!((upper_incomplete_gamma_half(0.0) - SQRT_PI).abs() < 1e-15);
        assert!((upper_incomplete_gamma_half(1.0) - 0.278_805_585_280_661_98).abs() < 1e-15);
        let g = upper_incomplete_gamma_half(libm::log(50.0));
        assert!((g - 0.009_138_001_388_442_474).abs() < 1e-15);
    }

    #[test]
    fn polylog_values() {
        let l = polylog(1.5, 0.0).unwrap();
        assert_eq!(l.value, 0.0);
        let x = 1.0 / (51.0 * libm::log(51.0));
        let l = polylog(1.5, x).unwrap();
        assert!(l.terms <= 10 && l.tail_bound <= 1e-16);
        let one = polylog(1.0, x).unwrap();
        assert!(l.value <= one.value);
        let l = polylog(1.5, 0.5).unwrap();
        assert!((l.value - 0.624_837_020_819_913_9).abs() < 1e-15);
        assert!(polylog(1.5, 1.0).is_err());
        assert!(polylog(2.0, 0.5).is_err());
    }
}
