//! Adaptive Gauss-Kronrod quadrature and the integral routes used as oracles
//! for the series evaluations.
//!
//! The error estimate is the usual Kronrod-Gauss discrepancy `|K15 - G7|` per
//! panel, floored by a roundoff term. It is an estimate, not a bound.

use alloc::collections::BinaryHeap;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::sum::Neumaier;

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub est_error: f64,
    pub evaluations: usize,
    /// False when the tolerance was not met within the subdivision budget.
    pub converged: bool,
}

impl QuadResult {
    /// Turns a non-converged result into [`Error::NoConvergence`].
    pub fn checked(self) -> Result<QuadResult> {
        if self.converged {
            Ok(self)
        } else {
            Err(Error::NoConvergence {
                estimate: self.value,
                error: self.est_error,
            })
        }
    }
}

/// Stopping rule: total error `<= max(abs, rel * |value|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Tolerance {
    pub const fn new(abs: f64, rel: f64) -> Self {
        Tolerance { abs, rel }
    }

    /// Same number used as absolute and relative target.
    pub const fn uniform(tol: f64) -> Self {
        Tolerance { abs: tol, rel: tol }
    }

    fn target(&self, value: f64) -> f64 {
        self.abs.max(self.rel * value.abs())
    }
}

/// Integration domains understood by [`integrate_decaying`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// `[0, 1]`
    UnitInterval,
    /// `[0, ∞)`
    HalfLine,
    /// `(-∞, ∞)`
    RealLine,
}

/// Coordinates for the semi-infinite elliptic kernel integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coordinates {
    /// `u = e^{-Cy}` on `[0, 1]`: the exponential weight becomes the measure.
    Exponential,
    /// `y = x / (1 - x)` on `[0, 1]`.
    Linear,
}

pub const MAX_SUBDIVISIONS: usize = 4000;

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    floor: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut resk = fc * WGK[7];
    let mut resg = fc * WG[3];
    let mut resabs = fc.abs() * WGK[7];
    for j in 0..7 {
        let x = h * XGK[j];
        let f1 = f(c - x);
        let f2 = f(c + x);
        resk += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            resg += WG[j / 2] * (f1 + f2);
        }
    }
    let h = h.abs();
    let floor = 50.0 * f64::EPSILON * resabs * h;
    let error = ((resk - resg) * h).abs().max(floor);
    Panel {
        a,
        b,
        value: resk * h * (b - a).signum(),
        error,
        floor,
    }
}

struct Totals {
    value: f64,
    error: f64,
    floor: f64,
}

impl Totals {
    /// Met the tolerance, or every panel is already down to roundoff.
    fn done(&self, tol: &Tolerance) -> bool {
        self.error.is_finite() && self.error <= tol.target(self.value).max(self.floor)
    }
}

fn totals(heap: &BinaryHeap<Panel>) -> Totals {
    let mut value = Neumaier::new();
    let mut error = Neumaier::new();
    let mut floor = Neumaier::new();
    for p in heap.iter() {
        value.add(p.value);
        error.add(p.error);
        floor.add(p.floor);
    }
    Totals {
        value: value.value(),
        error: error.value(),
        floor: floor.value(),
    }
}

/// Globally adaptive G7/K15 integration of `f` over `[a, b]`.
///
/// The panel with the largest error estimate is bisected until the summed
/// estimate meets `tol`, every panel is limited by roundoff, or
/// [`MAX_SUBDIVISIONS`] is reached. `f` is never evaluated at the endpoints.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: Tolerance) -> QuadResult {
    let first = gk15(&f, a, b);
    let mut evaluations = 15;
    let mut heap = BinaryHeap::new();
    heap.push(first);
    let mut value = first.value;
    let mut error = first.error;
    let mut floor = first.floor;
    let mut subdivisions = 1;
    loop {
        if error <= tol.target(value).max(floor) {
            // Running sums drift; confirm on exact totals before stopping.
            let t = totals(&heap);
            if t.done(&tol) {
                return QuadResult {
                    value: t.value,
                    est_error: t.error,
                    evaluations,
                    converged: true,
                };
            }
            value = t.value;
            error = t.error;
            floor = t.floor;
        }
        if subdivisions >= MAX_SUBDIVISIONS || !error.is_finite() {
            break;
        }
        let worst = match heap.pop() {
            Some(p) => p,
            None => break,
        };
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a.min(worst.b) && mid < worst.a.max(worst.b)) {
            heap.push(worst);
            break;
        }
        let left = gk15(&f, worst.a, mid);
        let right = gk15(&f, mid, worst.b);
        evaluations += 30;
        subdivisions += 1;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        floor += left.floor + right.floor - worst.floor;
        heap.push(left);
        heap.push(right);
    }
    let t = totals(&heap);
    QuadResult {
        value: t.value,
        est_error: t.error,
        evaluations,
        converged: t.done(&tol),
    }
}

/// Integrates a function that decays at infinity over one of the standard
/// domains. Infinite ranges are folded onto `[0, 1]` with `y = t/(1-t)`;
/// `tol` is used as both absolute and relative target.
pub fn integrate_decaying<F: Fn(f64) -> f64>(f: F, domain: Domain, tol: f64) -> QuadResult {
    let tol = Tolerance::uniform(tol);
    match domain {
        Domain::UnitInterval => integrate(f, 0.0, 1.0, tol),
        Domain::HalfLine => integrate(|t| half_line_map(&f, t), 0.0, 1.0, tol),
        Domain::RealLine => integrate(|t| half_line_map(&|y: f64| f(y) + f(-y), t), 0.0, 1.0, tol),
    }
}

#[inline]
fn half_line_map<F: Fn(f64) -> f64>(f: &F, t: f64) -> f64 {
    let w = 1.0 - t;
    let fy = f(t / w);
    if fy == 0.0 {
        0.0
    } else {
        fy / (w * w)
    }
}

/// `sech^2 x` without overflow for large `|x|`.
#[inline]
pub fn sech2(x: f64) -> f64 {
    let e = libm::exp(-2.0 * x.abs());
    4.0 * e / ((1.0 + e) * (1.0 + e))
}

const KERNEL_TOL: Tolerance = Tolerance::uniform(1e-12);

/// `∫_0^∞ e^{-Cy} (1+y^2)^{-s} / (e^{-Dy} + 1) dy`, the elliptic orbital
/// kernel, by quadrature in exponential coordinates.
///
/// Never touches the Struve functions: it is the reference the series route
/// is checked against.
pub fn elliptic_kernel_integral(c: f64, d: f64, s: f64) -> Result<QuadResult> {
    elliptic_kernel_integral_in(c, d, s, Coordinates::Exponential)
}

/// [`elliptic_kernel_integral`] in a chosen coordinate system.
pub fn elliptic_kernel_integral_in(
    c: f64,
    d: f64,
    s: f64,
    coords: Coordinates,
) -> Result<QuadResult> {
    if !(c > 0.0 && c.is_finite()) {
        return Err(Error::Domain("elliptic kernel needs C > 0"));
    }
    if !(d >= 0.0 && d.is_finite()) {
        return Err(Error::Domain("elliptic kernel needs D >= 0"));
    }
    if !(s < 1.0) {
        return Err(Error::Domain("elliptic kernel needs s < 1"));
    }
    let g = move |y: f64| libm::pow(1.0 + y * y, -s) / (libm::exp(-d * y) + 1.0);
    let r = match coords {
        Coordinates::Exponential => {
            let inner = integrate(|u| g(-libm::log(u) / c), 0.0, 1.0, KERNEL_TOL);
            QuadResult {
                value: inner.value / c,
                est_error: inner.est_error / c,
                ..inner
            }
        }
        Coordinates::Linear => integrate(
            |t| half_line_map(&|y: f64| libm::exp(-c * y) * g(y), t),
            0.0,
            1.0,
            KERNEL_TOL,
        ),
    };
    Ok(r)
}

/// `∫_{-∞}^{∞} (1/4 + r^2)^{3/2} sech^2(πr) dr`, the identity orbital
/// integral at `s = -1/2`, integrated on `[0, ∞)` and doubled.
pub fn identity_integral() -> QuadResult {
    let f = |r: f64| {
        let q = 0.25 + r * r;
        q * libm::sqrt(q) * sech2(core::f64::consts::PI * r)
    };
    let half = integrate_decaying(f, Domain::HalfLine, 1e-14);
    QuadResult {
        value: 2.0 * half.value,
        est_error: 2.0 * half.est_error,
        ..half
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    #[test]
    fn polynomial_is_exact() {
        let r = integrate(|x| x * x * x - 2.0 * x, 0.0, 2.0, Tolerance::uniform(1e-14));
        assert!(r.converged);
        assert!((r.value - 0.0).abs() < 1e-14);
        assert_eq!(r.evaluations, 15);
    }

    #[test]
    fn reversed_interval_flips_sign() {
        let fwd = integrate(libm::sin, 0.0, 1.0, Tolerance::uniform(1e-13));
        let rev = integrate(libm::sin, 1.0, 0.0, Tolerance::uniform(1e-13));
        assert!((fwd.value + rev.value).abs() < 1e-15);
        assert!((fwd.value - (1.0 - libm::cos(1.0))).abs() < 1e-14);
    }

    #[test]
    fn standard_decaying_integrals() {
        let r = integrate_decaying(sech2, Domain::HalfLine, 1e-13);
        assert!(r.converged);
        assert!((r.value - 1.0).abs() < 1e-12);

        let r = integrate_decaying(|x| libm::exp(-x), Domain::HalfLine, 1e-13);
        assert!((r.value - 1.0).abs() < 1e-12);

        let r = integrate_decaying(|x| x * x * sech2(x), Domain::HalfLine, 1e-13);
        assert!((r.value - PI * PI / 12.0).abs() < 1e-11);

        let r = integrate_decaying(|x| libm::exp(-x * x), Domain::RealLine, 1e-13);
        assert!((r.value - libm::sqrt(PI)).abs() < 1e-12);

        let r = integrate_decaying(libm::sqrt, Domain::UnitInterval, 1e-12);
        assert!((r.value - 2.0 / 3.0).abs() < 1e-11);
    }

    #[test]
    fn log_singularity_converges() {
        let r = integrate(|x| -libm::log(x), 0.0, 1.0, Tolerance::uniform(1e-12));
        assert!(r.converged);
        assert!((r.value - 1.0).abs() < 1e-11);
    }

    #[test]
    fn budget_exhaustion_is_flagged() {
        let r = integrate(|x| 1.0 / x, 0.0, 1.0, Tolerance::uniform(1e-12));
        assert!(!r.converged);
        assert!(r.checked().is_err());
    }

    #[test]
    fn kernel_without_denominator_weight() {
        // D = 0 makes the denominator 2.
        for c in [0.3, 1.0, 2.5] {
            let r = elliptic_kernel_integral(c, 0.0, -1.0).unwrap();
            let exact = (1.0 / c + 2.0 / (c * c * c)) / 2.0;
            assert!((r.value - exact).abs() <= 1e-11 * exact.max(1.0), "C = {c}");
            assert!(r.est_error <= 1e-11 * r.value.abs().max(1.0));
            let r = elliptic_kernel_integral(c, 0.0, 0.0).unwrap();
            assert!((r.value - 0.5 / c).abs() <= 1e-12 * r.value.max(1.0));
        }
    }

    #[test]
    fn kernel_domain_errors() {
        assert!(elliptic_kernel_integral(0.0, 1.0, -0.5).is_err());
        assert!(elliptic_kernel_integral(1.0, -1.0, -0.5).is_err());
        assert!(elliptic_kernel_integral(1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn kernel_coordinates_agree() {
        for c in [PI / 7.0, 1.0, 3.0] {
            let e = elliptic_kernel_integral_in(c, PI, -0.5, Coordinates::Exponential).unwrap();
            let l = elliptic_kernel_integral_in(c, PI, -0.5, Coordinates::Linear).unwrap();
            assert!((e.value - l.value).abs() <= 2.0 * (e.est_error + l.est_error));
        }
    }

    #[test]
    fn identity_integral_value() {
        // -(π/21)/12 · I = -0.0016213252 (independent high-precision value).
        let r = identity_integral();
        assert!(r.converged && r.est_error <= 1e-12);
        let identity = -(PI / 21.0) / 12.0 * r.value;
        assert!((identity - -0.001_621_325_2).abs() < 1e-10);
    }
}
