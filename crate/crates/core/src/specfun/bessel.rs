use core::f64::consts::PI;

use super::{check_positive, ulp, FnEval, Method, Order, EPS, EULER_GAMMA};
use crate::error::{Error, Result};
use crate::quadrature::{integrate, integrate_decaying, Domain, Tolerance};
use crate::sum::Neumaier;

/// Below this argument `K_1` is summed from its power series; above it the
/// Steed continued fraction is used.
const K1_SERIES_MAX_Z: f64 = 2.0;
/// Power series for `Y_n` is kept while its rounding bound stays near 1e-13.
const Y_SERIES_MAX_Z: f64 = 8.0;
/// Hankel's expansion reaches full precision from here on.
const Y_HANKEL_MIN_Z: f64 = 25.0;

/// Bessel function of the second kind `Y_ν(z)` for `ν ∈ {1, 2}`.
///
/// Power series up to `z = 8`, the Schläfli integral up to `z = 25` and the
/// optimally truncated Hankel expansion beyond.
pub fn bessel_y(nu: f64, z: f64) -> Result<FnEval> {
    let n = integer_order(nu)?;
    check_positive(z)?;
    if z <= Y_SERIES_MAX_Z {
        Ok(y_series(n, z))
    } else if z < Y_HANKEL_MIN_Z {
        y_integral(n, z)
    } else {
        Ok(y_hankel(n, z))
    }
}

/// `Y_n(z)` from `(1/π)∫_0^π sin(z sin θ - nθ) dθ - (1/π)∫_0^∞ (e^{nt} + (-1)^n e^{-nt}) e^{-z sinh t} dt`.
///
/// Valid for every `z > 0`; kept public as an independent route.
pub fn bessel_y_integral(nu: f64, z: f64) -> Result<FnEval> {
    let n = integer_order(nu)?;
    check_positive(z)?;
    y_integral(n, z)
}

fn integer_order(nu: f64) -> Result<u32> {
    if nu == 1.0 {
        Ok(1)
    } else if nu == 2.0 {
        Ok(2)
    } else {
        Err(Error::UnsupportedOrder(nu))
    }
}

pub(crate) fn y_series(n: u32, z: f64) -> FnEval {
    let h = 0.5 * z;
    let q = h * h;
    let lg = 2.0 * libm::log(h);
    let finite = if n == 1 {
        -1.0 / (PI * h)
    } else {
        -(1.0 / q + 1.0) / PI
    };
    let nf = f64::from(n);

    let mut c = if n == 1 { 1.0 } else { 0.5 };
    let mut psi_a = -EULER_GAMMA;
    let mut psi_b = if n == 1 {
        1.0 - EULER_GAMMA
    } else {
        1.5 - EULER_GAMMA
    };
    let mut acc = Neumaier::new();
    let mut weighted = 0.0;
    let mut tail = 0.0;
    for k in 0..200u32 {
        let kf = f64::from(k);
        let t = c * (lg - psi_a - psi_b);
        acc.add(t);
        weighted += t.abs() * (2.0 * kf + 6.0);
        c *= -q / ((kf + 1.0) * (nf + kf + 1.0));
        psi_a += 1.0 / (kf + 1.0);
        psi_b += 1.0 / (nf + kf + 1.0);
        let next = (c * (lg - psi_a - psi_b)).abs();
        let ratio = q / ((kf + 2.0) * (nf + kf + 2.0));
        if ratio <= 0.5 && next <= 1e-18 * acc.value().abs().max(f64::MIN_POSITIVE) {
            tail = 2.0 * next;
            break;
        }
    }
    let scale = libm::pow(h, nf) / PI;
    let value = finite + scale * acc.value();
    let bound = scale * (tail + EPS * weighted) + EPS * (finite.abs() + value.abs());
    FnEval {
        value,
        abs_error_bound: bound,
        rigorous: true,
        method: Method::Series,
    }
}

fn y_integral(n: u32, z: f64) -> Result<FnEval> {
    let nf = f64::from(n);
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let osc = integrate(
        |t| libm::sin(z * libm::sin(t) - nf * t),
        0.0,
        PI,
        Tolerance::uniform(1e-13),
    )
    .checked()?;
    let decay = integrate_decaying(
        |t| {
            let s = z * libm::sinh(t);
            libm::exp(nf * t - s) + sign * libm::exp(-nf * t - s)
        },
        Domain::HalfLine,
        1e-13,
    )
    .checked()?;
    let value = (osc.value - decay.value) / PI;
    let bound = (osc.est_error + decay.est_error) / PI
        + 8.0 * EPS * (osc.value.abs() + decay.value.abs() + z * EPS);
    Ok(FnEval {
        value,
        abs_error_bound: bound,
        rigorous: false,
        method: Method::IntegralRep,
    })
}

/// Hankel expansion `√(2/πz)(P sin ω + Q cos ω)`, `ω = z - (2ν+1)π/4`,
/// truncated before its smallest term.
fn y_hankel(n: u32, z: f64) -> FnEval {
    let mu = 4.0 * f64::from(n * n);
    let mut p = Neumaier::new();
    let mut q = Neumaier::new();
    p.add(1.0);
    let mut t = 1.0f64;
    let mut omitted = 0.0;
    for k in 1..400u32 {
        let kf = f64::from(k);
        let odd = 2.0 * kf - 1.0;
        let next = t * (mu - odd * odd) / (8.0 * kf * z);
        if next == 0.0 {
            break;
        }
        if next.abs() >= t.abs() {
            let after = next * (mu - (odd + 2.0) * (odd + 2.0)) / (8.0 * (kf + 1.0) * z);
            omitted = next.abs() + after.abs();
            break;
        }
        let signed = if (k / 2) % 2 == 0 { next } else { -next };
        if k % 2 == 0 {
            p.add(signed);
        } else {
            q.add(signed);
        }
        t = next;
    }
    let phase = (2.0 * f64::from(n) + 1.0) * PI / 4.0;
    let (sz, cz) = (libm::sin(z), libm::cos(z));
    let (sp, cp) = (libm::sin(phase), libm::cos(phase));
    let sin_w = sz * cp - cz * sp;
    let cos_w = cz * cp + sz * sp;
    let pref = libm::sqrt(2.0 / (PI * z));
    let (pv, qv) = (p.value(), q.value());
    let value = pref * (pv * sin_w + qv * cos_w);
    let bound = pref * (omitted + 8.0 * EPS * (pv.abs() + qv.abs()));
    FnEval {
        value,
        abs_error_bound: bound,
        rigorous: true,
        method: Method::Asymptotic,
    }
}

/// `Y_ν` for half-integer orders in closed form.
pub(crate) fn y_closed(order: Order, z: f64) -> FnEval {
    let pref = libm::sqrt(2.0 / (PI * z));
    let (c, s) = (libm::cos(z), libm::sin(z));
    let (value, mag) = match order {
        Order::Half => (-pref * c, pref * c.abs()),
        _ => (-pref * (c / z + s), pref * (c.abs() / z + s.abs())),
    };
    FnEval {
        value,
        abs_error_bound: 6.0 * EPS * mag,
        rigorous: true,
        method: Method::ClosedForm,
    }
}

/// Modified Bessel function of the second kind `K_ν(z)`, `ν ∈ {1/2, 1, 3/2}`.
pub fn bessel_k(nu: f64, z: f64) -> Result<FnEval> {
    let order = Order::from_f64(nu)?;
    check_positive(z)?;
    Ok(match order {
        Order::Half | Order::ThreeHalves => {
            let mut v = libm::sqrt(PI / (2.0 * z)) * libm::exp(-z);
            if order == Order::ThreeHalves {
                v *= 1.0 / z + 1.0;
            }
            FnEval {
                value: v,
                abs_error_bound: 4.0 * ulp(v),
                rigorous: true,
                method: Method::ClosedForm,
            }
        }
        Order::One => {
            if z < K1_SERIES_MAX_Z {
                k1_series(z)
            } else {
                let v = libm::exp(-z) * k1_cf_scaled(z);
                FnEval {
                    value: v,
                    abs_error_bound: 32.0 * EPS * v,
                    rigorous: false,
                    method: Method::ContinuedFraction,
                }
            }
        }
        Order::Two => return Err(Error::UnsupportedOrder(nu)),
    })
}

fn k1_series(z: f64) -> FnEval {
    let h = 0.5 * z;
    let q = h * h;
    let lh = libm::log(h);
    let mut c = 1.0;
    let mut psi_a = -EULER_GAMMA;
    let mut psi_b = 1.0 - EULER_GAMMA;
    let mut acc = Neumaier::new();
    let mut weighted = 0.0;
    let mut tail = 0.0;
    for k in 0..60u32 {
        let kf = f64::from(k);
        let t = c * (lh - 0.5 * (psi_a + psi_b));
        acc.add(t);
        weighted += t.abs() * (2.0 * kf + 6.0);
        c *= q / ((kf + 1.0) * (kf + 2.0));
        psi_a += 1.0 / (kf + 1.0);
        psi_b += 1.0 / (kf + 2.0);
        let next = (c * (lh - 0.5 * (psi_a + psi_b))).abs();
        if next <= 1e-18 * acc.value().abs().max(1e-300) {
            tail = 2.0 * next;
            break;
        }
    }
    let value = 1.0 / z + h * acc.value();
    let bound = h * (tail + EPS * weighted) + 2.0 * EPS * (1.0 / z + value.abs());
    FnEval {
        value,
        abs_error_bound: bound,
        rigorous: true,
        method: Method::Series,
    }
}

/// `e^z K_1(z)` by Steed's method on Temme's second continued fraction.
fn k1_cf_scaled(x: f64) -> f64 {
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut h = d;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..10_000u32 {
        let fi = f64::from(i);
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < EPS {
            break;
        }
    }
    let k0 = libm::sqrt(PI / (2.0 * x)) / s;
    k0 * (x + 0.5 - a1 * h) / x
}

/// `e^z K_1(z)`, finite for every `z > 0`.
pub fn scaled_k1(z: f64) -> f64 {
    if z < K1_SERIES_MAX_Z {
        libm::exp(z) * k1_series(z).value
    } else {
        k1_cf_scaled(z)
    }
}

/// `csch(z) K_1(z)`. Returns NaN unless `z > 0`.
pub fn csch_k1(z: f64) -> f64 {
    if !(z > 0.0) {
        return f64::NAN;
    }
    if z < K1_SERIES_MAX_Z {
        k1_series(z).value / libm::sinh(z)
    } else {
        let e = libm::exp(-2.0 * z);
        2.0 * e * k1_cf_scaled(z) / -libm::expm1(-2.0 * z)
    }
}

/// `csch(z) K_{3/2}(z) = √(2π/z)(1+z)/(z(e^{2z}-1))`, the majorant of
/// [`csch_k1`]. Returns NaN unless `z > 0`.
pub fn csch_k32(z: f64) -> f64 {
    if !(z > 0.0) {
        return f64::NAN;
    }
    libm::sqrt(2.0 * PI / z) * (1.0 + z) / (z * libm::expm1(2.0 * z))
}
