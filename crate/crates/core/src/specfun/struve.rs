use super::bessel::{bessel_y, y_closed, y_series};
use super::{check_positive, FnEval, Method, Order, EPS, SQRT_PI};
use crate::error::{Error, Result};
use crate::quadrature::{integrate, Tolerance};
use crate::sum::Neumaier;

/// Upper end of the window in which the `H - Y` power series route is used.
pub const SERIES_MAX_Z: f64 = 12.0;
/// Lower end of the window in which the asymptotic expansion is used.
pub const ASYMPTOTIC_MIN_Z: f64 = 40.0;
/// The Struve power series alone is accurate to ~1e-13 up to here.
const H_SERIES_MAX_Z: f64 = 8.0;

/// Struve function `H_ν(z)` for `ν ∈ {1, 2}`.
///
/// Power series for `z <= 8`; beyond that `H = K + Y` with `K` from its
/// Laplace integral.
pub fn struve_h(nu: f64, z: f64) -> Result<FnEval> {
    let order = Order::from_f64(nu)?;
    if !matches!(order, Order::One | Order::Two) {
        return Err(Error::UnsupportedOrder(nu));
    }
    check_positive(z)?;
    if z <= H_SERIES_MAX_Z {
        return Ok(h_series(order, z));
    }
    let k = k_quadrature(order, z)?;
    let y = bessel_y(nu, z)?;
    Ok(FnEval {
        value: k.value + y.value,
        abs_error_bound: k.abs_error_bound + y.abs_error_bound + EPS * (k.value + y.value).abs(),
        rigorous: false,
        method: Method::IntegralRep,
    })
}

fn h_series(order: Order, z: f64) -> FnEval {
    let h = 0.5 * z;
    let q = h * h;
    let nu = order.nu();
    let mut t = libm::pow(h, nu + 1.0) / (0.5 * SQRT_PI * order.gamma_nu_three_halves());
    let mut acc = Neumaier::new();
    let mut weighted = 0.0;
    let mut tail = 0.0;
    for k in 0..200u32 {
        let kf = f64::from(k);
        acc.add(t);
        weighted += t.abs() * (3.0 * kf + 6.0);
        let next = -t * q / ((kf + 1.5) * (kf + nu + 1.5));
        // Once the ratio drops below one the series alternates with
        // decreasing terms, so the first omitted term bounds the tail.
        if q < (kf + 1.5) * (kf + nu + 1.5) && next.abs() <= 1e-18 * acc.value().abs() {
            tail = next.abs();
            break;
        }
        t = next;
    }
    let value = acc.value();
    FnEval {
        value,
        abs_error_bound: tail + EPS * (weighted + value.abs()),
        rigorous: true,
        method: Method::Series,
    }
}

/// Struve function of the second kind `K_ν(z) = H_ν(z) - Y_ν(z)` for
/// `ν ∈ {1/2, 1, 3/2, 2}`, through its Laplace integral. Valid for all `z > 0`.
pub fn struve_k(nu: f64, z: f64) -> Result<FnEval> {
    struve_k_quadrature(nu, z)
}

/// `K_ν(z) = 2(z/2)^ν / (√π Γ(ν+1/2)) ∫_0^∞ e^{-zt}(1+t²)^{ν-1/2} dt`,
/// integrated after the substitution `u = e^{-zt}`.
pub fn struve_k_quadrature(nu: f64, z: f64) -> Result<FnEval> {
    let order = Order::from_f64(nu)?;
    check_positive(z)?;
    k_quadrature(order, z)
}

const K_TOL: Tolerance = Tolerance::new(1e-300, 5e-14);

fn k_quadrature(order: Order, z: f64) -> Result<FnEval> {
    let inv = 1.0 / z;
    let r = match order {
        // The integrand is identically one.
        Order::Half => crate::quadrature::QuadResult {
            value: 1.0,
            est_error: 0.0,
            evaluations: 1,
            converged: true,
        },
        Order::One => integrate(
            |u| {
                let l = libm::log(u) * inv;
                libm::sqrt(1.0 + l * l)
            },
            0.0,
            1.0,
            K_TOL,
        ),
        Order::ThreeHalves => integrate(
            |u| {
                let l = libm::log(u) * inv;
                1.0 + l * l
            },
            0.0,
            1.0,
            K_TOL,
        ),
        Order::Two => integrate(
            |u| {
                let l = libm::log(u) * inv;
                let w = 1.0 + l * l;
                w * libm::sqrt(w)
            },
            0.0,
            1.0,
            K_TOL,
        ),
    }
    .checked()?;
    let pref = 2.0 * libm::pow(0.5 * z, order.nu()) / (z * SQRT_PI * order.gamma_nu_half());
    let value = pref * r.value;
    Ok(FnEval {
        value,
        abs_error_bound: pref * r.est_error + 4.0 * EPS * value.abs(),
        rigorous: false,
        method: Method::IntegralRep,
    })
}

/// `K_ν(z)` as the difference of the `H_ν` and `Y_ν` power series
/// (closed form for `Y` at half-integer orders). Only for `z <= 12`, where
/// the cancellation stays below about 1e-11.
pub fn struve_k_series(nu: f64, z: f64) -> Result<FnEval> {
    let order = Order::from_f64(nu)?;
    check_positive(z)?;
    if z > SERIES_MAX_Z {
        return Err(Error::Domain("series route of struve_k needs z <= 12"));
    }
    let h = h_series(order, z);
    let y = match order {
        Order::Half | Order::ThreeHalves => y_closed(order, z),
        Order::One => y_series(1, z),
        Order::Two => y_series(2, z),
    };
    let value = h.value - y.value;
    Ok(FnEval {
        value,
        abs_error_bound: h.abs_error_bound + y.abs_error_bound + EPS * value.abs(),
        rigorous: true,
        method: Method::Series,
    })
}

/// Large-argument expansion
/// `K_ν(z) ~ (1/π) Σ_k Γ(k+1/2)(z/2)^{ν-2k-1} / Γ(ν+1/2-k)`, for `z >= 40`.
///
/// Truncated just before the smallest term; that term bounds the remainder.
/// The sum terminates for `ν = 1/2` and `ν = 3/2`.
pub fn struve_k_asymptotic(nu: f64, z: f64) -> Result<FnEval> {
    let order = Order::from_f64(nu)?;
    check_positive(z)?;
    if z < ASYMPTOTIC_MIN_Z {
        return Err(Error::Domain("asymptotic route of struve_k needs z >= 40"));
    }
    let nu = order.nu();
    let w = 4.0 / (z * z);
    let mut t = libm::pow(0.5 * z, nu - 1.0) / (SQRT_PI * order.gamma_nu_half());
    let mut acc = Neumaier::new();
    let mut weighted = 0.0;
    let mut omitted = 0.0;
    for k in 0..400u32 {
        let kf = f64::from(k);
        acc.add(t);
        weighted += t.abs() * (2.0 * kf + 4.0);
        let next = t * (kf + 0.5) * (nu - 0.5 - kf) * w;
        if next == 0.0 {
            break;
        }
        if next.abs() >= t.abs() {
            omitted = next.abs();
            break;
        }
        t = next;
    }
    let value = acc.value();
    Ok(FnEval {
        value,
        abs_error_bound: omitted + EPS * (weighted + value.abs()),
        rigorous: true,
        method: Method::Asymptotic,
    })
}

/// Leading asymptotic term `(z/2)^{ν-1} / (√π Γ(ν+1/2))`.
#[cfg(test)]
fn leading_term(order: Order, z: f64) -> f64 {
    libm::pow(0.5 * z, order.nu() - 1.0) / (SQRT_PI * order.gamma_nu_half())
}
