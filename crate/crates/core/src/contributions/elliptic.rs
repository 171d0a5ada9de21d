use alloc::vec::Vec;
use core::f64::consts::PI;

use super::{OrbifoldSignature, SeriesEvaluation};
use crate::error::{Error, Result};
use crate::quadrature::{elliptic_kernel_integral, QuadResult};
use crate::specfun::struve_k;
use crate::sum::Neumaier;

/// The spectral parameter at which the energy is evaluated.
pub const KERNEL_S: f64 = -0.5;

const EPS: f64 = f64::EPSILON;

/// Series for `∫_0^∞ e^{-Cy} (1+y²)^{1/2} / (e^{-Dy} + 1) dy`:
///
/// `π Σ_{n<N} 2^{-n-2} Σ_{k≤n} (-1)^k C(n,k) K_1(C+Dk)/(C+Dk)`
///
/// with `K_1` the Struve function of the second kind. Expanding
/// `1/(1+x) = Σ (1-x)^n 2^{-n-1}` leaves a tail below
/// `2^{-N}(πC K_1(C) + 4)/(2C²)`. Only `s = -1/2` is implemented.
pub fn elliptic_kernel_series(c: f64, d: f64, s: f64, n_terms: usize) -> Result<SeriesEvaluation> {
    if !(c > 0.0 && c.is_finite()) {
        return Err(Error::Domain("elliptic kernel needs C > 0"));
    }
    if !(d >= 0.0 && d.is_finite()) {
        return Err(Error::Domain("elliptic kernel needs D >= 0"));
    }
    if s != KERNEL_S {
        return Err(Error::Domain(
            "elliptic kernel series is implemented for s = -1/2 only",
        ));
    }
    if n_terms == 0 {
        return Err(Error::Domain("at least one outer term is needed"));
    }

    let mut f = Vec::with_capacity(n_terms);
    let mut delta = Vec::with_capacity(n_terms);
    for k in 0..n_terms {
        let arg = c + d * k as f64;
        let kv = struve_k(1.0, arg)?;
        f.push(kv.value / arg);
        delta.push(kv.abs_error_bound / arg);
    }

    let mut binom: Vec<f64> = Vec::with_capacity(n_terms);
    let mut outer = Neumaier::new();
    let mut eval_error = 0.0;
    let mut rounding = 0.0;
    let mut weight = 0.25 * PI;
    for n in 0..n_terms {
        next_binomial_row(&mut binom);
        let mut inner = Neumaier::new();
        let mut carried = 0.0;
        for (k, cnk) in binom.iter().enumerate() {
            let t = cnk * f[k];
            inner.add(if k % 2 == 0 { t } else { -t });
            carried += cnk * delta[k];
        }
        outer.add(weight * inner.value());
        eval_error += weight * carried;
        rounding += weight * (n as f64 + 3.0) * EPS * inner.abs_sum();
        weight *= 0.5;
    }
    rounding += EPS * outer.abs_sum();

    let k1c = f[0] * c;
    let truncation_bound = libm::exp2(-(n_terms as f64)) * (PI * c * k1c + 4.0) / (2.0 * c * c);
    Ok(SeriesEvaluation {
        value: outer.value(),
        truncation_bound,
        eval_error,
        rounding_error: rounding,
        terms: n_terms,
    })
}

/// Natural logarithm of the truncation bound of [`elliptic_kernel_series`],
/// `-N log 2 + log(πC K_1(C) + 4) - log(2C²)`, usable for any `N`.
pub fn elliptic_truncation_bound_ln(c: f64, n_terms: usize) -> Result<f64> {
    if !(c > 0.0 && c.is_finite()) {
        return Err(Error::Domain("elliptic kernel needs C > 0"));
    }
    let k1 = struve_k(1.0, c)?.value;
    Ok(
        -(n_terms as f64) * core::f64::consts::LN_2 + libm::log(PI * c * k1 + 4.0)
            - libm::log(2.0 * c * c),
    )
}

/// Replaces row `n-1` of Pascal's triangle by row `n` (the empty row
/// becomes `[1]`).
fn next_binomial_row(row: &mut Vec<f64>) {
    let n = row.len();
    row.push(1.0);
    for k in (1..n).rev() {
        row[k] += row[k - 1];
    }
}

/// Weight of the rotation by `2πl/m` in the elliptic term at `s = -1/2`:
/// `4^{-1/2} / (2m sin(πl/m))`.
pub fn elliptic_weight(m: u32, l: u32) -> f64 {
    let mf = f64::from(m);
    0.25 / (mf * libm::sin(PI * f64::from(l) / mf))
}

/// Elliptic contribution `Σ_cones Σ_{l=1}^{m-1} w(m,l) · kernel(πl/m, π)`
/// from the kernel series; bounds add up with the weights.
pub fn elliptic_contribution(sig: &OrbifoldSignature, n_terms: usize) -> Result<SeriesEvaluation> {
    let mut value = Neumaier::new();
    let mut acc = SeriesEvaluation {
        terms: n_terms,
        ..SeriesEvaluation::ZERO
    };
    for &m in &sig.cone_orders {
        for l in 1..m {
            let c = PI * f64::from(l) / f64::from(m);
            let part =
                elliptic_kernel_series(c, PI, KERNEL_S, n_terms)?.scaled(elliptic_weight(m, l));
            value.add(part.value);
            acc.truncation_bound += part.truncation_bound;
            acc.eval_error += part.eval_error;
            acc.rounding_error += part.rounding_error;
        }
    }
    acc.value = value.value();
    acc.rounding_error += EPS * value.abs_sum();
    Ok(acc)
}

/// The same elliptic contribution by direct quadrature of each kernel.
pub fn elliptic_contribution_quadrature(sig: &OrbifoldSignature) -> Result<QuadResult> {
    let mut value = Neumaier::new();
    let mut est_error = 0.0;
    let mut evaluations = 0;
    for &m in &sig.cone_orders {
        for l in 1..m {
            let c = PI * f64::from(l) / f64::from(m);
            let r = elliptic_kernel_integral(c, PI, KERNEL_S)?.checked()?;
            let w = elliptic_weight(m, l);
            value.add(w * r.value);
            est_error += w * r.est_error;
            evaluations += r.evaluations;
        }
    }
    Ok(QuadResult {
        value: value.value(),
        est_error,
        evaluations,
        converged: true,
    })
}

/// `π K_1(θ)/(4θ)`, a lower bound for the kernel at `C = θ`, `D = π`
/// that grows like `θ^{-2}` as the cone angle closes.
pub fn elliptic_small_angle_lower_bound(theta: f64) -> Result<f64> {
    if !(theta > 0.0 && theta < 1.0) {
        return Err(Error::Domain("small-angle bound needs 0 < θ < 1"));
    }
    Ok(PI * struve_k(1.0, theta)?.value / (4.0 * theta))
}
