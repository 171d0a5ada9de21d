use alloc::vec::Vec;
use core::f64::consts::PI;

use super::SeriesEvaluation;
use crate::error::{Error, Result};
use crate::quadrature::{identity_integral, QuadResult};
use crate::specfun::struve_k;
use crate::sum::Neumaier;

const EPS: f64 = f64::EPSILON;

/// Envelope `(n+1) <= c·GROWTH^n` used in the truncation bound.
const GROWTH: f64 = 1.01;

/// Identity term at `s = -1/2`:
///
/// `-(vol/π) Σ_{n<N} (n+1) 2^{-n-6} Σ_{k≤n} (-1)^k C(n,k) K_2(π(1+k))/(1+k)²`
///
/// with `K_2` the Struve function of the second kind. The neglected part of
/// `1/(1+x)² = Σ (n+1) 2^{-n-2} (1-x)^n` is bounded through
/// `(n+1) <= c·1.01^n`, so the bound shrinks by exactly `0.505` per term.
pub fn identity_series(volume: f64, n_terms: usize) -> Result<SeriesEvaluation> {
    if !(volume > 0.0 && volume.is_finite()) {
        return Err(Error::Domain("volume must be positive"));
    }
    if n_terms == 0 {
        return Err(Error::Domain("at least one outer term is needed"));
    }
    let mut f = Vec::with_capacity(n_terms);
    let mut delta = Vec::with_capacity(n_terms);
    for k in 0..n_terms {
        let j = (k + 1) as f64;
        let kv = struve_k(2.0, PI * j)?;
        f.push(kv.value / (j * j));
        delta.push(kv.abs_error_bound / (j * j));
    }

    let mut binom: Vec<f64> = Vec::with_capacity(n_terms);
    let mut outer = Neumaier::new();
    let mut eval_error = 0.0;
    let mut rounding = 0.0;
    let mut pow2 = 1.0 / 64.0;
    for n in 0..n_terms {
        let row_len = binom.len();
        binom.push(1.0);
        for k in (1..row_len).rev() {
            binom[k] += binom[k - 1];
        }
        let mut inner = Neumaier::new();
        let mut carried = 0.0;
        for (k, cnk) in binom.iter().enumerate() {
            let t = cnk * f[k];
            inner.add(if k % 2 == 0 { t } else { -t });
            carried += cnk * delta[k];
        }
        let w = (n as f64 + 1.0) * pow2;
        outer.add(w * inner.value());
        eval_error += w * carried;
        rounding += w * (n as f64 + 3.0) * EPS * inner.abs_sum();
        pow2 *= 0.5;
    }
    let scale = volume / PI;
    rounding += EPS * outer.abs_sum();

    let k2_pi = f[0];
    let ratio = 0.5 * GROWTH;
    let remainder = envelope_constant() * libm::pow(ratio, n_terms as f64) / (4.0 * (1.0 - ratio));
    let truncation_bound = volume * remainder * k2_pi / (16.0 * PI);
    Ok(SeriesEvaluation {
        value: -scale * outer.value(),
        truncation_bound,
        eval_error: scale * eval_error,
        rounding_error: scale * rounding,
        terms: n_terms,
    })
}

/// `max_n (n+1)/1.01^n`, attained near `n = 100`.
fn envelope_constant() -> f64 {
    (0..2000u32)
        .map(|n| f64::from(n + 1) / libm::pow(GROWTH, f64::from(n)))
        .fold(0.0, f64::max)
}

/// Interval `(-2 vol/(45π), -vol/(36π))` that contains the identity term.
pub fn identity_interval(volume: f64) -> (f64, f64) {
    (-2.0 * volume / (45.0 * PI), -volume / (36.0 * PI))
}

/// Identity term by quadrature: `-(vol/12) ∫ (1/4 + r²)^{3/2} sech²(πr) dr`.
pub fn identity_quadrature(volume: f64) -> Result<QuadResult> {
    let r = identity_integral().checked()?;
    let w = volume / 12.0;
    Ok(QuadResult {
        value: -w * r.value,
        est_error: w * r.est_error,
        ..r
    })
}
