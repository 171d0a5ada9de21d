//! Bounds on the part of the hyperbolic term coming from geodesics that are
//! not listed explicitly, under the growth assumption
//! `ℓ_j >= log j + log log j`.
//!
//! The omitted sum is split as `B1` (first powers, `j_lo <= j <= j_hi`,
//! summed term by term), `B2` (first powers, `j > j_hi`) and `B3` (all
//! higher powers, `j >= j_lo`).

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::specfun::{csch_k1, polylog, upper_incomplete_gamma_half, SQRT_PI};
use crate::sum::{pairwise_sum, Neumaier};

/// Number of indices summed sequentially before chunk totals are combined.
pub const B1_CHUNK: u64 = 1 << 16;

/// `log j + log log j`, the assumed lower bound on `ℓ_j`.
#[inline]
fn assumed_length(j: f64) -> f64 {
    let x = libm::log(j);
    x + libm::log(x)
}

/// `csch(λ/2) K_1(λ/2)` with `λ = log j + log log j`.
#[inline]
pub fn b1_term(j: u64) -> f64 {
    csch_k1(0.5 * assumed_length(j as f64))
}

/// Splits `j_lo..=j_hi` into consecutive inclusive ranges of `B1_CHUNK`
/// indices (the last one possibly shorter). The split only depends on the
/// range, so chunk totals can be computed in any order or in parallel.
pub fn b1_chunks(j_lo: u64, j_hi: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut lo = j_lo;
    while lo <= j_hi {
        let hi = lo.saturating_add(B1_CHUNK - 1).min(j_hi);
        out.push((lo, hi));
        if hi == u64::MAX {
            break;
        }
        lo = hi + 1;
    }
    out
}

/// Compensated sum of [`b1_term`] over `lo..=hi`, in increasing `j`.
pub fn b1_chunk_sum(lo: u64, hi: u64) -> f64 {
    let mut acc = Neumaier::new();
    for j in lo..=hi {
        acc.add(b1_term(j));
    }
    acc.value()
}

/// Combines chunk totals (in chunk order) into `B1`.
pub fn b1_combine(chunk_sums: &[f64]) -> f64 {
    pairwise_sum(chunk_sums) / (4.0 * PI)
}

fn check_b1_range(j_lo: u64, j_hi: u64) -> Result<()> {
    if j_lo < 3 {
        return Err(Error::Domain("B1 needs j_lo >= 3"));
    }
    if j_hi < j_lo {
        return Err(Error::Domain("B1 needs j_lo <= j_hi"));
    }
    Ok(())
}

/// `B1 = (1/4π) Σ_{j=j_lo}^{j_hi} csch(λ_j/2) K_1(λ_j/2)`, sequentially.
pub fn tail_b1(j_lo: u64, j_hi: u64) -> Result<f64> {
    check_b1_range(j_lo, j_hi)?;
    let sums: Vec<f64> = b1_chunks(j_lo, j_hi)
        .into_iter()
        .map(|(a, b)| b1_chunk_sum(a, b))
        .collect();
    Ok(b1_combine(&sums))
}

/// `A_{n,j} = 1 + 2/(n(log j + log log j))`.
pub fn a_constant(n: u32, j: u64) -> f64 {
    1.0 + 2.0 / (f64::from(n) * assumed_length(j as f64))
}

/// `A_{1,j_N}/(2√π)`.
pub fn b2_prefactor(j_n: u64) -> f64 {
    a_constant(1, j_n) / (2.0 * SQRT_PI)
}

/// `∫_{j_N}^∞ dj/(j log^{3/2} j) = 2/√(log j_N)`.
pub fn b2_integral(j_n: u64) -> f64 {
    2.0 / libm::sqrt(libm::log(j_n as f64))
}

/// Bound on the first powers of all geodesics with index `j > j_N`.
pub fn tail_b2_bound(j_n: u64) -> Result<f64> {
    if j_n < 16 {
        return Err(Error::Domain("B2 needs j_N >= 16"));
    }
    Ok(b2_prefactor(j_n) * b2_integral(j_n))
}

/// `A_{2,j_N}/(2√π)`, which dominates `A_{n,j_N}/(2√π)` for every `n >= 2`.
pub fn b3_prefactor(j_n: u64) -> f64 {
    a_constant(2, j_n) / (2.0 * SQRT_PI)
}

/// `(1/1.9) ∫_a^∞ dj/(j² log^{5/2} j)` with `a = j_N - 1`, in closed form:
/// `(1/1.9)[2/(3a L^{3/2}) - 4/(3a √L) + (4/3) Γ(1/2, L)]`, `L = log a`.
pub fn b3_integral_bound(j_n: u64) -> f64 {
    let a = (j_n - 1) as f64;
    let l = libm::log(a);
    let sl = libm::sqrt(l);
    let bracket = 2.0 / (3.0 * a * l * sl) - 4.0 / (3.0 * a * sl)
        + 4.0 * upper_incomplete_gamma_half(l) / 3.0;
    bracket / 1.9
}

/// Bound on all powers `n >= 2` of the geodesics with index `j >= j_N`.
pub fn tail_b3_bound(j_n: u64) -> Result<f64> {
    if j_n < 51 {
        return Err(Error::Domain("B3 needs j_N >= 51"));
    }
    Ok(b3_prefactor(j_n) * b3_integral_bound(j_n))
}

/// `-log(1 - 1/x) <= 1/x + 1/(1.9 x²)`, the step from `Li_1` to a
/// quadratic remainder. It holds for `x >= 50` but fails near `x = 2`.
pub fn log_inequality_holds(x: f64) -> bool {
    let lhs = -libm::log1p(-1.0 / x);
    lhs > 0.0 && lhs <= 1.0 / x + 1.0 / (1.9 * x * x)
}

/// Partial sums over `j_lo..=j_hi` of the three expressions that bound
/// `Σ_{n>=2} j^{-n} log^{-n-1/2} j / n^{3/2}`, with `x_j = 1/(j log j)`:
/// `(Li_{3/2}(x_j) - x_j)/√log j <= (Li_1(x_j) - x_j)/√log j
/// <= x_j²/(1.9 √log j)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolylogChain {
    pub li32_sum: f64,
    pub li1_sum: f64,
    pub quadratic_sum: f64,
}

pub fn polylog_chain(j_lo: u64, j_hi: u64) -> Result<PolylogChain> {
    if j_lo < 3 || j_hi < j_lo {
        return Err(Error::Domain("polylog chain needs 3 <= j_lo <= j_hi"));
    }
    let mut li32 = Neumaier::new();
    let mut li1 = Neumaier::new();
    let mut quad = Neumaier::new();
    for j in j_lo..=j_hi {
        let l = libm::log(j as f64);
        let x = 1.0 / (j as f64 * l);
        let sl = libm::sqrt(l);
        li32.add((polylog(1.5, x)?.value - x) / sl);
        li1.add((polylog(1.0, x)?.value - x) / sl);
        quad.add(x * x / (1.9 * sl));
    }
    Ok(PolylogChain {
        li32_sum: li32.value(),
        li1_sum: li1.value(),
        quadratic_sum: quad.value(),
    })
}

/// Whether `j^n log^{n+1/2} j <= (j^n log^n j - 1)(log j + log log j)^{1/2}`.
///
/// Dividing by `j^n log^n j` reduces it to
/// `½ log log j <= log(1 - e^{-P}) + ½ log(log j + log log j)` with
/// `P = n(log j + log log j)`, which stays finite for any `n`.
pub fn jest_inequality_check(j: u64, n: u32) -> bool {
    if j < 2 || n == 0 {
        return false;
    }
    let x = libm::log(j as f64);
    let lam = x + libm::log(x);
    if lam <= 0.0 {
        return false;
    }
    let p = f64::from(n) * lam;
    0.5 * libm::log(x) <= libm::log1p(-libm::exp(-p)) + 0.5 * libm::log(lam)
}

/// `B1`, `B2` and `B3` for one split of the spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailBounds {
    pub b1: f64,
    pub b2: f64,
    pub b3: f64,
}

impl TailBounds {
    pub fn total(&self) -> f64 {
        self.b1 + self.b2 + self.b3
    }
}

/// All three tail pieces for indices from `j_lo`, summing `B1` up to `j_hi`.
pub fn tail_bounds(j_lo: u64, j_hi: u64) -> Result<TailBounds> {
    Ok(TailBounds {
        b1: tail_b1(j_lo, j_hi)?,
        b2: tail_b2_bound(j_hi)?,
        b3: tail_b3_bound(j_lo)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::{integrate_decaying, Domain};

    #[test]
    fn b2_constants() {
        assert!((b2_prefactor(10_000_000) - 0.311_949).abs() < 1e-6);
        assert!((b2_integral(10_000_000) - 0.498_165).abs() < 1e-6);
        assert!((tail_b2_bound(10_000_000).unwrap() - 0.155_402).abs() < 1e-6);
        assert!(a_constant(1, 1_000_000_000_000) < a_constant(1, 10_000_000));
        assert!(tail_b2_bound(16).unwrap().is_finite());
        assert!(tail_b2_bound(15).is_err());
    }

    #[test]
    fn b3_constants() {
        assert!((b3_prefactor(51) - 0.335_311).abs() < 1e-6);
        assert!((b3_integral_bound(51) - 0.000_224).abs() < 1e-6);
        assert!((tail_b3_bound(51).unwrap() - 0.000_075).abs() < 1e-6);
        assert!(tail_b3_bound(50).is_err());
    }

    #[test]
    fn b3_integral_matches_quadrature() {
        let q = integrate_decaying(
            |t| {
                let j = 50.0 + t;
                let l = libm::log(j);
                1.0 / (1.9 * j * j * l * l * libm::sqrt(l))
            },
            Domain::HalfLine,
            1e-13,
        );
        assert!(q.converged);
        assert!((q.value - b3_integral_bound(51)).abs() < 1e-14);
    }

    #[test]
    fn log_inequality() {
        for x in [50.0, 100.0, 1e4, 1e8] {
            assert!(log_inequality_holds(x), "x = {x}");
        }
        assert!(!log_inequality_holds(2.0));
    }

    #[test]
    fn polylog_chain_is_ordered() {
        let c = polylog_chain(51, 20_000).unwrap();
        assert!(0.0 < c.li32_sum);
        assert!(c.li32_sum <= c.li1_sum);
        assert!(c.li1_sum <= c.quadratic_sum);
        assert!(c.quadratic_sum <= b3_integral_bound(51));
    }

    #[test]
    fn jest_points() {
        assert!(jest_inequality_check(16, 1));
        assert!(jest_inequality_check(1_000_000, 3));
        assert!(jest_inequality_check(16, 500));
        assert!(!jest_inequality_check(1, 1));
    }

    #[test]
    fn b1_single_term_and_monotone() {
        let one = tail_b1(51, 51).unwrap();
        let x = libm::log(51.0);
        let direct = csch_k1(0.5 * (x + libm::log(x))) / (4.0 * PI);
        assert_eq!(one, direct);
        assert!(tail_b1(51, 1000).unwrap() < tail_b1(51, 2000).unwrap());
        assert!(tail_b1(2, 10).is_err());
        assert!(tail_b1(60, 51).is_err());
    }

    #[test]
    fn chunking_is_independent_of_order() {
        let chunks = b1_chunks(51, 300_000);
        assert_eq!(chunks.first().unwrap().0, 51);
        assert_eq!(chunks.last().unwrap().1, 300_000);
        for w in chunks.windows(2) {
            assert_eq!(w[0].1 + 1, w[1].0);
        }
        let whole = b1_chunk_sum(51, 300_000) / (4.0 * PI);
        let split = tail_b1(51, 300_000).unwrap();
        assert!((whole - split).abs() < 1e-12);
    }
}
