use alloc::string::String;

use super::{
    assumption_check, elliptic_contribution, hyperbolic_contribution, identity_interval,
    identity_series, tail_b1, tail_b2_bound, tail_b3_bound, AssumptionReport, LengthSpectrum,
    OrbifoldSignature, SeriesEvaluation, TailBounds, DEFAULT_N_TAIL_TOL,
};
use crate::error::Result;

/// Reference tail total, kept for comparison with the recomputed
/// `B1 + B2 + B3`.
pub const STATED_TAIL_TOTAL: f64 = 0.293_867;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyOptions {
    /// Outer terms of the identity and elliptic series.
    pub outer_terms: usize,
    /// Target for the majorant tail of each geodesic's sum over powers.
    pub n_tail_tol: f64,
    /// First index covered by the tail bounds.
    pub tail_j_lo: u64,
    /// Last index summed explicitly in `B1`.
    pub tail_j_hi: u64,
}

impl Default for EnergyOptions {
    fn default() -> Self {
        EnergyOptions {
            outer_terms: 60,
            n_tail_tol: DEFAULT_N_TAIL_TOL,
            tail_j_lo: 51,
            tail_j_hi: 10_000_000,
        }
    }
}

/// Every piece of the energy computation.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyBreakdown {
    pub label: String,
    pub volume: f64,
    pub identity: SeriesEvaluation,
    pub identity_interval: (f64, f64),
    pub elliptic: SeriesEvaluation,
    /// `None` for an empty spectrum.
    pub hyperbolic: Option<SeriesEvaluation>,
    /// Listed-geodesic part used in the lower bound: value minus its
    /// truncation bound.
    pub hyperbolic_head: f64,
    /// `None` for an empty spectrum.
    pub tail: Option<TailBounds>,
    /// `B1 + B2 + B3`, zero without a spectrum.
    pub hyperbolic_tail_magnitude_bound: f64,
    /// `elliptic - truncation + interval.lo + head - tail`.
    pub certified_lower_bound: f64,
    /// The same bound with [`STATED_TAIL_TOTAL`] in place of the recomputed
    /// tail; `None` without a spectrum.
    pub certified_lower_bound_stated_tail: Option<f64>,
    /// Sum of the three computed values, without any error terms.
    pub head_estimate: f64,
    pub assumption: Option<AssumptionReport>,
    pub assumption_verified_through: u64,
}

/// Energy breakdown with `B1` summed sequentially.
pub fn casimir_energy(
    sig: &OrbifoldSignature,
    spec: &LengthSpectrum,
    opts: &EnergyOptions,
) -> Result<EnergyBreakdown> {
    casimir_energy_with(sig, spec, opts, tail_b1)
}

/// Energy breakdown with a caller-supplied `B1(j_lo, j_hi)`, so that the
/// long sum can run elsewhere (for instance in parallel).
pub fn casimir_energy_with<F>(
    sig: &OrbifoldSignature,
    spec: &LengthSpectrum,
    opts: &EnergyOptions,
    b1: F,
) -> Result<EnergyBreakdown>
where
    F: Fn(u64, u64) -> Result<f64>,
{
    let identity = identity_series(sig.volume, opts.outer_terms)?;
    let interval = identity_interval(sig.volume);
    let elliptic = elliptic_contribution(sig, opts.outer_terms)?;
    let elliptic_lo = elliptic.value - elliptic.truncation_bound;

    let (hyperbolic, tail, assumption) = if spec.is_empty() {
        (None, None, None)
    } else {
        let h = hyperbolic_contribution(spec, opts.n_tail_tol)?;
        let t = TailBounds {
            b1: b1(opts.tail_j_lo, opts.tail_j_hi)?,
            b2: tail_b2_bound(opts.tail_j_hi)?,
            b3: tail_b3_bound(opts.tail_j_lo)?,
        };
        (Some(h), Some(t), Some(assumption_check(spec, 1)))
    };

    let hyperbolic_head = hyperbolic.map_or(0.0, |h| h.value - h.truncation_bound);
    let tail_total = tail.map_or(0.0, |t| t.total());
    let known = elliptic_lo + interval.0 + hyperbolic_head;
    let head_estimate = identity.value + elliptic.value + hyperbolic.map_or(0.0, |h| h.value);

    Ok(EnergyBreakdown {
        label: sig.label.clone(),
        volume: sig.volume,
        identity,
        identity_interval: interval,
        elliptic,
        hyperbolic,
        hyperbolic_head,
        tail,
        hyperbolic_tail_magnitude_bound: tail_total,
        certified_lower_bound: known - tail_total,
        certified_lower_bound_stated_tail: tail.map(|_| known - STATED_TAIL_TOTAL),
        head_estimate,
        assumption,
        assumption_verified_through: assumption.map_or(0, |a| a.verified_through),
    })
}
