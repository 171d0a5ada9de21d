//! The identity, elliptic and hyperbolic terms of the Casimir energy, the
//! bounds on the unlisted part of the length spectrum, and their assembly
//! into a certified lower bound.

mod elliptic;
mod energy;
mod hyperbolic;
mod identity;
mod tail;

pub use elliptic::{
    elliptic_contribution, elliptic_contribution_quadrature, elliptic_kernel_series,
    elliptic_small_angle_lower_bound, elliptic_truncation_bound_ln, elliptic_weight, KERNEL_S,
};
pub use energy::{
    casimir_energy, casimir_energy_with, EnergyBreakdown, EnergyOptions, STATED_TAIL_TOTAL,
};
pub use hyperbolic::{
    assumption_check, geodesic_contribution, geodesic_sum, hyperbolic_contribution,
    hyperbolic_majorant, hyperbolic_term, AssumptionReport, GeodesicSum, Violation,
    DEFAULT_N_TAIL_TOL,
};
pub use identity::{identity_interval, identity_quadrature, identity_series};
pub use tail::{
    a_constant, b1_chunk_sum, b1_chunks, b1_combine, b1_term, b2_integral, b2_prefactor,
    b3_integral_bound, b3_prefactor, jest_inequality_check, log_inequality_holds, polylog_chain,
    tail_b1, tail_b2_bound, tail_b3_bound, tail_bounds, PolylogChain, TailBounds, B1_CHUNK,
};

use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};

/// Cone-point orders and hyperbolic area of a compact orbifold `Γ\H`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbifoldSignature {
    pub cone_orders: Vec<u32>,
    pub volume: f64,
    pub label: String,
}

impl OrbifoldSignature {
    pub fn new(cone_orders: Vec<u32>, volume: f64, label: impl Into<String>) -> Result<Self> {
        if cone_orders.iter().any(|&m| m < 2) {
            return Err(Error::Domain("cone orders must be at least 2"));
        }
        if !(volume > 0.0 && volume.is_finite()) {
            return Err(Error::Domain("volume must be positive"));
        }
        Ok(OrbifoldSignature {
            cone_orders,
            volume,
            label: label.into(),
        })
    }

    /// The `(p, q, r)` triangle orbifold, with area `2π(1 - 1/p - 1/q - 1/r)`.
    pub fn triangle(p: u32, q: u32, r: u32) -> Result<Self> {
        let volume = crate::triangle::triangle_area(p, q, r)?;
        Self::new(
            alloc::vec![p, q, r],
            volume,
            alloc::format!("({p},{q},{r})"),
        )
    }

    /// A smooth surface (no cone points) of the given area.
    pub fn cone_free(volume: f64) -> Result<Self> {
        Self::new(Vec::new(), volume, "cone-free")
    }

    /// Cone angles `π/m`.
    pub fn cone_angles(&self) -> impl Iterator<Item = f64> + '_ {
        self.cone_orders.iter().map(|&m| PI / f64::from(m))
    }
}

/// Where a length spectrum came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    TableCorpus,
    Enumerated,
    File,
}

/// One primitive length with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumEntry {
    pub length: f64,
    pub multiplicity: u32,
}

impl SpectrumEntry {
    pub const fn new(length: f64, multiplicity: u32) -> Self {
        SpectrumEntry {
            length,
            multiplicity,
        }
    }
}

/// Default tolerance under which two lengths count as equal when merging.
pub const DEFAULT_MERGE_TOL: f64 = 1e-9;

/// Sorted multiset of primitive closed-geodesic lengths.
#[derive(Debug, Clone, PartialEq)]
pub struct LengthSpectrum {
    entries: Vec<SpectrumEntry>,
    provenance: Provenance,
}

impl LengthSpectrum {
    /// Sorts the entries by length. Lengths must be positive and finite,
    /// multiplicities at least one. Equal lengths are kept apart; see
    /// [`LengthSpectrum::merged`].
    pub fn new(mut entries: Vec<SpectrumEntry>, provenance: Provenance) -> Result<Self> {
        for e in &entries {
            if !(e.length > 0.0 && e.length.is_finite()) {
                return Err(Error::InvalidSpectrum(
                    "lengths must be positive and finite",
                ));
            }
            if e.multiplicity == 0 {
                return Err(Error::InvalidSpectrum("multiplicities must be at least 1"));
            }
        }
        entries.sort_by(|a, b| a.length.total_cmp(&b.length));
        Ok(LengthSpectrum {
            entries,
            provenance,
        })
    }

    pub fn empty(provenance: Provenance) -> Self {
        LengthSpectrum {
            entries: Vec::new(),
            provenance,
        }
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.entries.iter().map(|e| u64::from(e.multiplicity)).sum()
    }

    /// Combines neighbouring entries whose lengths differ by at most `tol`.
    /// The merged entry keeps the smallest length of its run.
    pub fn merged(&self, tol: f64) -> LengthSpectrum {
        let mut out: Vec<SpectrumEntry> = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            match out.last_mut() {
                Some(last) if (e.length - last.length).abs() <= tol => {
                    last.multiplicity += e.multiplicity;
                }
                _ => out.push(*e),
            }
        }
        LengthSpectrum {
            entries: out,
            provenance: self.provenance,
        }
    }

    /// `(j, ℓ_j)` with each length repeated by its multiplicity, `j` from 1.
    pub fn indexed_lengths(&self) -> impl Iterator<Item = (u64, f64)> + '_ {
        self.entries
            .iter()
            .flat_map(|e| core::iter::repeat(e.length).take(e.multiplicity as usize))
            .enumerate()
            .map(|(i, l)| (i as u64 + 1, l))
    }
}

/// A truncated series with its error budget.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesEvaluation {
    pub value: f64,
    /// Rigorous bound on the neglected terms.
    pub truncation_bound: f64,
    /// Error carried in from the kernel evaluations (estimates, not bounds,
    /// where the kernel comes from quadrature).
    pub eval_error: f64,
    /// Worst-case floating-point error of the summation itself.
    pub rounding_error: f64,
    /// Outer terms used.
    pub terms: usize,
}

impl SeriesEvaluation {
    pub const ZERO: SeriesEvaluation = SeriesEvaluation {
        value: 0.0,
        truncation_bound: 0.0,
        eval_error: 0.0,
        rounding_error: 0.0,
        terms: 0,
    };

    fn scaled(self, w: f64) -> SeriesEvaluation {
        let a = w.abs();
        SeriesEvaluation {
            value: w * self.value,
            truncation_bound: a * self.truncation_bound,
            eval_error: a * self.eval_error,
            rounding_error: a * self.rounding_error,
            terms: self.terms,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn signature_validation() {
        let s = OrbifoldSignature::triangle(2, 3, 7).unwrap();
        assert!((s.volume - PI / 21.0).abs() < 1e-15);
        assert_eq!(s.label, "(2,3,7)");
        assert!(OrbifoldSignature::triangle(2, 3, 6).is_err());
        assert!(OrbifoldSignature::new(vec![1], 1.0, "x").is_err());
        assert!(OrbifoldSignature::cone_free(-1.0).is_err());
    }

    #[test]
    fn spectrum_sorting_and_merging() {
        let s = LengthSpectrum::new(
            vec![
                SpectrumEntry::new(2.0, 1),
                SpectrumEntry::new(1.0, 2),
                SpectrumEntry::new(2.0 + 1e-12, 3),
            ],
            Provenance::File,
        )
        .unwrap();
        assert_eq!(s.entries()[0].length, 1.0);
        assert_eq!(s.len(), 3);
        let m = s.merged(DEFAULT_MERGE_TOL);
        assert_eq!(m.len(), 2);
        assert_eq!(m.entries()[1].multiplicity, 4);
        assert_eq!(m.total_multiplicity(), 6);
        let idx: Vec<_> = m.indexed_lengths().map(|(j, _)| j).collect();
        assert_eq!(idx, vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn spectrum_rejects_bad_entries() {
        let bad = LengthSpectrum::new(vec![SpectrumEntry::new(0.0, 1)], Provenance::File);
        assert!(matches!(bad, Err(Error::InvalidSpectrum(_))));
        let bad = LengthSpectrum::new(vec![SpectrumEntry::new(1.0, 0)], Provenance::File);
        assert!(bad.is_err());
    }
}
