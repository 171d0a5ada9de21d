//! Geometry of the `(p, q, r)` triangle groups: areas, the first three
//! systoles, and closed geodesics of the `(2,3,7)` group written as words in
//! the generators `R = A⁻¹B` and `L = B`.

mod corpus;
mod enumerate;
mod mat2;
mod word;

pub use corpus::{table_corpus, TableRow, TABLE_ROWS};
pub use enumerate::{
    classify_word, enumerate_classes, finish_enumeration, lyndon_representatives, EnumeratedClass,
    Enumeration, MAX_ENUMERATION_LETTERS,
};
pub use mat2::Mat2;
pub use word::{Letter, Word, MAX_WORD_LEN};

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::contributions::{
    geodesic_contribution, LengthSpectrum, Provenance, SpectrumEntry, DEFAULT_MERGE_TOL,
    DEFAULT_N_TAIL_TOL,
};
use crate::error::{Error, Result};

/// Margin above 2 below which a trace counts as elliptic or parabolic.
pub const HYPERBOLIC_TRACE_MARGIN: f64 = 1e-12;

/// `2π(1 - 1/p - 1/q - 1/r)`.
pub fn triangle_area(p: u32, q: u32, r: u32) -> Result<f64> {
    if p < 2 || q < 2 || r < 2 {
        return Err(Error::NonHyperbolicSignature { p, q, r });
    }
    // Compare 1/p + 1/q + 1/r < 1 exactly in integers.
    let (p64, q64, r64) = (u64::from(p), u64::from(q), u64::from(r));
    if q64 * r64 + p64 * r64 + p64 * q64 >= p64 * q64 * r64 {
        return Err(Error::NonHyperbolicSignature { p, q, r });
    }
    let s = 1.0 / f64::from(p) + 1.0 / f64::from(q) + 1.0 / f64::from(r);
    Ok(2.0 * PI * (1.0 - s))
}

fn two_arcosh(x: f64) -> Result<f64> {
    if !(x > 1.0) {
        return Err(Error::Domain("systole needs an arcosh argument above 1"));
    }
    Ok(2.0 * libm::acosh(x))
}

/// The three systole expressions without the ordering requirement:
/// `ℓ1 = 2 arcosh(2cos(π/r)cos(π/p) + cos(π/q))`, `ℓ2` and `ℓ3` by cycling
/// `(r, p, q)`.
pub fn systole_formula(p: u32, q: u32, r: u32) -> Result<(f64, f64, f64)> {
    let c = |m: u32| libm::cos(PI / f64::from(m));
    let (cp, cq, cr) = (c(p), c(q), c(r));
    Ok((
        two_arcosh(2.0 * cr * cp + cq)?,
        two_arcosh(2.0 * cq * cr + cp)?,
        two_arcosh(2.0 * cp * cq + cr)?,
    ))
}

/// Lengths of the three shortest geodesics of `Γ(p, q, r)` for
/// `q >= p >= r >= 3`.
pub fn systole_lengths(p: u32, q: u32, r: u32) -> Result<(f64, f64, f64)> {
    if !(q >= p && p >= r && r >= 3) {
        return Err(Error::Domain("systole formulas need q >= p >= r >= 3"));
    }
    triangle_area(p, q, r)?;
    systole_formula(p, q, r)
}

/// Matrices of the `(2,3,7)` group: `A` of order 3, `B` of order 7 (both
/// projectively), `R = A⁻¹B` and `L = B`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Generators {
    pub a: Mat2,
    pub b: Mat2,
    pub r: Mat2,
    pub l: Mat2,
}

/// `A` is the rotation by `π/3`; `B` is the rotation by `π/7` conjugated by
/// `diag(√b, 1/√b)` with
/// `b = (√(3(cot²(π/7) - 3)) + √3 cot(π/7))/3`.
pub fn generators_237() -> Generators {
    let t = PI / 7.0;
    let cot = libm::cos(t) / libm::sin(t);
    let sqrt3 = libm::sqrt(3.0);
    let b = (libm::sqrt(3.0 * (cot * cot - 3.0)) + sqrt3 * cot) / 3.0;
    let (s3, c3) = (libm::sin(PI / 3.0), libm::cos(PI / 3.0));
    let (s7, c7) = (libm::sin(t), libm::cos(t));
    let a = Mat2::new(c3, s3, -s3, c3);
    let bm = Mat2::new(c7, b * s7, -s7 / b, c7);
    let a_inv = Mat2::new(c3, -s3, s3, c3);
    Generators {
        a,
        b: bm,
        r: a_inv * bm,
        l: bm,
    }
}

/// Product of the letters' matrices from left to right.
pub fn word_to_matrix(w: &Word) -> Mat2 {
    let g = generators_237();
    w.letters().fold(Mat2::IDENTITY, |acc, letter| {
        let m = match letter {
            Letter::R => g.r,
            Letter::L => g.l,
        };
        (acc * m).renormalized()
    })
}

pub fn word_trace(w: &Word) -> f64 {
    word_to_matrix(w).trace()
}

fn length_from_trace(trace: f64) -> Result<f64> {
    let t = trace.abs();
    if t <= 2.0 + HYPERBOLIC_TRACE_MARGIN {
        return Err(Error::NotHyperbolic { trace });
    }
    Ok(2.0 * libm::acosh(0.5 * t))
}

/// `2 arcosh(|tr|/2)`; an error for elliptic and parabolic words.
pub fn word_length(w: &Word) -> Result<f64> {
    length_from_trace(word_trace(w))
}

/// The words standing for `γ`, `γ⁻¹`, `γ*` and `(γ*)⁻¹`, each in canonical
/// cyclic form.
fn involution_orbit(w: &Word) -> [Word; 4] {
    [
        w.canonical(),
        w.inverse().canonical(),
        w.star().canonical(),
        w.reversed().canonical(),
    ]
}

/// Number of distinct conjugacy classes among `γ`, `γ⁻¹`, `γ*`, `(γ*)⁻¹`.
pub fn class_count_s(w: &Word) -> u8 {
    let orbit = involution_orbit(w);
    let mut distinct = 0u8;
    for (i, x) in orbit.iter().enumerate() {
        if !orbit[..i].contains(x) {
            distinct += 1;
        }
    }
    distinct
}

/// Least canonical word in the orbit of `w`; the label used for its class.
pub fn orbit_representative(w: &Word) -> Word {
    let orbit = involution_orbit(w);
    orbit.into_iter().min().unwrap_or(*w)
}

/// An orbit of closed geodesics of equal length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeodesicClass {
    pub representative: Word,
    pub trace: f64,
    pub length: f64,
    pub s: u8,
    /// `A(γ) = -(s/4π) Σ_n (1/n) csch(nℓ/2) K_1(nℓ/2)`.
    pub contribution: f64,
}

impl GeodesicClass {
    /// Class of `w` with `s` from [`class_count_s`].
    pub fn from_word(w: &Word) -> Result<GeodesicClass> {
        GeodesicClass::with_s(w, class_count_s(w))
    }

    /// Class of `w` with a prescribed count `s`.
    pub fn with_s(w: &Word, s: u8) -> Result<GeodesicClass> {
        let trace = word_trace(w);
        let length = length_from_trace(trace)?;
        let contribution = geodesic_contribution(length, u32::from(s), DEFAULT_N_TAIL_TOL)?;
        Ok(GeodesicClass {
            representative: orbit_representative(w),
            trace,
            length,
            s,
            contribution,
        })
    }
}

/// Length spectrum with each class counted `s` times; lengths within
/// `1e-9` are merged.
pub fn to_spectrum(classes: &[GeodesicClass], provenance: Provenance) -> LengthSpectrum {
    let entries: Vec<SpectrumEntry> = classes
        .iter()
        .map(|c| SpectrumEntry::new(c.length, u32::from(c.s)))
        .collect();
    match LengthSpectrum::new(entries, provenance) {
        Ok(s) => s.merged(DEFAULT_MERGE_TOL),
        Err(_) => LengthSpectrum::empty(provenance),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn areas() {
        assert!((triangle_area(2, 3, 7).unwrap() - PI / 21.0).abs() < 1e-15);
        assert!((triangle_area(3, 3, 4).unwrap() - PI / 6.0).abs() < 1e-15);
        assert!(triangle_area(2, 3, 6).is_err());
        assert!(triangle_area(2, 4, 4).is_err());
        assert!(triangle_area(3, 3, 3).is_err());
    }

    #[test]
    fn systoles() {
        let (l1, _, _) = systole_lengths(3, 4, 3).unwrap();
        let expected = 2.0 * libm::acosh(0.5 + libm::sqrt(2.0) / 2.0);
        assert!((l1 - expected).abs() < 1e-14);
        assert!(systole_lengths(3, 7, 2).is_err());
        assert!(systole_lengths(4, 3, 3).is_err());
    }

    #[test]
    fn systole_symmetry() {
        // ℓ1(p,q,r) uses (r,p; q) and ℓ3 uses (p,q; r): swapping q and r
        // exchanges them.
        let (a1, _, a3) = systole_formula(3, 4, 5).unwrap();
        let (b1, _, b3) = systole_formula(3, 5, 4).unwrap();
        assert!((a1 - b3).abs() < 1e-14);
        assert!((a3 - b1).abs() < 1e-14);
    }

    #[test]
    fn generator_traces() {
        let g = generators_237();
        assert!((g.a.trace().abs() - 1.0).abs() < 1e-15);
        assert!((g.b.trace().abs() - 2.0 * libm::cos(PI / 7.0)).abs() < 1e-15);
        assert!((g.a.det() - 1.0).abs() < 1e-15 && (g.b.det() - 1.0).abs() < 1e-15);
        assert!(g.a.pow(3).is_projective_identity(1e-10));
        assert!(g.b.pow(7).is_projective_identity(1e-10));
        assert!(((g.r * g.l).trace().abs() - 2.0 * libm::cosh(0.983_986_562_2 / 2.0)).abs() < 1e-9);
    }

    #[test]
    fn word_lengths() {
        assert_eq!(word_to_matrix(&w("L")), generators_237().b);
        assert!((word_length(&w("RL")).unwrap() - 0.983_986_562_2).abs() < 1e-9);
        assert!((word_length(&w("RRLL")).unwrap() - 1.736_005_750_8).abs() < 1e-9);
        assert!((word_length(&w("RLRLL")).unwrap() - 2.131_105_014_1).abs() < 1e-9);
        assert!(matches!(
            word_length(&w("R")),
            Err(Error::NotHyperbolic { .. })
        ));
        assert!(word_length(&w("L")).is_err());
    }

    #[test]
    fn s_counts() {
        assert_eq!(class_count_s(&w("RL")), 1);
        assert_eq!(class_count_s(&w("RLRLL")), 2);
        assert_eq!(class_count_s(&w("RLRLLRLRRLL")), 4);
        assert_eq!(orbit_representative(&w("LLRLR")), w("RRLRL"));
        assert_eq!(orbit_representative(&w("RLRLL")), w("RRLRL"));
    }

    #[test]
    fn spectrum_from_classes() {
        let c = GeodesicClass::from_word(&w("RLRLL")).unwrap();
        let spec = to_spectrum(&[c, c], Provenance::Enumerated);
        assert_eq!(spec.len(), 1);
        assert_eq!(spec.total_multiplicity(), 4);
        assert!(to_spectrum(&[], Provenance::Enumerated).is_empty());
    }
}
