use alloc::vec::Vec;

use super::{orbit_representative, GeodesicClass, Word};
use crate::error::{Error, Result};

/// Longest words the enumerator accepts.
pub const MAX_ENUMERATION_LETTERS: usize = 20;

/// Relative tolerance for trace and length coincidences.
const COINCIDENCE_TOL: f64 = 1e-9;

/// Lyndon words over `R < L` of length `1..=max_letters` that are also the
/// least word of their `{w, w⁻¹, w*, (w*)⁻¹}` orbit, so each orbit of
/// primitive cyclic words appears exactly once. Generated by Duval's
/// algorithm, hence in lexicographic order.
pub fn lyndon_representatives(max_letters: usize) -> Result<Vec<Word>> {
    check_letters(max_letters)?;
    let mut out = Vec::new();
    let mut w: Vec<u8> = alloc::vec![0];
    loop {
        let bits = w.iter().fold(0u32, |acc, &x| (acc << 1) | u32::from(x));
        let word = Word::from_bits(bits, w.len())?;
        if orbit_representative(&word) == word {
            out.push(word);
        }
        // Next Lyndon word: repeat the prefix up to max length, then
        // increment the last non-maximal letter.
        let n = w.len();
        while w.len() < max_letters {
            let x = w[w.len() - n];
            w.push(x);
        }
        while w.last() == Some(&1) {
            w.pop();
        }
        match w.last_mut() {
            Some(x) => *x = 1,
            None => break,
        }
    }
    Ok(out)
}

fn check_letters(max_letters: usize) -> Result<()> {
    if !(1..=MAX_ENUMERATION_LETTERS).contains(&max_letters) {
        return Err(Error::Domain("enumeration needs 1 <= max_letters <= 20"));
    }
    Ok(())
}

/// The class of a representative word, or `None` for elliptic and parabolic
/// words.
pub fn classify_word(w: &Word) -> Result<Option<GeodesicClass>> {
    match GeodesicClass::from_word(w) {
        Ok(c) => Ok(Some(c)),
        Err(Error::NotHyperbolic { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// An enumerated class with the coincidences it takes part in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnumeratedClass {
    pub class: GeodesicClass,
    /// Earlier class with the same `|trace|`: possibly the same conjugacy
    /// class under a different word, possibly a genuinely distinct geodesic
    /// of equal length. Flagged, never merged.
    pub duplicate_of: Option<usize>,
    /// `(j, k)` when the length is `k` times the length of class `j`.
    pub power_of: Option<(usize, u32)>,
}

impl EnumeratedClass {
    pub fn is_flagged(&self) -> bool {
        self.duplicate_of.is_some() || self.power_of.is_some()
    }
}

/// Classes sorted by length. Within a run of equal `|trace|` the shortest
/// word comes first (then dictionary order), so it labels the run.
#[derive(Debug, Clone, PartialEq)]
pub struct Enumeration {
    pub classes: Vec<EnumeratedClass>,
    /// Orbit representatives dropped for `|trace| <= 2`.
    pub excluded_non_hyperbolic: usize,
}

impl Enumeration {
    pub fn all(&self) -> Vec<GeodesicClass> {
        self.classes.iter().map(|c| c.class).collect()
    }

    /// The first class of every run of equal traces. Length multiples are
    /// kept: in this group they also occur between primitive classes.
    pub fn distinct(&self) -> Vec<GeodesicClass> {
        self.classes
            .iter()
            .filter(|c| c.duplicate_of.is_none())
            .map(|c| c.class)
            .collect()
    }

    pub fn flagged(&self) -> usize {
        self.classes.iter().filter(|c| c.is_flagged()).count()
    }
}

fn close(x: f64, y: f64, scale: f64) -> bool {
    (x - y).abs() <= COINCIDENCE_TOL * scale
}

fn same_trace(a: &GeodesicClass, b: &GeodesicClass) -> bool {
    let (x, y) = (a.trace.abs(), b.trace.abs());
    close(x, y, x.max(y).max(1.0))
}

/// Sorts classified words into canonical order and sets the coincidence
/// flags. The result does not depend on the order of `classes`.
pub fn finish_enumeration(
    mut classes: Vec<GeodesicClass>,
    excluded_non_hyperbolic: usize,
) -> Enumeration {
    let key = |a: &GeodesicClass, b: &GeodesicClass| {
        a.representative
            .len()
            .cmp(&b.representative.len())
            .then(a.representative.cmp(&b.representative))
    };
    classes.sort_by(|a, b| a.length.total_cmp(&b.length).then(key(a, b)));
    let mut run_start = Vec::with_capacity(classes.len());
    let mut lo = 0;
    while lo < classes.len() {
        let mut hi = lo + 1;
        while hi < classes.len() && same_trace(&classes[hi - 1], &classes[hi]) {
            hi += 1;
        }
        classes[lo..hi].sort_by(key);
        run_start.extend(core::iter::repeat(lo).take(hi - lo));
        lo = hi;
    }

    let lengths: Vec<f64> = classes.iter().map(|c| c.length).collect();
    let mut out = Vec::with_capacity(classes.len());
    for (i, c) in classes.iter().enumerate() {
        let duplicate_of = (run_start[i] != i).then_some(run_start[i]);
        let mut power_of = None;
        let mut k = 2u32;
        while let Some(&shortest) = lengths.first() {
            let target = c.length / f64::from(k);
            if target < shortest * (1.0 - COINCIDENCE_TOL) {
                break;
            }
            let at = lengths.partition_point(|&l| l < target - COINCIDENCE_TOL * c.length);
            if at < i && close(lengths[at], target, c.length) {
                power_of = Some((run_start[at], k));
                break;
            }
            k += 1;
        }
        out.push(EnumeratedClass {
            class: *c,
            duplicate_of,
            power_of,
        });
    }
    Enumeration {
        classes: out,
        excluded_non_hyperbolic,
    }
}

/// Every orbit of primitive cyclic words with at most `max_letters` letters,
/// as a sorted list of hyperbolic classes.
pub fn enumerate_classes(max_letters: usize) -> Result<Enumeration> {
    let mut classes = Vec::new();
    let mut excluded = 0;
    for w in lyndon_representatives(max_letters)? {
        match classify_word(&w)? {
            Some(c) => classes.push(c),
            None => excluded += 1,
        }
    }
    Ok(finish_enumeration(classes, excluded))
}
