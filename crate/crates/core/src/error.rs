use core::fmt;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    Domain(&'static str),
    /// The requested special-function order is not implemented.
    UnsupportedOrder(f64),
    /// `1/p + 1/q + 1/r >= 1`, so the triangle group is not hyperbolic.
    NonHyperbolicSignature { p: u32, q: u32, r: u32 },
    /// A word whose matrix has `|trace| <= 2` (elliptic or parabolic).
    NotHyperbolic { trace: f64 },
    /// A hyperbolic sum was requested over an empty length spectrum.
    EmptySpectrum,
    /// Spectrum entries violate positivity or ordering.
    InvalidSpectrum(&'static str),
    /// Adaptive quadrature stopped before meeting its tolerance.
    NoConvergence { estimate: f64, error: f64 },
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    /// True for failures of the numerics, as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::NoConvergence { .. })
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(what) => write!(f, "argument out of domain: {what}"),
            Error::UnsupportedOrder(nu) => write!(f, "unsupported order {nu}"),
            Error::NonHyperbolicSignature { p, q, r } => {
                write!(f, "signature ({p},{q},{r}) is not hyperbolic")
            }
            Error::NotHyperbolic { trace } => {
                write!(f, "word is not hyperbolic (|trace| = {trace})")
            }
            Error::EmptySpectrum => f.write_str("length spectrum is empty"),
            Error::InvalidSpectrum(what) => write!(f, "invalid length spectrum: {what}"),
            Error::NoConvergence { estimate, error } => write!(
                f,
                "quadrature did not converge (estimate {estimate}, error {error})"
            ),
        }
    }
}
