use core::ops::Mul;

/// Real 2×2 matrix `[[a, b], [c, d]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

/// Determinant drift beyond which products are rescaled back to `SL(2,R)`.
const DET_DRIFT: f64 = 1e-13;

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2::new(1.0, 0.0, 0.0, 1.0);

    pub const fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> f64 {
        self.a + self.d
    }

    /// Inverse; `None` when the determinant vanishes.
    pub fn inverse(&self) -> Option<Mat2> {
        let det = self.det();
        if det == 0.0 || !det.is_finite() {
            return None;
        }
        Some(Mat2::new(
            self.d / det,
            -self.b / det,
            -self.c / det,
            self.a / det,
        ))
    }

    /// Divides by `√det` when the determinant has drifted from one.
    pub fn renormalized(self) -> Mat2 {
        let det = self.det();
        if (det - 1.0).abs() > DET_DRIFT && det > 0.0 {
            let s = 1.0 / libm::sqrt(det);
            Mat2::new(self.a * s, self.b * s, self.c * s, self.d * s)
        } else {
            self
        }
    }

    pub fn max_abs_diff(&self, other: &Mat2) -> f64 {
        (self.a - other.a)
            .abs()
            .max((self.b - other.b).abs())
            .max((self.c - other.c).abs())
            .max((self.d - other.d).abs())
    }

    /// Whether the matrix is `±I` entrywise within `tol`.
    pub fn is_projective_identity(&self, tol: f64) -> bool {
        let neg = Mat2::new(-1.0, 0.0, 0.0, -1.0);
        self.max_abs_diff(&Mat2::IDENTITY) <= tol || self.max_abs_diff(&neg) <= tol
    }

    pub fn pow(self, n: u32) -> Mat2 {
        (0..n).fold(Mat2::IDENTITY, |acc, _| (acc * self).renormalized())
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, o: Mat2) -> Mat2 {
        Mat2::new(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        let m = Mat2::new(2.0, 1.0, 3.0, 2.0);
        let p = m * m.inverse().unwrap();
        assert!(p.max_abs_diff(&Mat2::IDENTITY) < 1e-15);
        assert!(Mat2::new(1.0, 2.0, 2.0, 4.0).inverse().is_none());
    }

    #[test]
    fn renormalization_restores_unit_determinant() {
        let m = Mat2::new(2.0, 0.0, 0.0, 2.0).renormalized();
        assert!((m.det() - 1.0).abs() < 1e-15);
        let n = Mat2::new(1.0, 1e-14, 0.0, 1.0);
        assert_eq!(n.renormalized(), n);
    }
}
