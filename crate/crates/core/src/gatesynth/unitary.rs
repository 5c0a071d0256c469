use std::ops::Mul;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// Unitaries whose `U†U` differs from `1` by more than this are rejected.
pub const UNITARITY_TOL: f64 = 1e-8;

/// A 2x2 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct U2(pub [Complex64; 4]);

impl U2 {
    pub const IDENTITY: U2 = U2([
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
    ]);

    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        U2([a, b, c, d])
    }

    pub fn from_matrix(m: &ComplexMatrix) -> Result<Self> {
        if m.rows() != 2 || m.cols() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, found: m.rows().max(m.cols()) });
        }
        Ok(U2([m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]]))
    }

    pub fn to_matrix(&self) -> ComplexMatrix {
        let [a, b, c, d] = self.0;
        ComplexMatrix::from_rows(&[vec![a, b], vec![c, d]]).expect("2x2")
    }

    pub fn adjoint(&self) -> Self {
        let [a, b, c, d] = self.0;
        U2([a.conj(), c.conj(), b.conj(), d.conj()])
    }

    pub fn trace(&self) -> Complex64 {
        self.0[0] + self.0[3]
    }

    pub fn scale(&self, s: Complex64) -> Self {
        U2(self.0.map(|z| z * s))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub fn unitarity_deviation(&self) -> f64 {
        (self.adjoint() * *self).max_abs_diff(&U2::IDENTITY)
    }

    /// `U^n` by repeated multiplication; `U^{-n}` is exactly `(U^n)†`.
    pub fn pow(&self, n: i32) -> Self {
        let p = (0..n.unsigned_abs()).fold(U2::IDENTITY, |acc, _| *self * acc);
        if n < 0 {
            p.adjoint()
        } else {
            p
        }
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl Mul for U2 {
    type Output = U2;
    #[inline]
    fn mul(self, r: U2) -> U2 {
        let [a, b, c, d] = self.0;
        let [e, f, g, h] = r.0;
        U2([a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h])
    }
}

/// `ε(U, V) = √(1 - |Tr(U V†)|/2)` without input checks.
///
/// For `W = U V†` in `U(2)`, `1 - |Tr W|/2 = (‖B‖²/2) / (1 + |Tr W|/2)` with
/// `B` the traceless part of `W`; the right side keeps full relative
/// precision when `U ≈ e^{iθ} V`.
#[inline]
pub fn distance_unchecked(u: &U2, v: &U2) -> f64 {
    let [a, b, c, d] = u.0;
    let [e, f, g, h] = v.0;
    // W = U V†
    let w00 = a * e.conj() + b * f.conj();
    let w01 = a * g.conj() + b * h.conj();
    let w10 = c * e.conj() + d * f.conj();
    let w11 = c * g.conj() + d * h.conj();
    let half_tr = ((w00 + w11) * 0.5).norm().min(1.0);
    let traceless = (w00 - w11).norm_sqr() / 2.0 + w01.norm_sqr() + w10.norm_sqr();
    ((traceless / 2.0) / (1.0 + half_tr)).min(1.0).sqrt()
}

/// Global-phase-invariant distance between two 2x2 unitaries.
pub fn distance(u: &U2, v: &U2) -> Result<f64> {
    for m in [u, v] {
        let dev = m.unitarity_deviation();
        if !(dev <= UNITARITY_TOL) {
            return Err(Error::NotUnitary(dev));
        }
    }
    Ok(distance_unchecked(u, v))
}
