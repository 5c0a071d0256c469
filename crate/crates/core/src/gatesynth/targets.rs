use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};

use num_complex::Complex64;
use serde::Serialize;

use super::unitary::U2;
use crate::error::{Error, Result};

/// Targets must be unitary to this precision.
pub const TARGET_UNITARITY_TOL: f64 = 1e-12;

/// A named single-qubit gate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GateTarget {
    pub name: String,
    pub matrix: U2,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

impl GateTarget {
    pub fn new(name: impl Into<String>, matrix: U2) -> Result<Self> {
        if !matrix.is_finite() {
            return Err(Error::NotUnitary(f64::INFINITY));
        }
        let dev = matrix.unitarity_deviation();
        if dev > TARGET_UNITARITY_TOL {
            return Err(Error::NotUnitary(dev));
        }
        Ok(Self { name: name.into(), matrix })
    }

    pub fn identity() -> Self {
        Self { name: "I".into(), matrix: U2::IDENTITY }
    }

    pub fn hadamard() -> Self {
        let h = c(FRAC_1_SQRT_2, 0.0);
        Self { name: "H".into(), matrix: U2::new(h, h, h, -h) }
    }

    /// The bare bit flip; any overall phase is invisible to the metric.
    pub fn not() -> Self {
        Self { name: "NOT".into(), matrix: U2::new(c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)) }
    }

    pub fn s() -> Self {
        Self { name: "S".into(), matrix: U2::new(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 1.0)) }
    }

    pub fn t() -> Self {
        Self {
            name: "T".into(),
            matrix: U2::new(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), Complex64::from_polar(1.0, FRAC_PI_4)),
        }
    }

    /// Looks up `H`, `NOT` (or `X`), `S`, `T`, `I`, case-insensitively.
    pub fn by_name(name: &str) -> Result<Self> {
        match name.to_ascii_uppercase().as_str() {
            "H" => Ok(Self::hadamard()),
            "NOT" | "X" => Ok(Self::not()),
            "S" => Ok(Self::s()),
            "T" => Ok(Self::t()),
            "I" | "ID" => Ok(Self::identity()),
            _ => Err(Error::InvalidArgument(format!("unknown gate {name:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_are_unitary() {
        for name in ["H", "NOT", "x", "S", "T", "I"] {
            let g = GateTarget::by_name(name).unwrap();
            assert!(g.matrix.unitarity_deviation() < TARGET_UNITARITY_TOL, "{name}");
        }
        assert!(GateTarget::by_name("CNOT").is_err());
    }

    #[test]
    fn rejects_non_unitary() {
        let m = U2::new(c(1.0, 0.0), c(1e-9, 0.0), c(0.0, 0.0), c(1.0, 0.0));
        assert!(matches!(GateTarget::new("bad", m), Err(Error::NotUnitary(_))));
        assert!(GateTarget::new("ok", GateTarget::t().matrix).is_ok());
    }

    #[test]
    fn t_squared_is_s() {
        let t = GateTarget::t().matrix;
        assert!((t * t).max_abs_diff(&GateTarget::s().matrix) < 1e-15);
    }
}
