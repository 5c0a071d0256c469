//! Fusion-space data of three Fibonacci anyons and its bit-flip relation to
//! the `(2,2)` tableau representation at `x = φ`.

use num_complex::Complex64;
use serde::Serialize;

use super::{golden_ratio, tableau_e2_closed_form, BasisLabel, FusionLabel, TLRep};
use crate::matrix::{ComplexMatrix, Operator};

/// F-move, R-matrix, braid generators and TL generators on the basis
/// `(1, τ)` of intermediate fusion outcomes.
#[derive(Debug, Clone, PartialEq)]
pub struct FusionData {
    pub f: ComplexMatrix,
    pub r: ComplexMatrix,
    pub sigma1: ComplexMatrix,
    pub sigma2: ComplexMatrix,
    pub e1: ComplexMatrix,
    pub e2: ComplexMatrix,
}

impl FusionData {
    /// `TL_3(φ)` spanned by `ẽ_1`, `ẽ_2`.
    pub fn tl_rep(&self) -> TLRep {
        TLRep::new(
            3,
            golden_ratio(),
            vec![Operator::Dense(self.e1.clone()), Operator::Dense(self.e2.clone())],
            vec![BasisLabel::Fusion(FusionLabel::Vacuum), BasisLabel::Fusion(FusionLabel::Tau)],
        )
        .expect("two 2x2 generators")
    }
}

pub fn fibonacci_fusion_rep() -> FusionData {
    let phi = golden_ratio();
    let inv = 1.0 / phi;
    let inv_sqrt = phi.sqrt().recip();
    let f = ComplexMatrix::from_real_rows(&[vec![inv, inv_sqrt], vec![inv_sqrt, -inv]])
        .expect("2x2 literal");
    let r = ComplexMatrix::diagonal(&[
        Complex64::from_polar(1.0, 4.0 * std::f64::consts::PI / 5.0),
        Complex64::from_polar(1.0, -3.0 * std::f64::consts::PI / 5.0),
    ]);
    let sigma2 = f.matmul(&r).matmul(&f);
    let e1 = ComplexMatrix::from_real_rows(&[vec![phi, 0.0], vec![0.0, 0.0]]).expect("2x2 literal");
    let e2 = ComplexMatrix::from_real_rows(&[vec![inv, inv_sqrt], vec![inv_sqrt, 1.0]])
        .expect("2x2 literal");
    FusionData { sigma1: r.clone(), f, r, sigma2, e1, e2 }
}

pub fn pauli_x() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).expect("2x2 literal")
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EquivalenceReport {
    pub x: f64,
    /// `max |X ẽ_1 X - e_1(x)|`
    pub e1_deviation: f64,
    /// `max |X ẽ_2 X - e_2(x)|`
    pub e2_deviation: f64,
}

impl EquivalenceReport {
    pub fn max_deviation(&self) -> f64 {
        self.e1_deviation.max(self.e2_deviation)
    }
}

/// Compares the bit-flipped fusion generators with the `(2,2)` tableau
/// generators written at loop parameter `x`.
pub fn x_conjugation_deviation_at(x: f64) -> EquivalenceReport {
    let fd = fibonacci_fusion_rep();
    let px = pauli_x();
    let e1 = ComplexMatrix::from_real_rows(&[vec![0.0, 0.0], vec![0.0, x]]).expect("2x2 literal");
    let e2 = tableau_e2_closed_form(x);
    EquivalenceReport {
        x,
        e1_deviation: px.matmul(&fd.e1).matmul(&px).max_abs_diff(&e1),
        e2_deviation: px.matmul(&fd.e2).matmul(&px).max_abs_diff(&e2),
    }
}

pub fn check_x_conjugation_equivalence() -> EquivalenceReport {
    x_conjugation_deviation_at(golden_ratio())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tl::{unitary_jones_params, jones_matrix, verify_tl_relations};

    #[test]
    fn f_is_real_symmetric_involution() {
        let fd = fibonacci_fusion_rep();
        assert!((fd.f[(0, 0)].re - 0.6180339887498949).abs() < 1e-15);
        assert!(fd.f.max_abs_diff(&fd.f.transpose()) == 0.0);
        assert!(fd.f.matmul(&fd.f).max_abs_diff(&ComplexMatrix::identity(2)) < 1e-12);
        assert!(fd.sigma1.unitarity_deviation() < 1e-15);
        assert!(fd.sigma2.unitarity_deviation() < 1e-12);
    }

    #[test]
    fn e2_is_f_conjugate_of_e1() {
        let fd = fibonacci_fusion_rep();
        let conj = fd.f.matmul(&fd.e1).matmul(&fd.f);
        assert!(conj.max_abs_diff(&fd.e2) < 1e-14);
        assert!(verify_tl_relations(&fd.tl_rep(), 1e-12).passed);
    }

    #[test]
    fn jones_form_reproduces_braid_generators() {
        let fd = fibonacci_fusion_rep();
        let (a, b) = unitary_jones_params(golden_ratio()).unwrap();
        assert!(jones_matrix(&fd.e1, a, b).max_abs_diff(&fd.sigma1) < 1e-15);
        assert!(jones_matrix(&fd.e2, a, b).max_abs_diff(&fd.sigma2) < 1e-10);
    }

    #[test]
    fn x_conjugation() {
        let px = pauli_x();
        let fd = fibonacci_fusion_rep();
        let flipped = px.matmul(&fd.e1).matmul(&px);
        assert_eq!(flipped[(1, 1)].re, golden_ratio());
        assert_eq!(flipped[(0, 0)].re, 0.0);
        assert!(check_x_conjugation_equivalence().max_deviation() < 1e-12);
        assert!(x_conjugation_deviation_at(1.9).max_deviation() > 1e-2);
    }
}
