//! `TL_4(x)` written as four-qubit Pauli strings.
//!
//! Sites are ordered most significant first and each site uses the
//! index basis `(d, u)`, so `Z = diag(-1, 1)` and `(1 + Z)/2` projects on `u`.

use num_complex::Complex64;

use super::{BasisLabel, TLRep};
use crate::combinatorics::{SpinConfig, Step};
use crate::matrix::{ComplexMatrix, Operator};

/// Index of `uudd` in the 16-dimensional space.
pub const UUDD: usize = 0b1100;
/// Index of `udud` in the 16-dimensional space.
pub const UDUD: usize = 0b1010;

#[derive(Debug, Clone, PartialEq)]
pub struct PauliTl4 {
    pub x: f64,
    /// `e_1 = e_3`, `e_2`, `e_3`.
    pub generators: [ComplexMatrix; 3],
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn id2() -> ComplexMatrix {
    ComplexMatrix::identity(2)
}

fn pauli_z() -> ComplexMatrix {
    ComplexMatrix::diagonal(&[c(-1.0, 0.0), c(1.0, 0.0)])
}

fn pauli_y() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[vec![c(0.0, 0.0), c(0.0, 1.0)], vec![c(0.0, -1.0), c(0.0, 0.0)]])
        .expect("2x2 literal")
}

fn up() -> ComplexMatrix {
    id2().add(&pauli_z()).scale(c(0.5, 0.0))
}

fn down() -> ComplexMatrix {
    id2().sub(&pauli_z()).scale(c(0.5, 0.0))
}

fn kron4(a: &ComplexMatrix, b: &ComplexMatrix, c: &ComplexMatrix, d: &ComplexMatrix) -> ComplexMatrix {
    a.kron(b).kron(c).kron(d)
}

pub fn pauli_string_tl4(x: f64) -> PauliTl4 {
    let (u, d) = (up(), down());
    let px = super::pauli_x();
    let py = pauli_y();
    let e1 = kron4(&u, &d, &u, &d).scale(c(x, 0.0));
    // (X₂X₃ + Y₂Y₃)/2 between the two outer projectors.
    let hop = px.kron(&px).add(&py.kron(&py)).scale(c(0.5, 0.0));
    let e2 = kron4(&u, &u, &d, &d)
        .scale(c((x * x - 1.0) / x, 0.0))
        .add(&kron4(&u, &d, &u, &d).scale(c(1.0 / x, 0.0)))
        .add(&u.kron(&hop).kron(&d).scale(c((x * x - 1.0).sqrt() / x, 0.0)));
    PauliTl4 { x, generators: [e1.clone(), e2, e1] }
}

impl PauliTl4 {
    pub fn as_rep(&self) -> TLRep {
        let basis = (0..16u64)
            .map(|k| BasisLabel::Spins(SpinConfig::from_index(k, 4).expect("4 sites")))
            .collect();
        let generators = self.generators.iter().cloned().map(Operator::Dense).collect();
        TLRep::new(4, self.x, generators, basis).expect("three 16x16 generators")
    }

    /// Restriction of each generator to `(uudd, udud)`.
    pub fn restricted(&self) -> [ComplexMatrix; 3] {
        let idx = [UUDD, UDUD];
        self.generators.clone().map(|g| {
            let mut m = ComplexMatrix::zeros(2, 2);
            for (a, &i) in idx.iter().enumerate() {
                for (b, &j) in idx.iter().enumerate() {
                    m[(a, b)] = g[(i, j)];
                }
            }
            m
        })
    }

    /// `max_i |[e_i, P]|` with `P` the projector onto the two Dyck states.
    pub fn projector_commutator_deviation(&self) -> f64 {
        let mut p = ComplexMatrix::zeros(16, 16);
        p[(UUDD, UUDD)] = c(1.0, 0.0);
        p[(UDUD, UDUD)] = c(1.0, 0.0);
        self.generators
            .iter()
            .map(|g| g.matmul(&p).max_abs_diff(&p.matmul(g)))
            .fold(0.0, f64::max)
    }
}

/// Basis vector of a 4-site configuration such as `[U, U, D, D]`.
pub fn spin_state(steps: [Step; 4]) -> usize {
    steps.iter().fold(0, |acc, s| (acc << 1) | usize::from(s.bit()))
}
