use super::unitary::U2;
use crate::combinatorics::Shape;
use crate::error::Result;
use crate::tl::{build_tableau_rep, fibonacci_fusion_rep, golden_ratio, jones_braid, pauli_x, unitary_jones_params};

/// Exponents up to this magnitude are served from a precomputed table.
const TABLE_MAX: usize = 16;

/// The two braid generators acting on a qubit, with cached powers.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSet {
    pub s1: U2,
    pub s2: U2,
    /// `powers[g][n]` is `σ_{g+1}^n` for `0 ≤ n ≤ TABLE_MAX`.
    powers: [[U2; TABLE_MAX + 1]; 2],
}

impl GeneratorSet {
    pub fn new(s1: U2, s2: U2) -> Self {
        let table = |s: U2| {
            let mut t = [U2::IDENTITY; TABLE_MAX + 1];
            for n in 1..=TABLE_MAX {
                t[n] = s * t[n - 1];
            }
            t
        };
        Self { s1, s2, powers: [table(s1), table(s2)] }
    }

    /// `σ_g^n` with `σ_g^{-n} = (σ_g^n)†`.
    #[inline]
    pub fn power(&self, generator: u8, n: i32) -> U2 {
        let m = n.unsigned_abs() as usize;
        let g = usize::from(generator - 1);
        let p = if m <= TABLE_MAX {
            self.powers[g][m]
        } else {
            [self.s1, self.s2][g].pow(m as i32)
        };
        if n < 0 {
            p.adjoint()
        } else {
            p
        }
    }

    /// Generators replaced by their adjoints.
    pub fn adjoint(&self) -> Self {
        Self::new(self.s1.adjoint(), self.s2.adjoint())
    }

    pub fn get(&self, generator: u8) -> U2 {
        if generator == 1 {
            self.s1
        } else {
            self.s2
        }
    }
}

/// `σ̃_i = X σ_i X` with `σ_1 = R`, `σ_2 = F R F` in the fusion basis.
pub fn rotated_generators() -> GeneratorSet {
    let fd = fibonacci_fusion_rep();
    let x = pauli_x();
    let rot = |m: &crate::matrix::ComplexMatrix| {
        U2::from_matrix(&x.matmul(m).matmul(&x)).expect("2x2 generator")
    };
    GeneratorSet::new(rot(&fd.sigma1), rot(&fd.sigma2))
}

/// The same generators built as `α + β e_i` from the `(2,2)` tableau
/// representation at `x = φ` with unimodular Jones parameters.
pub fn rotated_generators_from_tableau() -> Result<GeneratorSet> {
    let phi = golden_ratio();
    let rep = build_tableau_rep(4, Shape::new(2, 2)?, phi)?;
    let (a, b) = unitary_jones_params(phi)?;
    let braid = jones_braid(&rep, a, b)?;
    let s1 = U2::from_matrix(&braid.generator(1).to_dense())?;
    let s2 = U2::from_matrix(&braid.generator(2).to_dense())?;
    Ok(GeneratorSet::new(s1, s2))
}
