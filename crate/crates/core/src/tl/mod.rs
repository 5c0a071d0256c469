//! Temperley-Lieb algebras and their Jones braid-group representations.
//!
//! A [`TLRep`] carries generators `e_1..e_{N-1}` on a labelled basis.
//! [`verify_tl_relations`] measures how far they are from
//! `e_i^2 = x e_i`, `e_i e_{i±1} e_i = e_i` and far commutation;
//! [`jones_braid`] lifts a representation to braid generators
//! `σ_i = α + β e_i`.

mod fib;
mod fusion;
mod pauli;
mod tableau;

use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::combinatorics::{FibBlockString, SpinConfig, YoungTableauTwoRow};
use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, Operator};

pub use fib::{fib_sequence_rep, fib_state_index};
pub use fusion::{
    check_x_conjugation_equivalence, fibonacci_fusion_rep, pauli_x, x_conjugation_deviation_at,
    EquivalenceReport, FusionData,
};
pub use pauli::{pauli_string_tl4, spin_state, PauliTl4, UDUD, UUDD};
pub use tableau::{build_tableau_rep, tableau_e2_closed_form};

/// Default absolute tolerance for algebraic checks.
pub const DEFAULT_TOL: f64 = 1e-10;

/// The golden ratio `(1 + √5) / 2`.
pub fn golden_ratio() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

/// Quantum integer `[d]` at loop parameter `x = q + 1/q`.
///
/// Evaluated by `[d+1] = x[d] - [d-1]` from `[0] = 0`, `[1] = 1`;
/// negative arguments use `[-d] = -[d]`.
pub fn q_number(d: i32, x: f64) -> f64 {
    if d < 0 {
        return -q_number(-d, x);
    }
    let (mut prev, mut cur) = (0.0, 1.0);
    if d == 0 {
        return 0.0;
    }
    for _ in 1..d {
        let next = x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// A quantum integer together with the arguments that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QValue {
    pub d: i32,
    pub x: f64,
    pub value: f64,
}

impl QValue {
    pub fn new(d: i32, x: f64) -> Self {
        Self { d, x, value: q_number(d, x) }
    }
}

/// Label of the two-dimensional fusion space of three τ anyons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FusionLabel {
    Vacuum,
    Tau,
}

#[derive(Debug, Clone, PartialEq)]
pub enum BasisLabel {
    Tableau(YoungTableauTwoRow),
    Fusion(FusionLabel),
    Spins(SpinConfig),
    FibString(FibBlockString),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Tableau(t) => write!(f, "{t}"),
            BasisLabel::Fusion(FusionLabel::Vacuum) => f.write_str("1"),
            BasisLabel::Fusion(FusionLabel::Tau) => f.write_str("tau"),
            BasisLabel::Spins(c) => {
                for s in c.steps() {
                    write!(f, "{}", s.as_char())?;
                }
                Ok(())
            }
            BasisLabel::FibString(s) => write!(f, "{s}"),
        }
    }
}

/// Generators `e_1..e_{N-1}` of `TL_N(x)` acting on a labelled basis.
#[derive(Debug, Clone, PartialEq)]
pub struct TLRep {
    strands: usize,
    x: f64,
    generators: Vec<Operator>,
    basis: Vec<BasisLabel>,
}

impl TLRep {
    /// Checks that there are `strands - 1` square generators of the basis dimension.
    pub fn new(
        strands: usize,
        x: f64,
        generators: Vec<Operator>,
        basis: Vec<BasisLabel>,
    ) -> Result<Self> {
        let expected = strands.saturating_sub(1);
        if generators.len() != expected {
            return Err(Error::DimensionMismatch { expected, found: generators.len() });
        }
        for g in &generators {
            if g.dim() != basis.len() {
                return Err(Error::DimensionMismatch { expected: basis.len(), found: g.dim() });
            }
        }
        Ok(Self { strands, x, generators, basis })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn generators(&self) -> &[Operator] {
        &self.generators
    }

    /// Generator `e_i`, one based.
    pub fn generator(&self, i: usize) -> &Operator {
        &self.generators[i - 1]
    }

    pub fn basis(&self) -> &[BasisLabel] {
        &self.basis
    }

    /// Copy with `e_i` (one based) replaced, e.g. for negative controls.
    pub fn with_generator(&self, i: usize, op: Operator) -> Result<Self> {
        let mut generators = self.generators.clone();
        if i == 0 || i > generators.len() {
            return Err(Error::InvalidArgument(format!("generator index {i} out of range")));
        }
        generators[i - 1] = op;
        Self::new(self.strands, self.x, generators, self.basis.clone())
    }
}

/// Maximum entrywise deviation of each defining relation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RelationReport {
    /// `max_i |e_i^2 - x e_i|`
    pub idempotent: f64,
    /// `max |e_i e_j e_i - e_i|` over `|i - j| = 1`
    pub sandwich: f64,
    /// `max |e_i e_j - e_j e_i|` over `|i - j| > 1`
    pub far_commutation: f64,
    pub tol: f64,
    pub passed: bool,
}

impl RelationReport {
    pub fn max_deviation(&self) -> f64 {
        self.idempotent.max(self.sandwich).max(self.far_commutation)
    }
}

pub fn verify_tl_relations(rep: &TLRep, tol: f64) -> RelationReport {
    let x = Complex64::new(rep.x, 0.0);
    let g = &rep.generators;
    let mut idempotent = 0f64;
    let mut sandwich = 0f64;
    let mut far = 0f64;
    for (i, e) in g.iter().enumerate() {
        idempotent = idempotent.max(e.matmul(e).max_abs_diff(&e.scale(x)));
        for (j, f) in g.iter().enumerate() {
            if i.abs_diff(j) == 1 {
                sandwich = sandwich.max(e.matmul(f).matmul(e).max_abs_diff(e));
            } else if j > i + 1 {
                far = far.max(e.matmul(f).max_abs_diff(&f.matmul(e)));
            }
        }
    }
    let passed = idempotent <= tol && sandwich <= tol && far <= tol;
    RelationReport { idempotent, sandwich, far_commutation: far, tol, passed }
}

/// Braid generators `σ_i = α·1 + β·e_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct BraidRep {
    strands: usize,
    x: f64,
    alpha: Complex64,
    beta: Complex64,
    generators: Vec<Operator>,
}

impl BraidRep {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    pub fn generators(&self) -> &[Operator] {
        &self.generators
    }

    /// `σ_i`, one based.
    pub fn generator(&self, i: usize) -> &Operator {
        &self.generators[i - 1]
    }

    pub fn check_relations(&self, tol: f64) -> BraidReport {
        let g = &self.generators;
        let mut braid = 0f64;
        let mut far = 0f64;
        let mut unitarity = 0f64;
        for (i, s) in g.iter().enumerate() {
            let id = s.identity_like();
            unitarity = unitarity.max(s.adjoint().matmul(s).max_abs_diff(&id));
            if let Some(t) = g.get(i + 1) {
                let lhs = s.matmul(t).matmul(s);
                let rhs = t.matmul(s).matmul(t);
                braid = braid.max(lhs.max_abs_diff(&rhs));
            }
            for t in g.iter().skip(i + 2) {
                far = far.max(s.matmul(t).max_abs_diff(&t.matmul(s)));
            }
        }
        BraidReport {
            braid,
            far_commutation: far,
            unitarity,
            passed: braid <= tol && far <= tol,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BraidReport {
    /// `max |σ_i σ_{i+1} σ_i - σ_{i+1} σ_i σ_{i+1}|`
    pub braid: f64,
    pub far_commutation: f64,
    /// `max |σ_i† σ_i - 1|`; informative only, non-unitary parameters are legal.
    pub unitarity: f64,
    pub passed: bool,
}

/// Tolerance on `α² + β² + xαβ` accepted by [`jones_braid`].
pub const JONES_TOL: f64 = 1e-10;

pub fn jones_braid(rep: &TLRep, alpha: Complex64, beta: Complex64) -> Result<BraidRep> {
    let x = rep.x;
    let residual = (alpha * alpha + beta * beta + x * alpha * beta).norm();
    if !(residual <= JONES_TOL) {
        return Err(Error::JonesConstraint { residual });
    }
    if alpha.norm() <= JONES_TOL || beta.norm() <= JONES_TOL {
        return Err(Error::InvalidArgument(
            "Jones parameters must both be nonzero".into(),
        ));
    }
    let generators = rep
        .generators
        .iter()
        .map(|e| e.identity_like().lin_comb(alpha, e, beta))
        .collect();
    Ok(BraidRep { strands: rep.strands, x, alpha, beta, generators })
}

/// Unimodular `(α, β) = (A, A⁻¹)` with `x = -A² - A⁻²`.
///
/// The branch `A = -exp(i·arccos(-x/2)/2)` is continuous on `|x| ≤ 2` and at
/// `x = φ` gives `α = e^{-3πi/5}`, under which the fusion-basis `σ_1` equals
/// the R-matrix exactly.
pub fn unitary_jones_params(x: f64) -> Result<(Complex64, Complex64)> {
    if !x.is_finite() || x.abs() > 2.0 {
        return Err(Error::NoUnimodularSolution(x));
    }
    let theta = (-x / 2.0).acos() / 2.0;
    let a = -Complex64::from_polar(1.0, theta);
    Ok((a, a.conj()))
}

/// Dense `σ_i = α + β e_i` for a single small matrix.
pub fn jones_matrix(e: &ComplexMatrix, alpha: Complex64, beta: Complex64) -> ComplexMatrix {
    ComplexMatrix::identity(e.rows()).scale(alpha).add(&e.scale(beta))
}

/// One root `β` of `1 + β² + xβ = 0`, i.e. Jones parameters with `α = 1`.
pub fn jones_beta_for_unit_alpha(x: f64) -> Complex64 {
    let disc = Complex64::new(x * x - 4.0, 0.0).sqrt();
    (disc - x) / 2.0
}
