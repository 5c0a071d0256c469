//! Noise robustness of the chain's top level.
//!
//! Noise matrices are real symmetric with zero diagonal. Every Monte Carlo
//! trial draws from its own ChaCha stream selected by `(seed, trial)`, so
//! results do not depend on how trials are scheduled across threads.

mod bounds;
mod experiments;
mod noise;

use faer::{Mat, Side};

use crate::error::{Error, Result};

pub use bounds::{
    gershgorin_certificate, gershgorin_cluster_certificate, gershgorin_discs,
    verify_disc_containment, weyl_check, ContainmentReport, Disc, GershgorinReport, WeylReport,
};
pub use experiments::{
    band_norm_experiment, bandwidth_for, gap_survival_mc, BandNormReport, PerturbationReport,
    DENSE_NORM_LIMIT,
};
pub use noise::{
    sample_band_matrix, sample_noise, trial_rng, EntryDistribution, NoiseKind, NoiseSpec,
};

/// Largest dimension for which the dense eigensolve is used.
pub const MAX_DENSE_DIM: usize = 4096;

/// Eigenvalues of a symmetric matrix in ascending order.
pub fn symmetric_eigenvalues(m: &Mat<f64>) -> Result<Vec<f64>> {
    if m.nrows() != m.ncols() {
        return Err(Error::DimensionMismatch { expected: m.nrows(), found: m.ncols() });
    }
    if m.nrows() > MAX_DENSE_DIM {
        return Err(Error::Resource(format!(
            "dense eigensolve of dimension {} exceeds {MAX_DENSE_DIM}",
            m.nrows()
        )));
    }
    if m.nrows() == 0 {
        return Ok(Vec::new());
    }
    let mut ev = m
        .self_adjoint_eigenvalues(Side::Lower)
        .map_err(|e| Error::InvalidArgument(format!("eigensolver did not converge: {e:?}")))?;
    ev.sort_by(f64::total_cmp);
    Ok(ev)
}

/// Spectral norm `max |λ|` of a symmetric matrix by dense eigensolve.
pub fn spectral_norm(m: &Mat<f64>) -> Result<f64> {
    let ev = symmetric_eigenvalues(m)?;
    Ok(ev.first().map_or(0.0, |lo| lo.abs().max(ev[ev.len() - 1].abs())))
}

/// `max |m_ij - m_ji|`.
pub fn asymmetry(m: &Mat<f64>) -> f64 {
    let n = m.nrows();
    let mut worst = 0f64;
    for j in 0..n {
        for i in j + 1..n {
            worst = worst.max((m[(i, j)] - m[(j, i)]).abs());
        }
    }
    worst
}

pub(crate) fn require_symmetric(m: &Mat<f64>) -> Result<()> {
    if m.nrows() != m.ncols() {
        return Err(Error::DimensionMismatch { expected: m.nrows(), found: m.ncols() });
    }
    let a = asymmetry(m);
    if a > 1e-12 {
        return Err(Error::NotSymmetric(a));
    }
    Ok(())
}

/// `diag(h) + m`.
pub fn with_diagonal(h_diag: &[f64], m: &Mat<f64>) -> Result<Mat<f64>> {
    if h_diag.len() != m.nrows() {
        return Err(Error::DimensionMismatch { expected: h_diag.len(), found: m.nrows() });
    }
    let mut out = m.clone();
    for (i, &h) in h_diag.iter().enumerate() {
        out[(i, i)] += h;
    }
    Ok(out)
}
