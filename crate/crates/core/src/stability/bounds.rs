//! Gershgorin and Weyl eigenvalue localisation for `H + M`, `H` diagonal.

use faer::Mat;
use serde::Serialize;

use super::{require_symmetric, symmetric_eigenvalues, with_diagonal};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Disc {
    pub center: f64,
    pub radius: f64,
}

impl Disc {
    pub fn lo(&self) -> f64 {
        self.center - self.radius
    }

    pub fn hi(&self) -> f64 {
        self.center + self.radius
    }

    pub fn contains(&self, v: f64, slack: f64) -> bool {
        v >= self.lo() - slack && v <= self.hi() + slack
    }
}

/// Disc `i` of `diag(h) + M`: centre `h_i + m_ii`, radius `Σ_{j≠i} |m_ij|`.
pub fn gershgorin_discs(h_diag: &[f64], m: &Mat<f64>) -> Result<Vec<Disc>> {
    require_symmetric(m)?;
    if h_diag.len() != m.nrows() {
        return Err(Error::DimensionMismatch { expected: h_diag.len(), found: m.nrows() });
    }
    Ok((0..m.nrows())
        .map(|i| {
            let radius = (0..m.ncols()).filter(|&j| j != i).map(|j| m[(i, j)].abs()).sum();
            Disc { center: h_diag[i] + m[(i, i)], radius }
        })
        .collect())
}

/// Indices sorted by descending `h`, ties by index.
fn descending_order(h_diag: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..h_diag.len()).collect();
    order.sort_by(|&a, &b| h_diag[b].total_cmp(&h_diag[a]).then(a.cmp(&b)));
    order
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GershgorinReport {
    /// `R_1 + R_i < h_1 - h_i` for every `i` after the top row.
    pub certified: bool,
    /// Original indices of rows breaking the condition.
    pub violated_rows: Vec<usize>,
    /// Original index of the top diagonal entry.
    pub top_row: usize,
    pub top_disc: Disc,
    /// Largest eigenvalue of `H + M`, computed only when certified.
    pub top_eigenvalue: Option<f64>,
    pub top_in_disc: Option<bool>,
}

/// Isolation of the top diagonal entry of `H` under the perturbation `M`.
pub fn gershgorin_certificate(h_diag: &[f64], m: &Mat<f64>) -> Result<GershgorinReport> {
    let discs = gershgorin_discs(h_diag, m)?;
    if discs.is_empty() {
        return Err(Error::InvalidArgument("empty matrix".into()));
    }
    let order = descending_order(h_diag);
    let top = order[0];
    let (h1, r1) = (h_diag[top], discs[top].radius);
    let violated_rows: Vec<usize> = order[1..]
        .iter()
        .copied()
        .filter(|&i| !(r1 + discs[i].radius < h1 - h_diag[i]))
        .collect();
    let certified = violated_rows.is_empty();
    let top_disc = Disc { center: h1, radius: r1 };
    let (top_eigenvalue, top_in_disc) = if certified {
        let ev = symmetric_eigenvalues(&with_diagonal(h_diag, m)?)?;
        let top_ev = ev[ev.len() - 1];
        let slack = 1e-12 * (h1.abs() + r1).max(1.0);
        (Some(top_ev), Some(top_disc.contains(top_ev, slack)))
    } else {
        (None, None)
    };
    Ok(GershgorinReport { certified, violated_rows, top_row: top, top_disc, top_eigenvalue, top_in_disc })
}

/// `true` when the union of the `k` top discs (by diagonal) lies strictly
/// above every other disc, which pins exactly `k` eigenvalues inside it.
pub fn gershgorin_cluster_certificate(h_diag: &[f64], m: &Mat<f64>, k: usize) -> Result<bool> {
    let discs = gershgorin_discs(h_diag, m)?;
    if k == 0 || k > discs.len() {
        return Err(Error::InvalidArgument(format!("cluster size {k} out of range")));
    }
    let order = descending_order(h_diag);
    let cluster_lo = order[..k].iter().map(|&i| discs[i].lo()).fold(f64::INFINITY, f64::min);
    let rest_hi = order[k..].iter().map(|&i| discs[i].hi()).fold(f64::NEG_INFINITY, f64::max);
    Ok(rest_hi < cluster_lo)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ContainmentReport {
    pub eigenvalues: usize,
    pub all_contained: bool,
    /// Largest distance from an eigenvalue to the nearest disc (0 if inside).
    pub max_excess: f64,
}

/// Checks every eigenvalue of `diag(h) + M` against the union of discs.
pub fn verify_disc_containment(h_diag: &[f64], m: &Mat<f64>) -> Result<ContainmentReport> {
    let discs = gershgorin_discs(h_diag, m)?;
    let ev = symmetric_eigenvalues(&with_diagonal(h_diag, m)?)?;
    let scale = discs.iter().map(|d| d.center.abs() + d.radius).fold(1.0, f64::max);
    let slack = 1e-12 * scale;
    let mut max_excess = 0f64;
    for &v in &ev {
        let excess = discs
            .iter()
            .map(|d| (d.lo() - v).max(v - d.hi()).max(0.0))
            .fold(f64::INFINITY, f64::min);
        max_excess = max_excess.max(excess);
    }
    Ok(ContainmentReport { eigenvalues: ev.len(), all_contained: max_excess <= slack, max_excess })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeylReport {
    /// Largest eigenvalue of `M`.
    pub mu_max: f64,
    /// Smallest eigenvalue of `M`.
    pub mu_min: f64,
    /// Extremes of `λ̂_i - λ_i` with both spectra sorted the same way.
    pub max_shift: f64,
    pub min_shift: f64,
    /// Largest amount by which a shift leaves `[mu_min, mu_max]`.
    pub max_violation: f64,
}

impl WeylReport {
    pub fn holds(&self, tol: f64) -> bool {
        self.max_violation <= tol
    }

    pub fn norm(&self) -> f64 {
        self.mu_max.abs().max(self.mu_min.abs())
    }
}

/// Shifts of the eigenvalues of `H = diag(h_eigs)` under `H + M` against
/// the extreme eigenvalues of `M`.
pub fn weyl_check(h_eigs: &[f64], m: &Mat<f64>) -> Result<WeylReport> {
    if h_eigs.len() != m.nrows() {
        return Err(Error::DimensionMismatch { expected: h_eigs.len(), found: m.nrows() });
    }
    require_symmetric(m)?;
    if h_eigs.is_empty() {
        return Err(Error::InvalidArgument("empty matrix".into()));
    }
    let mu = symmetric_eigenvalues(m)?;
    let (mu_min, mu_max) = (mu[0], mu[mu.len() - 1]);
    let perturbed = symmetric_eigenvalues(&with_diagonal(h_eigs, m)?)?;
    let mut h = h_eigs.to_vec();
    h.sort_by(f64::total_cmp);
    let mut max_shift = f64::NEG_INFINITY;
    let mut min_shift = f64::INFINITY;
    let mut max_violation = 0f64;
    for (new, old) in perturbed.iter().zip(&h) {
        let s = new - old;
        max_shift = max_shift.max(s);
        min_shift = min_shift.min(s);
        max_violation = max_violation.max(s - mu_max).max(mu_min - s);
    }
    Ok(WeylReport { mu_max, mu_min, max_shift, min_shift, max_violation })
}
