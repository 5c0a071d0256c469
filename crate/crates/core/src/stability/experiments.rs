//! Monte Carlo experiments: band-matrix norms and gap survival.

use faer::Mat;
use rayon::prelude::*;
use serde::Serialize;

use super::{gershgorin_cluster_certificate, sample_noise, spectral_norm, symmetric_eigenvalues, with_diagonal};
use super::{EntryDistribution, NoiseKind, NoiseSpec};
use crate::error::{Error, Result};
use crate::spinchain::{expected_gap, hamiltonian_diagonal, ChainParams, LEVEL_TOL, MAX_DIAGONAL_BLOCKS};

/// Above this dimension norms come from power iteration instead of a dense eigensolve.
pub const DENSE_NORM_LIMIT: usize = 4096;
const POWER_REL_TOL: f64 = 1e-6;
const POWER_MAX_ITERS: usize = 100_000;

/// `⌊n^γ⌋`.
pub fn bandwidth_for(n: usize, gamma: f64) -> usize {
    (n as f64).powf(gamma).floor() as usize
}

/// `‖M‖` by power iteration on `M²` from a fixed start vector.
fn power_norm(m: &Mat<f64>) -> f64 {
    let n = m.nrows();
    let mut x: Vec<f64> = (0..n).map(|i| 1.0 + (i as f64 * 0.618_033_988_75).fract()).collect();
    let apply = |v: &[f64]| -> Vec<f64> {
        (0..n).map(|i| (0..n).map(|j| m[(i, j)] * v[j]).sum()).collect()
    };
    let normalize = |v: &mut Vec<f64>| {
        let s = v.iter().map(|a| a * a).sum::<f64>().sqrt();
        if s > 0.0 {
            v.iter_mut().for_each(|a| *a /= s);
        }
        s
    };
    normalize(&mut x);
    let mut prev = 0.0;
    for _ in 0..POWER_MAX_ITERS {
        let mut y = apply(&apply(&x));
        let est = normalize(&mut y).sqrt();
        x = y;
        if est == 0.0 || (est - prev).abs() <= POWER_REL_TOL * est {
            return est;
        }
        prev = est;
    }
    prev
}

fn norm_of(m: &Mat<f64>) -> Result<f64> {
    if m.nrows() > DENSE_NORM_LIMIT {
        Ok(power_norm(m))
    } else {
        spectral_norm(m)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BandNormReport {
    pub n: usize,
    pub gamma: f64,
    pub bandwidth: usize,
    pub variance: f64,
    pub distribution: EntryDistribution,
    pub trials: usize,
    pub seed: u64,
    /// `‖M‖ / √b` per trial.
    pub ratios: Vec<f64>,
    pub mean: Option<f64>,
    pub max: Option<f64>,
    pub min: Option<f64>,
    /// `2v`, the stated limit when `v` is the entry variance.
    pub limit_two_v: f64,
    /// `2√((2b+1)v/b)`, the semicircle edge for `2b+1` entries of variance `v` per row.
    pub semicircle_edge: f64,
    /// `b / (ln n)^3`; values near or below 1 mean the asymptotic regime is not reached.
    pub log_cube_ratio: f64,
    pub warning: Option<String>,
}

pub fn band_norm_experiment(
    n: usize,
    gamma: f64,
    variance: f64,
    trials: usize,
    seed: u64,
    distribution: EntryDistribution,
) -> Result<BandNormReport> {
    if !(gamma > 0.0 && gamma < 1.0) {
        return Err(Error::InvalidArgument(format!("bandwidth exponent must lie in (0, 1), got {gamma}")));
    }
    let bandwidth = bandwidth_for(n, gamma);
    let spec = NoiseSpec { kind: NoiseKind::Band { bandwidth }, variance, distribution, seed };
    if bandwidth == 0 || 2 * bandwidth >= n {
        return Err(Error::InvalidBandwidth { n, bandwidth });
    }
    if !(variance >= 0.0 && variance.is_finite()) {
        return Err(Error::InvalidArgument(format!("variance must be finite and >= 0, got {variance}")));
    }
    let sqrt_b = (bandwidth as f64).sqrt();
    let ratios = (0..trials as u64)
        .into_par_iter()
        .map(|t| Ok(norm_of(&sample_noise(n, &spec, t)?)? / sqrt_b))
        .collect::<Result<Vec<f64>>>()?;
    let mean = (!ratios.is_empty()).then(|| ratios.iter().sum::<f64>() / ratios.len() as f64);
    let max = ratios.iter().copied().reduce(f64::max);
    let min = ratios.iter().copied().reduce(f64::min);
    let log_cube_ratio = bandwidth as f64 / (n as f64).ln().powi(3);
    let warning = (log_cube_ratio < 1.0).then(|| {
        format!("bandwidth {bandwidth} is small against (ln n)^3 = {:.1}", (n as f64).ln().powi(3))
    });
    Ok(BandNormReport {
        n,
        gamma,
        bandwidth,
        variance,
        distribution,
        trials,
        seed,
        ratios,
        mean,
        max,
        min,
        limit_two_v: 2.0 * variance,
        semicircle_edge: 2.0 * ((2 * bandwidth + 1) as f64 * variance / bandwidth as f64).sqrt(),
        log_cube_ratio,
        warning,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PerturbationReport {
    pub n_blocks: usize,
    pub dim: usize,
    pub trials: usize,
    /// Gap of the unperturbed chain.
    pub gap: f64,
    pub top_degeneracy: usize,
    /// Trials whose top cluster stays separated by at least `gap - 2‖M‖ > 0`.
    pub gap_survival_fraction: Option<f64>,
    /// Trials where the top discs are disjoint from the rest.
    pub gershgorin_certified_fraction: Option<f64>,
    /// Largest `|λ̂_max - λ_max|` over trials.
    pub max_top_shift: Option<f64>,
    /// Largest `‖M‖` over trials, from the dense eigensolve.
    pub weyl_bound: Option<f64>,
    /// Every trial moved every eigenvalue by at most its `‖M‖`.
    pub weyl_consistent: bool,
    pub noise_norms: Vec<f64>,
}

struct Trial {
    survived: bool,
    certified: bool,
    top_shift: f64,
    norm: f64,
    weyl_ok: bool,
}

/// Adds noise to the chain Hamiltonian and tracks the top cluster.
pub fn gap_survival_mc(
    n_blocks: usize,
    p: &ChainParams,
    spec: &NoiseSpec,
    trials: usize,
) -> Result<PerturbationReport> {
    if n_blocks > MAX_DIAGONAL_BLOCKS {
        return Err(Error::Resource(format!(
            "{n_blocks} blocks exceed the dense limit of {MAX_DIAGONAL_BLOCKS}"
        )));
    }
    let gap = expected_gap(n_blocks, p)?;
    let h = hamiltonian_diagonal(n_blocks, p)?;
    let dim = h.len();
    let mut h_sorted = h.clone();
    h_sorted.sort_by(f64::total_cmp);
    let h_top = h_sorted[dim - 1];
    let k = h.iter().filter(|&&e| (h_top - e).abs() <= LEVEL_TOL).count();
    if trials == 0 {
        sample_noise(dim, spec, 0)?;
    }

    let run = |t: u64| -> Result<Trial> {
        let m = sample_noise(dim, spec, t)?;
        let norm = spectral_norm(&m)?;
        let ev = symmetric_eigenvalues(&with_diagonal(&h, &m)?)?;
        let weyl_slack = 1e-9 * (1.0 + h_top.abs());
        let weyl_ok = ev.iter().zip(&h_sorted).all(|(a, b)| (a - b).abs() <= norm + weyl_slack);
        let separation = ev[dim - k] - if dim > k { ev[dim - k - 1] } else { f64::NEG_INFINITY };
        let margin = gap - 2.0 * norm;
        Ok(Trial {
            survived: margin > 0.0 && separation >= margin,
            certified: gershgorin_cluster_certificate(&h, &m, k)?,
            top_shift: (ev[dim - 1] - h_top).abs(),
            norm,
            weyl_ok,
        })
    };
    let results = (0..trials as u64).into_par_iter().map(run).collect::<Result<Vec<_>>>()?;

    let frac = |f: fn(&Trial) -> bool| {
        (trials > 0).then(|| results.iter().filter(|r| f(r)).count() as f64 / trials as f64)
    };
    Ok(PerturbationReport {
        n_blocks,
        dim,
        trials,
        gap,
        top_degeneracy: k,
        gap_survival_fraction: frac(|r| r.survived),
        gershgorin_certified_fraction: frac(|r| r.certified),
        max_top_shift: results.iter().map(|r| r.top_shift).reduce(f64::max),
        weyl_bound: results.iter().map(|r| r.norm).reduce(f64::max),
        weyl_consistent: results.iter().all(|r| r.weyl_ok),
        noise_norms: results.iter().map(|r| r.norm).collect(),
    })
}
