use faer::Mat;
use rand::distr::{Distribution, Uniform};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Normal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EntryDistribution {
    /// Uniform on `[-√(3v), √(3v)]`.
    UniformSymmetric,
    Gaussian,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum NoiseKind {
    /// Each off-diagonal pair is nonzero independently, with this many
    /// nonzeros per row on average.
    SparseBounded { nonzeros_per_row: f64 },
    /// Periodic band: `m_ij = 0` for `b < |i-j| < n-b`.
    Band { bandwidth: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NoiseSpec {
    pub kind: NoiseKind,
    /// Variance of each nonzero entry.
    pub variance: f64,
    pub distribution: EntryDistribution,
    pub seed: u64,
}

/// Generator for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

enum Sampler {
    Zero,
    Uniform(Uniform<f64>),
    Normal(Normal<f64>),
}

impl Sampler {
    fn new(spec: &NoiseSpec) -> Result<Self> {
        let v = spec.variance;
        if !(v >= 0.0) || !v.is_finite() {
            return Err(Error::InvalidArgument(format!("variance must be finite and >= 0, got {v}")));
        }
        if v == 0.0 {
            return Ok(Sampler::Zero);
        }
        Ok(match spec.distribution {
            EntryDistribution::UniformSymmetric => {
                let a = (3.0 * v).sqrt();
                Sampler::Uniform(
                    Uniform::new_inclusive(-a, a).map_err(|e| Error::InvalidArgument(e.to_string()))?,
                )
            }
            EntryDistribution::Gaussian => Sampler::Normal(
                Normal::new(0.0, v.sqrt()).map_err(|e| Error::InvalidArgument(e.to_string()))?,
            ),
        })
    }

    fn draw<R: Rng>(&self, rng: &mut R) -> f64 {
        match self {
            Sampler::Zero => 0.0,
            Sampler::Uniform(u) => u.sample(rng),
            Sampler::Normal(n) => n.sample(rng),
        }
    }
}

fn check_bandwidth(n: usize, bandwidth: usize) -> Result<()> {
    if bandwidth == 0 || 2 * bandwidth >= n {
        return Err(Error::InvalidBandwidth { n, bandwidth });
    }
    Ok(())
}

fn band<R: Rng>(n: usize, b: usize, sampler: &Sampler, rng: &mut R) -> Mat<f64> {
    let mut m = Mat::zeros(n, n);
    for i in 0..n {
        for j in 0..i {
            let d = i - j;
            if d <= b || d >= n - b {
                let v = sampler.draw(rng);
                m[(i, j)] = v;
                m[(j, i)] = v;
            }
        }
    }
    m
}

fn sparse<R: Rng>(n: usize, per_row: f64, sampler: &Sampler, rng: &mut R) -> Result<Mat<f64>> {
    if !(per_row >= 0.0) || n > 1 && per_row > (n - 1) as f64 {
        return Err(Error::InvalidArgument(format!(
            "nonzeros per row must lie in [0, {}], got {per_row}",
            n.saturating_sub(1)
        )));
    }
    let p = if n > 1 { per_row / (n - 1) as f64 } else { 0.0 };
    let mut m = Mat::zeros(n, n);
    for i in 0..n {
        for j in 0..i {
            if rng.random::<f64>() < p {
                let v = sampler.draw(rng);
                m[(i, j)] = v;
                m[(j, i)] = v;
            }
        }
    }
    Ok(m)
}

/// Noise matrix of dimension `n` for the given trial.
pub fn sample_noise(n: usize, spec: &NoiseSpec, trial: u64) -> Result<Mat<f64>> {
    let sampler = Sampler::new(spec)?;
    let mut rng = trial_rng(spec.seed, trial);
    match spec.kind {
        NoiseKind::Band { bandwidth } => {
            check_bandwidth(n, bandwidth)?;
            Ok(band(n, bandwidth, &sampler, &mut rng))
        }
        NoiseKind::SparseBounded { nonzeros_per_row } => sparse(n, nonzeros_per_row, &sampler, &mut rng),
    }
}

/// Periodic band matrix with bandwidth `bandwidth`, drawn from trial 0 of
/// `spec`; the kind stored in `spec` is ignored.
pub fn sample_band_matrix(n: usize, bandwidth: usize, spec: &NoiseSpec) -> Result<Mat<f64>> {
    let spec = NoiseSpec { kind: NoiseKind::Band { bandwidth }, ..*spec };
    sample_noise(n, &spec, 0)
}
