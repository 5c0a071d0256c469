//! Diagonal Fredkin-move Hamiltonian on `4N` sites.
//!
//! Each block of four sites carries
//! `α₁ P_u(1) [2≠3] + α₂ P_u(2) [3≠4] + β₁ [1≠2] P_d(3) + β₂ [2≠3] P_d(4)`
//! and each pair of neighbouring blocks adds `λ` when the window made of the
//! last two sites of one block and the first two of the next reads `udud`.
//! Boundaries are open.
//!
//! Energies are assembled from integer [`TermCounts`] in a fixed order, so
//! configurations with equal counts get bit-identical energies.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::SpinConfig;
use crate::error::{Error, Result};

/// Largest block count accepted by [`full_spectrum`] (`2^16` configurations).
pub const MAX_SPECTRUM_BLOCKS: usize = 4;
/// Largest block count accepted by [`hamiltonian_diagonal`] (`2^12` entries).
pub const MAX_DIAGONAL_BLOCKS: usize = 3;
/// Energies closer than this fall into one level.
pub const LEVEL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChainParams {
    pub alpha1: f64,
    pub alpha2: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub lambda: f64,
}

impl ChainParams {
    pub fn new(alpha1: f64, alpha2: f64, beta1: f64, beta2: f64, lambda: f64) -> Self {
        Self { alpha1, alpha2, beta1, beta2, lambda }
    }

    pub fn as_array(&self) -> [f64; 5] {
        [self.alpha1, self.alpha2, self.beta1, self.beta2, self.lambda]
    }

    /// Energy of the two Dyck blocks `uudd`, `udud`.
    pub fn dyck_block_energy(&self) -> f64 {
        self.alpha1 + self.beta2
    }
}

impl FromStr for ChainParams {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let v = s
            .split(',')
            .map(|t| t.trim().parse::<f64>().map_err(|_| Error::Parse(format!("bad number {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        let [a1, a2, b1, b2, l] = v[..] else {
            return Err(Error::Parse(format!("expected 5 comma-separated values, got {}", v.len())));
        };
        if v.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidParams("parameters must be finite".into()));
        }
        Ok(ChainParams::new(a1, a2, b1, b2, l))
    }
}

impl fmt::Display for ChainParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{},{}", self.alpha1, self.alpha2, self.beta1, self.beta2, self.lambda)
    }
}

/// Each inequality that makes the Dyck blocks the isolated top level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ValidityReport {
    pub alpha1_gt_beta1: bool,
    pub beta1_positive: bool,
    pub beta2_gt_alpha2: bool,
    pub alpha2_positive: bool,
    pub lambda_negative: bool,
    pub valid: bool,
}

impl ValidityReport {
    pub fn violations(&self) -> Vec<&'static str> {
        [
            (self.alpha1_gt_beta1, "alpha1 > beta1"),
            (self.beta1_positive, "beta1 > 0"),
            (self.beta2_gt_alpha2, "beta2 > alpha2"),
            (self.alpha2_positive, "alpha2 > 0"),
            (self.lambda_negative, "lambda < 0"),
        ]
        .into_iter()
        .filter_map(|(ok, name)| (!ok).then_some(name))
        .collect()
    }
}

pub fn validate_params(p: &ChainParams) -> ValidityReport {
    let alpha1_gt_beta1 = p.alpha1 > p.beta1;
    let beta1_positive = p.beta1 > 0.0;
    let beta2_gt_alpha2 = p.beta2 > p.alpha2;
    let alpha2_positive = p.alpha2 > 0.0;
    let lambda_negative = p.lambda < 0.0;
    ValidityReport {
        alpha1_gt_beta1,
        beta1_positive,
        beta2_gt_alpha2,
        alpha2_positive,
        lambda_negative,
        valid: alpha1_gt_beta1 && beta1_positive && beta2_gt_alpha2 && alpha2_positive && lambda_negative,
    }
}

fn require_valid(p: &ChainParams) -> Result<()> {
    let report = validate_params(p);
    if report.valid {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!("violated: {}", report.violations().join(", "))))
    }
}

/// Multiplicity of each coupling in the energy of a configuration.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TermCounts {
    pub alpha1: u32,
    pub alpha2: u32,
    pub beta1: u32,
    pub beta2: u32,
    pub lambda: u32,
}

impl TermCounts {
    pub fn energy(&self, p: &ChainParams) -> f64 {
        f64::from(self.alpha1) * p.alpha1
            + f64::from(self.alpha2) * p.alpha2
            + f64::from(self.beta1) * p.beta1
            + f64::from(self.beta2) * p.beta2
            + f64::from(self.lambda) * p.lambda
    }

    fn add_block(&mut self, b: [bool; 4]) {
        let [s1, s2, s3, s4] = b;
        self.alpha1 += u32::from(s1 && s2 != s3);
        self.alpha2 += u32::from(s2 && s3 != s4);
        self.beta1 += u32::from(s1 != s2 && !s3);
        self.beta2 += u32::from(s2 != s3 && !s4);
    }
}

/// `true` is an up step.
pub type Block = [bool; 4];

fn block_at(sites: &[bool], start: usize) -> Block {
    [sites[start], sites[start + 1], sites[start + 2], sites[start + 3]]
}

fn is_udud(w: Block) -> bool {
    w == [true, false, true, false]
}

pub fn block_term_counts(block: Block) -> TermCounts {
    let mut c = TermCounts::default();
    c.add_block(block);
    c
}

pub fn block_energy(block: Block, p: &ChainParams) -> f64 {
    block_term_counts(block).energy(p)
}

/// `λ` if the straddling window reads `udud`, else `0`.
pub fn interaction_energy(window: Block, p: &ChainParams) -> f64 {
    if is_udud(window) {
        p.lambda
    } else {
        0.0
    }
}

fn counts_of_sites(sites: &[bool]) -> TermCounts {
    let mut c = TermCounts::default();
    let n = sites.len() / 4;
    for j in 0..n {
        c.add_block(block_at(sites, 4 * j));
    }
    for j in 1..n {
        c.lambda += u32::from(is_udud(block_at(sites, 4 * j - 2)));
    }
    c
}

pub fn term_counts(config: &SpinConfig) -> TermCounts {
    counts_of_sites(config.sites())
}

pub fn chain_energy(config: &SpinConfig, p: &ChainParams) -> f64 {
    term_counts(config).energy(p)
}

/// Counts for the configuration whose bits (site 1 most significant) spell `index`.
fn counts_of_index(index: u64, n_sites: usize) -> TermCounts {
    let mut sites = [false; 4 * MAX_SPECTRUM_BLOCKS];
    for (k, s) in sites.iter_mut().enumerate().take(n_sites) {
        *s = (index >> (n_sites - 1 - k)) & 1 == 1;
    }
    counts_of_sites(&sites[..n_sites])
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Level {
    pub energy: f64,
    pub degeneracy: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub n_blocks: usize,
    pub params: ChainParams,
    /// Sorted by descending energy.
    pub levels: Vec<Level>,
    pub top_energy: f64,
    pub top_degeneracy: u64,
    /// `None` when the spectrum has a single level.
    pub gap: Option<f64>,
}

fn check_blocks(n_blocks: usize, max: usize) -> Result<()> {
    if n_blocks == 0 {
        return Err(Error::InvalidArgument("need at least one block".into()));
    }
    if n_blocks > max {
        return Err(Error::Resource(format!(
            "{n_blocks} blocks exceed the limit of {max} ({} configurations)",
            1u128 << (4 * n_blocks)
        )));
    }
    Ok(())
}

/// Exact spectrum by enumerating all `2^{4N}` configurations.
pub fn full_spectrum(n_blocks: usize, p: &ChainParams) -> Result<SpectrumReport> {
    check_blocks(n_blocks, MAX_SPECTRUM_BLOCKS)?;
    let n_sites = 4 * n_blocks;
    let histogram = (0..1u64 << n_sites)
        .into_par_iter()
        .fold(HashMap::new, |mut acc: HashMap<TermCounts, u64>, idx| {
            *acc.entry(counts_of_index(idx, n_sites)).or_default() += 1;
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });

    let mut energies: Vec<(f64, TermCounts, u64)> =
        histogram.into_iter().map(|(c, n)| (c.energy(p), c, n)).collect();
    energies.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));

    let mut levels: Vec<Level> = Vec::new();
    for (e, _, n) in energies {
        match levels.last_mut() {
            Some(l) if (l.energy - e).abs() <= LEVEL_TOL => l.degeneracy += n,
            _ => levels.push(Level { energy: e, degeneracy: n }),
        }
    }
    let top = levels[0];
    Ok(SpectrumReport {
        n_blocks,
        params: *p,
        gap: levels.get(1).map(|next| top.energy - next.energy),
        top_energy: top.energy,
        top_degeneracy: top.degeneracy,
        levels,
    })
}

fn single_block_gap(p: &ChainParams) -> f64 {
    let competitors = [
        p.alpha1,
        p.alpha2,
        p.beta1,
        p.beta2,
        p.alpha1 + p.alpha2,
        p.beta1 + p.beta2,
        p.alpha2 + p.beta1,
    ];
    p.dyck_block_energy() - competitors.into_iter().fold(f64::NEG_INFINITY, f64::max)
}

/// Chain gap for two or more blocks: the single-block gap, capped by the
/// cost `-λ` of placing two `udud` blocks side by side.
pub fn gap_formula(p: &ChainParams) -> Result<f64> {
    require_valid(p)?;
    Ok(single_block_gap(p).min(-p.lambda))
}

/// [`gap_formula`] for a given block count; a single block has no interaction.
pub fn expected_gap(n_blocks: usize, p: &ChainParams) -> Result<f64> {
    require_valid(p)?;
    match n_blocks {
        0 => Err(Error::InvalidArgument("need at least one block".into())),
        1 => Ok(single_block_gap(p)),
        _ => gap_formula(p),
    }
}

/// `chain_energy` of every configuration, indexed by its binary value.
pub fn hamiltonian_diagonal(n_blocks: usize, p: &ChainParams) -> Result<Vec<f64>> {
    check_blocks(n_blocks, MAX_DIAGONAL_BLOCKS)?;
    let n_sites = 4 * n_blocks;
    Ok((0..1u64 << n_sites).map(|idx| counts_of_index(idx, n_sites).energy(p)).collect())
}

/// Configurations attaining the top level, in increasing index order.
pub fn top_level_configs(n_blocks: usize, p: &ChainParams) -> Result<Vec<SpinConfig>> {
    let report = full_spectrum(n_blocks, p)?;
    let n_sites = 4 * n_blocks;
    Ok((0..1u64 << n_sites)
        .filter(|&idx| (counts_of_index(idx, n_sites).energy(p) - report.top_energy).abs() <= LEVEL_TOL)
        .map(|idx| SpinConfig::from_index(idx, n_sites).expect("length is a multiple of 4"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{enumerate_fib_strings, fib_string_to_config};

    fn params() -> ChainParams {
        ChainParams::new(3.0, 1.0, 2.0, 4.0, -1.0)
    }

    fn cfg(s: &str) -> SpinConfig {
        s.replace(['·', ' '], "").parse().unwrap()
    }

    fn blk(s: &str) -> Block {
        let c = cfg(s);
        block_at(c.sites(), 0)
    }

    /// Diagonal of the Hamiltonian assembled from `(1 ± Z_k)/2` and `Z_k Z_l`
    /// as vectors over the computational basis.
    fn operator_diagonal(n_blocks: usize, p: &ChainParams) -> Vec<f64> {
        let n = 4 * n_blocks;
        let dim = 1usize << n;
        let z = |k: usize| -> Vec<f64> {
            (0..dim).map(|idx| if (idx >> (n - k)) & 1 == 1 { 1.0 } else { -1.0 }).collect()
        };
        let zs: Vec<Vec<f64>> = (0..=n).map(|k| if k == 0 { vec![] } else { z(k) }).collect();
        let pu = |k: usize, i: usize| (1.0 + zs[k][i]) / 2.0;
        let pd = |k: usize, i: usize| (1.0 - zs[k][i]) / 2.0;
        let anti = |k: usize, l: usize, i: usize| (1.0 - zs[k][i] * zs[l][i]) / 2.0;
        (0..dim)
            .map(|i| {
                let mut e = 0.0;
                for j in 1..=n_blocks {
                    let (a, b, c, d) = (4 * j - 3, 4 * j - 2, 4 * j - 1, 4 * j);
                    e += p.alpha1 * pu(a, i) * anti(b, c, i)
                        + p.alpha2 * pu(b, i) * anti(c, d, i)
                        + p.beta1 * anti(a, b, i) * pd(c, i)
                        + p.beta2 * anti(b, c, i) * pd(d, i);
                }
                for j in 1..n_blocks {
                    let (a, b, c, d) = (4 * j - 1, 4 * j, 4 * j + 1, 4 * j + 2);
                    e += p.lambda * pu(a, i) * pd(b, i) * pu(c, i) * pd(d, i);
                }
                e
            })
            .collect()
    }

    #[test]
    fn block_energy_examples() {
        let p = params();
        assert_eq!(block_energy(blk("uuuu"), &p), 0.0);
        assert_eq!(block_energy(blk("udud"), &p), p.alpha1 + p.beta2);
        assert_eq!(block_energy(blk("uudd"), &p), p.alpha1 + p.beta2);
        assert_eq!(block_energy(blk("dudu"), &p), p.alpha2 + p.beta1);
    }

    #[test]
    fn interaction_examples() {
        let p = params();
        assert_eq!(interaction_energy(blk("udud"), &p), -1.0);
        assert_eq!(interaction_energy(blk("uudd"), &p), 0.0);
        assert_eq!(interaction_energy(blk("dddd"), &p), 0.0);
    }

    #[test]
    fn chain_energy_examples() {
        let p = params();
        assert_eq!(chain_energy(&cfg("udud"), &p), 7.0);
        assert_eq!(chain_energy(&cfg("udud·udud"), &p), 14.0 - 1.0);
        assert_eq!(chain_energy(&cfg("uudd·udud"), &p), 14.0);
        assert!(matches!("uud".parse::<SpinConfig>(), Err(Error::BadConfigLength(3))));
    }

    #[test]
    fn diagonal_matches_operator_form() {
        let p = ChainParams::new(3.25, 0.5, 1.75, 4.125, -0.625);
        for n in 1..=3 {
            assert_eq!(hamiltonian_diagonal(n, &p).unwrap(), operator_diagonal(n, &p), "N={n}");
        }
    }

    #[test]
    fn small_spectra() {
        let p = params();
        let r = full_spectrum(2, &p).unwrap();
        assert_eq!((r.top_energy, r.top_degeneracy), (14.0, 3));
        assert_eq!(r.levels.iter().map(|l| l.degeneracy).sum::<u64>(), 256);
        let r3 = full_spectrum(3, &p).unwrap();
        assert_eq!(r3.top_degeneracy as usize, enumerate_fib_strings(3).len());
        assert_eq!(full_spectrum(1, &p).unwrap().levels.len(), 7);
        let generic = ChainParams::new(3.25, 0.5, 1.75, 4.125, -0.625);
        assert_eq!(full_spectrum(1, &generic).unwrap().levels.len(), 9);
        assert!(matches!(full_spectrum(5, &p), Err(Error::Resource(_))));
    }

    #[test]
    fn gap_formula_examples() {
        let p = ChainParams::new(3.0, 1.0, 2.0, 4.0, -10.0);
        assert_eq!(gap_formula(&p).unwrap(), 1.0);
        assert_eq!(full_spectrum(2, &p).unwrap().gap, Some(1.0));
        let p = ChainParams::new(3.0, 1.0, 2.0, 4.0, -0.5);
        assert_eq!(gap_formula(&p).unwrap(), 0.5);
        let r = full_spectrum(2, &p).unwrap();
        assert_eq!(r.levels[1].energy, 14.0 - 0.5);
        assert!(gap_formula(&ChainParams::new(1.0, 1.0, 2.0, 4.0, -1.0)).is_err());
    }

    #[test]
    fn validity_flags() {
        assert!(validate_params(&params()).valid);
        let r = validate_params(&ChainParams::new(1.0, 1.0, 2.0, 4.0, -1.0));
        assert!(!r.valid && !r.alpha1_gt_beta1 && r.beta2_gt_alpha2);
        let r = validate_params(&ChainParams::new(3.0, 1.0, 2.0, 4.0, 0.0));
        assert_eq!(r.violations(), vec!["lambda < 0"]);
    }

    #[test]
    fn top_configs_are_fib_strings() {
        for n in 1..=3 {
            let top = top_level_configs(n, &params()).unwrap();
            let mut fib: Vec<SpinConfig> =
                enumerate_fib_strings(n).iter().map(fib_string_to_config).collect();
            fib.sort_by_key(SpinConfig::index);
            assert_eq!(top, fib);
        }
    }

    #[test]
    fn params_parse() {
        assert_eq!("3,1,2,4,-1".parse::<ChainParams>().unwrap(), params());
        assert!("3,1,2".parse::<ChainParams>().is_err());
        assert!("3,1,2,4,x".parse::<ChainParams>().is_err());
    }
}
