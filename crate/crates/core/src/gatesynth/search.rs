//! Searches over alternating words in `σ̃_1, σ̃_2` for approximations of a
//! target gate.

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::generators::GeneratorSet;
use super::targets::GateTarget;
use super::unitary::{distance_unchecked, U2};
use super::word::{BraidWord, Factor};
use crate::error::{Error, Result};

/// Longest braid the random search may produce.
pub const MAX_SEARCH_LENGTH: u32 = 56;
/// Longest braid the exhaustive search accepts.
pub const MAX_EXHAUSTIVE_LENGTH: u32 = 16;
/// Default cap on the number of words the exhaustive search will visit.
pub const DEFAULT_NODE_BUDGET: u64 = 200_000_000;
/// Batches evaluated between two goal checks.
pub const BATCHES_PER_WAVE: u64 = 16;
/// Stored and recomputed `ε` must agree to this.
pub const REVERIFY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchConfig {
    pub max_length: u32,
    /// Unnormalised weight of exponent magnitude `k` at index `k`; drawing
    /// magnitude 0 ends the word.
    pub exponent_weights: Vec<f64>,
    /// Number of sampled words.
    pub candidates: u64,
    pub seed: u64,
    pub epsilon_goal: f64,
    /// Words per RNG stream.
    pub batch_size: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            max_length: MAX_SEARCH_LENGTH,
            exponent_weights: vec![0.2, 0.2, 0.5, 0.2, 0.25],
            candidates: 10_000_000,
            seed: 7,
            epsilon_goal: 1e-2,
            batch_size: 1 << 16,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_length > MAX_SEARCH_LENGTH {
            return Err(Error::InvalidArgument(format!(
                "max_length {} exceeds {MAX_SEARCH_LENGTH}",
                self.max_length
            )));
        }
        if self.exponent_weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::InvalidArgument("exponent weights must be finite and nonnegative".into()));
        }
        if self.exponent_weights.iter().skip(1).all(|&w| w == 0.0) {
            return Err(Error::InvalidArgument("some nonzero exponent magnitude needs positive weight".into()));
        }
        if self.batch_size == 0 {
            return Err(Error::InvalidArgument("batch_size must be positive".into()));
        }
        if !(self.epsilon_goal >= 0.0) {
            return Err(Error::InvalidArgument("epsilon_goal must be nonnegative".into()));
        }
        Ok(())
    }

    /// Weights normalised to a probability distribution.
    pub fn exponent_distribution(&self) -> Vec<f64> {
        let total: f64 = self.exponent_weights.iter().sum();
        self.exponent_weights.iter().map(|w| w / total).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SynthesisResult {
    pub target: String,
    pub word: BraidWord,
    pub braid_length: u64,
    pub epsilon: f64,
    pub evaluated: U2,
    /// Sampled words, or visited words for the exhaustive search.
    pub candidates_tried: u64,
    /// Words scored, counting every prefix of a sampled word.
    pub words_scored: u64,
    pub reached_goal: bool,
}

impl SynthesisResult {
    fn from_word(target: &GateTarget, gens: &GeneratorSet, word: BraidWord, tried: u64, scored: u64, goal: f64) -> Self {
        let evaluated = word.evaluate(gens);
        let epsilon = distance_unchecked(&evaluated, &target.matrix);
        Self {
            target: target.name.clone(),
            braid_length: word.braid_length(),
            word,
            epsilon,
            evaluated,
            candidates_tried: tried,
            words_scored: scored,
            reached_goal: epsilon <= goal,
        }
    }

    /// `|ε_stored - ε(word)|` after re-evaluating the stored word.
    pub fn reverify(&self, target: &GateTarget, gens: &GeneratorSet) -> f64 {
        let u = self.word.evaluate(gens);
        (distance_unchecked(&u, &target.matrix) - self.epsilon).abs()
    }

    pub fn check(&self, target: &GateTarget, gens: &GeneratorSet) -> Result<()> {
        let dev = self.reverify(target, gens);
        if dev > REVERIFY_TOL {
            return Err(Error::InvalidArgument(format!("stored epsilon off by {dev:e}")));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
struct Best {
    epsilon: f64,
    factors: Vec<Factor>,
}

/// Random weave search. Each sampled word starts on a uniformly chosen
/// generator and alternates; magnitudes follow the normalised weights and
/// signs are uniform. Every prefix of a sampled word is scored. The result
/// depends only on `(target, cfg, gens)`, not on the thread count.
pub fn random_weave_search(target: &GateTarget, cfg: &SearchConfig, gens: &GeneratorSet) -> Result<SynthesisResult> {
    cfg.validate()?;
    let magnitudes = WeightedIndex::new(&cfg.exponent_weights)
        .map_err(|e| Error::InvalidArgument(format!("exponent weights: {e}")))?;
    let mut best = Best { epsilon: distance_unchecked(&U2::IDENTITY, &target.matrix), factors: Vec::new() };
    let mut tried = 0u64;
    let mut scored = 1u64;
    let n_batches = cfg.candidates.div_ceil(cfg.batch_size);
    let mut next_batch = 0u64;
    while best.epsilon > cfg.epsilon_goal && next_batch < n_batches {
        let wave_end = (next_batch + BATCHES_PER_WAVE).min(n_batches);
        let results: Vec<(Option<Best>, u64, u64)> = (next_batch..wave_end)
            .into_par_iter()
            .map(|b| {
                let lo = b * cfg.batch_size;
                let hi = (lo + cfg.batch_size).min(cfg.candidates);
                run_batch(target, cfg, gens, &magnitudes, b, hi - lo)
            })
            .collect();
        for (cand, t, s) in results {
            tried += t;
            scored += s;
            if let Some(c) = cand {
                if c.epsilon < best.epsilon {
                    best = c;
                }
            }
        }
        next_batch = wave_end;
    }
    let word = BraidWord::new(best.factors.iter().map(|f| (f.generator, f.exponent)))?;
    Ok(SynthesisResult::from_word(target, gens, word, tried, scored, cfg.epsilon_goal))
}

fn batch_rng(seed: u64, batch: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(batch);
    rng
}

fn run_batch(
    target: &GateTarget,
    cfg: &SearchConfig,
    gens: &GeneratorSet,
    magnitudes: &WeightedIndex<f64>,
    batch: u64,
    count: u64,
) -> (Option<Best>, u64, u64) {
    let mut rng = batch_rng(cfg.seed, batch);
    let mut best: Option<Best> = None;
    let mut best_eps = f64::INFINITY;
    let mut factors: Vec<Factor> = Vec::with_capacity(MAX_SEARCH_LENGTH as usize);
    let mut scored = 0u64;
    for _ in 0..count {
        factors.clear();
        let mut generator: u8 = if rng.random::<bool>() { 1 } else { 2 };
        let mut u = U2::IDENTITY;
        let mut length = 0u32;
        loop {
            let m = magnitudes.sample(&mut rng) as u32;
            if m == 0 || length + m > cfg.max_length {
                break;
            }
            let exponent = if rng.random::<bool>() { m as i32 } else { -(m as i32) };
            u = gens.power(generator, exponent) * u;
            length += m;
            factors.push(Factor { generator, exponent });
            scored += 1;
            let eps = distance_unchecked(&u, &target.matrix);
            if eps < best_eps {
                best_eps = eps;
                best = Some(Best { epsilon: eps, factors: factors.clone() });
            }
            generator = 3 - generator;
        }
    }
    (best, count, scored)
}

/// Number of nonempty canonical words with exponents in `±1..±4` and
/// braid length at most `max_length`.
pub fn exhaustive_word_count(max_length: u32) -> u64 {
    let l = max_length as usize;
    // exact[k]: nonempty alternating sequences with fixed first generator and length exactly k
    let mut exact = vec![0u64; l + 1];
    for k in 1..=l {
        for m in 1..=4.min(k) {
            let prev = if k == m { 1 } else { exact[k - m] };
            exact[k] += 2 * prev;
        }
    }
    2 * exact.iter().sum::<u64>()
}

const EXHAUSTIVE_EXPONENTS: [i32; 8] = [1, -1, 2, -2, 3, -3, 4, -4];

/// `(ε, braid length, factors)` ordering; the first strictly smaller wins.
fn better(eps: f64, factors: &[Factor], best: &Best) -> bool {
    match eps.total_cmp(&best.epsilon) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal => {
            let len = |f: &[Factor]| f.iter().map(|x| x.exponent.unsigned_abs()).sum::<u32>();
            (len(factors), factors) < (len(&best.factors), best.factors.as_slice())
        }
    }
}

struct Dfs<'a> {
    target: &'a U2,
    gens: &'a GeneratorSet,
    max_length: u32,
    stack: Vec<Factor>,
    best: Best,
}

impl Dfs<'_> {
    fn visit(&mut self, u: U2, length: u32, generator: u8) {
        for &e in &EXHAUSTIVE_EXPONENTS {
            let m = e.unsigned_abs();
            if length + m > self.max_length {
                continue;
            }
            let v = self.gens.power(generator, e) * u;
            self.stack.push(Factor { generator, exponent: e });
            let eps = distance_unchecked(&v, self.target);
            if better(eps, &self.stack, &self.best) {
                self.best = Best { epsilon: eps, factors: self.stack.clone() };
            }
            self.visit(v, length + m, 3 - generator);
            self.stack.pop();
        }
    }
}

/// Global best over every canonical word of braid length at most
/// `max_length` with exponents in `±1..±4`. The visited set only grows with
/// `max_length`, so the returned `ε` is nonincreasing in it.
pub fn exhaustive_search(
    target: &GateTarget,
    max_length: u32,
    gens: &GeneratorSet,
    node_budget: Option<u64>,
) -> Result<SynthesisResult> {
    if max_length > MAX_EXHAUSTIVE_LENGTH {
        return Err(Error::InvalidArgument(format!(
            "exhaustive max_length {max_length} exceeds {MAX_EXHAUSTIVE_LENGTH}"
        )));
    }
    let count = exhaustive_word_count(max_length);
    let budget = node_budget.unwrap_or(DEFAULT_NODE_BUDGET);
    if count > budget {
        return Err(Error::Resource(format!("exhaustive search needs {count} words, budget is {budget}")));
    }
    let empty = Best { epsilon: distance_unchecked(&U2::IDENTITY, &target.matrix), factors: Vec::new() };
    let roots: Vec<(u8, i32)> = [1u8, 2]
        .iter()
        .flat_map(|&g| EXHAUSTIVE_EXPONENTS.iter().map(move |&e| (g, e)))
        .filter(|&(_, e)| e.unsigned_abs() <= max_length)
        .collect();
    let branch_bests: Vec<Best> = roots
        .par_iter()
        .map(|&(g, e)| {
            let u = gens.power(g, e);
            let first = Factor { generator: g, exponent: e };
            let mut dfs = Dfs {
                target: &target.matrix,
                gens,
                max_length,
                stack: vec![first],
                best: Best { epsilon: distance_unchecked(&u, &target.matrix), factors: vec![first] },
            };
            dfs.visit(u, e.unsigned_abs(), 3 - g);
            dfs.best
        })
        .collect();
    let mut best = empty;
    for b in branch_bests {
        if better(b.epsilon, &b.factors, &best) {
            best = b;
        }
    }
    let word = BraidWord::new(best.factors.iter().map(|f| (f.generator, f.exponent)))?;
    let mut result = SynthesisResult::from_word(target, gens, word, count, count + 1, 0.0);
    result.reached_goal = false;
    Ok(result)
}
