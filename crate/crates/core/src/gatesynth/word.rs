use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::generators::GeneratorSet;
use super::unitary::U2;
use crate::error::{Error, Result};

/// One factor `σ_g^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Factor {
    pub generator: u8,
    pub exponent: i32,
}

/// A word in `σ_1, σ_2` kept in canonical form: no zero exponents and no
/// two adjacent factors on the same generator.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    factors: Vec<Factor>,
}

impl BraidWord {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Merges adjacent factors on the same generator and drops those that
    /// cancel; zero exponents in the input are rejected.
    pub fn new(factors: impl IntoIterator<Item = (u8, i32)>) -> Result<Self> {
        let mut out: Vec<Factor> = Vec::new();
        for (generator, exponent) in factors {
            if generator != 1 && generator != 2 {
                return Err(Error::Parse(format!("generator must be 1 or 2, got {generator}")));
            }
            if exponent == 0 {
                return Err(Error::Parse(format!("zero exponent on generator {generator}")));
            }
            Self::push_merged(&mut out, Factor { generator, exponent })?;
        }
        Ok(Self { factors: out })
    }

    fn push_merged(out: &mut Vec<Factor>, f: Factor) -> Result<()> {
        match out.last_mut() {
            Some(last) if last.generator == f.generator => {
                last.exponent = last
                    .exponent
                    .checked_add(f.exponent)
                    .ok_or_else(|| Error::Overflow("braid exponent".into()))?;
                if last.exponent == 0 {
                    out.pop();
                }
            }
            _ => out.push(f),
        }
        Ok(())
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// `Σ |n_i|`, the number of elementary crossings.
    pub fn braid_length(&self) -> u64 {
        self.factors.iter().map(|f| u64::from(f.exponent.unsigned_abs())).sum()
    }

    /// Factor order reversed, exponents kept.
    pub fn reversed(&self) -> Self {
        Self { factors: self.factors.iter().rev().copied().collect() }
    }

    /// The group inverse: order reversed and exponents negated.
    pub fn inverse(&self) -> Self {
        Self {
            factors: self.factors.iter().rev().map(|f| Factor { exponent: -f.exponent, ..*f }).collect(),
        }
    }

    /// `σ_1 ↔ σ_2`.
    pub fn generator_swapped(&self) -> Self {
        Self { factors: self.factors.iter().map(|f| Factor { generator: 3 - f.generator, ..*f }).collect() }
    }

    /// `self` followed by `other` in sequence order.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        let mut out = self.factors.clone();
        for &f in &other.factors {
            Self::push_merged(&mut out, f)?;
        }
        Ok(Self { factors: out })
    }

    /// Product with the first factor rightmost:
    /// `σ_{g_p}^{n_p} ⋯ σ_{g_2}^{n_2} σ_{g_1}^{n_1}`.
    pub fn evaluate(&self, gens: &GeneratorSet) -> U2 {
        self.factors
            .iter()
            .fold(U2::IDENTITY, |acc, f| gens.power(f.generator, f.exponent) * acc)
    }
}

/// [`BraidWord::evaluate`] as a free function.
pub fn evaluate(word: &BraidWord, gens: &GeneratorSet) -> U2 {
    word.evaluate(gens)
}

fn parse_token(tok: &str) -> Result<(u8, i32)> {
    let bad = || Error::Parse(format!("malformed token {tok:?}, expected s<g>^<n>"));
    let rest = tok.strip_prefix('s').or_else(|| tok.strip_prefix('S')).ok_or_else(bad)?;
    let (g, n) = match rest.split_once('^') {
        Some((g, n)) => (g, n.parse::<i32>().map_err(|_| bad())?),
        None => (rest, 1),
    };
    let g: u8 = g.parse().map_err(|_| bad())?;
    Ok((g, n))
}

impl FromStr for BraidWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BraidWord::new(s.split_whitespace().map(parse_token).collect::<Result<Vec<_>>>()?)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "s{}^{}", x.generator, x.exponent)?;
        }
        Ok(())
    }
}

pub fn parse_word(text: &str) -> Result<BraidWord> {
    text.parse()
}

pub fn format_word(word: &BraidWord) -> String {
    word.to_string()
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BraidWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
