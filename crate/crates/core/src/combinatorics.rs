//! Dyck paths, two-row standard Young tableaux and Fibonacci block strings.
//!
//! All enumerations return their elements in lexicographic order of the
//! underlying step sequence with `U < D`. Text forms use the lowercase
//! alphabet `{u, d}`; block strings are comma separated (`"uudd,udud"`).

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A single lattice step. `U` sorts before `D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    U,
    D,
}

impl Step {
    pub fn from_char(c: char) -> Result<Step> {
        match c {
            'u' | 'U' => Ok(Step::U),
            'd' | 'D' => Ok(Step::D),
            other => Err(Error::Parse(format!("unexpected step character {other:?}"))),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::U => 'u',
            Step::D => 'd',
        }
    }

    /// Spin bit: `U` is 1, `D` is 0.
    pub fn bit(self) -> bool {
        self == Step::U
    }
}

fn parse_steps(s: &str) -> Result<Vec<Step>> {
    s.trim().chars().map(Step::from_char).collect()
}

fn fmt_steps(steps: &[Step], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for s in steps {
        write!(f, "{}", s.as_char())?;
    }
    Ok(())
}

/// A balanced sequence of up/down steps whose running height never goes negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height: i64 = 0;
        for (k, s) in steps.iter().enumerate() {
            height += if *s == Step::U { 1 } else { -1 };
            if height < 0 {
                return Err(Error::NotDyck(format!(
                    "prefix of length {} dips below zero",
                    k + 1
                )));
            }
        }
        if height != 0 {
            return Err(Error::NotDyck(format!("ends at height {height}")));
        }
        Ok(Self { steps })
    }

    /// The path `(ud)^n`.
    pub fn zigzag(n: usize) -> Self {
        let steps = (0..n).flat_map(|_| [Step::U, Step::D]).collect();
        Self { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn half_length(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

impl FromStr for DyckPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        DyckPath::new(parse_steps(s)?)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_steps(&self.steps, f)
    }
}

/// Number of Dyck paths of half-length `n`.
///
/// Uses `C_{k+1} = C_k * 2(2k+1) / (k+2)`, which stays integral at every step.
pub fn catalan(n: u32) -> Result<u64> {
    let mut c: u128 = 1;
    for k in 0..n as u128 {
        c = c
            .checked_mul(2 * (2 * k + 1))
            .ok_or_else(|| Error::Overflow(format!("catalan({n})")))?
            / (k + 2);
    }
    u64::try_from(c).map_err(|_| Error::Overflow(format!("catalan({n}) exceeds u64")))
}

/// All Dyck paths with `n` up steps, in lexicographic order (`U < D`).
pub fn enumerate_dyck_paths(n: usize) -> Vec<DyckPath> {
    fn rec(n: usize, ups: usize, downs: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if ups == n && downs == n {
            out.push(DyckPath { steps: cur.clone() });
            return;
        }
        if ups < n {
            cur.push(Step::U);
            rec(n, ups + 1, downs, cur, out);
            cur.pop();
        }
        if downs < ups {
            cur.push(Step::D);
            rec(n, ups, downs + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, 0, &mut Vec::with_capacity(2 * n), &mut out);
    out
}

/// Row lengths of a two-row Young diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Shape {
    pub top: usize,
    pub bottom: usize,
}

impl Shape {
    pub fn new(top: usize, bottom: usize) -> Result<Self> {
        if bottom > top {
            return Err(Error::InvalidShape { top, bottom });
        }
        Ok(Self { top, bottom })
    }

    pub fn cells(&self) -> usize {
        self.top + self.bottom
    }

    /// All two-row shapes with `n` cells, ordered by increasing bottom row.
    pub fn all_with_cells(n: usize) -> Vec<Shape> {
        (0..=n / 2).map(|b| Shape { top: n - b, bottom: b }).collect()
    }
}

impl FromStr for Shape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("shape must look like \"r1,r2\", got {s:?}")))?;
        let top = a.trim().parse().map_err(|_| Error::Parse(format!("bad row length {a:?}")))?;
        let bottom = b.trim().parse().map_err(|_| Error::Parse(format!("bad row length {b:?}")))?;
        Shape::new(top, bottom)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.top, self.bottom)
    }
}

/// A standard filling of a two-row shape by `1..=N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungTableauTwoRow {
    shape: Shape,
    top: Vec<usize>,
    bottom: Vec<usize>,
}

impl YoungTableauTwoRow {
    /// Builds a tableau from its two rows, checking standardness.
    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self> {
        let shape = Shape::new(top.len(), bottom.len())?;
        let n = shape.cells();
        let mut seen = vec![false; n + 1];
        for &v in top.iter().chain(bottom.iter()) {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidTableau(format!(
                    "entries must be a permutation of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        if top.windows(2).any(|w| w[0] >= w[1]) || bottom.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidTableau("rows must increase".into()));
        }
        if bottom.iter().zip(&top).any(|(b, t)| b <= t) {
            return Err(Error::InvalidTableau("columns must increase".into()));
        }
        Ok(Self { shape, top, bottom })
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn top_row(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom_row(&self) -> &[usize] {
        &self.bottom
    }

    /// `(row, column)` of entry `i`, both zero based.
    pub fn position(&self, i: usize) -> Option<(usize, usize)> {
        if let Some(c) = self.top.iter().position(|&v| v == i) {
            return Some((0, c));
        }
        self.bottom.iter().position(|&v| v == i).map(|c| (1, c))
    }

    /// Content (column minus row) of the cell holding `i`.
    pub fn content(&self, i: usize) -> Option<i64> {
        self.position(i).map(|(r, c)| c as i64 - r as i64)
    }

    /// The filling with `i` and `i + 1` exchanged, if it is still standard.
    pub fn swapped(&self, i: usize) -> Option<Self> {
        let sw = |v: usize| {
            if v == i {
                i + 1
            } else if v == i + 1 {
                i
            } else {
                v
            }
        };
        YoungTableauTwoRow::new(
            self.top.iter().copied().map(sw).collect(),
            self.bottom.iter().copied().map(sw).collect(),
        )
        .ok()
    }

    /// Row word: `U` for entries in the top row, `D` for the bottom row.
    fn row_word(&self) -> Vec<Step> {
        let n = self.shape.cells();
        let mut steps = vec![Step::D; n];
        for &v in &self.top {
            steps[v - 1] = Step::U;
        }
        steps
    }
}

impl fmt::Display for YoungTableauTwoRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[usize]| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
        write!(f, "[{} / {}]", row(&self.top), row(&self.bottom))
    }
}

/// All standard tableaux of `shape`, ordered lexicographically by row word.
pub fn enumerate_standard_tableaux(shape: Shape) -> Vec<YoungTableauTwoRow> {
    fn rec(
        shape: Shape,
        next: usize,
        top: &mut Vec<usize>,
        bottom: &mut Vec<usize>,
        out: &mut Vec<YoungTableauTwoRow>,
    ) {
        if next > shape.cells() {
            out.push(YoungTableauTwoRow { shape, top: top.clone(), bottom: bottom.clone() });
            return;
        }
        if top.len() < shape.top {
            top.push(next);
            rec(shape, next + 1, top, bottom, out);
            top.pop();
        }
        if bottom.len() < shape.bottom && bottom.len() < top.len() {
            bottom.push(next);
            rec(shape, next + 1, top, bottom, out);
            bottom.pop();
        }
    }
    let mut out = Vec::new();
    rec(shape, 1, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// Hook length formula for a two-row shape: `N! / prod(h)`.
pub fn hook_dimension(shape: Shape) -> Result<u64> {
    let n = shape.cells();
    let overflow = || Error::Overflow(format!("hook_dimension{shape}"));
    let mut num: u128 = 1;
    for k in 2..=n as u128 {
        num = num.checked_mul(k).ok_or_else(overflow)?;
    }
    let mut den: u128 = 1;
    for c in 0..shape.top {
        let below = usize::from(c < shape.bottom);
        den *= (shape.top - c - 1 + below + 1) as u128;
    }
    for c in 0..shape.bottom {
        den *= (shape.bottom - c) as u128;
    }
    u64::try_from(num / den).map_err(|_| overflow())
}

/// Maps an `(n, n)` tableau to the Dyck path reading its row word.
pub fn tableau_to_dyck(t: &YoungTableauTwoRow) -> Result<DyckPath> {
    let s = t.shape();
    if s.top != s.bottom {
        return Err(Error::NotRectangular { top: s.top, bottom: s.bottom });
    }
    DyckPath::new(t.row_word())
}

/// Inverse of [`tableau_to_dyck`].
pub fn dyck_to_tableau(p: &DyckPath) -> YoungTableauTwoRow {
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for (k, s) in p.steps().iter().enumerate() {
        match s {
            Step::U => top.push(k + 1),
            Step::D => bottom.push(k + 1),
        }
    }
    let shape = Shape { top: top.len(), bottom: bottom.len() };
    YoungTableauTwoRow { shape, top, bottom }
}

/// The four three-step substitutions `udu <-> uud` and `dud <-> udd`.
fn fredkin_neighbours(steps: &[Step]) -> Vec<Vec<Step>> {
    use Step::{D, U};
    const PAIRS: [([Step; 3], [Step; 3]); 2] = [([U, D, U], [U, U, D]), ([D, U, D], [U, D, D])];
    let mut out = Vec::new();
    for j in 0..steps.len().saturating_sub(2) {
        let w = &steps[j..j + 3];
        for (a, b) in PAIRS {
            for (from, to) in [(a, b), (b, a)] {
                if w == from {
                    let mut next = steps.to_vec();
                    next[j..j + 3].copy_from_slice(&to);
                    out.push(next);
                }
            }
        }
    }
    out
}

/// Breadth-first closure of `start` under the Fredkin moves, sorted.
pub fn fredkin_orbit(start: &DyckPath) -> Vec<DyckPath> {
    let mut seen: BTreeSet<Vec<Step>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.steps.clone());
    queue.push_back(start.steps.clone());
    while let Some(cur) = queue.pop_front() {
        for next in fredkin_neighbours(&cur) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.into_iter().map(|steps| DyckPath { steps }).collect()
}

/// One of the two length-4 Dyck paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FibBlock {
    /// `uudd`, the image of the fusion label τ.
    Uudd,
    /// `udud`, the image of the vacuum label 1.
    Udud,
}

impl FibBlock {
    pub fn steps(self) -> [Step; 4] {
        use Step::{D, U};
        match self {
            FibBlock::Uudd => [U, U, D, D],
            FibBlock::Udud => [U, D, U, D],
        }
    }

    pub fn is_vacuum(self) -> bool {
        self == FibBlock::Udud
    }
}

impl FromStr for FibBlock {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "uudd" => Ok(FibBlock::Uudd),
            "udud" => Ok(FibBlock::Udud),
            other => Err(Error::Parse(format!("unknown block {other:?}"))),
        }
    }
}

impl fmt::Display for FibBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_steps(&self.steps(), f)
    }
}

/// A sequence of length-4 blocks with no two adjacent `udud`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FibBlockString {
    blocks: Vec<FibBlock>,
}

impl FibBlockString {
    pub fn new(blocks: Vec<FibBlock>) -> Result<Self> {
        if blocks.windows(2).any(|w| w[0].is_vacuum() && w[1].is_vacuum()) {
            return Err(Error::InvalidBlockString("two consecutive udud blocks".into()));
        }
        Ok(Self { blocks })
    }

    pub fn blocks(&self) -> &[FibBlock] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn steps(&self) -> Vec<Step> {
        self.blocks.iter().flat_map(|b| b.steps()).collect()
    }
}

impl FromStr for FibBlockString {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let blocks = s.split(',').map(str::parse).collect::<Result<Vec<_>>>()?;
        FibBlockString::new(blocks)
    }
}

impl fmt::Display for FibBlockString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// All block strings of `n_blocks` blocks avoiding adjacent `udud`, in
/// lexicographic order of their expanded steps.
pub fn enumerate_fib_strings(n_blocks: usize) -> Vec<FibBlockString> {
    fn rec(n: usize, cur: &mut Vec<FibBlock>, out: &mut Vec<FibBlockString>) {
        if cur.len() == n {
            out.push(FibBlockString { blocks: cur.clone() });
            return;
        }
        for b in [FibBlock::Uudd, FibBlock::Udud] {
            if b.is_vacuum() && cur.last().is_some_and(|p| p.is_vacuum()) {
                continue;
            }
            cur.push(b);
            rec(n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n_blocks, &mut Vec::with_capacity(n_blocks), &mut out);
    out
}

/// Spin configuration on `4N` sites; bit 1 is an up step.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinConfig {
    sites: Vec<bool>,
}

impl SpinConfig {
    pub fn new(sites: Vec<bool>) -> Result<Self> {
        if sites.is_empty() || !sites.len().is_multiple_of(4) {
            return Err(Error::BadConfigLength(sites.len()));
        }
        Ok(Self { sites })
    }

    pub fn from_steps(steps: &[Step]) -> Result<Self> {
        Self::new(steps.iter().map(|s| s.bit()).collect())
    }

    /// Configuration whose binary expansion (site 1 most significant) is `index`.
    pub fn from_index(index: u64, len: usize) -> Result<Self> {
        if len > 64 {
            return Err(Error::Resource(format!("{len} sites do not fit a 64-bit index")));
        }
        let sites = (0..len).map(|k| (index >> (len - 1 - k)) & 1 == 1).collect();
        Self::new(sites)
    }

    pub fn index(&self) -> u64 {
        self.sites.iter().fold(0u64, |acc, &b| (acc << 1) | u64::from(b))
    }

    pub fn sites(&self) -> &[bool] {
        &self.sites
    }

    pub fn n_blocks(&self) -> usize {
        self.sites.len() / 4
    }

    pub fn steps(&self) -> Vec<Step> {
        self.sites.iter().map(|&b| if b { Step::U } else { Step::D }).collect()
    }
}

impl FromStr for SpinConfig {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let sites = s
            .trim()
            .chars()
            .map(|c| match c {
                '1' => Ok(true),
                '0' => Ok(false),
                other => Step::from_char(other).map(Step::bit),
            })
            .collect::<Result<Vec<_>>>()?;
        SpinConfig::new(sites)
    }
}

impl fmt::Display for SpinConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.sites {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

pub fn fib_string_to_config(s: &FibBlockString) -> SpinConfig {
    SpinConfig { sites: s.steps().into_iter().map(Step::bit).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force: every `{U, D}` word of length `2n`, filtered by the Dyck condition.
    fn brute_dyck(n: usize) -> Vec<Vec<Step>> {
        (0u32..1 << (2 * n))
            .map(|mask| {
                (0..2 * n)
                    .map(|k| if mask >> (2 * n - 1 - k) & 1 == 0 { Step::U } else { Step::D })
                    .collect::<Vec<_>>()
            })
            .filter(|w| DyckPath::new(w.clone()).is_ok())
            .collect()
    }

    /// Brute force: every assignment of `1..=N` to rows, filtered by standardness.
    fn brute_tableaux(shape: Shape) -> usize {
        let n = shape.cells();
        (0u32..1 << n)
            .filter(|mask| mask.count_ones() as usize == shape.top)
            .filter(|mask| {
                let top: Vec<_> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
                let bottom: Vec<_> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 0).collect();
                YoungTableauTwoRow::new(top, bottom).is_ok()
            })
            .count()
    }

    fn brute_fib(n_blocks: usize) -> usize {
        (0u32..1 << n_blocks)
            .filter(|mask| (0..n_blocks.saturating_sub(1)).all(|k| mask >> k & 0b11 != 0b11))
            .count()
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan(0).unwrap(), 1);
        assert_eq!(catalan(1).unwrap(), 1);
        assert_eq!(catalan(2).unwrap(), 2);
        assert_eq!(catalan(4).unwrap(), brute_dyck(4).len() as u64);
        assert_eq!(catalan(4).unwrap(), 14);
        assert_eq!(catalan(35).unwrap(), 3_116_285_494_907_301_262);
        assert_eq!(catalan(36).unwrap(), 11_959_798_385_860_453_492);
        assert!(matches!(catalan(37), Err(Error::Overflow(_))));
    }

    #[test]
    fn dyck_enumeration_small() {
        let show = |n| enumerate_dyck_paths(n).iter().map(ToString::to_string).collect::<Vec<_>>();
        assert_eq!(show(0), vec![""]);
        assert_eq!(show(1), vec!["ud"]);
        assert_eq!(show(2), vec!["uudd", "udud"]);
        assert_eq!(show(3).len(), 5);
        for n in 0..=6 {
            let brute: Vec<_> = brute_dyck(n);
            let ours: Vec<_> = enumerate_dyck_paths(n).into_iter().map(|p| p.steps).collect();
            assert_eq!(ours, brute, "lexicographic order and content at n={n}");
        }
    }

    #[test]
    fn dyck_rejects_bad_input() {
        assert!("du".parse::<DyckPath>().is_err());
        assert!("uud".parse::<DyckPath>().is_err());
        assert!("uxd".parse::<DyckPath>().is_err());
        assert_eq!("UuDd".parse::<DyckPath>().unwrap().to_string(), "uudd");
    }

    #[test]
    fn tableaux_counts_match_brute_force() {
        assert_eq!(enumerate_standard_tableaux(Shape::new(2, 2).unwrap()).len(), 2);
        assert_eq!(enumerate_standard_tableaux(Shape::new(2, 0).unwrap()).len(), 1);
        assert_eq!(enumerate_standard_tableaux(Shape::new(3, 3).unwrap()).len(), 5);
        for n in 0..=10 {
            for shape in Shape::all_with_cells(n) {
                let count = enumerate_standard_tableaux(shape).len();
                assert_eq!(count, brute_tableaux(shape), "{shape}");
                assert_eq!(count as u64, hook_dimension(shape).unwrap(), "{shape}");
            }
        }
    }

    #[test]
    fn invalid_shape_rejected() {
        assert_eq!(Shape::new(1, 2), Err(Error::InvalidShape { top: 1, bottom: 2 }));
        assert!("2,3".parse::<Shape>().is_err());
    }

    #[test]
    fn hook_dimension_examples() {
        assert_eq!(hook_dimension(Shape::new(2, 2).unwrap()).unwrap(), 2);
        assert_eq!(hook_dimension(Shape::new(7, 0).unwrap()).unwrap(), 1);
        assert_eq!(hook_dimension(Shape::new(4, 4).unwrap()).unwrap(), 14);
        assert_eq!(hook_dimension(Shape::new(3, 1).unwrap()).unwrap(), 3);
    }

    #[test]
    fn tableau_dyck_bijection_examples() {
        let t = YoungTableauTwoRow::new(vec![1, 3], vec![2, 4]).unwrap();
        assert_eq!(tableau_to_dyck(&t).unwrap().to_string(), "udud");
        let t = YoungTableauTwoRow::new(vec![1, 2], vec![3, 4]).unwrap();
        assert_eq!(tableau_to_dyck(&t).unwrap().to_string(), "uudd");
        let p: DyckPath = "udud".parse().unwrap();
        assert_eq!(dyck_to_tableau(&p).top_row(), &[1, 3]);
        let t = YoungTableauTwoRow::new(vec![1, 2, 3], vec![4]).unwrap();
        assert!(matches!(tableau_to_dyck(&t), Err(Error::NotRectangular { .. })));
    }

    #[test]
    fn tableau_invariants_enforced() {
        assert!(YoungTableauTwoRow::new(vec![2, 3], vec![1, 4]).is_err());
        assert!(YoungTableauTwoRow::new(vec![1, 3], vec![4, 2]).is_err());
        assert!(YoungTableauTwoRow::new(vec![1, 1], vec![3, 4]).is_err());
    }

    #[test]
    fn fredkin_orbit_examples() {
        let orbit = |s: &str| fredkin_orbit(&s.parse().unwrap());
        assert_eq!(orbit("ud").len(), 1);
        let two: Vec<_> = orbit("udud").iter().map(ToString::to_string).collect();
        assert_eq!(two, vec!["uudd", "udud"]);
        assert_eq!(orbit("ududud").len(), 5);
        for n in 1..=6 {
            assert_eq!(fredkin_orbit(&DyckPath::zigzag(n)), enumerate_dyck_paths(n));
        }
    }

    #[test]
    fn fib_strings() {
        assert_eq!(enumerate_fib_strings(1).len(), 2);
        let two: Vec<_> = enumerate_fib_strings(2).iter().map(ToString::to_string).collect();
        assert_eq!(two, vec!["uudd,uudd", "uudd,udud", "udud,uudd"]);
        assert_eq!(enumerate_fib_strings(5).len(), 13);
        for n in 1..=12 {
            assert_eq!(enumerate_fib_strings(n).len(), brute_fib(n), "N={n}");
        }
        assert!("udud,udud".parse::<FibBlockString>().is_err());
    }

    #[test]
    fn fib_config_encoding() {
        let cfg = |s: &str| fib_string_to_config(&s.parse().unwrap()).to_string();
        assert_eq!(cfg("uudd"), "1100");
        assert_eq!(cfg("udud"), "1010");
        assert_eq!(cfg("uudd,udud"), "11001010");
    }

    #[test]
    fn spin_config_index_roundtrip() {
        let c: SpinConfig = "11001010".parse().unwrap();
        assert_eq!(c.index(), 0b1100_1010);
        assert_eq!(SpinConfig::from_index(0b1100_1010, 8).unwrap(), c);
        assert_eq!(SpinConfig::new(vec![true; 3]), Err(Error::BadConfigLength(3)));
    }
}
