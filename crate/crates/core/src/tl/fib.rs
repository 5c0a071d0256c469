//! `TL_N` on fusion paths of `N` Fibonacci anyons.
//!
//! A basis state is the chain of intermediate labels `a_2..a_{N-1}` in
//! `{1, τ}` with no two adjacent vacua; `a_0 = 1` and `a_1 = a_N = τ` are
//! fixed. Block `k` of the [`FibBlockString`] encodes `a_{k+1}` with
//! `udud ↔ 1` and `uudd ↔ τ`.
//!
//! `e_i` only sees `(a_{i-1}, a_i, a_{i+1})`:
//! - outer labels differ: `0`;
//! - `1 τ 1`: `x`;
//! - `τ a τ`: the 2x2 block `[[(x²-1)/x, s], [s, 1/x]]` on `a = (τ, 1)`,
//!   `s = √(x²-1)/x`.
//!
//! The block is a projector of weight `x` only at `x = φ`; elsewhere the
//! relations fail for `N ≥ 4` and [`super::verify_tl_relations`] reports it.

use std::collections::HashMap;

use num_complex::Complex64;

use super::{BasisLabel, TLRep};
use crate::combinatorics::{enumerate_fib_strings, FibBlock, FibBlockString};
use crate::error::{Error, Result};
use crate::matrix::Operator;

fn is_vacuum(b: FibBlock) -> bool {
    b.is_vacuum()
}

pub fn fib_sequence_rep(strands: usize, x: f64) -> Result<TLRep> {
    if strands < 3 {
        return Err(Error::InvalidArgument(format!("need at least 3 anyons, got {strands}")));
    }
    if !(x > 1.0) {
        return Err(Error::InvalidArgument(format!("loop parameter must exceed 1, got {x}")));
    }
    let basis = enumerate_fib_strings(strands - 2);
    let index: HashMap<&[FibBlock], usize> =
        basis.iter().enumerate().map(|(k, s)| (s.blocks(), k)).collect();
    let dim = basis.len();
    let s = (x * x - 1.0).sqrt() / x;
    let tau_diag = (x * x - 1.0) / x;
    let vac_diag = 1.0 / x;
    let re = |v: f64| Complex64::new(v, 0.0);

    // true iff a_k is the vacuum.
    let label = |blocks: &[FibBlock], k: usize| -> bool {
        match k {
            0 => true,
            1 => false,
            k if k == strands => false,
            k => is_vacuum(blocks[k - 2]),
        }
    };

    let mut generators = Vec::with_capacity(strands - 1);
    for i in 1..strands {
        let mut triplets = Vec::new();
        for (col, state) in basis.iter().enumerate() {
            let b = state.blocks();
            let (left, mid, right) = (label(b, i - 1), label(b, i), label(b, i + 1));
            if left != right {
                continue;
            }
            if left {
                triplets.push((col, col, re(x)));
                continue;
            }
            triplets.push((col, col, re(if mid { vac_diag } else { tau_diag })));
            if i >= 2 {
                let mut flipped = b.to_vec();
                flipped[i - 2] = if mid { FibBlock::Uudd } else { FibBlock::Udud };
                if let Some(&row) = index.get(flipped.as_slice()) {
                    triplets.push((row, col, re(s)));
                }
            }
        }
        generators.push(Operator::from_triplets(dim, triplets));
    }
    let labels = basis.into_iter().map(BasisLabel::FibString).collect();
    TLRep::new(strands, x, generators, labels)
}

/// Position of `state` in the basis of `rep`.
pub fn fib_state_index(rep: &TLRep, state: &FibBlockString) -> Option<usize> {
    rep.basis().iter().position(|l| matches!(l, BasisLabel::FibString(s) if s == state))
}
