//! Temperley-Lieb and Jones representations on Dyck-path, tableau and
//! Fibonacci-anyon bases, the Fredkin spin chain whose top level carries the
//! Fibonacci fusion space, its noise stability, and braid-word synthesis of
//! single-qubit gates.

// `!(a <= b)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod combinatorics;
pub mod error;
pub mod gatesynth;
pub mod matrix;
pub mod spinchain;
pub mod stability;
pub mod tl;

pub use error::{Error, ErrorKind, Result};
pub use matrix::{ComplexMatrix, Operator, SparseMatrix};
pub use faer::Mat;
pub use num_complex::Complex64;
