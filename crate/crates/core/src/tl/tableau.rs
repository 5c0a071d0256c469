//! Seminormal action of `TL_N(x)` on standard two-row tableaux.
//!
//! For entries `i`, `i+1` with contents `c_i`, `c_{i+1}` let
//! `d = |c_{i+1} - c_i|`. Then
//! `e_i t = C t + C̃ s_i t`, where `s_i t` swaps the two entries and is
//! dropped when it is not standard, `C̃ = √([d-1][d+1]) / [d]` (principal
//! complex root), and
//! `C = [d-1]/[d]` when `i+1` sits north-east of `i`, `[d+1]/[d]` otherwise.

use std::collections::HashMap;

use num_complex::Complex64;

use super::{q_number, BasisLabel, TLRep};
use crate::combinatorics::{enumerate_standard_tableaux, Shape, YoungTableauTwoRow};
use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, Operator};

fn q_checked(d: i32, x: f64) -> Result<f64> {
    let v = q_number(d, x);
    if v.abs() < 1e-12 {
        return Err(Error::SingularQNumber { d, x });
    }
    Ok(v)
}

pub fn build_tableau_rep(strands: usize, shape: Shape, x: f64) -> Result<TLRep> {
    let shape = Shape::new(shape.top, shape.bottom)?;
    if shape.cells() != strands {
        return Err(Error::StrandMismatch { strands, cells: shape.cells() });
    }
    let basis = enumerate_standard_tableaux(shape);
    let index: HashMap<&YoungTableauTwoRow, usize> =
        basis.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let dim = basis.len();

    let mut generators = Vec::with_capacity(strands.saturating_sub(1));
    for i in 1..strands {
        let mut triplets = Vec::new();
        for (col, t) in basis.iter().enumerate() {
            let diff = t.content(i + 1).expect("entry present") - t.content(i).expect("entry present");
            let d = diff.unsigned_abs() as i32;
            let qd = q_checked(d, x)?;
            let c = if diff > 0 { q_number(d - 1, x) / qd } else { q_number(d + 1, x) / qd };
            triplets.push((col, col, Complex64::new(c, 0.0)));
            if let Some(swapped) = t.swapped(i) {
                // Imaginary when [d-1][d+1] < 0; only the product of the two
                // off-diagonal entries enters the relations.
                let prod = Complex64::new(q_number(d - 1, x) * q_number(d + 1, x), 0.0);
                let row = index[&swapped];
                triplets.push((row, col, prod.sqrt() / qd));
            }
        }
        generators.push(Operator::from_triplets(dim, triplets));
    }
    TLRep::new(strands, x, generators, basis.into_iter().map(BasisLabel::Tableau).collect())
}

/// `e_2` of the `(2,2)` representation written out entry by entry, on the
/// basis `(uudd, udud)`.
pub fn tableau_e2_closed_form(x: f64) -> ComplexMatrix {
    let s = (x * x - 1.0).sqrt() / x;
    ComplexMatrix::from_real_rows(&[vec![(x * x - 1.0) / x, s], vec![s, 1.0 / x]])
        .expect("2x2 literal")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tl::{golden_ratio, verify_tl_relations, DEFAULT_TOL};

    fn dense(rep: &TLRep, i: usize) -> ComplexMatrix {
        rep.generator(i).to_dense()
    }

    #[test]
    fn two_two_matches_closed_form() {
        for x in [1.9, golden_ratio(), 2.5] {
            let rep = build_tableau_rep(4, Shape::new(2, 2).unwrap(), x).unwrap();
            assert_eq!(rep.basis()[0].to_string(), "[1 2 / 3 4]");
            let e1 = ComplexMatrix::from_real_rows(&[vec![0.0, 0.0], vec![0.0, x]]).unwrap();
            assert!(dense(&rep, 1).max_abs_diff(&e1) < 1e-14);
            assert!(dense(&rep, 3).max_abs_diff(&e1) < 1e-14);
            assert!(dense(&rep, 2).max_abs_diff(&tableau_e2_closed_form(x)) < 1e-14);
            assert!(verify_tl_relations(&rep, 1e-12).passed);
        }
    }

    #[test]
    fn one_dimensional_irreps() {
        let rep = build_tableau_rep(3, Shape::new(3, 0).unwrap(), 1.7).unwrap();
        assert_eq!(rep.dim(), 1);
        assert_eq!(dense(&rep, 1)[(0, 0)], Complex64::new(0.0, 0.0));
        assert_eq!(dense(&rep, 2)[(0, 0)], Complex64::new(0.0, 0.0));
        let rep = build_tableau_rep(2, Shape::new(1, 1).unwrap(), 1.7).unwrap();
        assert_eq!(dense(&rep, 1)[(0, 0)], Complex64::new(1.7, 0.0));
    }

    #[test]
    fn all_small_shapes_satisfy_relations() {
        for x in [1.9, 2.5, 3.3, 1.3, -0.7] {
            for n in 2..=7 {
                for shape in Shape::all_with_cells(n) {
                    let rep = build_tableau_rep(n, shape, x).unwrap();
                    let r = verify_tl_relations(&rep, DEFAULT_TOL);
                    assert!(r.passed, "x={x} shape={shape}: {r:?}");
                }
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            build_tableau_rep(5, Shape { top: 2, bottom: 3 }, 1.9),
            Err(Error::InvalidShape { .. })
        ));
        assert!(matches!(
            build_tableau_rep(5, Shape::new(2, 2).unwrap(), 1.9),
            Err(Error::StrandMismatch { .. })
        ));
        assert!(matches!(
            build_tableau_rep(6, Shape::new(5, 1).unwrap(), golden_ratio()),
            Err(Error::SingularQNumber { .. })
        ));
    }
}
