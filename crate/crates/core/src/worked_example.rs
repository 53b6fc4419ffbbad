//! The binary `[7,4,3]` / `[7,3,4]` example pair and three monomial maps
//! that move its intersection dimension from 3 down to 2, 1 and 0.

use serde::Serialize;

use crate::code::LinearCode;
use crate::error::Result;
use crate::gf::{Elem, Field};
use crate::matrix::{weighted_permutation, Matrix};
use crate::pairs::IntersectionPair;

/// Row-to-column maps of the three permutation matrices.
pub const MONOMIAL_PERMS: [[usize; 7]; 3] = [
    [0, 1, 2, 3, 4, 6, 5],
    [1, 0, 2, 3, 4, 6, 5],
    [6, 0, 2, 3, 4, 1, 5],
];

/// Intersection dimensions expected for the base pair and for each map.
pub const EXPECTED_ELLS: [usize; 4] = [3, 2, 1, 0];

pub fn gf2() -> Field {
    Field::new(2, 1).expect("GF(2)")
}

/// Generator of the `[7,4,3]` Hamming code.
pub fn g1() -> Matrix {
    Matrix::from_values(
        &gf2(),
        7,
        &[
            vec![1, 0, 0, 0, 0, 1, 1],
            vec![0, 1, 0, 0, 1, 0, 1],
            vec![0, 0, 1, 0, 1, 1, 0],
            vec![0, 0, 0, 1, 1, 1, 1],
        ],
    )
    .expect("valid matrix")
}

/// Generator of the `[7,3,4]` code.
pub fn g2() -> Matrix {
    Matrix::from_values(
        &gf2(),
        7,
        &[vec![1, 0, 1, 0, 1, 0, 1], vec![0, 1, 1, 0, 0, 1, 1], vec![0, 0, 0, 1, 1, 1, 1]],
    )
    .expect("valid matrix")
}

pub fn c1() -> LinearCode {
    LinearCode::from_generator(&g1()).expect("nonempty")
}

pub fn c2() -> LinearCode {
    LinearCode::from_generator(&g2()).expect("nonempty")
}

/// The permutation matrices `A_1, A_2, A_3`.
pub fn monomials() -> Vec<Matrix> {
    let f = gf2();
    MONOMIAL_PERMS
        .iter()
        .map(|perm| weighted_permutation(&f, 7, perm, &[Elem::ONE; 7]).expect("valid permutation"))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ExampleLine {
    pub label: String,
    pub expected: usize,
    pub ell_by_intersection: usize,
    pub ell_by_rank: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExampleReport {
    pub lines: Vec<ExampleLine>,
    pub ok: bool,
}

/// Recomputes the four intersection dimensions of the example.
pub fn reproduce() -> Result<ExampleReport> {
    let base = c1();
    let other = c2();
    let mut lines = Vec::new();
    let mut variants = vec![("base".to_string(), base.clone())];
    for (i, a) in monomials().iter().enumerate() {
        variants.push((format!("A{}", i + 1), base.apply_monomial(a)?));
    }
    for ((label, code), &expected) in variants.into_iter().zip(EXPECTED_ELLS.iter()) {
        let pair = IntersectionPair::new(code, other.clone())?;
        let by_rank = pair.ell_by_rank();
        lines.push(ExampleLine {
            label,
            expected,
            ell_by_intersection: pair.ell(),
            ell_by_rank: by_rank,
            ok: pair.ell() == expected && by_rank == expected,
        });
    }
    let ok = lines.iter().all(|l| l.ok);
    Ok(ExampleReport { lines, ok })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproduces_all_four_values() {
        let report = reproduce().unwrap();
        let ells: Vec<usize> = report.lines.iter().map(|l| l.ell_by_intersection).collect();
        assert_eq!(ells, EXPECTED_ELLS);
        assert!(report.ok);
    }

    #[test]
    fn codes_have_stated_parameters() {
        assert_eq!(c1().summary().unwrap().d, 3);
        assert_eq!(c2().summary().unwrap().d, 4);
        assert_eq!(c1().k(), 4);
        assert_eq!(c2().k(), 3);
    }
}
