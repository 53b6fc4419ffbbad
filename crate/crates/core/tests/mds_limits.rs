//! Parameters where no MDS pair exists, checked exhaustively.

use ellpair::eaqecc::mds_eaqecc;
use ellpair::matrix::Matrix;
use ellpair::{Elem, Error, Field, LinearCode};

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Whether some 4-dimensional subcode of the [9, 5] code `c` is MDS.
///
/// A subcode is the kernel of a functional `lam` on message space; it is MDS
/// iff it contains none of the minimum-weight words, and for an MDS [9, 5]
/// code those are the multiples of one word per set of 4 zero coordinates.
fn has_mds_hyperplane(c: &LinearCode) -> bool {
    let f = c.field();
    let g = c.generator();
    let low: Vec<Vec<Elem>> = subsets(9, 4)
        .into_iter()
        .map(|zeros| {
            let k = g.select_cols(&zeros).transpose().kernel();
            assert_eq!(k.rows(), 1);
            k.row(0).to_vec()
        })
        .collect();
    let q = f.q();
    let mut lam = [0u32; 5];
    let total = (q as u64).pow(5);
    for v in 1..total {
        let mut x = v;
        for l in lam.iter_mut() {
            *l = (x % q as u64) as u32;
            x /= q as u64;
        }
        // one representative per projective point
        if lam.iter().rev().find(|&&a| a != 0) != Some(&1) {
            continue;
        }
        let hits = low.iter().any(|w| f.sum(w.iter().zip(&lam).map(|(&a, &b)| f.mul(a, f.elem(b as u64).unwrap()))).is_zero());
        if !hits {
            return true;
        }
    }
    false
}

fn arc_code(f: &Field, exps: [i64; 4]) -> LinearCode {
    let mut rows = vec![Vec::new(); 4];
    for t in f.elements() {
        for (r, &e) in rows.iter_mut().zip(&exps) {
            r.push(f.pow(t, e).unwrap());
        }
    }
    for (i, r) in rows.iter_mut().enumerate() {
        r.push(if i == 3 { Elem::ONE } else { Elem::ZERO });
    }
    LinearCode::from_generator(&Matrix::from_rows(f, 9, &rows).unwrap()).unwrap()
}

#[test]
fn no_nested_mds_pair_over_gf8_length_9() {
    let f = Field::with_order(8).unwrap();
    // every 9-arc of PG(3, 8) is one of these two up to equivalence
    for exps in [[0, 1, 2, 3], [0, 1, 4, 5]] {
        let a = arc_code(&f, exps);
        assert!(a.is_mds().unwrap(), "{exps:?}");
        let big = a.dual();
        assert_eq!(big.k(), 5);
        assert!(big.is_mds().unwrap());
        assert!(!has_mds_hyperplane(&big), "{exps:?}");
    }
    // positive control: over GF(9) the Reed-Solomon [9, 5] code has the
    // Reed-Solomon [9, 4] code inside it
    let f9 = Field::with_order(9).unwrap();
    let rows: Vec<Vec<Elem>> = (0..5).map(|j| f9.elements().map(|t| f9.pow(t, j).unwrap()).collect()).collect();
    let rs = LinearCode::from_generator(&Matrix::from_rows(&f9, 9, &rows).unwrap()).unwrap();
    assert!(has_mds_hyperplane(&rs));
    for k in [4, 5] {
        assert!(matches!(mds_eaqecc(&f, 9, k, 4, 0), Err(Error::CertificationFailed(_))));
    }
}

#[test]
fn nested_mds_pair_exists_below_full_length() {
    // one coordinate shorter, the nested pair exists
    let f = Field::with_order(8).unwrap();
    let m = mds_eaqecc(&f, 8, 4, 4, 0).unwrap();
    assert_eq!(m.params.c, 0);
}
