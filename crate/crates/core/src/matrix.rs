//! Dense matrices over a finite field.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

/// Largest `min(rows, cols)` accepted by [`Matrix::is_super_regular`].
pub const SUPER_REGULAR_LIMIT: usize = 6;

/// A row-major dense matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug)]
pub struct Rref {
    /// Reduced row-echelon form, same shape as the input.
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn new(field: &Field, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|e| !field.contains(**e)) {
            return Err(Error::ElementOutOfRange { value: bad.value() as u64, q: field.q() });
        }
        Ok(Matrix { field: field.clone(), rows, cols, data })
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![Elem::ZERO; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    /// Builds from rows of elements; every row must have `cols` entries.
    pub fn from_rows(field: &Field, cols: usize, rows: &[Vec<Elem>]) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a matrix with {cols} columns",
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Matrix::new(field, rows.len(), cols, data)
    }

    /// Builds from rows of integer encodings.
    pub fn from_values(field: &Field, cols: usize, rows: &[Vec<u32>]) -> Result<Matrix> {
        let rows: Vec<Vec<Elem>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.elem(v as u64)).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        Matrix::from_rows(field, cols, &rows)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn to_values(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|e| e.value()).collect()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    /// Applies `g` to every entry.
    pub fn map(&self, g: impl Fn(Elem) -> Elem) -> Matrix {
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&e| g(e)).collect(),
        }
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.mul_add(a, other.get(t, j), out.data[idx]);
                }
            }
        }
        Ok(out)
    }

    /// `v * self` for a row vector `v`.
    pub fn row_times(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} times {}x{} matrix",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        let f = &self.field;
        let mut out = vec![Elem::ZERO; self.cols];
        for (i, &a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = f.mul_add(a, self.get(i, j), *o);
            }
        }
        Ok(out)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "stacking {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Matrix { field: self.field.clone(), rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.rows);
        for i in 0..self.rows {
            data.extend(idx.iter().map(|&j| self.get(i, j)));
        }
        Matrix { field: self.field.clone(), rows: self.rows, cols: idx.len(), data }
    }

    /// Reduced row-echelon form with its rank and pivot columns.
    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                let neg = f.neg(factor);
                for j in c..m.cols {
                    let v = f.mul_add(neg, m.get(r, j), m.get(i, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, rank: r, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Nonzero rows of the reduced row-echelon form.
    pub fn row_basis(&self) -> Matrix {
        let r = self.rref();
        let idx: Vec<usize> = (0..r.rank).collect();
        r.matrix.select_rows(&idx)
    }

    /// Basis of the right null space `{v : self * v^t = 0}`, one vector per row.
    pub fn kernel(&self) -> Matrix {
        let f = &self.field;
        let Rref { matrix: r, rank, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(f, free.len(), self.cols);
        for (row, &fc) in free.iter().enumerate() {
            out.set(row, fc, Elem::ONE);
            for (i, &pc) in pivots.iter().enumerate().take(rank) {
                out.set(row, pc, f.neg(r.get(i, fc)));
            }
        }
        out
    }

    pub fn determinant(&self) -> Result<Elem> {
        if self.rows != self.cols {
            return Err(Error::NotSquare);
        }
        let f = &self.field;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Elem::ONE;
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(Elem::ZERO);
            };
            if p != c {
                m.swap_rows(p, c);
                det = f.neg(det);
            }
            let pivot = m.get(c, c);
            det = f.mul(det, pivot);
            let inv = f.inv(pivot)?;
            for i in c + 1..n {
                let factor = f.mul(m.get(i, c), inv);
                if factor.is_zero() {
                    continue;
                }
                let neg = f.neg(factor);
                for j in c..n {
                    let v = f.mul_add(neg, m.get(c, j), m.get(i, j));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::NotSquare);
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(&self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, Elem::ONE);
        }
        let r = aug.rref();
        if r.pivots.iter().take(n).enumerate().any(|(i, &c)| c != i) || r.rank < n {
            return Err(Error::Singular);
        }
        let idx: Vec<usize> = (n..2 * n).collect();
        Ok(r.matrix.select_cols(&idx))
    }

    /// True iff every square submatrix is nonsingular.
    pub fn is_super_regular(&self) -> Result<bool> {
        let m = self.rows.min(self.cols);
        if m > SUPER_REGULAR_LIMIT {
            return Err(Error::TooLargeForExhaustiveCheck { limit: SUPER_REGULAR_LIMIT, got: m });
        }
        if self.data.iter().any(|e| e.is_zero()) {
            return Ok(false);
        }
        for k in 2..=m {
            let row_sets = subsets(self.rows, k);
            let col_sets = subsets(self.cols, k);
            for rs in &row_sets {
                let sub = self.select_rows(rs);
                for cs in &col_sets {
                    if sub.select_cols(cs).determinant()?.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] != i + n - k) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// The matrix with `weights[i]` at `(i, perm[i])` and zeros elsewhere.
pub fn weighted_permutation(field: &Field, n: usize, perm: &[usize], weights: &[Elem]) -> Result<Matrix> {
    if perm.len() != n || weights.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "permutation of length {} and {} weights for n = {n}",
            perm.len(),
            weights.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::NotAPermutation(n));
        }
        seen[p] = true;
    }
    if weights.iter().any(|w| w.is_zero()) {
        return Err(Error::ZeroWeight);
    }
    let mut m = Matrix::zeros(field, n, n);
    for i in 0..n {
        m.set(i, perm[i], weights[i]);
    }
    Ok(m)
}

fn all_distinct(v: &[Elem]) -> bool {
    v.iter().enumerate().all(|(i, a)| !v[..i].contains(a))
}

/// The Cauchy matrix with entries `1 / (x_i + y_j)`.
pub fn cauchy(field: &Field, x: &[Elem], y: &[Elem]) -> Result<Matrix> {
    if !all_distinct(x) || !all_distinct(y) {
        return Err(Error::RepeatedNode);
    }
    let mut m = Matrix::zeros(field, x.len(), y.len());
    for (i, &xi) in x.iter().enumerate() {
        for (j, &yj) in y.iter().enumerate() {
            let s = field.add(xi, yj);
            let v = field.inv(s).map_err(|_| Error::SingularCell { i, j })?;
            m.set(i, j, v);
        }
    }
    Ok(m)
}

/// The square Vandermonde matrix with `(i, j)` entry `a_i^j`.
pub fn vandermonde(field: &Field, a: &[Elem]) -> Matrix {
    let n = a.len();
    let mut m = Matrix::zeros(field, n, n);
    for (i, &ai) in a.iter().enumerate() {
        let mut p = Elem::ONE;
        for j in 0..n {
            m.set(i, j, p);
            p = field.mul(p, ai);
        }
    }
    m
}

/// `V(a)^{-1} V(b)` with the Vandermonde matrices taken one node per
/// column (the transpose of [`vandermonde`]). Super-regular whenever the
/// `a_i` and `b_j` are `2n` distinct elements. With one node per row the
/// same product can have zero entries: over GF(5), a = (0, 1) and
/// b = (2, 3) give `[[1, 2], [0, 1]]`.
pub fn vandermonde_superregular(field: &Field, a: &[Elem], b: &[Elem]) -> Result<Matrix> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch(format!("{} and {} nodes", a.len(), b.len())));
    }
    let all: Vec<Elem> = a.iter().chain(b).copied().collect();
    if !all_distinct(&all) {
        return Err(Error::NotDistinct);
    }
    vandermonde(field, a).transpose().inverse()?.mul(&vandermonde(field, b).transpose())
}
