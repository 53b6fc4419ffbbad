//! Linear codes held by their canonical (RREF) generator matrix.

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::matrix::Matrix;

/// Most codewords [`LinearCode::min_distance`] will enumerate on either side.
pub const ENUMERATION_LIMIT: u128 = 1 << 22;

/// A linear `[n, k]` code over a finite field.
#[derive(Clone, Debug)]
pub struct LinearCode {
    n: usize,
    gen: Matrix,
    parity: OnceLock<Matrix>,
    min_dist: OnceLock<usize>,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.gen == other.gen
    }
}

impl Eq for LinearCode {}

/// Headline parameters of a code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeSummary {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub mds: bool,
}

impl LinearCode {
    /// The code spanned by the rows of `g`. Rows may be dependent.
    pub fn from_generator(g: &Matrix) -> Result<LinearCode> {
        if g.cols() == 0 {
            return Err(Error::EmptyMatrix);
        }
        Ok(LinearCode {
            n: g.cols(),
            gen: g.row_basis(),
            parity: OnceLock::new(),
            min_dist: OnceLock::new(),
        })
    }

    /// The code `{v : h v^t = 0}`.
    pub fn from_parity_check(h: &Matrix) -> Result<LinearCode> {
        if h.cols() == 0 {
            return Err(Error::EmptyMatrix);
        }
        LinearCode::from_generator(&h.kernel())
    }

    pub fn zero(field: &Field, n: usize) -> Result<LinearCode> {
        LinearCode::from_generator(&Matrix::zeros(field, 0, n))
    }

    pub fn full(field: &Field, n: usize) -> Result<LinearCode> {
        LinearCode::from_generator(&Matrix::identity(field, n))
    }

    /// The `[n, 1, n]` repetition code.
    pub fn repetition(field: &Field, n: usize) -> Result<LinearCode> {
        LinearCode::from_generator(&Matrix::new(field, 1, n, vec![Elem::ONE; n])?)
    }

    pub fn field(&self) -> &Field {
        self.gen.field()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    /// Canonical generator matrix (reduced row-echelon form, full rank).
    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    /// Canonical `(n - k) x n` parity-check matrix.
    pub fn parity_check(&self) -> &Matrix {
        self.parity.get_or_init(|| self.gen.kernel().row_basis())
    }

    /// Whether `v` is a codeword.
    pub fn contains(&self, v: &[Elem]) -> bool {
        if v.len() != self.n {
            return false;
        }
        let h = self.parity_check();
        (0..h.rows()).all(|i| {
            let f = self.field();
            f.sum(h.row(i).iter().zip(v).map(|(&a, &b)| f.mul(a, b))).is_zero()
        })
    }

    /// Euclidean dual.
    pub fn dual(&self) -> LinearCode {
        LinearCode::from_generator(self.parity_check()).expect("n > 0")
    }

    /// The `p^h`-dual `{u : sum u_i c_i^(p^h) = 0 for all c in C}`.
    pub fn galois_dual(&self, h: u32) -> Result<LinearCode> {
        let f = self.field();
        if h >= f.e() {
            return Err(Error::InvalidExponentIndex { h, e: f.e() });
        }
        let twisted = self.gen.map(|a| f.frobenius(a, h).expect("h checked"));
        LinearCode::from_generator(&twisted.kernel())
    }

    fn check_compatible(&self, other: &LinearCode) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        if self.n != other.n {
            return Err(Error::LengthMismatch(self.n, other.n));
        }
        Ok(())
    }

    /// `C1 ∩ C2`, the kernel of the stacked parity checks.
    pub fn intersect(&self, other: &LinearCode) -> Result<LinearCode> {
        self.check_compatible(other)?;
        let stacked = self.parity_check().vstack(other.parity_check())?;
        LinearCode::from_generator(&stacked.kernel())
    }

    /// `C1 + C2`, spanned by the stacked generators.
    pub fn code_sum(&self, other: &LinearCode) -> Result<LinearCode> {
        self.check_compatible(other)?;
        LinearCode::from_generator(&self.gen.vstack(&other.gen)?)
    }

    /// `dim(C ∩ C^⊥)`.
    pub fn hull_dim(&self) -> usize {
        self.intersect(&self.dual()).expect("same field and length").k()
    }

    /// `k - rank(G G^t)`.
    pub fn hull_dim_by_gram(&self) -> usize {
        let g = &self.gen;
        self.k() - g.mul(&g.transpose()).expect("shapes agree").rank()
    }

    /// `n - k - rank(H H^t)`.
    pub fn hull_dim_by_parity_gram(&self) -> usize {
        let h = self.parity_check();
        h.rows() - h.mul(&h.transpose()).expect("shapes agree").rank()
    }

    /// `q^k` as an exact count, saturating.
    pub fn size(&self) -> u128 {
        (self.field().q() as u128).checked_pow(self.k() as u32).unwrap_or(u128::MAX)
    }

    /// Minimum Hamming weight of a nonzero codeword.
    ///
    /// Enumerates whichever of the code and its dual is smaller, within
    /// [`ENUMERATION_LIMIT`]; the dual side goes through the MacWilliams
    /// identities.
    pub fn min_distance(&self) -> Result<usize> {
        if let Some(&d) = self.min_dist.get() {
            return Ok(d);
        }
        if self.k() == 0 {
            return Err(Error::ZeroCode);
        }
        let dual = self.dual();
        let d = if self.size() <= ENUMERATION_LIMIT && self.size() <= dual.size() {
            min_weight(&self.gen)
        } else if dual.size() <= ENUMERATION_LIMIT {
            let b = weight_distribution(dual.generator(), ENUMERATION_LIMIT)?;
            let a = macwilliams(&b, self.field().q() as i128, self.n, dual.k())?;
            (1..=self.n).find(|&j| a[j] > 0).expect("a nonzero code has a nonzero codeword")
        } else {
            return Err(Error::TooLargeToEnumerate { count: self.size(), limit: ENUMERATION_LIMIT });
        };
        let _ = self.min_dist.set(d);
        Ok(d)
    }

    /// Minimum distance by direct enumeration only, ignoring the cache.
    pub fn min_distance_by_enumeration(&self, limit: u128) -> Result<usize> {
        if self.k() == 0 {
            return Err(Error::ZeroCode);
        }
        if self.size() > limit {
            return Err(Error::TooLargeToEnumerate { count: self.size(), limit });
        }
        Ok(min_weight(&self.gen))
    }

    /// Number of codewords of each weight `0..=n`.
    pub fn weight_distribution(&self) -> Result<Vec<u128>> {
        weight_distribution(&self.gen, ENUMERATION_LIMIT)
    }

    pub fn is_mds(&self) -> Result<bool> {
        Ok(self.min_distance()? == self.n - self.k() + 1)
    }

    pub fn summary(&self) -> Result<CodeSummary> {
        let d = self.min_distance()?;
        Ok(CodeSummary {
            q: self.field().q(),
            n: self.n,
            k: self.k(),
            d,
            mds: d == self.n - self.k() + 1,
        })
    }

    /// Every codeword, in message-space enumeration order.
    pub fn codewords(&self, limit: u128) -> Result<Vec<Vec<Elem>>> {
        if self.size() > limit {
            return Err(Error::TooLargeToEnumerate { count: self.size(), limit });
        }
        let mut out = Vec::new();
        for_each_codeword(&self.gen, |w, _| {
            out.push(w.to_vec());
            true
        });
        Ok(out)
    }

    /// The equivalent code `{c A : c in C}` for a weighted permutation `A`.
    pub fn apply_monomial(&self, a: &Matrix) -> Result<LinearCode> {
        if !is_monomial(a) || a.rows() != self.n || a.field() != self.field() {
            return Err(Error::NotMonomial);
        }
        let code = LinearCode::from_generator(&self.gen.mul(a)?)?;
        if let Some(&d) = self.min_dist.get() {
            let _ = code.min_dist.set(d);
        }
        Ok(code)
    }
}

/// One nonzero entry in every row and every column.
pub fn is_monomial(a: &Matrix) -> bool {
    if a.rows() != a.cols() {
        return false;
    }
    let n = a.rows();
    let mut col_used = vec![false; n];
    for i in 0..n {
        let nz: Vec<usize> = (0..n).filter(|&j| !a.get(i, j).is_zero()).collect();
        if nz.len() != 1 || col_used[nz[0]] {
            return false;
        }
        col_used[nz[0]] = true;
    }
    true
}

/// Visits every codeword spanned by the rows of `gen` (assumed independent)
/// together with its weight. Stops early when `visit` returns false.
///
/// The message space is walked as an F_p-vector space: each generator row
/// times each power `x^t` of the field's polynomial basis is one F_p-basis
/// vector, and a base-p odometer over their coefficients changes the current
/// word by a single basis vector per digit update.
fn for_each_codeword(gen: &Matrix, mut visit: impl FnMut(&[Elem], usize) -> bool) {
    let f = gen.field();
    let n = gen.cols();
    let p = f.p();
    let mut basis: Vec<Vec<Elem>> = Vec::new();
    for i in 0..gen.rows() {
        for t in 0..f.e() {
            let scalar = Elem::raw(p.pow(t));
            basis.push(gen.row(i).iter().map(|&g| f.mul(g, scalar)).collect());
        }
    }
    let mut word = vec![Elem::ZERO; n];
    let mut weight = 0usize;
    let mut digits = vec![0u32; basis.len()];
    if !visit(&word, weight) {
        return;
    }
    loop {
        let mut pos = 0;
        loop {
            if pos == basis.len() {
                return;
            }
            for (w, &b) in word.iter_mut().zip(&basis[pos]) {
                if b.is_zero() {
                    continue;
                }
                let before = !w.is_zero();
                *w = f.add(*w, b);
                let after = !w.is_zero();
                weight = weight + after as usize - before as usize;
            }
            digits[pos] += 1;
            if digits[pos] < p {
                break;
            }
            // p additions of the same vector cancel, so the word is back to
            // its value before this digit moved: carry into the next digit
            digits[pos] = 0;
            pos += 1;
        }
        if !visit(&word, weight) {
            return;
        }
    }
}

fn min_weight(gen: &Matrix) -> usize {
    let mut best = usize::MAX;
    for_each_codeword(gen, |_, w| {
        if w > 0 && w < best {
            best = w;
        }
        best > 1
    });
    best
}

fn weight_distribution(gen: &Matrix, limit: u128) -> Result<Vec<u128>> {
    let q = gen.field().q() as u128;
    let count = q.checked_pow(gen.rows() as u32).unwrap_or(u128::MAX);
    if count > limit {
        return Err(Error::TooLargeToEnumerate { count, limit });
    }
    let mut hist = vec![0u128; gen.cols() + 1];
    for_each_codeword(gen, |_, w| {
        hist[w] += 1;
        true
    });
    Ok(hist)
}

fn binomial(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// Weight distribution of a code from that of its dual (dimension `dual_k`).
fn macwilliams(b: &[u128], q: i128, n: usize, dual_k: usize) -> Result<Vec<i128>> {
    let overflow = || Error::Overflow("MacWilliams transform");
    let dual_size = q.checked_pow(dual_k as u32).ok_or_else(overflow)?;
    let mut a = vec![0i128; n + 1];
    for (j, aj) in a.iter_mut().enumerate() {
        let mut total: i128 = 0;
        for (i, &bi) in b.iter().enumerate() {
            if bi == 0 {
                continue;
            }
            // Krawtchouk polynomial K_j(i)
            let mut kj: i128 = 0;
            for s in 0..=j.min(i) {
                let sign = if s % 2 == 0 { 1 } else { -1 };
                let pw = (q - 1).checked_pow((j - s) as u32).ok_or_else(overflow)?;
                let term = binomial(i, s)
                    .checked_mul(binomial(n - i, j - s))
                    .and_then(|t| t.checked_mul(pw))
                    .ok_or_else(overflow)?;
                kj = kj.checked_add(sign * term).ok_or_else(overflow)?;
            }
            let contrib = (bi as i128).checked_mul(kj).ok_or_else(overflow)?;
            total = total.checked_add(contrib).ok_or_else(overflow)?;
        }
        *aj = total / dual_size;
    }
    Ok(a)
}
