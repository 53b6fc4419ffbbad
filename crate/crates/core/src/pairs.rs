//! Linear l-intersection pairs: the rank characterization of `l`, tuning by
//! monomial equivalence, the two propagation rules, pairs from
//! super-regular matrices and a small achievability probe.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalog::CodeCatalog;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::grs::grs_pair;
use crate::matrix::{weighted_permutation, Matrix};

/// Default number of random monomial maps tried by [`tune_by_monomial`].
pub const DEFAULT_BUDGET: usize = 10_000;

/// Two codes of equal length together with the dimension of their
/// intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionPair {
    c1: LinearCode,
    c2: LinearCode,
    ell: usize,
}

impl IntersectionPair {
    pub fn new(c1: LinearCode, c2: LinearCode) -> Result<IntersectionPair> {
        let ell = c1.intersect(&c2)?.k();
        Ok(IntersectionPair { c1, c2, ell })
    }

    pub fn c1(&self) -> &LinearCode {
        &self.c1
    }

    pub fn c2(&self) -> &LinearCode {
        &self.c2
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn n(&self) -> usize {
        self.c1.n()
    }

    pub fn field(&self) -> &Field {
        self.c1.field()
    }

    /// `k1 - rank(G1 H2^t)`.
    pub fn ell_by_rank(&self) -> usize {
        rank_route(&self.c1, &self.c2)
    }

    /// `k2 - rank(G2 H1^t)`.
    pub fn ell_by_rank_reverse(&self) -> usize {
        rank_route(&self.c2, &self.c1)
    }

    pub fn bounds(&self) -> (usize, usize) {
        ell_bounds(self.n(), self.c1.k(), self.c2.k()).expect("dimensions are at most n")
    }

    pub fn classify(&self) -> PairClass {
        classify(self)
    }
}

fn rank_route(a: &LinearCode, b: &LinearCode) -> usize {
    let prod = a
        .generator()
        .mul(&b.parity_check().transpose())
        .expect("codes share field and length");
    a.k() - prod.rank()
}

/// `k1 - rank(G1 H2^t)`, the intersection dimension without forming the
/// intersection.
pub fn ell_by_rank(c1: &LinearCode, c2: &LinearCode) -> Result<usize> {
    if c1.field() != c2.field() {
        return Err(Error::FieldMismatch);
    }
    if c1.n() != c2.n() {
        return Err(Error::LengthMismatch(c1.n(), c2.n()));
    }
    Ok(rank_route(c1, c2))
}

/// The range `max(0, k1 + k2 - n) ..= min(k1, k2)` every pair must fall in.
pub fn ell_bounds(n: usize, k1: usize, k2: usize) -> Result<(usize, usize)> {
    if k1 > n || k2 > n {
        return Err(Error::InvalidDims(format!("k1 = {k1}, k2 = {k2} with n = {n}")));
    }
    Ok(((k1 + k2).saturating_sub(n), k1.min(k2)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PairClass {
    /// `l = 0` and `k1 + k2 = n`.
    #[serde(rename = "LCP")]
    Lcp,
    /// `C2` is the dual of `C1` and they meet trivially.
    #[serde(rename = "LCD-config")]
    LcdConfig,
    /// `C2` is the dual of `C1`; `l` is the hull dimension.
    #[serde(rename = "hull-config")]
    HullConfig,
    #[serde(rename = "generic")]
    Generic,
}

impl std::fmt::Display for PairClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PairClass::Lcp => "LCP",
            PairClass::LcdConfig => "LCD-config",
            PairClass::HullConfig => "hull-config",
            PairClass::Generic => "generic",
        })
    }
}

/// The dual configurations take precedence: an LCD code and its dual also
/// form an LCP, but the more specific label is reported.
pub fn classify(pair: &IntersectionPair) -> PairClass {
    let dual = pair.c2 == pair.c1.dual();
    match (pair.ell, dual) {
        (0, true) => PairClass::LcdConfig,
        (_, true) => PairClass::HullConfig,
        (0, false) if pair.c1.k() + pair.c2.k() == pair.n() => PairClass::Lcp,
        _ => PairClass::Generic,
    }
}

/// A successful monomial search.
#[derive(Clone, Debug)]
pub struct TuneResult {
    /// The weighted permutation `A` with `C1' = C1 A`.
    pub monomial: Matrix,
    pub pair: IntersectionPair,
    /// Number of maps tried, including the successful one.
    pub trials: usize,
}

fn random_monomial(field: &Field, n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let q = field.q();
    let weights: Vec<Elem> = (0..n)
        .map(|_| if q == 2 { Elem::ONE } else { field.elem(rng.gen_range(1..q) as u64).expect("below q") })
        .collect();
    weighted_permutation(field, n, &perm, &weights).expect("valid permutation")
}

/// Searches for a weighted permutation `A` such that `C1 A` meets `C2` in
/// dimension `target`. The identity is tried first, then maps drawn from a
/// generator seeded with `seed`. Failure says nothing about existence.
pub fn tune_by_monomial(
    c1: &LinearCode,
    c2: &LinearCode,
    target: usize,
    budget: usize,
    seed: u64,
) -> Result<TuneResult> {
    let n = c1.n();
    ell_by_rank(c1, c2)?;
    let (lo, hi) = ell_bounds(n, c1.k(), c2.k())?;
    if target < lo || target > hi {
        return Err(Error::ParameterOutOfRange(format!("target l = {target} outside [{lo}, {hi}]")));
    }
    if budget == 0 {
        return Err(Error::ParameterOutOfRange("budget must be at least 1".into()));
    }
    let field = c1.field();
    let g1 = c1.generator();
    let h2t = c2.parity_check().transpose();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..budget {
        let a = if trial == 0 { Matrix::identity(field, n) } else { random_monomial(field, n, &mut rng) };
        let rank = g1.mul(&a)?.mul(&h2t)?.rank();
        if c1.k() - rank == target {
            let pair = IntersectionPair::new(c1.apply_monomial(&a)?, c2.clone())?;
            debug_assert_eq!(pair.ell(), target);
            return Ok(TuneResult { monomial: a, pair, trials: trial + 1 });
        }
    }
    Err(Error::NotFoundWithinBudget { target, budget })
}

/// Rows of `base` followed by the rows of `gen` that enlarge the span.
fn complete_basis(base: &Matrix, gen: &Matrix) -> Matrix {
    let mut out = base.clone();
    let mut rank = out.rank();
    for i in 0..gen.rows() {
        let candidate = out.vstack(&gen.select_rows(&[i])).expect("same width");
        let r = candidate.rank();
        if r > rank {
            out = candidate;
            rank = r;
        }
    }
    out
}

fn check_gamma(pair: &IntersectionPair, gamma: usize) -> Result<()> {
    if gamma > pair.ell {
        return Err(Error::GammaOutOfRange { gamma, ell: pair.ell });
    }
    Ok(())
}

/// Keeps `C1` and shrinks `C2` to a `[n, k2 - l + gamma]` subcode meeting
/// `C1` in dimension `gamma`.
///
/// A basis `b_1..b_l` of the intersection is extended to a basis of `C2`
/// by pivot completion, and `b_1..b_{l - gamma}` are dropped.
pub fn reduce_ell(pair: &IntersectionPair, gamma: usize) -> Result<IntersectionPair> {
    check_gamma(pair, gamma)?;
    if gamma == pair.ell {
        return Ok(pair.clone());
    }
    let inter = pair.c1.intersect(&pair.c2)?;
    let basis = complete_basis(inter.generator(), pair.c2.generator());
    let keep: Vec<usize> = (pair.ell - gamma..basis.rows()).collect();
    let sub = LinearCode::from_generator(&basis.select_rows(&keep))?;
    IntersectionPair::new(pair.c1.clone(), sub)
}

/// Lengthens both codes by `l - gamma` coordinates so that they meet in
/// dimension `gamma` while keeping both dimensions.
///
/// Each step appends a zero to every `C1` codeword, and to `C2` appends a 1
/// on the last intersection basis vector and 0 on the rest of a completed
/// basis. The intersection is recomputed before every step.
pub fn extend_length(pair: &IntersectionPair, gamma: usize) -> Result<IntersectionPair> {
    check_gamma(pair, gamma)?;
    let mut cur = pair.clone();
    while cur.ell > gamma {
        let field = cur.field().clone();
        let n = cur.n();
        let inter = cur.c1.intersect(&cur.c2)?;
        let basis = complete_basis(inter.generator(), cur.c2.generator());
        let last = cur.ell - 1;
        let append = |m: &Matrix, one_at: Option<usize>| -> Result<Matrix> {
            let rows: Vec<Vec<Elem>> = (0..m.rows())
                .map(|i| {
                    let mut r = m.row(i).to_vec();
                    r.push(if Some(i) == one_at { Elem::ONE } else { Elem::ZERO });
                    r
                })
                .collect();
            Matrix::from_rows(&field, n + 1, &rows)
        };
        let c1 = LinearCode::from_generator(&append(cur.c1.generator(), None)?)?;
        let c2 = LinearCode::from_generator(&append(&basis, Some(last))?)?;
        cur = IntersectionPair::new(c1, c2)?;
    }
    Ok(cur)
}

/// From an `n x n` super-regular matrix: `C` is spanned by the first `i`
/// rows, `D` by the first `ell` of those together with rows `i..i+j`.
/// Every set of rows of a super-regular matrix spans an MDS code, so this
/// gives MDS codes `[n, i]` and `[n, j + ell]` meeting in dimension `ell`.
pub fn pair_from_superregular(a: &Matrix, i: usize, j: usize, ell: usize) -> Result<IntersectionPair> {
    let n = a.rows();
    if a.cols() != n {
        return Err(Error::NotSquare);
    }
    if i > n || j > n - i || ell > i {
        return Err(Error::IndexOutOfRange(format!("i = {i}, j = {j}, l = {ell} with n = {n}")));
    }
    if !a.is_super_regular()? {
        return Err(Error::NotSuperRegular);
    }
    let c_rows: Vec<usize> = (0..i).collect();
    let d_rows: Vec<usize> = (0..ell).chain(i..i + j).collect();
    let c = LinearCode::from_generator(&a.select_rows(&c_rows))?;
    let d = LinearCode::from_generator(&a.select_rows(&d_rows))?;
    IntersectionPair::new(c, d)
}

/// A uniformly random code of the given dimension: random full-rank
/// generator drawn until its rank is `k`.
pub fn random_code(field: &Field, n: usize, k: usize, rng: &mut impl Rng) -> Result<LinearCode> {
    if k > n {
        return Err(Error::InvalidDims(format!("k = {k} > n = {n}")));
    }
    loop {
        let data: Vec<Elem> = (0..n * k).map(|_| Elem::raw(rng.gen_range(0..field.q()))).collect();
        let code = LinearCode::from_generator(&Matrix::new(field, k, n, data)?)?;
        if code.k() == k {
            return Ok(code);
        }
    }
}

/// How a probe witness was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessRoute {
    Monomial,
    Grs,
}

#[derive(Clone, Debug)]
pub struct Witness {
    pub route: WitnessRoute,
    pub pair: IntersectionPair,
    pub monomial: Option<Matrix>,
    pub d1: Option<usize>,
    pub d2: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct ProbeEntry {
    pub ell: usize,
    /// `None` means no witness was found; it is not a nonexistence claim.
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug)]
pub struct ProbeReport {
    pub q: u32,
    pub n: usize,
    pub k1: usize,
    pub k2: usize,
    /// Distances of the seed codes the monomial route starts from.
    pub seed_d1: Option<usize>,
    pub seed_d2: Option<usize>,
    pub entries: Vec<ProbeEntry>,
}

/// Largest length the probe accepts.
pub const PROBE_MAX_N: usize = 8;

fn seed_code(catalog: &CodeCatalog, field: &Field, n: usize, k: usize, seed: u64) -> Result<LinearCode> {
    if let Some(c) = catalog.best(field, n, k) {
        return Ok(c);
    }
    // best of a few random codes, deterministic in the seed
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((n as u64) << 32) ^ k as u64);
    let mut best: Option<(usize, LinearCode)> = None;
    for _ in 0..32 {
        let c = random_code(field, n, k, &mut rng)?;
        let d = c.min_distance().unwrap_or(0);
        if best.as_ref().is_none_or(|(bd, _)| d > *bd) {
            best = Some((d, c));
        }
    }
    Ok(best.expect("at least one sample").1)
}

/// For each feasible `l`, looks for an l-intersection pair with the seed
/// codes' parameters: first by monomial tuning of fixed seed codes, then by
/// the GRS construction when `3 <= q` and `n <= q + 1`. Entries without a
/// witness stay open.
pub fn conjecture_probe(
    field: &Field,
    n: usize,
    k1: usize,
    k2: usize,
    budget: usize,
    seed: u64,
) -> Result<ProbeReport> {
    let q = field.q();
    if !(2..=4).contains(&q) || n > PROBE_MAX_N || n == 0 {
        return Err(Error::SearchSpaceTooLarge(format!(
            "probe supports q in {{2, 3, 4}} and 1 <= n <= {PROBE_MAX_N}, got q = {q}, n = {n}"
        )));
    }
    let (lo, hi) = ell_bounds(n, k1, k2)?;
    let catalog = CodeCatalog::builtin();
    let s1 = seed_code(&catalog, field, n, k1, seed)?;
    let s2 = seed_code(&catalog, field, n, k2, seed.wrapping_add(1))?;
    let seed_d1 = s1.min_distance().ok();
    let seed_d2 = s2.min_distance().ok();
    let mut entries = Vec::new();
    for ell in lo..=hi {
        let mut witness = match tune_by_monomial(&s1, &s2, ell, budget, seed) {
            Ok(t) => Some(Witness {
                route: WitnessRoute::Monomial,
                d1: seed_d1,
                d2: seed_d2,
                pair: t.pair,
                monomial: Some(t.monomial),
            }),
            Err(Error::NotFoundWithinBudget { .. }) => None,
            Err(e) => return Err(e),
        };
        if witness.is_none() && q >= 3 && n <= q as usize + 1 {
            if let Ok(pair) = grs_pair(field, n, k1, k2, ell) {
                let d1 = pair.c1().min_distance().ok();
                let d2 = pair.c2().min_distance().ok();
                witness = Some(Witness { route: WitnessRoute::Grs, pair, monomial: None, d1, d2 });
            }
        }
        entries.push(ProbeEntry { ell, witness });
    }
    Ok(ProbeReport { q, n, k1, k2, seed_d1, seed_d2, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::worked_example;

    fn gf(q: u64) -> Field {
        Field::with_order(q).unwrap()
    }

    fn example_pair() -> IntersectionPair {
        IntersectionPair::new(worked_example::c1(), worked_example::c2()).unwrap()
    }

    #[test]
    fn rank_routes_on_example() {
        let p = example_pair();
        assert_eq!(p.ell(), 3);
        assert_eq!(p.ell_by_rank(), 3);
        assert_eq!(p.ell_by_rank_reverse(), 3);
        // the simplex code is the dual of the Hamming code
        assert_eq!(p.classify(), PairClass::HullConfig);
    }

    #[test]
    fn rank_route_special_cases() {
        let f = gf(3);
        let c = random_code(&f, 6, 3, &mut ChaCha8Rng::seed_from_u64(1)).unwrap();
        let full = LinearCode::full(&f, 6).unwrap();
        assert_eq!(ell_by_rank(&c, &full).unwrap(), 3);
        assert_eq!(ell_by_rank(&c, &c.dual()).unwrap(), c.hull_dim());
        let short = LinearCode::full(&f, 5).unwrap();
        assert!(matches!(ell_by_rank(&c, &short), Err(Error::LengthMismatch(6, 5))));
    }

    #[test]
    fn bounds() {
        assert_eq!(ell_bounds(7, 4, 3).unwrap(), (0, 3));
        assert_eq!(ell_bounds(8, 3, 5).unwrap(), (0, 3));
        assert_eq!(ell_bounds(5, 5, 5).unwrap(), (5, 5));
        assert_eq!(ell_bounds(5, 4, 3).unwrap(), (2, 3));
        assert!(matches!(ell_bounds(5, 6, 1), Err(Error::InvalidDims(_))));
    }

    #[test]
    fn classification() {
        let f = gf(2);
        // repetition [3,1] is LCD over GF(2)
        let r = LinearCode::repetition(&f, 3).unwrap();
        let lcd = IntersectionPair::new(r.clone(), r.dual()).unwrap();
        assert_eq!(lcd.classify(), PairClass::LcdConfig);
        let s = worked_example::c1().dual();
        let hull = IntersectionPair::new(s.clone(), s.dual()).unwrap();
        assert_eq!(hull.classify(), PairClass::HullConfig);
        let a = LinearCode::from_generator(&Matrix::from_values(&f, 2, &[vec![1, 0]]).unwrap()).unwrap();
        let b = LinearCode::from_generator(&Matrix::from_values(&f, 2, &[vec![1, 1]]).unwrap()).unwrap();
        assert_eq!(IntersectionPair::new(a, b).unwrap().classify(), PairClass::Lcp);
    }

    #[test]
    fn tuning_identity_first() {
        let c1 = worked_example::c1();
        let c2 = worked_example::c2();
        let t = tune_by_monomial(&c1, &c2, 3, 10, 0).unwrap();
        assert_eq!(t.trials, 1);
        assert_eq!(t.monomial, Matrix::identity(c1.field(), 7));
    }

    #[test]
    fn tuning_reaches_every_value_on_example() {
        let c1 = worked_example::c1();
        let c2 = worked_example::c2();
        for target in 0..=3 {
            let t = tune_by_monomial(&c1, &c2, target, DEFAULT_BUDGET, 7).unwrap();
            assert_eq!(t.pair.ell(), target);
            assert_eq!(t.pair.c1().min_distance().unwrap(), 3);
            assert_eq!(t.pair.c1(), &c1.apply_monomial(&t.monomial).unwrap());
        }
        assert!(matches!(tune_by_monomial(&c1, &c2, 4, 10, 0), Err(Error::ParameterOutOfRange(_))));
    }

    #[test]
    fn tuning_is_reproducible() {
        let c1 = worked_example::c1();
        let c2 = worked_example::c2();
        let a = tune_by_monomial(&c1, &c2, 0, DEFAULT_BUDGET, 42).unwrap();
        let b = tune_by_monomial(&c1, &c2, 0, DEFAULT_BUDGET, 42).unwrap();
        assert_eq!(a.monomial, b.monomial);
        assert_eq!(a.trials, b.trials);
    }

    #[test]
    fn reduce_examples() {
        let p = example_pair();
        assert_eq!(reduce_ell(&p, 3).unwrap(), p);
        let r = reduce_ell(&p, 0).unwrap();
        assert_eq!(r.c2().k(), 0);
        assert_eq!(r.ell(), 0);
        let r1 = reduce_ell(&p, 1).unwrap();
        assert_eq!((r1.c2().k(), r1.ell()), (1, 1));
        assert!(r1.c2().min_distance().unwrap() >= 4);
        assert!(matches!(reduce_ell(&p, 4), Err(Error::GammaOutOfRange { gamma: 4, ell: 3 })));
    }

    #[test]
    fn extend_examples() {
        let p = example_pair();
        assert_eq!(extend_length(&p, 3).unwrap(), p);
        let e = extend_length(&p, 2).unwrap();
        assert_eq!((e.n(), e.c1().k(), e.c2().k(), e.ell()), (8, 4, 3, 2));
        assert_eq!(e.c1().min_distance().unwrap(), 3);
        assert!(e.c2().min_distance().unwrap() >= 4);
        let z = extend_length(&p, 0).unwrap();
        assert_eq!((z.n(), z.ell()), (10, 0));
    }

    #[test]
    fn superregular_pairs() {
        let f = gf(9);
        // x_i + x_j never vanishes for these nodes
        let x: Vec<Elem> = [1, 3, 4, 5].map(Elem::raw).to_vec();
        let a = crate::matrix::cauchy(&f, &x, &x).unwrap();
        let p = pair_from_superregular(&a, 2, 1, 1).unwrap();
        assert_eq!((p.c1().k(), p.c2().k(), p.ell()), (2, 2, 1));
        assert!(p.c1().is_mds().unwrap() && p.c2().is_mds().unwrap());
        let z = pair_from_superregular(&a, 0, 3, 0).unwrap();
        assert_eq!((z.c1().k(), z.ell()), (0, 0));
        let full = pair_from_superregular(&a, 2, 2, 1).unwrap();
        assert_eq!(full.c1().code_sum(full.c2()).unwrap().k(), 4);
        assert!(matches!(pair_from_superregular(&a, 2, 3, 0), Err(Error::IndexOutOfRange(_))));
        let id = Matrix::identity(&f, 4);
        assert!(matches!(pair_from_superregular(&id, 1, 1, 0), Err(Error::NotSuperRegular)));
    }

    #[test]
    fn probe_on_example_parameters() {
        let r = conjecture_probe(&gf(2), 7, 4, 3, 2_000, 0).unwrap();
        assert_eq!(r.entries.len(), 4);
        assert!(r.entries.iter().all(|e| e.witness.is_some()));
        for e in &r.entries {
            assert_eq!(e.witness.as_ref().unwrap().pair.ell(), e.ell);
        }
    }

    #[test]
    fn probe_full_space() {
        let r = conjecture_probe(&gf(3), 4, 4, 4, 10, 0).unwrap();
        assert_eq!(r.entries.len(), 1);
        assert_eq!(r.entries[0].ell, 4);
        assert!(r.entries[0].witness.is_some());
    }

    #[test]
    fn probe_grs_route() {
        let r = conjecture_probe(&gf(3), 4, 2, 2, 200, 0).unwrap();
        let ells: Vec<usize> = r.entries.iter().filter(|e| e.witness.is_some()).map(|e| e.ell).collect();
        assert_eq!(ells, vec![0, 1, 2]);
        assert!(matches!(conjecture_probe(&gf(5), 4, 2, 2, 10, 0), Err(Error::SearchSpaceTooLarge(_))));
    }
}
