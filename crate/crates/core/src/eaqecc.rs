//! Entanglement-assisted quantum code parameters `[[n, k, d; c]]_q` from
//! pairs of classical codes.

use std::cmp::Ordering;
use std::fmt;
use std::ops::RangeInclusive;

use serde::{Serialize, Serializer};

use crate::catalog::CodeCatalog;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::grs::{complementary_mds_pair, grs_pair, grs_pair_admissible};
use crate::matrix::Matrix;
use crate::pairs::{tune_by_monomial, IntersectionPair};

/// A reduced fraction with positive denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rational {
    pub fn new(num: i64, den: u64) -> Rational {
        assert!(den > 0, "zero denominator");
        let g = gcd(num.unsigned_abs(), den).max(1);
        Rational { num: num / g as i64, den: den / g }
    }

    pub fn num(self) -> i64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parameters `[[n, k, d; c]]_q` with derived rates and Singleton slack.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EaqeccParams {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    /// `None` when a distance was too expensive to compute.
    pub d: Option<usize>,
    pub c: usize,
    pub rate: Rational,
    pub net_rate: Rational,
    /// `n + c - k - 2(d - 1)`.
    pub singleton_slack: Option<i64>,
    pub mds: bool,
    /// No logical qudits, or built from a zero or full code.
    pub degenerate: bool,
}

impl EaqeccParams {
    pub fn new(q: u32, n: usize, k: usize, d: Option<usize>, c: usize) -> EaqeccParams {
        let slack = d.map(|d| n as i64 + c as i64 - k as i64 - 2 * (d as i64 - 1));
        EaqeccParams {
            q,
            n,
            k,
            d,
            c,
            rate: Rational::new(k as i64, n as u64),
            net_rate: Rational::new(k as i64 - c as i64, n as u64),
            singleton_slack: slack,
            mds: slack == Some(0),
            degenerate: k == 0,
        }
    }

    /// Validity gate: `c <= n - 1` and the Singleton bound.
    pub fn certify(&self) -> Result<()> {
        if self.c + 1 > self.n {
            return Err(Error::CertificationFailed(format!("{self}: c = {} exceeds n - 1", self.c)));
        }
        match self.singleton_slack {
            Some(s) if s >= 0 => Ok(()),
            Some(s) => Err(Error::CertificationFailed(format!("{self}: Singleton slack {s} < 0"))),
            None => Err(Error::CertificationFailed(format!("{self}: distance unavailable"))),
        }
    }

    pub fn is_certified(&self) -> bool {
        self.certify().is_ok()
    }
}

impl fmt::Display for EaqeccParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.d {
            Some(d) => write!(f, "[[{}, {}, {}; {}]]_{}", self.n, self.k, d, self.c, self.q),
            None => write!(f, "[[{}, {}, ?; {}]]_{}", self.n, self.k, self.c, self.q),
        }
    }
}

/// Minimum distance with the convention that the zero code has distance
/// `n + 1`, so that bounds stated for all codes stay meaningful.
pub fn code_distance(code: &LinearCode) -> Result<usize> {
    if code.k() == 0 {
        return Ok(code.n() + 1);
    }
    code.min_distance().map_err(|e| match e {
        Error::TooLargeToEnumerate { count, limit } => {
            Error::DistanceTooExpensive(format!("{count} codewords exceed the limit {limit}"))
        }
        e => e,
    })
}

/// `[[n, k1 + k2 - n + c, min(d1, d2); c]]` with `c = rank(H1 H2^t)`, for
/// codes `D1`, `D2` given by full-rank parity checks.
pub fn eaqecc_from_parity(h1: &Matrix, h2: &Matrix, d1: usize, d2: usize) -> Result<EaqeccParams> {
    if h1.cols() != h2.cols() || h1.field() != h2.field() {
        return Err(Error::DimensionMismatch(format!(
            "parity checks with {} and {} columns",
            h1.cols(),
            h2.cols()
        )));
    }
    let n = h1.cols();
    let (r1, r2) = (h1.rank(), h2.rank());
    if r1 != h1.rows() || r2 != h2.rows() {
        return Err(Error::DimensionMismatch("parity checks must have full row rank".into()));
    }
    let c = h1.mul(&h2.transpose())?.rank();
    let k = (n - r1) + (n - r2) + c - n;
    let mut p = EaqeccParams::new(h1.field().q(), n, k, Some(d1.min(d2)), c);
    p.degenerate |= r1 == 0 || r2 == 0 || r1 == n || r2 == n;
    Ok(p)
}

fn is_trivial(code: &LinearCode) -> bool {
    code.k() == 0 || code.k() == code.n()
}

/// Parameters without distances; used when distances are out of reach.
pub fn eaqecc_from_pair_partial(pair: &IntersectionPair) -> EaqeccParams {
    let (k1, k2, ell) = (pair.c1().k(), pair.c2().k(), pair.ell());
    let d = code_distance(&pair.c1().dual())
        .and_then(|a| code_distance(pair.c2()).map(|b| a.min(b)))
        .ok();
    let mut p = EaqeccParams::new(pair.field().q(), pair.n(), k2 - ell, d, k1 - ell);
    p.degenerate |= is_trivial(pair.c1()) || is_trivial(pair.c2());
    p
}

/// `[[n, k2 - l, min(d(C1^⊥), d2); k1 - l]]` for an l-intersection pair.
///
/// The entanglement count is cross-checked against `rank(G1 H2^t)`, the
/// value the parity-check construction assigns to `D1 = C1^⊥`, `D2 = C2`.
pub fn eaqecc_from_pair(pair: &IntersectionPair) -> Result<EaqeccParams> {
    let d1_perp = code_distance(&pair.c1().dual())?;
    let d2 = code_distance(pair.c2())?;
    let (k1, k2, ell) = (pair.c1().k(), pair.c2().k(), pair.ell());
    let c_rank = pair
        .c1()
        .generator()
        .mul(&pair.c2().parity_check().transpose())?
        .rank();
    if c_rank != k1 - ell {
        return Err(Error::CertificationFailed(format!(
            "rank(G1 H2^t) = {c_rank} but k1 - l = {}",
            k1 - ell
        )));
    }
    let mut p = EaqeccParams::new(pair.field().q(), pair.n(), k2 - ell, Some(d1_perp.min(d2)), k1 - ell);
    p.degenerate |= is_trivial(pair.c1()) || is_trivial(pair.c2());
    Ok(p)
}

/// How an MDS pair was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MdsRoute {
    /// `GRS(fL)` and `GRS(hL)`.
    Grs,
    /// A GRS code against the dual of a GRS code with solved multipliers.
    Complementary,
    /// Monomial tuning of two GRS codes.
    Monomial,
}

#[derive(Clone, Debug)]
pub struct MdsEaqecc {
    pub params: EaqeccParams,
    pub pair: IntersectionPair,
    pub route: MdsRoute,
}

/// Trials spent on the monomial route of [`mds_eaqecc`].
pub const MDS_MONOMIAL_BUDGET: usize = 20_000;

/// The MDS EAQECC `[[n, n - k - l, k + 1; k - l]]_q` from an l-intersection
/// pair of MDS codes `[n, k]` and `[n, n - k]`.
///
/// The pair comes from the GRS construction when it applies. Otherwise a
/// GRS code is paired with the dual of a second GRS code whose multipliers
/// solve a Hankel rank condition, and as a last resort two GRS codes are
/// tuned by monomial maps. The resulting parameters are recomputed from
/// the codes and must match the formula exactly.
pub fn mds_eaqecc(field: &Field, n: usize, k: usize, ell: usize, seed: u64) -> Result<MdsEaqecc> {
    let q = field.q() as usize;
    if q < 3 || k > n || n > q + 1 || n == 0 || ell > k.min(n - k) {
        return Err(Error::ParameterOutOfRange(format!("q = {q}, n = {n}, k = {k}, l = {ell}")));
    }
    let (pair, route) = mds_pair(field, n, k, ell, seed)?;
    let params = eaqecc_from_pair(&pair)?;
    let expected = EaqeccParams::new(field.q(), n, n - k - ell, Some(k + 1), k - ell);
    if params.n != expected.n || params.k != expected.k || params.d != expected.d || params.c != expected.c {
        return Err(Error::CertificationFailed(format!("built {params}, expected {expected}")));
    }
    if params.singleton_slack != Some(0) {
        return Err(Error::CertificationFailed(format!("{params} is not MDS")));
    }
    Ok(MdsEaqecc { params, pair, route })
}

fn mds_pair(field: &Field, n: usize, k: usize, ell: usize, seed: u64) -> Result<(IntersectionPair, MdsRoute)> {
    let q = field.q() as usize;
    if grs_pair_admissible(q, n, k, n - k, ell) {
        return Ok((grs_pair(field, n, k, n - k, ell)?, MdsRoute::Grs));
    }
    if let Ok(pair) = complementary_mds_pair(field, n, k, ell, seed) {
        return Ok((pair, MdsRoute::Complementary));
    }
    let catalog = CodeCatalog::empty();
    let (Some(c1), Some(c2)) = (catalog.best(field, n, k), catalog.best(field, n, n - k)) else {
        return Err(Error::CatalogMiss { n, k });
    };
    match tune_by_monomial(&c1, &c2, ell, MDS_MONOMIAL_BUDGET, seed) {
        Ok(t) => Ok((t.pair, MdsRoute::Monomial)),
        Err(Error::NotFoundWithinBudget { .. }) => Err(Error::CertificationFailed(format!(
            "no l = {ell} pair of MDS [{n}, {k}] and [{n}, {}] codes found over GF({q})",
            n - k
        ))),
        Err(e) => Err(e),
    }
}

/// One emitted tuple of [`catalog_search`].
#[derive(Clone, Debug)]
pub struct CatalogSearchEntry {
    pub n: usize,
    pub r: usize,
    pub k1: usize,
    pub k2: usize,
    pub ell: usize,
    pub params: EaqeccParams,
    /// `l <= n/2 - r`, which guarantees rate at least 1/2.
    pub rate_at_least_half: bool,
    pub c1_name: String,
    pub c2_name: String,
}

#[derive(Clone, Debug)]
pub struct CatalogSearch {
    pub entries: Vec<CatalogSearchEntry>,
    /// `(n, k)` cells skipped because the catalog had no such code.
    pub misses: Vec<(usize, usize)>,
}

fn best_named(catalog: &CodeCatalog, field: &Field, n: usize, k: usize) -> Option<(String, LinearCode)> {
    let mut best: Option<(usize, String, LinearCode)> = None;
    for e in catalog.candidates(field, n, k) {
        let d = code_distance(&e.code).unwrap_or(0);
        if best.as_ref().is_none_or(|(bd, _, _)| d > *bd) {
            best = Some((d, e.name, e.code));
        }
    }
    best.map(|(_, name, code)| (name, code))
}

/// For every length in `n_range`, every `r` with `2r < n` (or only the given
/// `r`), and every `r <= k1 < n - r <= k2 <= n`: `C2` is the best catalog
/// `[n, k2]` code and `C1` the dual of the best catalog `[n, n - k1]` code.
/// Emits `[[n, k2 - l, min(d(C1^⊥), d(C2)); k1 - l]]` for each cell; all
/// of these have positive net rate `(k2 - k1)/n`.
pub fn catalog_search(
    field: &Field,
    n_range: RangeInclusive<usize>,
    r: Option<usize>,
    catalog: &CodeCatalog,
) -> Result<CatalogSearch> {
    let mut entries = Vec::new();
    let mut misses = Vec::new();
    for n in n_range {
        let rs: Vec<usize> = match r {
            Some(r) if r >= 1 && 2 * r < n => vec![r],
            Some(_) => Vec::new(),
            None => (1..=(n.saturating_sub(1)) / 2).collect(),
        };
        for r in rs {
            for k2 in n - r..=n {
                for k1 in r..n - r {
                    let Some((c2_name, c2)) = best_named(catalog, field, n, k2) else {
                        misses.push((n, k2));
                        continue;
                    };
                    let Some((d_name, d)) = best_named(catalog, field, n, n - k1) else {
                        misses.push((n, n - k1));
                        continue;
                    };
                    let pair = IntersectionPair::new(d.dual(), c2)?;
                    let params = eaqecc_from_pair(&pair)?;
                    params.certify()?;
                    let ell = pair.ell();
                    entries.push(CatalogSearchEntry {
                        n,
                        r,
                        k1,
                        k2,
                        ell,
                        rate_at_least_half: 2 * ell + 2 * r <= n,
                        params,
                        c1_name: format!("dual({d_name})"),
                        c2_name,
                    });
                }
            }
        }
    }
    if entries.is_empty() {
        if let Some(&(n, k)) = misses.first() {
            return Err(Error::CatalogMiss { n, k });
        }
    }
    Ok(CatalogSearch { entries, misses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::worked_example;

    fn gf(q: u64) -> Field {
        Field::with_order(q).unwrap()
    }

    #[test]
    fn rationals() {
        assert_eq!(Rational::new(4, 6).to_string(), "2/3");
        assert_eq!(Rational::new(-2, 4).to_string(), "-1/2");
        assert_eq!(Rational::new(0, 7).to_string(), "0/1");
        assert!(Rational::new(1, 2) < Rational::new(2, 3));
    }

    #[test]
    fn parity_route_examples() {
        let h = worked_example::c1().parity_check().clone();
        // the rows of H span the self-orthogonal simplex code
        let p = eaqecc_from_parity(&h, &h, 3, 3).unwrap();
        assert_eq!((p.n, p.k, p.d, p.c), (7, 1, Some(3), 0));
        let f = gf(5);
        let id = Matrix::identity(&f, 3);
        let padded = Matrix::from_values(&f, 4, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0]]).unwrap();
        let p = eaqecc_from_parity(&padded, &padded, 1, 1).unwrap();
        assert_eq!(p.c, 3);
        assert!(matches!(eaqecc_from_parity(&id, &padded, 1, 1), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn pair_route_on_example() {
        let base = IntersectionPair::new(worked_example::c1(), worked_example::c2()).unwrap();
        let p = eaqecc_from_pair(&base).unwrap();
        assert_eq!((p.n, p.k, p.d, p.c), (7, 0, Some(4), 1));
        assert!(p.degenerate);
        let a3 = &worked_example::monomials()[2];
        let tuned = IntersectionPair::new(worked_example::c1().apply_monomial(a3).unwrap(), worked_example::c2()).unwrap();
        let p = eaqecc_from_pair(&tuned).unwrap();
        assert_eq!((p.n, p.k, p.d, p.c), (7, 3, Some(4), 4));
        assert_eq!(p.singleton_slack, Some(2));
        assert!(p.is_certified());
    }

    #[test]
    fn identical_codes() {
        let c = worked_example::c2();
        let p = eaqecc_from_pair(&IntersectionPair::new(c.clone(), c).unwrap()).unwrap();
        assert_eq!((p.k, p.c), (0, 0));
        assert!(p.degenerate);
    }

    #[test]
    fn mds_examples() {
        let f = gf(5);
        let m = mds_eaqecc(&f, 6, 2, 0, 0).unwrap();
        assert_eq!(m.params.to_string(), "[[6, 4, 3; 2]]_5");
        assert_eq!(m.params.singleton_slack, Some(0));
        let m = mds_eaqecc(&f, 6, 2, 1, 0).unwrap();
        assert_eq!(m.params.to_string(), "[[6, 3, 3; 1]]_5");
        let m = mds_eaqecc(&f, 5, 2, 2, 0).unwrap();
        assert_eq!(m.params.c, 0);
        assert!(matches!(mds_eaqecc(&f, 7, 2, 0, 0), Err(Error::ParameterOutOfRange(_))));
    }

    #[test]
    fn catalog_search_binary_seven() {
        let out = catalog_search(&gf(2), 7..=7, Some(1), &CodeCatalog::builtin()).unwrap();
        assert!(!out.entries.is_empty());
        for e in &out.entries {
            assert!(e.params.net_rate > Rational::new(0, 1));
            assert_eq!(e.params.net_rate, Rational::new(e.k2 as i64 - e.k1 as i64, 7));
            if e.rate_at_least_half {
                assert!(e.params.rate >= Rational::new(1, 2));
            }
        }
        assert!(matches!(
            catalog_search(&gf(2), 9..=9, Some(2), &CodeCatalog::empty()),
            Err(Error::CatalogMiss { .. })
        ));
    }
}
