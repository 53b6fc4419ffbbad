//! Invariant suites over every module, run at a quick or a full scale.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::code::LinearCode;
use crate::eaqecc::mds_eaqecc;
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::grs::{
    default_points, first_root_free_denominator, grs_intersection_theorem_check, grs_pair, grs_pair_admissible,
    grs_sum_theorem_check, GrsSpec,
};
use crate::matrix::{cauchy, Matrix};
use crate::pairs::{extend_length, random_code, reduce_ell, IntersectionPair};
use crate::poly::{count_irreducibles, irreducibles, monic_polys, Poly};
use crate::worked_example;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    Quick,
    Full,
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Profile::Quick => "quick",
            Profile::Full => "full",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub checks: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SelfcheckReport {
    pub profile: Profile,
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
    pub passed: bool,
}

/// Failure messages kept per suite; further failures are only counted.
const MAX_REPORTED: usize = 20;

struct Suite {
    name: &'static str,
    checks: usize,
    skipped: usize,
    failed: usize,
    failures: Vec<String>,
}

impl Suite {
    fn new(name: &'static str) -> Suite {
        Suite { name, checks: 0, skipped: 0, failed: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failed += 1;
        if self.failures.len() < MAX_REPORTED {
            self.failures.push(msg);
        }
    }

    /// Records an unexpected error as a failure.
    fn guard<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checks += 1;
                self.fail(format!("{}: {e}", what()));
                None
            }
        }
    }

    fn finish(self) -> SuiteReport {
        let mut failures = self.failures;
        if self.failed > failures.len() {
            failures.push(format!("... and {} more", self.failed - failures.len()));
        }
        SuiteReport {
            name: self.name.to_string(),
            checks: self.checks,
            skipped: self.skipped,
            passed: self.failed == 0,
            failures,
        }
    }
}

fn fields(orders: &[u64]) -> Vec<Field> {
    orders.iter().map(|&q| Field::with_order(q).expect("prime power")).collect()
}

/// Runs every suite.
pub fn run(profile: Profile, seed: u64) -> SelfcheckReport {
    run_with_fields(profile, seed, &[])
}

/// Like [`run`], with extra fields (possibly built from an unchecked
/// modulus) added to the field-axiom suite.
pub fn run_with_fields(profile: Profile, seed: u64, extra: &[Field]) -> SelfcheckReport {
    let full = profile == Profile::Full;
    let mut field_list = fields(if full {
        &[2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128, 243, 256]
    } else {
        &[2, 3, 4, 5, 7, 8, 9]
    });
    field_list.extend(extra.iter().cloned());
    let suites = vec![
        field_suite(&field_list, seed),
        poly_suite(full, seed),
        matrix_suite(full, seed),
        code_suite(full, seed),
        pair_suite(full, seed),
        grs_suite(full),
        eaqecc_suite(full, seed),
    ];
    let passed = suites.iter().all(|s| s.passed);
    SelfcheckReport { profile, seed, suites, passed }
}

/// Inverses, a primitive element, and ring axioms on sampled triples.
pub fn field_suite(fields: &[Field], seed: u64) -> SuiteReport {
    let mut s = Suite::new("field");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for f in fields {
        let q = f.q();
        for a in f.nonzero_elements() {
            match f.inv(a) {
                Ok(b) => s.check(f.mul(a, b) == f.one(), || format!("{f}: {a} * inv({a}) != 1")),
                Err(e) => s.fail(format!("{f}: inv({a}): {e}")),
            }
        }
        let order = |a: Elem| {
            let mut x = a;
            let mut k = 1u32;
            while x != f.one() && k < q {
                x = f.mul(x, a);
                k += 1;
            }
            k
        };
        s.check(f.nonzero_elements().any(|a| order(a) == q - 1), || {
            format!("{f}: no element of multiplicative order {}", q - 1)
        });
        for _ in 0..200 {
            let [a, b, c] = [0; 3].map(|_| Elem::raw(rng.gen_range(0..q)));
            s.check(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)), || {
                format!("{f}: distributivity fails at ({a}, {b}, {c})")
            });
            s.check(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c), || {
                format!("{f}: associativity fails at ({a}, {b}, {c})")
            });
            s.check(f.add(a, f.neg(a)).is_zero(), || format!("{f}: {a} + (-{a}) != 0"));
        }
    }
    s.finish()
}

fn poly_suite(full: bool, seed: u64) -> SuiteReport {
    let mut s = Suite::new("poly");
    let (qs, max_deg): (&[u64], usize) = if full { (&[2, 3, 4, 5, 7, 8, 9], 4) } else { (&[2, 3, 4, 5], 3) };
    for f in fields(qs) {
        let q = f.q() as u128;
        for n in 1..=max_deg {
            let exhaustive = monic_polys(&f, n)
                .filter(|p| p.is_irreducible().unwrap_or(false))
                .count() as u128;
            let formula = s.guard(count_irreducibles(q as u64, n as u64), || format!("N_{q}({n})"));
            s.check(formula == Some(exhaustive), || {
                format!("N_{q}({n}): formula {formula:?}, enumeration {exhaustive}")
            });
            let closed = match n {
                1 => Some(q),
                2 => Some((q * q - q) / 2),
                _ => None,
            };
            if let Some(c) = closed {
                s.check(c == exhaustive, || format!("N_{q}({n}) closed form {c} != {exhaustive}"));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ f.q() as u64);
        let random_poly = |rng: &mut ChaCha8Rng| {
            let deg = rng.gen_range(1..=5);
            let mut v: Vec<u32> = (0..deg).map(|_| rng.gen_range(0..f.q())).collect();
            v.push(rng.gen_range(1..f.q()));
            Poly::from_values(&f, &v).expect("values below q")
        };
        for _ in 0..if full { 200 } else { 40 } {
            let (a, b) = (random_poly(&mut rng), random_poly(&mut rng));
            let (Some(g), Some(l), Some(ab)) = (
                s.guard(a.gcd(&b), || "gcd".into()),
                s.guard(a.lcm(&b), || "lcm".into()),
                s.guard(a.mul(&b), || "mul".into()),
            ) else {
                continue;
            };
            let gl = g.mul(&l).expect("same field");
            s.check(gl == ab.monic(), || format!("gcd * lcm != monic(ab) for {a} and {b}"));
            s.check(a.rem(&g).is_ok_and(|r| r.is_zero()), || format!("gcd does not divide {a}"));
            let (qt, r) = a.divrem(&b).expect("nonzero divisor");
            let back = qt.mul(&b).and_then(|x| x.add(&r)).expect("same field");
            s.check(back == a, || format!("division identity fails for {a} / {b}"));
        }
    }
    s.finish()
}

fn random_matrix(f: &Field, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let data = (0..rows * cols).map(|_| Elem::raw(rng.gen_range(0..f.q()))).collect();
    Matrix::new(f, rows, cols, data).expect("sizes match")
}

/// A Cauchy matrix of order `n` on the first `n` field elements `x` and
/// the first `n` elements `y` outside `-x`; needs `2n <= q`.
pub fn standard_cauchy(field: &Field, n: usize) -> Result<Matrix> {
    let x: Vec<Elem> = field.elements().take(n).collect();
    let y: Vec<Elem> = field.elements().filter(|&b| x.iter().all(|&a| !field.add(a, b).is_zero())).take(n).collect();
    if x.len() < n || y.len() < n {
        return Err(Error::ParameterOutOfRange(format!("no Cauchy matrix of order {n} over {field}")));
    }
    cauchy(field, &x, &y)
}

/// The `n x n` block `A` of the systematic generator `[I | A]` of a GRS
/// code `[2n, n]`, which is super-regular because the code is MDS; needs
/// `2n <= q + 1`.
pub fn systematic_superregular(field: &Field, n: usize) -> Result<Matrix> {
    let len = 2 * n;
    if len > field.q() as usize + 1 || n == 0 {
        return Err(Error::ParameterOutOfRange(format!("no MDS [{len}, {n}] GRS code over {field}")));
    }
    let ext = len == field.q() as usize + 1;
    let pts = default_points(field, len, ext);
    let p = first_root_free_denominator(field, n, &pts)
        .ok_or_else(|| Error::ParameterOutOfRange(format!("no root-free denominator of degree {n}")))?;
    let g = GrsSpec::new(field, pts, p, ext).generator_matrix()?.rref().matrix;
    Ok(g.select_cols(&(n..len).collect::<Vec<_>>()))
}

fn matrix_suite(full: bool, seed: u64) -> SuiteReport {
    let mut s = Suite::new("matrix");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for f in fields(&[2, 3, 4, 5, 7, 9]) {
        for _ in 0..if full { 100 } else { 25 } {
            let rows = rng.gen_range(1..=6);
            let cols = rng.gen_range(1..=7);
            let m = random_matrix(&f, rows, cols, &mut rng);
            let r = m.rank();
            let k = m.kernel();
            s.check(r + k.rows() == cols, || format!("{f}: rank-nullity fails"));
            let prod = m.mul(&k.transpose()).expect("shapes agree");
            s.check(prod.is_zero(), || format!("{f}: kernel vectors are not annihilated"));
            s.check(m.transpose().rank() == r, || format!("{f}: row rank != column rank"));
            let sq = random_matrix(&f, rows, rows, &mut rng);
            let det = sq.determinant().expect("square");
            s.check(det.is_zero() == (sq.rank() < rows), || format!("{f}: determinant disagrees with rank"));
            if let Ok(inv) = sq.inverse() {
                let id = Matrix::identity(&f, rows);
                s.check(sq.mul(&inv).ok() == Some(id), || format!("{f}: A * inv(A) != I"));
            }
        }
    }
    for f in fields(&[7, 9, 11]) {
        for n in 1..=if full { 5 } else { 4 } {
            let q = f.q() as usize;
            let built = [
                ("Cauchy", 2 * n <= q, standard_cauchy(&f, n)),
                ("systematic", 2 * n <= q + 1, systematic_superregular(&f, n)),
            ];
            for (name, exists, m) in built {
                if !exists {
                    s.skipped += 1;
                    continue;
                }
                if let Some(m) = s.guard(m, || format!("{name} matrix of order {n} over {f}")) {
                    let sr = s.guard(m.is_super_regular(), || "super-regularity".into());
                    s.check(sr == Some(true), || format!("{f}: {name} matrix of order {n} is not super-regular"));
                }
            }
        }
    }
    s.finish()
}

fn code_suite(full: bool, seed: u64) -> SuiteReport {
    let mut s = Suite::new("code");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for f in fields(&[2, 3, 4, 5]) {
        for _ in 0..if full { 60 } else { 15 } {
            let n = rng.gen_range(1..=7);
            let k = rng.gen_range(1..=n);
            let Some(c) = s.guard(random_code(&f, n, k, &mut rng), || "random code".into()) else { continue };
            let dual = c.dual();
            s.check(dual.k() == n - k, || format!("{f}: dual of [{n}, {k}] has dimension {}", dual.k()));
            s.check(dual.dual() == c, || format!("{f}: double dual differs"));
            let g = c.generator().mul(&dual.generator().transpose()).expect("shapes agree");
            s.check(g.is_zero(), || format!("{f}: code not orthogonal to its dual"));
            let h = c.hull_dim();
            s.check(h == c.hull_dim_by_gram() && h == c.hull_dim_by_parity_gram(), || {
                format!("{f}: hull routes disagree on a [{n}, {k}] code")
            });
            let d = s.guard(c.min_distance(), || "min distance".into());
            let d_enum = s.guard(c.min_distance_by_enumeration(1 << 20), || "enumerated distance".into());
            s.check(d == d_enum, || format!("{f}: distance {d:?} vs enumeration {d_enum:?}"));
            if let Some(d) = d {
                s.check(d <= n - k + 1, || format!("{f}: [{n}, {k}, {d}] breaks the Singleton bound"));
            }
        }
    }
    s.finish()
}

/// Intersection dimension by listing `C1` and testing membership in `C2`.
pub fn ell_by_enumeration(c1: &LinearCode, c2: &LinearCode) -> Result<usize> {
    let words = c1.codewords(1 << 20)?;
    let common = words.iter().filter(|w| c2.contains(w)).count() as u128;
    let q = c1.field().q() as u128;
    let mut ell = 0;
    let mut size = 1u128;
    while size < common {
        size *= q;
        ell += 1;
    }
    if size != common {
        return Err(Error::CertificationFailed(format!("{common} common codewords is not a power of {q}")));
    }
    Ok(ell)
}

fn pair_suite(full: bool, seed: u64) -> SuiteReport {
    let mut s = Suite::new("pairs");
    match worked_example::reproduce() {
        Ok(r) => {
            for line in &r.lines {
                s.check(line.ok, || format!("worked example {}: expected {}", line.label, line.expected));
            }
        }
        Err(e) => s.fail(format!("worked example: {e}")),
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gfs = fields(&[2, 3, 4]);
    for i in 0..if full { 500 } else { 100 } {
        let f = &gfs[i % gfs.len()];
        let n = rng.gen_range(1..=8);
        let (k1, k2) = (rng.gen_range(0..=n), rng.gen_range(0..=n));
        let (Some(c1), Some(c2)) = (
            s.guard(random_code(f, n, k1, &mut rng), || "random code".into()),
            s.guard(random_code(f, n, k2, &mut rng), || "random code".into()),
        ) else {
            continue;
        };
        let Some(pair) = s.guard(IntersectionPair::new(c1.clone(), c2.clone()), || "pair".into()) else {
            continue;
        };
        let by_enum = s.guard(ell_by_enumeration(&c1, &c2), || "enumeration".into());
        s.check(
            pair.ell_by_rank() == pair.ell() && pair.ell_by_rank_reverse() == pair.ell() && by_enum == Some(pair.ell()),
            || format!("{f}: l routes disagree for [{n}, {k1}] and [{n}, {k2}]"),
        );
        let (lo, hi) = pair.bounds();
        s.check((lo..=hi).contains(&pair.ell()), || format!("{f}: l outside its bounds"));
    }
    let gfs = fields(&[2, 3]);
    for i in 0..if full { 200 } else { 40 } {
        let f = &gfs[i % 2];
        let n = rng.gen_range(2..=7);
        let k1 = rng.gen_range(1..=n);
        let k2 = rng.gen_range(1..=n);
        let (Some(c1), Some(c2)) = (
            s.guard(random_code(f, n, k1, &mut rng), || "random code".into()),
            s.guard(random_code(f, n, k2, &mut rng), || "random code".into()),
        ) else {
            continue;
        };
        let Some(pair) = s.guard(IntersectionPair::new(c1, c2), || "pair".into()) else { continue };
        let ell = pair.ell();
        let gamma = rng.gen_range(0..=ell);
        let d2 = s.guard(pair.c2().min_distance(), || "distance".into());
        if let Some(r) = s.guard(reduce_ell(&pair, gamma), || "reduce_ell".into()) {
            s.check(
                r.n() == n && r.c1() == pair.c1() && r.c2().k() == k2 - ell + gamma && r.ell() == gamma,
                || format!("{f}: reduce_ell from l = {ell} to {gamma} gave the wrong shape"),
            );
            let dd = if r.c2().k() == 0 { Some(n + 1) } else { r.c2().min_distance().ok() };
            s.check(dd >= d2, || format!("{f}: reduce_ell lowered d2"));
        }
        if let Some(e) = s.guard(extend_length(&pair, gamma), || "extend_length".into()) {
            s.check(
                e.n() == n + ell - gamma && e.c1().k() == k1 && e.c2().k() == k2 && e.ell() == gamma,
                || format!("{f}: extend_length from l = {ell} to {gamma} gave the wrong shape"),
            );
            let dd = e.c2().min_distance().ok();
            s.check(dd >= d2, || format!("{f}: extend_length lowered d2"));
        }
    }
    s.finish()
}

/// Denominator pool for the gcd/lcm grid: 1 and the first three monic
/// irreducibles of each degree up to `max_deg`.
pub fn theorem_factor_pool(field: &Field, max_deg: usize) -> Vec<Poly> {
    let mut pool = vec![Poly::one(field)];
    for d in 1..=max_deg {
        pool.extend(irreducibles(field, d, 3));
    }
    pool
}

/// The four point configurations of the theorem grid: plain with
/// `n = q - 2` and `n = q`, extended with `n = q - 1` and `n = q + 1`.
/// Points are the first field elements avoiding the roots of `P Q`.
pub fn theorem_configs(field: &Field, pq: &Poly) -> Vec<(usize, bool, Option<Vec<Elem>>)> {
    let q = field.q() as usize;
    [(q - 2, false), (q, false), (q - 1, true), (q + 1, true)]
        .into_iter()
        .map(|(n, ext)| {
            let finite = n - ext as usize;
            let pts: Vec<Elem> = field.elements().filter(|&a| !pq.has_root(a)).take(finite).collect();
            (n, ext, (pts.len() == finite).then_some(pts))
        })
        .collect()
}

fn grs_suite(full: bool) -> SuiteReport {
    let mut s = Suite::new("grs");
    let (qs, limit): (&[u64], u128) = if full { (&[3, 4, 5, 7, 8, 9], 1 << 18) } else { (&[3, 4, 5], 1 << 12) };
    for f in fields(qs) {
        let q = f.q() as usize;
        for n in 1..=q + 1 {
            let ext = n == q + 1;
            let pts = default_points(&f, n, ext);
            for k in 1..=n {
                if (q as u128).pow(k as u32) > limit {
                    break;
                }
                let Some(p) = first_root_free_denominator(&f, k, &pts) else {
                    s.skipped += 1;
                    continue;
                };
                let Some(c) = s.guard(GrsSpec::new(&f, pts.clone(), p, ext).code(), || "grs".into()) else { continue };
                let d = c.min_distance_by_enumeration(limit).ok();
                s.check(c.k() == k && d == Some(n - k + 1), || format!("GF({q}) GRS [{n}, {k}] has d = {d:?}"));
            }
        }
    }
    let (qs, max_deg): (&[u64], usize) = if full { (&[5, 7], 4) } else { (&[5], 3) };
    for f in fields(qs) {
        let pool = theorem_factor_pool(&f, max_deg);
        for fa in &pool {
            for l in &pool {
                for h in &pool {
                    let p = fa.mul(l).expect("same field");
                    let qq = h.mul(l).expect("same field");
                    let (Some(dp), Some(dq)) = (p.degree(), qq.degree()) else { continue };
                    if dp > max_deg || dq > max_deg || dp == 0 || dq == 0 {
                        continue;
                    }
                    let pq = p.mul(&qq).expect("same field");
                    for (n, ext, pts) in theorem_configs(&f, &pq) {
                        let Some(pts) = pts else {
                            s.skipped += 1;
                            continue;
                        };
                        let sp = GrsSpec::new(&f, pts, p.clone(), ext);
                        let sq = sp.with_denominator(qq.clone());
                        match grs_intersection_theorem_check(&sp, &sq) {
                            Ok(t) => s.check(t.equal, || format!("GF({}) n = {n}: GRS({p}) ∩ GRS({qq})", f.q())),
                            Err(Error::TheoremPreconditionViolated { .. } | Error::DegreeTooLarge { .. }) => {
                                s.skipped += 1
                            }
                            Err(e) => s.fail(format!("intersection check: {e}")),
                        }
                        match grs_sum_theorem_check(&sp, &sq) {
                            Ok(t) => s.check(t.equal, || format!("GF({}) n = {n}: GRS({p}) + GRS({qq})", f.q())),
                            Err(Error::LcmDegreeTooLarge { .. } | Error::DegreeTooLarge { .. }) => s.skipped += 1,
                            Err(e) => s.fail(format!("sum check: {e}")),
                        }
                    }
                }
            }
        }
    }
    let qs: &[u64] = if full { &[3, 4, 5, 7] } else { &[3, 4] };
    for f in fields(qs) {
        let q = f.q() as usize;
        for n in 1..=q + 1 {
            for k1 in 0..=n {
                for k2 in 0..=n {
                    for ell in (k1 + k2).saturating_sub(n)..=k1.min(k2) {
                        let r = grs_pair(&f, n, k1, k2, ell);
                        if grs_pair_admissible(q, n, k1, k2, ell) {
                            let ok = r.as_ref().is_ok_and(|p| {
                                p.ell() == ell
                                    && p.c1().k() == k1
                                    && p.c2().k() == k2
                                    && [p.c1(), p.c2()].iter().all(|c| c.k() == 0 || c.is_mds().unwrap_or(false))
                            });
                            s.check(ok, || format!("GF({q}) grs_pair({n}, {k1}, {k2}, {ell}): {r:?}"));
                        } else {
                            s.check(matches!(r, Err(Error::DegreeConditionViolated(_))), || {
                                format!("GF({q}) grs_pair({n}, {k1}, {k2}, {ell}) should be refused")
                            });
                        }
                    }
                }
            }
        }
    }
    s.finish()
}

fn eaqecc_suite(full: bool, seed: u64) -> SuiteReport {
    let mut s = Suite::new("eaqecc");
    let qs: &[u64] = if full { &[3, 4, 5, 7] } else { &[3, 4, 5] };
    for f in fields(qs) {
        let q = f.q() as usize;
        for n in 1..=q + 1 {
            for k in 0..=n {
                for ell in 0..=k.min(n - k) {
                    match mds_eaqecc(&f, n, k, ell, seed) {
                        Ok(m) => {
                            let p = &m.params;
                            s.check(
                                p.k == n - k - ell && p.d == Some(k + 1) && p.c == k - ell && p.singleton_slack == Some(0),
                                || format!("GF({q}) mds_eaqecc({n}, {k}, {ell}) gave {p}"),
                            );
                        }
                        Err(e) => s.fail(format!("GF({q}) mds_eaqecc({n}, {k}, {ell}): {e}")),
                    }
                }
            }
        }
    }
    s.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_profile_passes() {
        let r = run(Profile::Quick, 0);
        for suite in &r.suites {
            assert!(suite.passed, "{}: {:?}", suite.name, suite.failures);
            assert!(suite.checks > 0, "{} ran no checks", suite.name);
        }
        assert!(r.passed);
    }

    #[test]
    fn tampered_modulus_fails() {
        // x^3 + x^2 + x + 1 = (x + 1)^3 over GF(2)
        let bad = Field::from_modulus_unchecked(2, &[1, 1, 1, 1]).unwrap();
        let r = field_suite(&[bad], 0);
        assert!(!r.passed);
        let again = field_suite(&[Field::from_modulus_unchecked(2, &[1, 1, 1, 1]).unwrap()], 0);
        assert_eq!(r.failures, again.failures);
    }

    #[test]
    fn superregular_builders() {
        let f = Field::with_order(9).unwrap();
        assert!(standard_cauchy(&f, 4).unwrap().is_super_regular().unwrap());
        assert!(standard_cauchy(&f, 5).is_err());
        assert!(standard_cauchy(&Field::with_order(8).unwrap(), 4).unwrap().is_super_regular().unwrap());
        let f7 = Field::with_order(7).unwrap();
        assert!(systematic_superregular(&f7, 4).unwrap().is_super_regular().unwrap());
        assert!(systematic_superregular(&f7, 5).is_err());
    }
}
