//! The nine acceptance criteria, each checked against an oracle that does
//! not share code with the routine under test where that is practical.
//! Prints one PASS/FAIL line per criterion.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use ellpair::eaqecc::mds_eaqecc;
use ellpair::grs::{
    default_points, first_root_free_denominator, grs_code, grs_extended_code, grs_intersection_theorem_check,
    grs_pair, grs_pair_admissible, grs_sum_theorem_check, GrsSpec,
};
use ellpair::matrix::{cauchy, vandermonde_superregular, Matrix};
use ellpair::pairs::{ell_by_rank, extend_length, pair_from_superregular, random_code, reduce_ell, IntersectionPair};
use ellpair::poly::{count_irreducibles, monic_polys, Poly};
use ellpair::selfcheck::{standard_cauchy, systematic_superregular, theorem_configs, theorem_factor_pool};
use ellpair::{worked_example, Elem, Error, Field, LinearCode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    failures: Vec<String>,
    summary: String,
}

impl Outcome {
    fn new() -> Outcome {
        Outcome { failures: Vec::new(), summary: String::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn time_limit(&mut self, took: Duration, limit: Duration) {
        self.check(took < limit, || format!("took {took:?}, limit {limit:?}"));
    }
}

fn gf(q: u64) -> Field {
    Field::with_order(q).unwrap()
}

/// Every codeword of the row space of `g`, by counting through messages.
fn all_codewords(g: &Matrix) -> Vec<Vec<Elem>> {
    let f = g.field();
    let q = f.q() as u64;
    let k = g.rows();
    let total = q.pow(k as u32);
    let mut out = Vec::with_capacity(total as usize);
    for mut v in 0..total {
        let mut w = vec![Elem::ZERO; g.cols()];
        for i in 0..k {
            let c = f.elem(v % q).unwrap();
            v /= q;
            if !c.is_zero() {
                for (wj, &gij) in w.iter_mut().zip(g.row(i)) {
                    *wj = f.mul_add(c, gij, *wj);
                }
            }
        }
        out.push(w);
    }
    out
}

/// Minimum weight by brute force; `n + 1` for the zero code.
fn brute_distance(code: &LinearCode) -> usize {
    all_codewords(code.generator())
        .iter()
        .map(|w| w.iter().filter(|a| !a.is_zero()).count())
        .filter(|&wt| wt > 0)
        .min()
        .unwrap_or(code.n() + 1)
}

/// `v H^t = 0` against an explicit parity check, independent of the
/// library's intersection and rank routes.
fn in_code(h: &Matrix, v: &[Elem]) -> bool {
    let f = h.field();
    (0..h.rows()).all(|i| f.sum(h.row(i).iter().zip(v).map(|(&a, &b)| f.mul(a, b))).is_zero())
}

fn ell_by_enumeration(c1: &LinearCode, c2: &LinearCode) -> usize {
    let h2 = c2.parity_check();
    let common = all_codewords(c1.generator()).iter().filter(|w| in_code(h2, w)).count();
    let q = c1.field().q() as usize;
    let mut ell = 0;
    let mut size = 1;
    while size < common {
        size *= q;
        ell += 1;
    }
    assert_eq!(size, common, "intersection size is not a power of q");
    ell
}

fn criterion_1() -> Outcome {
    let mut o = Outcome::new();
    let t = Instant::now();
    let c1 = worked_example::c1();
    let c2 = worked_example::c2();
    let mut got = vec![ell_by_enumeration(&c1, &c2)];
    for a in worked_example::monomials() {
        got.push(ell_by_enumeration(&c1.apply_monomial(&a).unwrap(), &c2));
    }
    o.check(got == [3, 2, 1, 0], || format!("enumerated l = {got:?}"));
    let report = worked_example::reproduce().unwrap();
    let lib: Vec<usize> = report.lines.iter().map(|l| l.ell_by_rank).collect();
    o.check(report.ok && lib == [3, 2, 1, 0], || format!("library l = {lib:?}"));
    let took = t.elapsed();
    o.time_limit(took, Duration::from_secs(1));
    o.summary = format!("l = {got:?} in {took:?}");
    o
}

fn criterion_2() -> Outcome {
    let mut o = Outcome::new();
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let fields = [gf(2), gf(3), gf(4)];
    let pairs = 600;
    let mut nonzero = 0;
    for i in 0..pairs {
        let f = &fields[i % 3];
        let n = rng.gen_range(1..=8);
        let k1 = rng.gen_range(0..=n);
        let k2 = rng.gen_range(0..=n);
        let c1 = random_code(f, n, k1, &mut rng).unwrap();
        let c2 = random_code(f, n, k2, &mut rng).unwrap();
        let forward = ell_by_rank(&c1, &c2).unwrap();
        let reverse = ell_by_rank(&c2, &c1).unwrap();
        let enumerated = ell_by_enumeration(&c1, &c2);
        nonzero += (enumerated > 0) as usize;
        o.check(forward == enumerated && reverse == enumerated, || {
            format!("{f} [{n},{k1}] vs [{n},{k2}]: {forward}, {reverse}, {enumerated}")
        });
    }
    let took = t.elapsed();
    o.time_limit(took, Duration::from_secs(30));
    o.summary = format!("{pairs} pairs ({nonzero} with l > 0) in {took:?}");
    o
}

fn criterion_3() -> Outcome {
    let mut o = Outcome::new();
    let t = Instant::now();
    let limit = 1u64 << 18;
    let (mut checked, mut skipped) = (0, 0);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for q in [3u64, 4, 5, 7, 8, 9] {
        let f = gf(q);
        for n in 1..=q as usize + 1 {
            for k in 1..=n {
                if q.pow(k as u32) > limit {
                    break;
                }
                for extended in [false, true] {
                    if (!extended && n > q as usize) || (extended && n < 2) {
                        continue;
                    }
                    let points = default_points(&f, n, extended);
                    let Some(p) = first_root_free_denominator(&f, k, &points) else {
                        skipped += 1;
                        continue;
                    };
                    let mut spec = GrsSpec::new(&f, points, p, extended);
                    // random nonzero column multipliers
                    for v in spec.multipliers.iter_mut() {
                        *v = f.elem(rng.gen_range(1..q)).unwrap();
                    }
                    let code = if extended { grs_extended_code(&spec) } else { grs_code(&spec) }.unwrap();
                    let d = brute_distance(&code);
                    checked += 1;
                    o.check(code.k() == k && d == n - k + 1, || {
                        format!("GF({q}) n={n} k={k} extended={extended}: dim {} d {d}", code.k())
                    });
                }
            }
        }
    }
    o.summary = format!("{checked} GRS codes brute-forced, {skipped} without a root-free P, {:?}", t.elapsed());
    o
}

fn criterion_4() -> Outcome {
    let mut o = Outcome::new();
    let t = Instant::now();
    let (mut inter, mut sums, mut precondition) = (0, 0, 0);
    for q in [5u64, 7] {
        let f = gf(q);
        let pool = theorem_factor_pool(&f, 4);
        for a in &pool {
            for l in &pool {
                for b in &pool {
                    let p = a.mul(l).unwrap();
                    let qq = b.mul(l).unwrap();
                    let (dp, dq) = (p.degree().unwrap(), qq.degree().unwrap());
                    if dp == 0 || dq == 0 || dp > 4 || dq > 4 {
                        continue;
                    }
                    let pq = p.mul(&qq).unwrap();
                    for (n, ext, pts) in theorem_configs(&f, &pq) {
                        let Some(pts) = pts else { continue };
                        if dp.max(dq) > n {
                            continue;
                        }
                        let sp = GrsSpec::new(&f, pts, p.clone(), ext);
                        let sq = sp.with_denominator(qq.clone());
                        match grs_intersection_theorem_check(&sp, &sq) {
                            Ok(c) => {
                                inter += 1;
                                o.check(c.equal, || format!("GF({q}) n={n} ext={ext}: GRS({p}) ∩ GRS({qq})"));
                            }
                            Err(Error::TheoremPreconditionViolated { .. }) => precondition += 1,
                            Err(e) => o.failures.push(format!("GF({q}) n={n}: {e}")),
                        }
                        match grs_sum_theorem_check(&sp, &sq) {
                            Ok(c) => {
                                sums += 1;
                                o.check(c.equal, || format!("GF({q}) n={n} ext={ext}: GRS({p}) + GRS({qq})"));
                            }
                            Err(Error::LcmDegreeTooLarge { .. }) => {}
                            Err(e) => o.failures.push(format!("GF({q}) n={n}: {e}")),
                        }
                    }
                }
            }
        }
    }
    o.check(inter > 0 && sums > 0, || "empty grid".into());
    let took = t.elapsed();
    o.time_limit(took, Duration::from_secs(60));
    o.summary = format!(
        "{inter} intersections, {sums} sums, {precondition} skipped by condition 3, {took:?}"
    );
    o
}

fn criterion_5() -> Outcome {
    let mut o = Outcome::new();
    let t = Instant::now();
    let (mut built, mut refused) = (0, 0);
    for q in [3u64, 4, 5, 7] {
        let f = gf(q);
        let qs = q as usize;
        for n in 1..=qs + 1 {
            for k1 in 0..=n {
                for k2 in 0..=n {
                    for ell in (k1 + k2).saturating_sub(n)..=k1.min(k2) {
                        let r = grs_pair(&f, n, k1, k2, ell);
                        if k1 + k2 > n + ell || !grs_pair_admissible(qs, n, k1, k2, ell) {
                            refused += 1;
                            o.check(matches!(r, Err(Error::DegreeConditionViolated(_))), || {
                                format!("GF({q}) ({n},{k1},{k2},{ell}) not refused: {r:?}")
                            });
                            continue;
                        }
                        built += 1;
                        let ok = r.as_ref().is_ok_and(|p| {
                            let mds = |c: &LinearCode| {
                                c.k() == 0
                                    || if c.size() <= 1 << 16 {
                                        brute_distance(c) == n - c.k() + 1
                                    } else {
                                        c.is_mds().unwrap()
                                    }
                            };
                            p.c1().k() == k1
                                && p.c2().k() == k2
                                && ell_by_enumeration_or_rank(p.c1(), p.c2()) == ell
                                && mds(p.c1())
                                && mds(p.c2())
                        });
                        o.check(ok, || format!("GF({q}) ({n},{k1},{k2},{ell}): {:?}", r.map(|p| p.ell())));
                    }
                }
            }
        }
    }
    o.summary = format!("{built} admissible tuples built, {refused} refused, {:?}", t.elapsed());
    o
}

fn criterion_6() -> Outcome {
    let mut o = Outcome::new();
    let t = Instant::now();
    let limit = 1u128 << 18;
    let (mut cells, mut enumerated) = (0, 0);
    for q in [3u64, 4, 5, 7, 8, 9] {
        let f = gf(q);
        for n in 1..=q as usize + 1 {
            for k in 0..=n {
                for ell in 0..=k.min(n - k) {
                    cells += 1;
                    let m = match mds_eaqecc(&f, n, k, ell, 0) {
                        Ok(m) => m,
                        Err(e) => {
                            o.failures.push(format!("GF({q}) n={n} k={k} l={ell}: {e}"));
                            continue;
                        }
                    };
                    let p = &m.params;
                    o.check(
                        (p.n, p.k, p.d, p.c) == (n, n - k - ell, Some(k + 1), k - ell) && p.singleton_slack == Some(0),
                        || format!("GF({q}) n={n} k={k} l={ell}: got {p}"),
                    );
                    // recompute d = min(d(C1^perp), d(C2)) by brute force
                    let c1_perp = m.pair.c1().dual();
                    let c2 = m.pair.c2();
                    if c1_perp.size() <= limit && c2.size() <= limit {
                        enumerated += 1;
                        let d = brute_distance(&c1_perp).min(brute_distance(c2));
                        o.check(d == k + 1, || format!("GF({q}) n={n} k={k} l={ell}: enumerated d = {d}"));
                    }
                    let c = m.pair.c1().k() - ell_by_enumeration_or_rank(m.pair.c1(), c2);
                    o.check(c == k - ell, || format!("GF({q}) n={n} k={k} l={ell}: c = {c}"));
                }
            }
        }
    }
    o.summary = format!(
        "{} of {cells} cells certified, {enumerated} distances enumerated, {:?}",
        cells - o.failures.len(),
        t.elapsed()
    );
    o
}

fn ell_by_enumeration_or_rank(c1: &LinearCode, c2: &LinearCode) -> usize {
    if c1.size() <= 1 << 16 {
        ell_by_enumeration(c1, c2)
    } else {
        ell_by_rank(c1, c2).unwrap()
    }
}

fn criterion_7() -> Outcome {
    let mut o = Outcome::new();
    let t = Instant::now();
    let mut cells = 0;
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let f = gf(q);
        // sieve: a monic polynomial is reducible iff it is a product of two
        // monic polynomials of positive degree
        let mut by_degree: Vec<Vec<Poly>> = vec![Vec::new()];
        for d in 1..=4 {
            by_degree.push(monic_polys(&f, d).collect());
        }
        for n in 1..=4usize {
            let mut reducible = HashSet::new();
            for a in 1..n {
                for x in &by_degree[a] {
                    for y in &by_degree[n - a] {
                        reducible.insert(x.mul(y).unwrap().values());
                    }
                }
            }
            let exhaustive = (q.pow(n as u32) as usize - reducible.len()) as u128;
            let formula = count_irreducibles(q, n as u64).unwrap();
            cells += 1;
            o.check(formula == exhaustive, || format!("N_{q}({n}) = {formula}, sieve {exhaustive}"));
            let q = q as u128;
            if n == 1 {
                o.check(formula == q, || format!("N_{q}(1) != {q}"));
            }
            if n == 2 {
                o.check(formula == (q * q - q) / 2, || format!("N_{q}(2) != (q^2 - q)/2"));
            }
        }
    }
    o.summary = format!("{cells} (q, n) cells, {:?}", t.elapsed());
    o
}

/// Super-regularity by evaluating every square minor with the library's
/// determinant.
fn all_minors_nonzero(m: &Matrix) -> bool {
    let n = m.rows().min(m.cols());
    for size in 1..=n {
        for rows in subsets(m.rows(), size) {
            for cols in subsets(m.cols(), size) {
                if m.select_rows(&rows).select_cols(&cols).determinant().unwrap().is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

fn criterion_8() -> Outcome {
    let mut o = Outcome::new();
    let t = Instant::now();
    let (mut matrices, mut pairs, mut absent) = (0, 0, Vec::new());
    for q in [7u64, 9, 11] {
        let f = gf(q);
        let els: Vec<Elem> = f.elements().collect();
        for n in 1..=4 {
            if 2 * n > q as usize {
                absent.push(format!("Cauchy/Vandermonde n={n} q={q}"));
                continue;
            }
            let (a, b) = (&els[..n], &els[n..2 * n]);
            let v = vandermonde_superregular(&f, a, b).unwrap();
            let x: Vec<Elem> = els[..n].to_vec();
            let y: Vec<Elem> = els.iter().copied().filter(|&b| x.iter().all(|&a| !f.add(a, b).is_zero())).take(n).collect();
            let c = cauchy(&f, &x, &y).unwrap();
            for (name, m) in [("vandermonde", v), ("cauchy", c)] {
                matrices += 1;
                let lib = m.is_super_regular().unwrap();
                o.check(lib && all_minors_nonzero(&m), || format!("{name} n={n} over GF({q})"));
            }
        }
        for n in 1..=5usize {
            let a = if 2 * n <= q as usize {
                standard_cauchy(&f, n).unwrap()
            } else if 2 * n <= q as usize + 1 {
                systematic_superregular(&f, n).unwrap()
            } else {
                // [I | A] would be an MDS [2n, n] code longer than q + 1
                absent.push(format!("pair n={n} q={q}"));
                continue;
            };
            for i in 0..=n {
                for j in 0..=n - i {
                    for ell in 0..=i {
                        pairs += 1;
                        let p = pair_from_superregular(&a, i, j, ell).unwrap();
                        let mds = |c: &LinearCode| c.k() == 0 || brute_distance(c) == n - c.k() + 1;
                        o.check(
                            p.c1().k() == i
                                && p.c2().k() == j + ell
                                && ell_by_enumeration(p.c1(), p.c2()) == ell
                                && mds(p.c1())
                                && mds(p.c2()),
                            || format!("GF({q}) n={n} i={i} j={j} l={ell}"),
                        );
                    }
                }
            }
        }
    }
    o.summary = format!(
        "{matrices} matrices, {pairs} pairs, nonexistent: {}, {:?}",
        absent.join("; "),
        t.elapsed()
    );
    o
}

fn criterion_9() -> Outcome {
    let mut o = Outcome::new();
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let fields = [gf(2), gf(3)];
    let mut positive = 0;
    for i in 0..200 {
        let f = &fields[i % 2];
        let n = rng.gen_range(2..=7);
        let k1 = rng.gen_range(1..=n);
        let k2 = rng.gen_range(1..=n);
        let pair = IntersectionPair::new(random_code(f, n, k1, &mut rng).unwrap(), random_code(f, n, k2, &mut rng).unwrap())
            .unwrap();
        let ell = ell_by_enumeration(pair.c1(), pair.c2());
        positive += (ell > 0) as usize;
        let gamma = rng.gen_range(0..=ell);
        let d2 = brute_distance(pair.c2());
        let r = reduce_ell(&pair, gamma).unwrap();
        o.check(
            (r.n(), r.c1().k(), r.c2().k(), ell_by_enumeration(r.c1(), r.c2())) == (n, k1, k2 - ell + gamma, gamma)
                && r.c1() == pair.c1(),
            || format!("reduce {f} [{n},{k1}],[{n},{k2}] l={ell} gamma={gamma}"),
        );
        o.check(brute_distance(r.c2()) >= d2, || format!("reduce lowered d2 at pair {i}"));
        let e = extend_length(&pair, gamma).unwrap();
        o.check(
            (e.n(), e.c1().k(), e.c2().k(), ell_by_enumeration(e.c1(), e.c2())) == (n + ell - gamma, k1, k2, gamma),
            || format!("extend {f} [{n},{k1}],[{n},{k2}] l={ell} gamma={gamma}"),
        );
        o.check(brute_distance(e.c2()) >= d2, || format!("extend lowered d2 at pair {i}"));
    }
    o.summary = format!("200 pairs ({positive} with l > 0), {:?}", t.elapsed());
    o
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("worked example l = 3, 2, 1, 0", criterion_1),
        ("three l routes agree on random pairs", criterion_2),
        ("GRS codes are MDS", criterion_3),
        ("gcd/lcm theorems on GRS codes", criterion_4),
        ("grs_pair over every admissible tuple", criterion_5),
        ("MDS EAQECC grid", criterion_6),
        ("irreducible counts", criterion_7),
        ("super-regular matrices and pairs", criterion_8),
        ("propagation rules", criterion_9),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let status = if o.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("{status} criterion {}: {name}: {}", i + 1, o.summary);
        for f in o.failures.iter().take(10) {
            println!("    {f}");
        }
        if !o.failures.is_empty() {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
