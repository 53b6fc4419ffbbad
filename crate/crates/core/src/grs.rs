//! Generalized Reed-Solomon codes `GRS(a, P, v)` and their extended
//! versions, the gcd/lcm theorems on intersections and sums, and the
//! MDS pair constructor built on them.

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::matrix::Matrix;
use crate::pairs::IntersectionPair;
use crate::poly::{irreducibles, Poly};

/// Parameters of a (possibly extended) GRS code.
///
/// The code is `{(v_i f(a_i) / P(a_i))_i : deg f < deg P}`; the extended
/// form appends the coordinate `v_n (x f / P)(inf)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrsSpec {
    pub field: Field,
    /// Distinct evaluation points: `n` of them, or `n - 1` when extended.
    pub points: Vec<Elem>,
    /// Nonzero column multipliers, one per coordinate (length `n`).
    pub multipliers: Vec<Elem>,
    pub denominator: Poly,
    pub extended: bool,
}

impl GrsSpec {
    /// All-ones multipliers.
    pub fn new(field: &Field, points: Vec<Elem>, denominator: Poly, extended: bool) -> GrsSpec {
        let n = points.len() + extended as usize;
        GrsSpec {
            field: field.clone(),
            points,
            multipliers: vec![Elem::ONE; n],
            denominator,
            extended,
        }
    }

    /// Code length.
    pub fn n(&self) -> usize {
        self.points.len() + self.extended as usize
    }

    /// Same points, multipliers and form with another denominator.
    pub fn with_denominator(&self, denominator: Poly) -> GrsSpec {
        GrsSpec { denominator, ..self.clone() }
    }

    pub fn validate(&self) -> Result<()> {
        let f = &self.field;
        if self.points.iter().chain(&self.multipliers).any(|&a| !f.contains(a)) {
            return Err(Error::InvalidSpec("element outside the field".into()));
        }
        if self.points.iter().enumerate().any(|(i, a)| self.points[..i].contains(a)) {
            return Err(Error::InvalidSpec("evaluation points must be distinct".into()));
        }
        if self.multipliers.len() != self.n() {
            return Err(Error::InvalidSpec(format!(
                "{} multipliers for length {}",
                self.multipliers.len(),
                self.n()
            )));
        }
        if self.multipliers.iter().any(|v| v.is_zero()) {
            return Err(Error::InvalidSpec("multipliers must be nonzero".into()));
        }
        if self.denominator.field() != f {
            return Err(Error::FieldMismatch);
        }
        let Some(deg) = self.denominator.degree() else {
            return Err(Error::InvalidSpec("denominator must be nonzero".into()));
        };
        if self.n() == 0 {
            return Err(Error::InvalidSpec("length must be positive".into()));
        }
        if deg > self.n() {
            return Err(Error::DegreeTooLarge { deg, n: self.n() });
        }
        if let Some(a) = self.points.iter().find(|&&a| self.denominator.has_root(a)) {
            return Err(Error::RootAtEvaluationPoint(a.value()));
        }
        Ok(())
    }

    /// The `deg(P) x n` generator from the monomial basis `f = x^j`.
    pub fn generator_matrix(&self) -> Result<Matrix> {
        self.validate()?;
        let f = &self.field;
        let p = &self.denominator;
        let k = p.degree().expect("validated nonzero");
        let n = self.n();
        let inv_p: Vec<Elem> = self
            .points
            .iter()
            .zip(&self.multipliers)
            .map(|(&a, &v)| f.div(v, p.eval(a)).expect("root-free"))
            .collect();
        let mut m = Matrix::zeros(f, k, n);
        for (i, (&a, &scale)) in self.points.iter().zip(&inv_p).enumerate() {
            let mut pw = scale;
            for j in 0..k {
                m.set(j, i, pw);
                pw = f.mul(pw, a);
            }
        }
        if self.extended && k > 0 {
            // (x f / P)(inf) is nonzero only for deg f = deg P - 1
            let v = f.div(self.multipliers[n - 1], p.leading())?;
            m.set(k - 1, n - 1, v);
        }
        Ok(m)
    }

    pub fn code(&self) -> Result<LinearCode> {
        LinearCode::from_generator(&self.generator_matrix()?)
    }
}

/// `GRS(a, P, v)`; an error if the spec is extended.
pub fn grs_code(spec: &GrsSpec) -> Result<LinearCode> {
    if spec.extended {
        return Err(Error::InvalidSpec("expected a plain GRS spec".into()));
    }
    spec.code()
}

/// `GRS_inf(a, P, v)`; an error if the spec is not extended.
pub fn grs_extended_code(spec: &GrsSpec) -> Result<LinearCode> {
    if !spec.extended {
        return Err(Error::InvalidSpec("expected an extended GRS spec".into()));
    }
    spec.code()
}

/// Both sides of a gcd/lcm identity, computed independently.
#[derive(Clone, Debug)]
pub struct TheoremCheck {
    pub lhs: LinearCode,
    pub rhs: LinearCode,
    /// The gcd (intersection) or lcm (sum) denominator.
    pub polynomial: Poly,
    pub equal: bool,
}

fn check_shared(p: &GrsSpec, q: &GrsSpec) -> Result<()> {
    if p.field != q.field {
        return Err(Error::FieldMismatch);
    }
    if p.points != q.points || p.multipliers != q.multipliers || p.extended != q.extended {
        return Err(Error::InvalidSpec("specs must share points, multipliers and form".into()));
    }
    Ok(())
}

fn condition_two(p: &GrsSpec, q: &GrsSpec) -> Result<()> {
    let pq = p.denominator.mul(&q.denominator)?;
    if let Some(a) = p.points.iter().find(|&&a| pq.has_root(a)) {
        return Err(Error::TheoremPreconditionViolated {
            condition: 2,
            detail: format!("P(x)Q(x) vanishes at evaluation point {a}"),
        });
    }
    Ok(())
}

/// `GRS(P) ∩ GRS(Q)` against `GRS(gcd(P, Q))`, plain or extended.
///
/// Checks the three hypotheses first: `L = gcd(P, Q)` (holds by
/// construction here), `P Q` root-free on the points, and
/// `deg P + deg Q <= n + deg L`.
pub fn grs_intersection_theorem_check(p: &GrsSpec, q: &GrsSpec) -> Result<TheoremCheck> {
    check_shared(p, q)?;
    let n = p.n();
    let (dp, dq) = match (p.denominator.degree(), q.denominator.degree()) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            return Err(Error::TheoremPreconditionViolated {
                condition: 1,
                detail: "gcd needs nonzero polynomials".into(),
            })
        }
    };
    if dp > n || dq > n {
        return Err(Error::DegreeTooLarge { deg: dp.max(dq), n });
    }
    condition_two(p, q)?;
    let l = p.denominator.gcd(&q.denominator)?;
    let dl = l.degree().expect("gcd of nonzero polynomials");
    if dp + dq > n + dl {
        return Err(Error::TheoremPreconditionViolated {
            condition: 3,
            detail: format!("deg P + deg Q = {} > n + deg L = {}", dp + dq, n + dl),
        });
    }
    let lhs = p.code()?.intersect(&q.code()?)?;
    let rhs = p.with_denominator(l.clone()).code()?;
    let equal = lhs == rhs;
    Ok(TheoremCheck { lhs, rhs, polynomial: l, equal })
}

/// `GRS(P) + GRS(Q)` against `GRS(lcm(P, Q))`, plain or extended.
pub fn grs_sum_theorem_check(p: &GrsSpec, q: &GrsSpec) -> Result<TheoremCheck> {
    check_shared(p, q)?;
    let n = p.n();
    let m = p.denominator.lcm(&q.denominator)?;
    let dm = m.degree().expect("lcm of nonzero polynomials");
    if dm > n {
        return Err(Error::LcmDegreeTooLarge { deg: dm, n });
    }
    condition_two(p, q)?;
    let lhs = p.code()?.code_sum(&q.code()?)?;
    let rhs = p.with_denominator(m.clone()).code()?;
    let equal = lhs == rhs;
    Ok(TheoremCheck { lhs, rhs, polynomial: m, equal })
}

/// Number of distinct evaluation points the construction in [`grs_pair`]
/// has to give up: one per distinct linear factor among `f`, `L`, `h`,
/// where a linear `L` reuses `f` or `h` whenever one of them is linear.
fn linear_factors_needed(k1: usize, k2: usize, ell: usize) -> usize {
    let fh = (k1 - ell == 1) as usize + (k2 - ell == 1) as usize;
    fh + (ell == 1 && fh == 0) as usize
}

/// Whether [`grs_pair`] can build the pair, assuming the basic ranges hold.
pub fn grs_pair_admissible(q: usize, n: usize, k1: usize, k2: usize, ell: usize) -> bool {
    q >= 3
        && n >= 1
        && k1 <= n
        && k2 <= n
        && n <= q + 1
        && ell <= k1.min(k2)
        && k1 + k2 <= n + ell
        && q + 1 - n >= linear_factors_needed(k1, k2, ell)
}

struct Factors {
    f: Poly,
    l: Poly,
    h: Poly,
}

/// First monic irreducibles `f`, `L`, `h` of the required degrees that have
/// no root in `avoid`, with `f != h`.
fn pick_root_free(field: &Field, k1: usize, k2: usize, ell: usize, avoid: &[Elem]) -> Option<Factors> {
    let root_free = |deg: usize, limit: usize| -> Vec<Poly> {
        let mut out = Vec::new();
        if deg == 0 {
            out.push(Poly::one(field));
            return out;
        }
        out.extend(
            crate::poly::monic_polys(field, deg)
                .filter(|p| avoid.iter().all(|&a| !p.has_root(a)))
                .filter(|p| p.is_irreducible().unwrap_or(false))
                .take(limit),
        );
        out
    };
    let fs = root_free(k1 - ell, 2);
    let hs = root_free(k2 - ell, 2);
    let ls = root_free(ell, 1);
    let f = fs.first()?.clone();
    let h = if k2 - ell == k1 - ell && k1 > ell { hs.get(1)? } else { hs.first()? }.clone();
    let l = ls.first()?.clone();
    Some(Factors { f, l, h })
}

/// First monic irreducibles ignoring roots, with a linear `L` merged into a
/// linear `f` or `h` so that as few points as possible are lost.
fn pick_minimal_roots(field: &Field, k1: usize, k2: usize, ell: usize) -> Factors {
    let first = |deg: usize, skip: usize| -> Poly {
        if deg == 0 {
            Poly::one(field)
        } else {
            irreducibles(field, deg, skip + 1).pop().expect("enough irreducibles for q >= 3")
        }
    };
    let f = first(k1 - ell, 0);
    let h = first(k2 - ell, (k1 - ell == k2 - ell && k1 > ell) as usize);
    let l = if ell == 1 && f.degree() == Some(1) {
        f.clone()
    } else if ell == 1 && h.degree() == Some(1) {
        h.clone()
    } else {
        first(ell, 0)
    };
    Factors { f, l, h }
}

fn points_avoiding(field: &Field, count: usize, polys: &[&Poly]) -> Option<Vec<Elem>> {
    let pts: Vec<Elem> = field
        .elements()
        .filter(|&a| polys.iter().all(|p| !p.has_root(a)))
        .take(count)
        .collect();
    (pts.len() == count).then_some(pts)
}

fn build_pair(field: &Field, points: Vec<Elem>, fac: &Factors, extended: bool) -> Result<IntersectionPair> {
    let p = fac.f.mul(&fac.l)?;
    let q = fac.h.mul(&fac.l)?;
    let sp = GrsSpec::new(field, points, p, extended);
    let sq = sp.with_denominator(q);
    IntersectionPair::new(sp.code()?, sq.code()?)
}

/// MDS codes `[n, k1]` and `[n, k2]` meeting in dimension `ell`, as
/// `GRS(a, fL, 1)` and `GRS(a, hL, 1)` with `f`, `L`, `h` monic irreducible
/// of degrees `k1 - ell`, `ell`, `k2 - ell`.
///
/// Evaluation points default to the first `n` field elements, with the
/// first root-free irreducibles. When linear factors are unavoidable the
/// points are re-chosen to dodge their roots, and failing that the extended
/// form with `n - 1` finite points is used. When even that leaves too few
/// points the request is refused (see [`grs_pair_admissible`]).
pub fn grs_pair(field: &Field, n: usize, k1: usize, k2: usize, ell: usize) -> Result<IntersectionPair> {
    let q = field.q() as usize;
    if q < 3 {
        return Err(Error::ParameterOutOfRange(format!("q = {q} < 3")));
    }
    if n == 0 || n > q + 1 || k1 > n || k2 > n || ell > k1.min(k2) {
        return Err(Error::ParameterOutOfRange(format!(
            "n = {n}, k1 = {k1}, k2 = {k2}, l = {ell} over GF({q})"
        )));
    }
    if k1 + k2 > n + ell {
        return Err(Error::DegreeConditionViolated(format!("k1 + k2 = {} > n + l = {}", k1 + k2, n + ell)));
    }
    if n <= q {
        let default_points: Vec<Elem> = field.elements().take(n).collect();
        if let Some(fac) = pick_root_free(field, k1, k2, ell, &default_points) {
            return build_pair(field, default_points, &fac, false);
        }
    }
    let fac = pick_minimal_roots(field, k1, k2, ell);
    let polys = [&fac.f, &fac.l, &fac.h];
    if n <= q {
        if let Some(points) = points_avoiding(field, n, &polys) {
            return build_pair(field, points, &fac, false);
        }
    }
    if let Some(points) = points_avoiding(field, n - 1, &polys) {
        return build_pair(field, points, &fac, true);
    }
    Err(Error::DegreeConditionViolated(format!(
        "{} distinct linear factors leave only {} of the {} projective points",
        linear_factors_needed(k1, k2, ell),
        q + 1 - linear_factors_needed(k1, k2, ell),
        n
    )))
}

/// Generator of `{(w_a f(a))_a : deg f < s}`, with the point at infinity
/// (when `extended`) carrying `w_inf` times the coefficient of `x^(s-1)`.
fn weighted_evaluation(field: &Field, points: &[Elem], w: &[Elem], s: usize, extended: bool) -> Matrix {
    let n = points.len() + extended as usize;
    let mut m = Matrix::zeros(field, s, n);
    for (i, (&a, &wa)) in points.iter().zip(w).enumerate() {
        let mut pw = wa;
        for j in 0..s {
            m.set(j, i, pw);
            pw = field.mul(pw, a);
        }
    }
    if extended && s > 0 {
        m.set(s - 1, n - 1, w[n - 1]);
    }
    m
}

/// One solution of `a x = b`, if any.
fn solve(a: &Matrix, b: &[Elem]) -> Option<Vec<Elem>> {
    let f = a.field();
    let mut aug = Matrix::zeros(f, a.rows(), a.cols() + 1);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            aug.set(i, j, a.get(i, j));
        }
        aug.set(i, a.cols(), b[i]);
    }
    let r = aug.rref();
    if r.pivots.contains(&a.cols()) {
        return None;
    }
    let mut x = vec![Elem::ZERO; a.cols()];
    for (i, &p) in r.pivots.iter().enumerate() {
        x[p] = r.matrix.get(i, a.cols());
    }
    Some(x)
}

/// Attempts at [`complementary_mds_pair`] before giving up.
const COMPLEMENTARY_ATTEMPTS: usize = 2_000;

/// MDS codes `[n, k]` and `[n, n - k]` meeting in dimension `ell`, built
/// from `E = {(f(a))_a : deg f < s}` with `s = min(k, n - k)` and the dual
/// of a weighted copy `E_w`.
///
/// A word `f` of `E` lies in `E_w^⊥` exactly when `H f = 0` for the
/// Hankel matrix `H = (h_(i+j))` of the moments `h_m = sum_a w_a a^m`
/// (plus `w_inf` at `m = 2s - 2`), so `ell = s - rank H`. Moments of rank
/// `s - ell` are drawn as sums of `s - ell` geometric sequences, the linear
/// system for `w` is solved, and solutions are sampled until every weight
/// is nonzero. The extended form is used for `n = q + 1`.
pub fn complementary_mds_pair(field: &Field, n: usize, k: usize, ell: usize, seed: u64) -> Result<IntersectionPair> {
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    let q = field.q() as usize;
    if n == 0 || n > q + 1 || k > n || ell > k.min(n - k) {
        return Err(Error::ParameterOutOfRange(format!("n = {n}, k = {k}, l = {ell} over GF({q})")));
    }
    let s = k.min(n - k);
    let extended = n == q + 1;
    let points = default_points(field, n, extended);
    let small = LinearCode::from_generator(&weighted_evaluation(field, &points, &vec![Elem::ONE; n], s, extended))?;
    let order = |c1: LinearCode, c2: LinearCode| {
        if k <= n - k {
            IntersectionPair::new(c1, c2)
        } else {
            IntersectionPair::new(c2, c1)
        }
    };
    if s == 0 {
        return order(small.clone(), small.dual());
    }
    // moment map w -> (h_0, ..., h_(2s-2))
    let moments = weighted_evaluation(field, &points, &vec![Elem::ONE; n], 2 * s - 1, extended);
    let kernel = moments.kernel();
    let r = s - ell;
    // candidate nodes: field elements, with `None` standing for infinity
    let mut nodes: Vec<Option<Elem>> = field.elements().map(Some).collect();
    nodes.push(None);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let nonzero: Vec<Elem> = field.nonzero_elements().collect();
    for _ in 0..COMPLEMENTARY_ATTEMPTS {
        nodes.shuffle(&mut rng);
        let mut h = vec![Elem::ZERO; 2 * s - 1];
        for node in &nodes[..r] {
            let c = *nonzero.choose(&mut rng).expect("q >= 2");
            match node {
                Some(beta) => {
                    let mut pw = c;
                    for hm in h.iter_mut() {
                        *hm = field.add(*hm, pw);
                        pw = field.mul(pw, *beta);
                    }
                }
                None => h[2 * s - 2] = field.add(h[2 * s - 2], c),
            }
        }
        let Some(mut w) = solve(&moments, &h) else { continue };
        for row in 0..kernel.rows() {
            let t = field.elem(rng.gen_range(0..q as u64))?;
            for (wi, &ki) in w.iter_mut().zip(kernel.row(row)) {
                *wi = field.mul_add(t, ki, *wi);
            }
        }
        if w.iter().any(|x| x.is_zero()) {
            continue;
        }
        let big = LinearCode::from_generator(&weighted_evaluation(field, &points, &w, s, extended))?.dual();
        let pair = order(small.clone(), big)?;
        if pair.ell() == ell {
            return Ok(pair);
        }
    }
    Err(Error::NotFoundWithinBudget { target: ell, budget: COMPLEMENTARY_ATTEMPTS })
}

/// First `n` (or `n - 1` when extended) field elements, the default points.
pub fn default_points(field: &Field, n: usize, extended: bool) -> Vec<Elem> {
    field.elements().take(n - extended as usize).collect()
}

/// First root-free denominator of degree `k` for the given points, with
/// irreducible candidates first and then all monic polynomials.
pub fn first_root_free_denominator(field: &Field, k: usize, points: &[Elem]) -> Option<Poly> {
    if k == 0 {
        return Some(Poly::one(field));
    }
    crate::poly::monic_polys(field, k).find(|p| points.iter().all(|&a| !p.has_root(a)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> Field {
        Field::with_order(q).unwrap()
    }

    fn poly(f: &Field, v: &[u32]) -> Poly {
        Poly::from_values(f, v).unwrap()
    }

    fn pts(f: &Field, n: usize) -> Vec<Elem> {
        f.elements().take(n).collect()
    }

    #[test]
    fn constant_denominator_gives_zero_code() {
        let f = gf(5);
        let c = grs_code(&GrsSpec::new(&f, pts(&f, 4), Poly::one(&f), false)).unwrap();
        assert_eq!(c.k(), 0);
    }

    #[test]
    fn small_grs_codes() {
        let f = gf(5);
        let c = grs_code(&GrsSpec::new(&f, pts(&f, 4), poly(&f, &[1, 1]), false)).unwrap();
        assert_eq!((c.k(), c.min_distance().unwrap()), (1, 4));
        let c = grs_code(&GrsSpec::new(&f, pts(&f, 5), poly(&f, &[2, 0, 1]), false)).unwrap();
        assert_eq!((c.n(), c.k(), c.min_distance().unwrap()), (5, 2, 4));
        let f3 = gf(3);
        let e = grs_extended_code(&GrsSpec::new(&f3, pts(&f3, 3), poly(&f3, &[1, 0, 1]), true)).unwrap();
        assert_eq!((e.n(), e.k(), e.min_distance().unwrap()), (4, 2, 3));
    }

    #[test]
    fn extended_infinity_column() {
        let f = gf(7);
        let p = poly(&f, &[3, 0, 1, 1]);
        let mut spec = GrsSpec::new(&f, pts(&f, 6), p, true);
        spec.multipliers[6] = Elem::raw(2);
        let g = spec.generator_matrix().unwrap();
        assert!(g.get(0, 6).is_zero() && g.get(1, 6).is_zero());
        assert_eq!(g.get(2, 6), Elem::raw(2));
        let k1 = GrsSpec::new(&f, pts(&f, 6), poly(&f, &[1, 1]), true);
        assert_eq!(k1.generator_matrix().unwrap().get(0, 6), Elem::ONE);
    }

    #[test]
    fn spec_validation() {
        let f = gf(5);
        let rooted = GrsSpec::new(&f, pts(&f, 4), poly(&f, &[4, 1]), false);
        assert!(matches!(grs_code(&rooted), Err(Error::RootAtEvaluationPoint(1))));
        let big = GrsSpec::new(&f, pts(&f, 2), poly(&f, &[2, 0, 1, 0, 1]), false);
        assert!(matches!(grs_code(&big), Err(Error::DegreeTooLarge { .. })));
        let mut dup = GrsSpec::new(&f, vec![Elem::ONE, Elem::ONE], poly(&f, &[2, 0, 1]), false);
        assert!(matches!(grs_code(&dup), Err(Error::InvalidSpec(_))));
        dup.points = pts(&f, 2);
        dup.multipliers[0] = Elem::ZERO;
        assert!(matches!(grs_code(&dup), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn intersection_theorem_example() {
        let f = gf(5);
        let a = poly(&f, &[2, 0, 1]);
        let b = poly(&f, &[3, 0, 1]);
        let c = poly(&f, &[1, 1, 1]);
        // x^2 + x + 1 has no root in GF(5): discriminant -3 = 2 is a non-square
        assert!(f.elements().all(|x| !c.has_root(x)));
        let sp = GrsSpec::new(&f, pts(&f, 5), a.mul(&b).unwrap(), false);
        let sq = sp.with_denominator(a.mul(&c).unwrap());
        // deg P + deg Q = 8 > 5 + 2, so condition 3 fails at n = 5
        assert!(matches!(
            grs_intersection_theorem_check(&sp, &sq),
            Err(Error::TheoremPreconditionViolated { condition: 3, .. })
        ));
        // with quadratic factors on both sides the condition holds
        let sp = GrsSpec::new(&f, pts(&f, 5), a.mul(&b).unwrap(), false);
        let sq = sp.with_denominator(a.clone());
        let check = grs_intersection_theorem_check(&sp, &sq).unwrap();
        assert_eq!(check.polynomial, a);
        assert!(check.equal);
        assert_eq!(check.lhs, sq.code().unwrap());
    }

    #[test]
    fn sum_theorem_example() {
        let f = gf(5);
        let a = poly(&f, &[2, 0, 1]);
        let b = poly(&f, &[3, 0, 1]);
        let sp = GrsSpec::new(&f, pts(&f, 5), a.clone(), false);
        let sq = sp.with_denominator(b.clone());
        let s = grs_sum_theorem_check(&sp, &sq).unwrap();
        assert!(s.equal);
        assert_eq!(s.lhs.k(), 4);
        let same = grs_sum_theorem_check(&sp, &sp).unwrap();
        assert_eq!(same.lhs, sp.code().unwrap());
        let big = sp.with_denominator(a.mul(&b).unwrap());
        let c = poly(&f, &[1, 1, 1]);
        let other = sp.with_denominator(c);
        assert!(matches!(grs_sum_theorem_check(&big, &other), Err(Error::LcmDegreeTooLarge { deg: 6, n: 5 })));
    }

    #[test]
    fn condition_two_violation() {
        let f = gf(5);
        let sp = GrsSpec::new(&f, pts(&f, 4), poly(&f, &[2, 0, 1]), false);
        let mut sq = sp.clone();
        sq.denominator = poly(&f, &[4, 1]);
        assert!(matches!(
            grs_intersection_theorem_check(&sp, &sq),
            Err(Error::TheoremPreconditionViolated { condition: 2, .. })
        ));
    }

    #[test]
    fn pair_examples() {
        let f5 = gf(5);
        let p = grs_pair(&f5, 5, 2, 2, 0).unwrap();
        assert_eq!(p.ell(), 0);
        let s = GrsSpec::new(&f5, pts(&f5, 5), poly(&f5, &[2, 0, 1]), false);
        assert_eq!(p.c1(), &s.code().unwrap());
        assert_eq!(p.c2(), &s.with_denominator(poly(&f5, &[3, 0, 1])).code().unwrap());
        let same = grs_pair(&f5, 5, 3, 3, 3).unwrap();
        assert_eq!(same.c1(), same.c2());
        assert_eq!(same.ell(), 3);
    }

    #[test]
    fn pair_error_paths() {
        let f3 = gf(3);
        assert!(matches!(grs_pair(&f3, 4, 2, 2, 1), Err(Error::DegreeConditionViolated(_))));
        assert!(!grs_pair_admissible(3, 4, 2, 2, 1));
        assert!(matches!(grs_pair(&f3, 4, 3, 3, 1), Err(Error::DegreeConditionViolated(_))));
        assert!(matches!(grs_pair(&f3, 5, 1, 1, 0), Err(Error::ParameterOutOfRange(_))));
        assert!(matches!(grs_pair(&gf(2), 2, 1, 1, 0), Err(Error::ParameterOutOfRange(_))));
    }

    #[test]
    fn pair_uses_extended_form_at_full_length() {
        let f = gf(7);
        let p = grs_pair(&f, 8, 4, 4, 2).unwrap();
        assert_eq!((p.n(), p.c1().k(), p.c2().k(), p.ell()), (8, 4, 4, 2));
        // a linear f would cost the one spare projective point
        assert!(!grs_pair_admissible(7, 8, 3, 4, 2));
        assert!(p.c1().is_mds().unwrap() && p.c2().is_mds().unwrap());
    }
}
