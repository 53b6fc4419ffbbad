//! Univariate polynomials over a finite field.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

/// A polynomial with coefficients stored lowest degree first.
/// The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Elem>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{:?}]({})", self.field, self)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Poly {
    /// Builds a polynomial, trimming trailing zeros.
    pub fn new(field: &Field, coeffs: Vec<Elem>) -> Poly {
        let mut p = Poly { field: field.clone(), coeffs };
        p.trim();
        p
    }

    /// Builds a polynomial from integer-encoded coefficients.
    pub fn from_values(field: &Field, values: &[u32]) -> Result<Poly> {
        let coeffs = values
            .iter()
            .map(|&v| field.elem(v as u64))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(field, coeffs))
    }

    pub fn zero(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, Elem::ONE)
    }

    pub fn constant(field: &Field, c: Elem) -> Poly {
        Poly::new(field, vec![c])
    }

    /// The polynomial `x`.
    pub fn x(field: &Field) -> Poly {
        Poly::new(field, vec![Elem::ZERO, Elem::ONE])
    }

    /// `c * x^deg`.
    pub fn monomial(field: &Field, c: Elem, deg: usize) -> Poly {
        let mut coeffs = vec![Elem::ZERO; deg + 1];
        coeffs[deg] = c;
        Poly::new(field, coeffs)
    }

    /// `x - a`.
    pub fn linear(field: &Field, a: Elem) -> Poly {
        Poly::new(field, vec![field.neg(a), Elem::ONE])
    }

    /// `prod (x - a_i)`.
    pub fn from_roots(field: &Field, roots: &[Elem]) -> Poly {
        roots.iter().fold(Poly::one(field), |acc, &a| acc.mul_unchecked(&Poly::linear(field, a)))
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Integer encodings of the coefficients, lowest degree first.
    pub fn values(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.value()).collect()
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Elem::ONE
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&Elem::ONE)
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    fn check_field(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Ok(Poly::new(f, coeffs))
    }

    pub fn neg(&self) -> Poly {
        let coeffs = self.coeffs.iter().map(|&c| self.field.neg(c)).collect();
        Poly::new(&self.field, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Poly) -> Poly {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.mul_add(a, b, out[i + j]);
            }
        }
        Poly::new(f, out)
    }

    pub fn scale(&self, c: Elem) -> Poly {
        let coeffs = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        Poly::new(&self.field, coeffs)
    }

    /// Quotient and remainder with `deg(rem) < deg(g)`.
    pub fn divrem(&self, g: &Poly) -> Result<(Poly, Poly)> {
        self.check_field(g)?;
        let f = &self.field;
        let dg = g.degree().ok_or(Error::DivisionByZeroPoly)?;
        let lead_inv = f.inv(g.leading())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dg {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![Elem::ZERO; rem.len() - dg];
        for i in (0..quot.len()).rev() {
            let c = f.mul(rem[i + dg], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[i] = c;
            for (j, &gj) in g.coeffs.iter().enumerate() {
                rem[i + j] = f.sub(rem[i + j], f.mul(c, gj));
            }
        }
        rem.truncate(dg);
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    pub fn rem(&self, g: &Poly) -> Result<Poly> {
        Ok(self.divrem(g)?.1)
    }

    /// Scales to leading coefficient one; the zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        match self.field.inv(self.leading()) {
            Ok(inv) => self.scale(inv),
            Err(_) => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroInput);
        }
        let g = self.gcd(other)?;
        let (q, _) = self.mul_unchecked(other).divrem(&g)?;
        Ok(q.monic())
    }

    /// Horner evaluation at `a`.
    pub fn eval(&self, a: Elem) -> Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(Elem::ZERO, |acc, &c| f.mul_add(acc, a, c))
    }

    /// Whether `a` is a root.
    pub fn has_root(&self, a: Elem) -> bool {
        self.eval(a).is_zero()
    }

    fn mulmod(&self, other: &Poly, m: &Poly) -> Result<Poly> {
        self.mul_unchecked(other).rem(m)
    }

    fn powmod(&self, mut n: u64, m: &Poly) -> Result<Poly> {
        let mut base = self.rem(m)?;
        let mut acc = Poly::one(&self.field).rem(m)?;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mulmod(&base, m)?;
            }
            base = base.mulmod(&base, m)?;
            n >>= 1;
        }
        Ok(acc)
    }

    /// Irreducibility over the coefficient field.
    ///
    /// A polynomial of degree d is irreducible iff it shares no factor with
    /// `x^(q^i) - x` for `1 <= i <= d/2` (Ben-Or's test).
    pub fn is_irreducible(&self) -> Result<bool> {
        let d = match self.degree() {
            None | Some(0) => return Err(Error::DegreeZeroInput),
            Some(d) => d,
        };
        if d == 1 {
            return Ok(true);
        }
        let f = self.monic();
        let q = self.field.q() as u64;
        let x = Poly::x(&self.field);
        let mut power = x.clone();
        for _ in 1..=d / 2 {
            power = power.powmod(q, &f)?;
            if !f.gcd(&power.sub(&x)?)?.is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Parses `"c0 + c1*x + c2*x^2"`; terms may come in any order and
    /// repeated powers are summed. Also accepts `x` and `x^k` without a
    /// coefficient.
    pub fn parse(field: &Field, text: &str) -> Result<Poly> {
        let bad = || Error::Parse(format!("cannot parse polynomial {text:?}"));
        let mut coeffs: Vec<Elem> = Vec::new();
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(bad());
        }
        for term in cleaned.split('+') {
            let (c, deg) = match term.split_once('x') {
                None => (term, 0),
                Some((head, tail)) => {
                    let c = match head {
                        "" => "1",
                        h => h.strip_suffix('*').ok_or_else(bad)?,
                    };
                    let deg = match tail {
                        "" => 1,
                        t => t.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())?,
                    };
                    (c, deg)
                }
            };
            let c: u64 = c.parse().map_err(|_| bad())?;
            let c = field.elem(c)?;
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, Elem::ZERO);
            }
            coeffs[deg] = field.add(coeffs[deg], c);
        }
        Ok(Poly::new(field, coeffs))
    }
}

/// Monic polynomials of exactly `degree`, in encoding order: the
/// coefficient tuple `(c_0, ..., c_{degree-1})` read as a base-q number
/// with `c_{degree-1}` most significant.
pub fn monic_polys(field: &Field, degree: usize) -> impl Iterator<Item = Poly> + '_ {
    let q = field.q() as u64;
    let count = q.checked_pow(degree as u32).unwrap_or(u64::MAX);
    (0..count).map(move |mut v| {
        let mut coeffs = Vec::with_capacity(degree + 1);
        for _ in 0..degree {
            coeffs.push(Elem::raw((v % q) as u32));
            v /= q;
        }
        coeffs.push(Elem::ONE);
        Poly::new(field, coeffs)
    })
}

/// The first `limit` monic irreducibles of the given degree in encoding order.
/// Degree zero yields the constant polynomial 1.
pub fn irreducibles(field: &Field, degree: usize, limit: usize) -> Vec<Poly> {
    if degree == 0 {
        return if limit == 0 { Vec::new() } else { vec![Poly::one(field)] };
    }
    monic_polys(field, degree)
        .filter(|p| p.is_irreducible().unwrap_or(false))
        .take(limit)
        .collect()
}

fn mobius(mut n: u64) -> i128 {
    let mut result = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            result = -result;
        }
        d += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Number of monic irreducibles of degree `n` over GF(q), by the Möbius
/// inversion formula `(1/n) sum_{d | n} mu(d) q^(n/d)`.
pub fn count_irreducibles(q: u64, n: u64) -> Result<u128> {
    if n == 0 {
        return Err(Error::NonPositiveDegree);
    }
    let mut total: i128 = 0;
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        let mu = mobius(d);
        if mu == 0 {
            continue;
        }
        let exp = u32::try_from(n / d).map_err(|_| Error::Overflow("q^(n/d)"))?;
        let term = (q as i128).checked_pow(exp).ok_or(Error::Overflow("q^(n/d)"))?;
        total = total
            .checked_add(mu * term)
            .ok_or(Error::Overflow("Möbius sum"))?;
    }
    Ok((total / n as i128) as u128)
}
