//! Arithmetic in GF(p^e).
//!
//! Elements are encoded as integers in `[0, q)`: the residue class
//! `c_0 + c_1 x + ... + c_{e-1} x^{e-1}` is stored as `sum c_i p^i`.
//! Each field carries a canonical modulus, the first monic irreducible of
//! degree `e` over GF(p) in encoding order, so two independently built
//! copies of GF(p^e) agree bit for bit.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

/// Fields up to this order get a full addition table.
const ADD_TABLE_LIMIT: u32 = 256;

/// A field element, encoded as a base-p integer.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub(crate) const fn raw(v: u32) -> Elem {
        Elem(v)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

enum MulImpl {
    /// Discrete log tables with respect to a primitive element.
    Log { exp: Vec<u32>, log: Vec<u32> },
    /// Schoolbook multiplication modulo the modulus. Used when the modulus
    /// is not irreducible, so the quotient ring has no primitive element.
    Direct,
}

struct Inner {
    p: u32,
    e: u32,
    q: u32,
    /// Monic modulus over GF(p), lowest degree first, length e + 1.
    modulus: Vec<u32>,
    mul: MulImpl,
    add_table: Option<Vec<u16>>,
}

/// A finite field GF(p^e). Cheap to clone; clones share tables.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.e == other.inner.e
                && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.inner.p, self.inner.e)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.e == 1 {
            write!(f, "GF({})", self.inner.p)
        } else {
            write!(f, "GF({}^{})", self.inner.p, self.inner.e)
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` into `(p, e)` with `q = p^e`.
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::NotAPrimePower(q));
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    if rest != 1 {
        return Err(Error::NotAPrimePower(q));
    }
    Ok((p, e))
}

impl Field {
    /// GF(p^e) with its canonical modulus.
    pub fn new(p: u64, e: u32) -> Result<Field> {
        let p32 = Self::check_size(p, e)?;
        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            canonical_modulus(p32, e)?
        };
        Ok(Self::build(p32, e, modulus, true))
    }

    /// GF(q) for a prime power `q`.
    pub fn with_order(q: u64) -> Result<Field> {
        let (p, e) = prime_power(q)?;
        Field::new(p, e)
    }

    /// GF(p^e) with an explicit modulus (lowest degree first, monic).
    /// The modulus must be irreducible.
    pub fn from_modulus(p: u64, modulus: &[u32]) -> Result<Field> {
        let e = modulus.len().saturating_sub(1) as u32;
        let p32 = Self::check_size(p, e)?;
        if modulus.last() != Some(&1) || modulus.iter().any(|&c| c >= p32) {
            return Err(Error::Parse("modulus must be monic with coefficients below p".into()));
        }
        let base = Field::new(p, 1)?;
        let poly = Poly::from_values(&base, modulus)?;
        if !poly.is_irreducible()? {
            return Err(Error::Parse("modulus is reducible".into()));
        }
        Ok(Self::build(p32, e, modulus.to_vec(), true))
    }

    /// Quotient ring GF(p)[x]/(modulus) without checking irreducibility.
    ///
    /// Only meant for negative controls: with a reducible modulus the
    /// result is not a field and inverses are wrong.
    #[doc(hidden)]
    pub fn from_modulus_unchecked(p: u64, modulus: &[u32]) -> Result<Field> {
        let e = modulus.len().saturating_sub(1) as u32;
        let p32 = Self::check_size(p, e)?;
        Ok(Self::build(p32, e, modulus.to_vec(), false))
    }

    fn check_size(p: u64, e: u32) -> Result<u32> {
        if !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if e == 0 {
            return Err(Error::UnsupportedSize { p, e });
        }
        match p.checked_pow(e) {
            Some(q) if q <= MAX_ORDER => Ok(p as u32),
            _ => Err(Error::UnsupportedSize { p, e }),
        }
    }

    fn build(p: u32, e: u32, modulus: Vec<u32>, irreducible: bool) -> Field {
        let q = p.pow(e);
        let mut inner = Inner {
            p,
            e,
            q,
            modulus,
            mul: MulImpl::Direct,
            add_table: None,
        };
        if irreducible {
            inner.mul = log_tables(&inner).unwrap_or(MulImpl::Direct);
        }
        if e > 1 && p != 2 && q <= ADD_TABLE_LIMIT {
            let mut table = vec![0u16; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    table[(a * q + b) as usize] = digit_add(&inner, a, b) as u16;
                }
            }
            inner.add_table = Some(table);
        }
        Field { inner: Arc::new(inner) }
    }

    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn e(&self) -> u32 {
        self.inner.e
    }

    pub fn q(&self) -> u32 {
        self.inner.q
    }

    /// Coefficients of the modulus over GF(p), lowest degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// Checked constructor from an integer encoding.
    pub fn elem(&self, value: u64) -> Result<Elem> {
        if value < self.inner.q as u64 {
            Ok(Elem(value as u32))
        } else {
            Err(Error::ElementOutOfRange { value, q: self.inner.q })
        }
    }

    pub fn contains(&self, a: Elem) -> bool {
        a.0 < self.inner.q
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.inner.p as i64) as u32)
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.inner.q).map(Elem)
    }

    /// Nonzero elements in encoding order.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> {
        (1..self.inner.q).map(Elem)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let inner = &*self.inner;
        if inner.e == 1 {
            let s = a.0 + b.0;
            return Elem(if s >= inner.p { s - inner.p } else { s });
        }
        if inner.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        if let Some(t) = &inner.add_table {
            return Elem(t[(a.0 * inner.q + b.0) as usize] as u32);
        }
        Elem(digit_add(inner, a.0, b.0))
    }

    pub fn neg(&self, a: Elem) -> Elem {
        let inner = &*self.inner;
        if inner.p == 2 || a.0 == 0 {
            return a;
        }
        if inner.e == 1 {
            return Elem(inner.p - a.0);
        }
        let (p, mut v, mut out, mut scale) = (inner.p, a.0, 0, 1);
        while v > 0 {
            let d = v % p;
            out += ((p - d) % p) * scale;
            v /= p;
            scale *= p;
        }
        Elem(out)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        match &self.inner.mul {
            MulImpl::Log { exp, log } => Elem(exp[(log[a.0 as usize] + log[b.0 as usize]) as usize]),
            MulImpl::Direct => Elem(direct_mul(&self.inner, a.0, b.0)),
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        match &self.inner.mul {
            MulImpl::Log { exp, log } => Ok(Elem(exp[(self.inner.q - 1 - log[a.0 as usize]) as usize])),
            MulImpl::Direct => Ok(self.pow_u(a, self.inner.q as u64 - 2)),
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    fn pow_u(&self, a: Elem, mut n: u64) -> Elem {
        let mut base = a;
        let mut acc = Elem::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    /// `a^n` for any integer `n`; negative exponents go through the inverse.
    pub fn pow(&self, a: Elem, n: i64) -> Result<Elem> {
        if n >= 0 {
            Ok(self.pow_u(a, n as u64))
        } else {
            let inv = self.inv(a)?;
            Ok(self.pow_u(inv, n.unsigned_abs()))
        }
    }

    /// The Frobenius power `a^(p^h)` for `0 <= h < e`.
    pub fn frobenius(&self, a: Elem, h: u32) -> Result<Elem> {
        if h >= self.inner.e {
            return Err(Error::InvalidExponentIndex { h, e: self.inner.e });
        }
        let mut x = a;
        for _ in 0..h {
            x = self.pow_u(x, self.inner.p as u64);
        }
        Ok(x)
    }

    /// Sum of a slice of elements.
    pub fn sum<I: IntoIterator<Item = Elem>>(&self, items: I) -> Elem {
        items.into_iter().fold(Elem::ZERO, |acc, x| self.add(acc, x))
    }

    /// `a * b + c`.
    #[inline]
    pub fn mul_add(&self, a: Elem, b: Elem, c: Elem) -> Elem {
        self.add(self.mul(a, b), c)
    }
}

fn digit_add(inner: &Inner, mut a: u32, mut b: u32) -> u32 {
    let (p, mut out, mut scale) = (inner.p, 0, 1);
    while a > 0 || b > 0 {
        out += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    out
}

fn digits(inner: &Inner, mut v: u32) -> Vec<u32> {
    let mut d = vec![0; inner.e as usize];
    for slot in d.iter_mut() {
        *slot = v % inner.p;
        v /= inner.p;
    }
    d
}

fn direct_mul(inner: &Inner, a: u32, b: u32) -> u32 {
    let p = inner.p as u64;
    let e = inner.e as usize;
    let (da, db) = (digits(inner, a), digits(inner, b));
    let mut prod = vec![0u64; 2 * e - 1];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
        }
    }
    // reduce modulo the monic modulus, top degree down
    for deg in (e..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        for (i, &m) in inner.modulus[..e].iter().enumerate() {
            let idx = deg - e + i;
            prod[idx] = (prod[idx] + (p - c) * m as u64) % p;
        }
        prod[deg] = 0;
    }
    prod[..e].iter().rev().fold(0u64, |acc, &c| acc * p + c) as u32
}

fn log_tables(inner: &Inner) -> Option<MulImpl> {
    let q = inner.q;
    if q == 2 {
        return Some(MulImpl::Log { exp: vec![1, 1], log: vec![0, 0] });
    }
    let order = q - 1;
    for g in 2..q {
        let mut exp = Vec::with_capacity(2 * order as usize);
        let mut x = 1u32;
        let mut ok = true;
        for i in 0..order {
            if i > 0 && x == 1 {
                ok = false;
                break;
            }
            exp.push(x);
            x = direct_mul(inner, x, g);
        }
        if !ok || x != 1 {
            continue;
        }
        let mut log = vec![0u32; q as usize];
        for (i, &v) in exp.iter().enumerate() {
            log[v as usize] = i as u32;
        }
        let head: Vec<u32> = exp.clone();
        exp.extend(head);
        return Some(MulImpl::Log { exp, log });
    }
    None
}

/// First monic irreducible of degree `e` over GF(p) in encoding order.
fn canonical_modulus(p: u32, e: u32) -> Result<Vec<u32>> {
    let base = Field::new(p as u64, 1)?;
    let count = (p as u64).pow(e);
    for v in 0..count {
        let mut coeffs = Vec::with_capacity(e as usize + 1);
        let mut rest = v;
        for _ in 0..e {
            coeffs.push((rest % p as u64) as u32);
            rest /= p as u64;
        }
        coeffs.push(1);
        if Poly::from_values(&base, &coeffs)?.is_irreducible()? {
            return Ok(coeffs);
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over GF(p)")
}
