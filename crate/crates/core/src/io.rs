//! JSON records for fields, matrices, codes and pairs, and CSV tables of
//! EAQECC parameters.

use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::eaqecc::{EaqeccParams, Rational};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::matrix::Matrix;
use crate::pairs::IntersectionPair;
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldRecord {
    pub p: u64,
    pub e: u32,
}

impl FieldRecord {
    pub fn of(field: &Field) -> FieldRecord {
        FieldRecord { p: field.p() as u64, e: field.e() }
    }

    pub fn to_field(self) -> Result<Field> {
        Field::new(self.p, self.e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixRecord {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<u32>>,
}

impl MatrixRecord {
    pub fn of(m: &Matrix) -> MatrixRecord {
        MatrixRecord { rows: m.rows(), cols: m.cols(), entries: m.to_values() }
    }

    pub fn to_matrix(&self, field: &Field) -> Result<Matrix> {
        if self.entries.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "{} rows listed, {} declared",
                self.entries.len(),
                self.rows
            )));
        }
        Matrix::from_values(field, self.cols, &self.entries)
    }
}

/// Integer encodings of the coefficients, lowest degree first.
pub fn poly_to_json(p: &Poly) -> Vec<u32> {
    p.values()
}

pub fn poly_from_json(field: &Field, values: &[u32]) -> Result<Poly> {
    Poly::from_values(field, values)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRecord {
    pub q: FieldRecord,
    pub n: usize,
    pub k: usize,
    pub generator: MatrixRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl CodeRecord {
    pub fn of(code: &LinearCode, name: Option<&str>) -> CodeRecord {
        CodeRecord {
            q: FieldRecord::of(code.field()),
            n: code.n(),
            k: code.k(),
            generator: MatrixRecord::of(code.generator()),
            name: name.map(str::to_string),
        }
    }

    /// Rebuilds the code and checks the declared `n` and `k`.
    pub fn to_code(&self) -> Result<LinearCode> {
        let field = self.q.to_field()?;
        let g = self.generator.to_matrix(&field)?;
        let code = LinearCode::from_generator(&g)?;
        if code.n() != self.n || code.k() != self.k {
            return Err(Error::DimensionMismatch(format!(
                "record declares [{}, {}] but the generator spans [{}, {}]",
                self.n,
                self.k,
                code.n(),
                code.k()
            )));
        }
        Ok(code)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub c1: CodeRecord,
    pub c2: CodeRecord,
    pub ell: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monomial: Option<MatrixRecord>,
}

impl PairRecord {
    pub fn of(pair: &IntersectionPair, monomial: Option<&Matrix>) -> PairRecord {
        PairRecord {
            c1: CodeRecord::of(pair.c1(), None),
            c2: CodeRecord::of(pair.c2(), None),
            ell: pair.ell(),
            monomial: monomial.map(MatrixRecord::of),
        }
    }

    /// Rebuilds the pair and checks the recorded `l`.
    pub fn to_pair(&self) -> Result<IntersectionPair> {
        let pair = IntersectionPair::new(self.c1.to_code()?, self.c2.to_code()?)?;
        if pair.ell() != self.ell {
            return Err(Error::CertificationFailed(format!(
                "record claims l = {} but the codes meet in dimension {}",
                self.ell,
                pair.ell()
            )));
        }
        Ok(pair)
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let mut text = String::new();
    std::fs::File::open(path)?.read_to_string(&mut text)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn read_code(path: &Path) -> Result<LinearCode> {
    read_json::<CodeRecord>(path)?.to_code()
}

/// A code catalog file: a JSON array of code records.
pub fn read_code_records(path: &Path) -> Result<Vec<CodeRecord>> {
    read_json(path)
}

/// One row of an EAQECC parameter table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MdsGridRow {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub ell: usize,
    pub kk: usize,
    pub d: usize,
    pub c: usize,
    pub rate: String,
    pub net_rate: String,
    pub slack: i64,
}

impl MdsGridRow {
    pub fn new(k: usize, ell: usize, p: &EaqeccParams) -> MdsGridRow {
        MdsGridRow {
            q: p.q,
            n: p.n,
            k,
            ell,
            kk: p.k,
            d: p.d.unwrap_or(0),
            c: p.c,
            rate: p.rate.to_string(),
            net_rate: p.net_rate.to_string(),
            slack: p.singleton_slack.unwrap_or(i64::MIN),
        }
    }

    /// Re-derives every column from `(q, n, k, ell)` and the parameter
    /// formula, checking rates and Singleton slack.
    pub fn validate(&self) -> Result<()> {
        let fail = |what: &str| Err(Error::CertificationFailed(format!("row {self:?}: {what}")));
        if self.ell > self.k.min(self.n - self.k.min(self.n)) || self.k > self.n {
            return fail("parameters out of range");
        }
        if self.kk != self.n - self.k - self.ell || self.d != self.k + 1 || self.c != self.k - self.ell {
            return fail("parameters differ from [[n, n-k-l, k+1; k-l]]");
        }
        let p = EaqeccParams::new(self.q, self.n, self.kk, Some(self.d), self.c);
        if p.rate.to_string() != self.rate || p.net_rate.to_string() != self.net_rate {
            return fail("rate columns");
        }
        if p.singleton_slack != Some(self.slack) || self.slack != 0 {
            return fail("Singleton slack");
        }
        Ok(())
    }
}

/// One row of the catalog search table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRow {
    pub q: u32,
    pub n: usize,
    pub r: usize,
    pub k1: usize,
    pub k2: usize,
    pub ell: usize,
    pub kk: usize,
    pub d: usize,
    pub c: usize,
    pub rate: String,
    pub net_rate: String,
    pub slack: i64,
    pub rate_at_least_half: bool,
    pub c1_name: String,
    pub c2_name: String,
}

impl CatalogRow {
    /// Checks the internal consistency of a row: the parameter formula,
    /// rates, positive net rate, the rate tag and Singleton slack.
    pub fn validate(&self) -> Result<()> {
        let fail = |what: &str| Err(Error::CertificationFailed(format!("row {self:?}: {what}")));
        if self.kk + self.ell != self.k2 || self.c + self.ell != self.k1 {
            return fail("parameters differ from [[n, k2-l, d; k1-l]]");
        }
        let p = EaqeccParams::new(self.q, self.n, self.kk, Some(self.d), self.c);
        if p.rate.to_string() != self.rate || p.net_rate.to_string() != self.net_rate {
            return fail("rate columns");
        }
        if p.net_rate <= Rational::new(0, 1) {
            return fail("net rate is not positive");
        }
        if !(self.r <= self.k1 && self.k1 + self.r < self.n && self.n <= self.k2 + self.r) {
            return fail("k1, k2 outside the window set by r");
        }
        if self.rate_at_least_half && 2 * self.kk < self.n {
            return fail("tagged rate >= 1/2 but the rate is lower");
        }
        if p.singleton_slack != Some(self.slack) || self.slack < 0 {
            return fail("Singleton slack");
        }
        Ok(())
    }
}

pub fn write_csv<T: Serialize, W: Write>(rows: &[T], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<T: for<'de> Deserialize<'de>, R: Read>(input: R) -> Result<Vec<T>> {
    let mut r = csv::Reader::from_reader(input);
    let mut out = Vec::new();
    for row in r.deserialize() {
        out.push(row?);
    }
    Ok(out)
}
