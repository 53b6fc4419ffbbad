//! A small table of named codes standing in for a database of best known
//! linear codes.

use crate::code::LinearCode;
use crate::error::Result;
use crate::gf::Field;
use crate::grs::{default_points, first_root_free_denominator, GrsSpec};
use crate::io::CodeRecord;
use crate::worked_example;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub code: LinearCode,
}

/// Named codes plus a few families generated on demand: zero, full,
/// repetition and single-parity codes of every length, and GRS or extended
/// GRS codes (MDS) whenever `q >= 3` and `n <= q + 1`.
#[derive(Clone, Debug, Default)]
pub struct CodeCatalog {
    entries: Vec<CatalogEntry>,
}

impl CodeCatalog {
    pub fn empty() -> CodeCatalog {
        CodeCatalog::default()
    }

    /// Binary Hamming `[7,4,3]`, its dual simplex `[7,3,4]` and the
    /// extended Hamming `[8,4,4]` code.
    pub fn builtin() -> CodeCatalog {
        let hamming = worked_example::c1();
        let f = hamming.field().clone();
        let mut ext = Vec::new();
        for i in 0..hamming.k() {
            let mut row = hamming.generator().row(i).to_vec();
            row.push(f.sum(row.iter().copied()));
            ext.push(row);
        }
        let ext = crate::matrix::Matrix::from_rows(&f, 8, &ext).expect("valid rows");
        let mut cat = CodeCatalog::empty();
        cat.add("hamming-7-4", hamming.clone());
        cat.add("simplex-7-3", hamming.dual());
        cat.add("ext-hamming-8-4", LinearCode::from_generator(&ext).expect("nonempty"));
        cat
    }

    pub fn add(&mut self, name: &str, code: LinearCode) {
        self.entries.push(CatalogEntry { name: name.to_string(), code });
    }

    /// Adds user-supplied code records.
    pub fn extend_from_records(&mut self, records: &[CodeRecord]) -> Result<()> {
        for (i, r) in records.iter().enumerate() {
            let code = r.to_code()?;
            let name = r.name.clone().unwrap_or_else(|| format!("code-{i}"));
            self.add(&name, code);
        }
        Ok(())
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    /// All candidate `[n, k]` codes over `field`, stored ones first.
    pub fn candidates(&self, field: &Field, n: usize, k: usize) -> Vec<CatalogEntry> {
        let mut out: Vec<CatalogEntry> = self
            .entries
            .iter()
            .filter(|e| e.code.field() == field && e.code.n() == n && e.code.k() == k)
            .cloned()
            .collect();
        if n == 0 || k > n {
            return out;
        }
        let mut push = |name: String, code: Result<LinearCode>| {
            if let Ok(code) = code {
                out.push(CatalogEntry { name, code });
            }
        };
        let q = field.q() as usize;
        if q >= 3 && n <= q + 1 && k >= 1 {
            let extended = n == q + 1;
            let points = default_points(field, n, extended);
            if let Some(p) = first_root_free_denominator(field, k, &points) {
                push(format!("grs-{n}-{k}"), GrsSpec::new(field, points, p, extended).code());
            }
        }
        match k {
            0 => push(format!("zero-{n}"), LinearCode::zero(field, n)),
            _ if k == n => push(format!("full-{n}"), LinearCode::full(field, n)),
            1 => push(format!("repetition-{n}"), LinearCode::repetition(field, n)),
            _ if k + 1 == n => push(
                format!("parity-{n}"),
                LinearCode::repetition(field, n).map(|r| r.dual()),
            ),
            _ => {}
        }
        out
    }

    /// The candidate with the largest minimum distance (first on ties).
    /// Distances that cannot be computed rank below every known one.
    pub fn best(&self, field: &Field, n: usize, k: usize) -> Option<LinearCode> {
        let mut best: Option<(usize, LinearCode)> = None;
        for e in self.candidates(field, n, k) {
            let d = if k == 0 { n + 1 } else { e.code.min_distance().unwrap_or(0) };
            if best.as_ref().is_none_or(|(bd, _)| d > *bd) {
                best = Some((d, e.code));
            }
        }
        best.map(|(_, c)| c)
    }
}
