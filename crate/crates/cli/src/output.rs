//! Rendering results as JSON or CSV, and the optional output directory
//! with its run manifest.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    fn ext(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

#[derive(Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Serialize)]
pub struct RunManifest {
    pub command: String,
    pub seed: u64,
    pub inputs: Vec<InputDigest>,
    pub outputs: Vec<String>,
    pub version: String,
}

/// Collects input digests while a command runs and writes its result.
pub struct Sink {
    format: Option<Format>,
    out_dir: Option<PathBuf>,
    command: String,
    seed: u64,
    inputs: Vec<InputDigest>,
}

impl Sink {
    pub fn new(format: Option<Format>, out_dir: Option<PathBuf>, command: String, seed: u64) -> Sink {
        Sink { format, out_dir, command, seed, inputs: Vec::new() }
    }

    /// Records the digest of an input file; call before reading it.
    pub fn input(&mut self, path: &Path) -> Result<()> {
        let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
        self.inputs.push(InputDigest {
            path: path.display().to_string(),
            sha256: hex::encode(Sha256::digest(&bytes)),
        });
        Ok(())
    }

    /// A single object: JSON unless CSV is requested, in which case it
    /// must be a flat record and becomes a one-row table.
    pub fn object<T: Serialize>(&self, stem: &str, value: &T) -> Result<()> {
        match self.format.unwrap_or(Format::Json) {
            Format::Json => self.write(stem, Format::Json, json(value)?),
            Format::Csv => self.write(stem, Format::Csv, csv_text(std::slice::from_ref(value))?),
        }
    }

    /// A table: CSV unless JSON is requested.
    pub fn table<T: Serialize>(&self, stem: &str, rows: &[T]) -> Result<()> {
        match self.format.unwrap_or(Format::Csv) {
            Format::Json => self.write(stem, Format::Json, json(&rows)?),
            Format::Csv => self.write(stem, Format::Csv, csv_text(rows)?),
        }
    }

    fn write(&self, stem: &str, format: Format, text: String) -> Result<()> {
        print!("{text}");
        let Some(dir) = &self.out_dir else { return Ok(()) };
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let name = format!("{stem}.{}", format.ext());
        fs::write(dir.join(&name), &text).with_context(|| format!("writing {name}"))?;
        let manifest = RunManifest {
            command: self.command.clone(),
            seed: self.seed,
            inputs: self.inputs.iter().map(|i| InputDigest { path: i.path.clone(), sha256: i.sha256.clone() }).collect(),
            outputs: vec![name],
            version: env!("CARGO_PKG_VERSION").to_string(),
        };
        fs::write(dir.join("manifest.json"), json(&manifest)?).context("writing manifest.json")?;
        Ok(())
    }
}

fn json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn csv_text<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut buf = Vec::new();
    if let Err(e) = ellpair::io::write_csv(rows, &mut buf) {
        bail!("this result has no flat CSV form ({e}); use --format json");
    }
    Ok(String::from_utf8(buf)?)
}
