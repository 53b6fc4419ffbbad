mod output;

use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use ellpair::catalog::CodeCatalog;
use ellpair::eaqecc::{catalog_search, eaqecc_from_pair, mds_eaqecc, EaqeccParams};
use ellpair::grs::grs_pair;
use ellpair::io::{read_code_records, read_json, CatalogRow, CodeRecord, MdsGridRow, PairRecord};
use ellpair::matrix::{vandermonde_superregular, Matrix};
use ellpair::pairs::{
    classify, conjecture_probe, extend_length, pair_from_superregular, reduce_ell, tune_by_monomial, PairClass,
    WitnessRoute, DEFAULT_BUDGET,
};
use ellpair::selfcheck::{self, standard_cauchy, systematic_superregular, Profile};
use ellpair::{worked_example, Elem, Field, IntersectionPair, LinearCode};
use serde::Serialize;

use output::{Format, Sink};

/// Linear l-intersection pairs of codes over finite fields, and the
/// entanglement-assisted quantum codes they give.
#[derive(Parser)]
#[command(name = "ellpair", version)]
struct Cli {
    /// Seed for every randomized search.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format; objects default to JSON and tables to CSV.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Also write results and a run manifest into this directory.
    #[arg(long, global = true, env = "ELLPAIR_OUT_DIR")]
    out_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Single codes.
    #[command(subcommand)]
    Code(CodeCmd),
    /// Pairs of codes.
    #[command(subcommand)]
    Pair(PairCmd),
    /// Entanglement-assisted quantum codes.
    #[command(subcommand)]
    Eaqecc(EaqeccCmd),
    /// Recompute the four intersection dimensions of the binary example.
    ReproduceExample,
    /// Run the invariant suites.
    Selfcheck {
        #[arg(long, value_enum, default_value_t = ProfileArg::Quick)]
        profile: ProfileArg,
        /// Extra field to test, as `p:c0,c1,...,1` (modulus coefficients,
        /// lowest first); it is not checked for irreducibility.
        #[arg(long)]
        modulus: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

#[derive(Subcommand)]
enum CodeCmd {
    /// Parameters, hull dimension and weight distribution of a code.
    Info { code: PathBuf },
}

#[derive(Subcommand)]
enum PairCmd {
    /// l by every route, bounds and configuration of a pair.
    Analyze(PairInput),
    /// Search for a monomial map giving the target l.
    Tune {
        #[command(flatten)]
        input: PairInput,
        #[arg(long)]
        target: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Lower l by shrinking C2 or by lengthening both codes.
    Propagate {
        #[arg(value_enum)]
        rule: Rule,
        #[command(flatten)]
        input: PairInput,
        #[arg(long)]
        gamma: usize,
    },
    /// MDS pair from two GRS codes.
    ConstructGrs {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k1: usize,
        #[arg(long)]
        k2: usize,
        #[arg(long)]
        ell: usize,
    },
    /// MDS pair from rows of a super-regular matrix.
    ConstructSuperregular {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long, value_enum, default_value_t = Kind::Cauchy)]
        kind: Kind,
    },
    /// Look for every feasible l with fixed code parameters (q <= 4, n <= 8).
    ProbeConjecture {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k1: usize,
        #[arg(long)]
        k2: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
}

/// A pair file, or two code files.
#[derive(Args)]
struct PairInput {
    #[arg(num_args = 1..=2, required = true)]
    files: Vec<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rule {
    Reduce,
    Extend,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Cauchy,
    Vandermonde,
    Systematic,
}

#[derive(Subcommand)]
enum EaqeccCmd {
    /// Parameters of the quantum code built from a pair.
    Derive(PairInput),
    /// The MDS family [[n, n-k-l, k+1; k-l]] for every n, k, l.
    MdsGrid {
        #[arg(long)]
        q: u64,
        /// Largest length, at most q + 1 (the default).
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// Positive net rate codes from catalog codes.
    Catalog {
        #[arg(long)]
        q: u64,
        /// Lengths, as `N` or `A..B` (inclusive).
        #[arg(long)]
        n_range: String,
        /// Fixed r; by default every r with 2r < n.
        #[arg(long)]
        r: Option<usize>,
        /// JSON array of extra code records.
        #[arg(long)]
        codes: Option<PathBuf>,
    },
}

fn field(q: u64) -> Result<Field> {
    Field::with_order(q).with_context(|| format!("no field of order {q}"))
}

fn read_pair(sink: &mut Sink, input: &PairInput) -> Result<IntersectionPair> {
    for f in &input.files {
        sink.input(f)?;
    }
    Ok(match input.files.as_slice() {
        [one] => read_json::<PairRecord>(one)?.to_pair()?,
        [a, b] => IntersectionPair::new(read_code(a)?, read_code(b)?)?,
        _ => unreachable!("clap enforces one or two files"),
    })
}

fn read_code(path: &Path) -> Result<LinearCode> {
    Ok(read_json::<CodeRecord>(path)?.to_code()?)
}

fn parse_range(text: &str) -> Result<RangeInclusive<usize>> {
    let parse = |s: &str| s.trim().parse::<usize>().with_context(|| format!("bad length {s:?}"));
    match text.split_once("..") {
        Some((a, b)) => Ok(parse(a)?..=parse(b.trim_start_matches('='))?),
        None => {
            let n = parse(text)?;
            Ok(n..=n)
        }
    }
}

fn parse_modulus(text: &str) -> Result<Field> {
    let Some((p, coeffs)) = text.split_once(':') else { bail!("expected p:c0,c1,...") };
    let p: u64 = p.trim().parse().context("bad characteristic")?;
    let coeffs = coeffs
        .split(',')
        .map(|c| c.trim().parse::<u32>().context("bad coefficient"))
        .collect::<Result<Vec<_>>>()?;
    Ok(Field::from_modulus_unchecked(p, &coeffs)?)
}

#[derive(Serialize)]
struct CodeInfo {
    q: u32,
    n: usize,
    k: usize,
    d: Option<usize>,
    mds: Option<bool>,
    hull_dim: usize,
    lcd: bool,
    self_orthogonal: bool,
    weight_distribution: Option<Vec<u128>>,
}

#[derive(Serialize)]
struct PairAnalysis {
    q: u32,
    n: usize,
    k1: usize,
    k2: usize,
    ell: usize,
    ell_by_rank: usize,
    ell_by_rank_reverse: usize,
    ell_min: usize,
    ell_max: usize,
    class: PairClass,
    eaqecc_k: usize,
    eaqecc_d: Option<usize>,
    eaqecc_c: usize,
    net_rate: String,
    singleton_slack: Option<i64>,
}

#[derive(Serialize)]
struct TuneOutput {
    trials: usize,
    pair: PairRecord,
}

#[derive(Serialize)]
struct ProbeLine {
    ell: usize,
    found: bool,
    route: Option<WitnessRoute>,
    d1: Option<usize>,
    d2: Option<usize>,
    pair: Option<PairRecord>,
}

#[derive(Serialize)]
struct ProbeOutput {
    q: u32,
    n: usize,
    k1: usize,
    k2: usize,
    seed_d1: Option<usize>,
    seed_d2: Option<usize>,
    entries: Vec<ProbeLine>,
}

#[derive(Serialize)]
struct DeriveOutput {
    #[serde(flatten)]
    params: EaqeccParams,
    certified: bool,
}

/// Runs a command; `Ok(false)` means a certification failed.
fn run(cli: Cli, command_line: String) -> Result<bool> {
    let mut sink = Sink::new(cli.format, cli.out_dir.clone(), command_line, cli.seed);
    let seed = cli.seed;
    match cli.command {
        Command::Code(CodeCmd::Info { code }) => {
            sink.input(&code)?;
            let c = read_code(&code)?;
            let d = if c.k() == 0 { None } else { c.min_distance().ok() };
            let hull = c.hull_dim();
            let info = CodeInfo {
                q: c.field().q(),
                n: c.n(),
                k: c.k(),
                d,
                mds: d.map(|d| d == c.n() - c.k() + 1),
                hull_dim: hull,
                lcd: hull == 0,
                self_orthogonal: hull == c.k(),
                weight_distribution: c.weight_distribution().ok(),
            };
            sink.object("code-info", &info)?;
            Ok(true)
        }
        Command::Pair(cmd) => run_pair(&mut sink, cmd, seed),
        Command::Eaqecc(cmd) => run_eaqecc(&mut sink, cmd, seed),
        Command::ReproduceExample => {
            let report = worked_example::reproduce()?;
            if sink_is_table(&cli.format) {
                sink.table("example", &report.lines)?;
            } else {
                sink.object("example", &report)?;
            }
            Ok(report.ok)
        }
        Command::Selfcheck { profile, modulus } => {
            let profile = match profile {
                ProfileArg::Quick => Profile::Quick,
                ProfileArg::Full => Profile::Full,
            };
            let extra = modulus.as_deref().map(parse_modulus).transpose()?;
            let report = selfcheck::run_with_fields(profile, seed, extra.as_slice());
            sink.object("selfcheck", &report)?;
            for s in report.suites.iter().filter(|s| !s.passed) {
                eprintln!("suite {} failed: {}", s.name, s.failures.join("; "));
            }
            Ok(report.passed)
        }
    }
}

fn sink_is_table(format: &Option<Format>) -> bool {
    *format == Some(Format::Csv)
}

fn run_pair(sink: &mut Sink, cmd: PairCmd, seed: u64) -> Result<bool> {
    match cmd {
        PairCmd::Analyze(input) => {
            let pair = read_pair(sink, &input)?;
            let (lo, hi) = pair.bounds();
            let eaqecc = ellpair::eaqecc::eaqecc_from_pair_partial(&pair);
            let a = PairAnalysis {
                q: pair.field().q(),
                n: pair.n(),
                k1: pair.c1().k(),
                k2: pair.c2().k(),
                ell: pair.ell(),
                ell_by_rank: pair.ell_by_rank(),
                ell_by_rank_reverse: pair.ell_by_rank_reverse(),
                ell_min: lo,
                ell_max: hi,
                class: classify(&pair),
                eaqecc_k: eaqecc.k,
                eaqecc_d: eaqecc.d,
                eaqecc_c: eaqecc.c,
                net_rate: eaqecc.net_rate.to_string(),
                singleton_slack: eaqecc.singleton_slack,
            };
            let agree = a.ell == a.ell_by_rank && a.ell == a.ell_by_rank_reverse;
            sink.object("pair-analysis", &a)?;
            Ok(agree)
        }
        PairCmd::Tune { input, target, budget } => {
            let pair = read_pair(sink, &input)?;
            let t = tune_by_monomial(pair.c1(), pair.c2(), target, budget, seed)?;
            let out = TuneOutput { trials: t.trials, pair: PairRecord::of(&t.pair, Some(&t.monomial)) };
            sink.object("pair-tune", &out)?;
            Ok(true)
        }
        PairCmd::Propagate { rule, input, gamma } => {
            let pair = read_pair(sink, &input)?;
            let (out, stem) = match rule {
                Rule::Reduce => (reduce_ell(&pair, gamma)?, "pair-reduce"),
                Rule::Extend => (extend_length(&pair, gamma)?, "pair-extend"),
            };
            sink.object(stem, &PairRecord::of(&out, None))?;
            Ok(out.ell() == gamma)
        }
        PairCmd::ConstructGrs { q, n, k1, k2, ell } => {
            let pair = grs_pair(&field(q)?, n, k1, k2, ell)?;
            sink.object("pair-grs", &PairRecord::of(&pair, None))?;
            Ok(pair.ell() == ell)
        }
        PairCmd::ConstructSuperregular { q, n, i, j, ell, kind } => {
            let f = field(q)?;
            let a = superregular(&f, n, kind)?;
            let pair = pair_from_superregular(&a, i, j, ell)?;
            sink.object("pair-superregular", &PairRecord::of(&pair, None))?;
            Ok(pair.ell() == ell)
        }
        PairCmd::ProbeConjecture { q, n, k1, k2, budget } => {
            let report = conjecture_probe(&field(q)?, n, k1, k2, budget, seed)?;
            let out = ProbeOutput {
                q: report.q,
                n: report.n,
                k1: report.k1,
                k2: report.k2,
                seed_d1: report.seed_d1,
                seed_d2: report.seed_d2,
                entries: report
                    .entries
                    .iter()
                    .map(|e| ProbeLine {
                        ell: e.ell,
                        found: e.witness.is_some(),
                        route: e.witness.as_ref().map(|w| w.route),
                        d1: e.witness.as_ref().and_then(|w| w.d1),
                        d2: e.witness.as_ref().and_then(|w| w.d2),
                        pair: e.witness.as_ref().map(|w| PairRecord::of(&w.pair, w.monomial.as_ref())),
                    })
                    .collect(),
            };
            sink.object("probe", &out)?;
            Ok(true)
        }
    }
}

fn superregular(f: &Field, n: usize, kind: Kind) -> Result<Matrix> {
    Ok(match kind {
        Kind::Cauchy => standard_cauchy(f, n)?,
        Kind::Systematic => systematic_superregular(f, n)?,
        Kind::Vandermonde => {
            let els: Vec<Elem> = f.elements().collect();
            if 2 * n > els.len() {
                bail!("a Vandermonde pair of order {n} needs {} distinct nodes", 2 * n);
            }
            vandermonde_superregular(f, &els[..n], &els[n..2 * n])?
        }
    })
}

fn run_eaqecc(sink: &mut Sink, cmd: EaqeccCmd, seed: u64) -> Result<bool> {
    match cmd {
        EaqeccCmd::Derive(input) => {
            let pair = read_pair(sink, &input)?;
            let params = eaqecc_from_pair(&pair)?;
            let certified = params.is_certified();
            if let Err(e) = params.certify() {
                eprintln!("{e}");
            }
            sink.object("eaqecc", &DeriveOutput { params, certified })?;
            Ok(certified)
        }
        EaqeccCmd::MdsGrid { q, nmax } => {
            let f = field(q)?;
            let nmax = nmax.unwrap_or(q as usize + 1);
            if nmax > q as usize + 1 {
                bail!("MDS codes over GF({q}) have length at most {}", q + 1);
            }
            let mut rows = Vec::new();
            let mut ok = true;
            for n in 1..=nmax {
                for k in 0..=n {
                    for ell in 0..=k.min(n - k) {
                        match mds_eaqecc(&f, n, k, ell, seed) {
                            Ok(m) => {
                                let row = MdsGridRow::new(k, ell, &m.params);
                                row.validate()?;
                                rows.push(row);
                            }
                            Err(e) => {
                                ok = false;
                                eprintln!("n = {n}, k = {k}, l = {ell}: {e}");
                            }
                        }
                    }
                }
            }
            sink.table(&format!("mds-grid-q{q}"), &rows)?;
            Ok(ok)
        }
        EaqeccCmd::Catalog { q, n_range, r, codes } => {
            let f = field(q)?;
            let mut catalog = CodeCatalog::builtin();
            if let Some(path) = &codes {
                sink.input(path)?;
                catalog.extend_from_records(&read_code_records(path)?)?;
            }
            let out = catalog_search(&f, parse_range(&n_range)?, r, &catalog)?;
            let mut rows = Vec::new();
            for e in &out.entries {
                let p = &e.params;
                let row = CatalogRow {
                    q: p.q,
                    n: p.n,
                    r: e.r,
                    k1: e.k1,
                    k2: e.k2,
                    ell: e.ell,
                    kk: p.k,
                    d: p.d.expect("catalog distances are computed"),
                    c: p.c,
                    rate: p.rate.to_string(),
                    net_rate: p.net_rate.to_string(),
                    slack: p.singleton_slack.expect("distance known"),
                    rate_at_least_half: e.rate_at_least_half,
                    c1_name: e.c1_name.clone(),
                    c2_name: e.c2_name.clone(),
                };
                row.validate()?;
                rows.push(row);
            }
            let mut misses = out.misses.clone();
            misses.sort_unstable();
            misses.dedup();
            for (n, k) in &misses {
                eprintln!("no [{n}, {k}] code in the catalog");
            }
            sink.table(&format!("catalog-q{q}"), &rows)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let command_line = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let cli = Cli::parse();
    match run(cli, command_line) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
