//! Command-line front end: argument parsing, the five subcommands and the
//! on-disk result cache.
//!
//! Every command returns an [`Outcome`] instead of printing, so the binary
//! stays a thin wrapper and tests can inspect stdout, warnings and the exit
//! status directly.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use sha2::{Digest, Sha256};
use thiserror::Error;

use hilbpoly::exact::{ExactError, Rational};
use hilbpoly::quasipoly::{render, Style};
use hilbpoly::series_recon::{default_term_budget, CyclotomicFactorization, ReconOptions};
use hilbpoly::slmod::{hilbert_value_qbin, DegreeVector, HilbertOracle, SlmodError};
use hilbpoly::Analysis;

pub const CACHE_ENV: &str = "HILBPOLY_CACHE_DIR";

/// Upper end of the `verify` range when `--terms` is absent.
pub const DEFAULT_VERIFY_BOUND: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Hilbert quasi-polynomial
    Pol,
    /// First Hilbert values, one per line
    Series,
    /// Quasi-polynomial value at --n
    Eval,
    /// Recompute and cross-check everything
    Verify,
    /// Poincaré series and its cyclotomic denominator
    Poincare,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Pol => "pol",
            Command::Series => "series",
            Command::Eval => "eval",
            Command::Verify => "verify",
            Command::Poincare => "poincare",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Constituents,
    Fourier,
    Latex,
    Json,
}

impl From<Format> for Style {
    fn from(f: Format) -> Style {
        match f {
            Format::Constituents => Style::Constituents,
            Format::Fourier => Style::Fourier,
            Format::Latex => Style::Latex,
            Format::Json => Style::Json,
        }
    }
}

/// Hilbert functions of algebras of joint SL2-invariants of binary forms.
#[derive(Debug, Parser)]
#[command(name = "hilbpoly", version)]
pub struct Cli {
    pub command: Command,
    /// Degrees of the binary forms
    #[arg(required = true, value_name = "DEGREE")]
    pub degrees: Vec<u32>,
    #[arg(long, value_enum, default_value = "constituents")]
    pub format: Format,
    /// Argument for `eval`
    #[arg(long)]
    pub n: Option<usize>,
    /// Number of values for `series`; check range for `verify`; initial
    /// reconstruction budget otherwise
    #[arg(long)]
    pub terms: Option<usize>,
    #[arg(long)]
    pub no_cache: bool,
    #[arg(long, env = CACHE_ENV, value_name = "PATH")]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Slmod(#[from] SlmodError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Pipeline(#[from] hilbpoly::Error),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobConfig {
    pub degrees: DegreeVector,
    pub command: Command,
    pub format: Style,
    pub n: Option<usize>,
    pub terms: Option<usize>,
    pub cache_dir: Option<PathBuf>,
}

impl JobConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let degrees = DegreeVector::new(cli.degrees)?;
        match cli.command {
            Command::Eval if cli.n.is_none() => {
                return Err(CliError::Usage("eval needs --n".into()));
            }
            Command::Series if cli.terms.is_none() => {
                return Err(CliError::Usage("series needs --terms".into()));
            }
            Command::Series if cli.terms == Some(0) => {
                return Err(CliError::Usage("--terms must be at least 1".into()));
            }
            _ => {}
        }
        Ok(JobConfig {
            degrees,
            command: cli.command,
            format: cli.format.into(),
            n: cli.n,
            terms: cli.terms,
            cache_dir: if cli.no_cache { None } else { cli.cache_dir },
        })
    }
}

/// What a command produced. `success` is false only when `verify` found a
/// mismatch.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub warnings: Vec<String>,
    pub success: bool,
}

impl Outcome {
    fn ok(stdout: String, warnings: Vec<String>) -> Self {
        Outcome { stdout, warnings, success: true }
    }
}

pub fn run(cfg: &JobConfig) -> Result<Outcome, CliError> {
    match cfg.command {
        Command::Pol => cmd_pol(cfg),
        Command::Series => cmd_series(cfg),
        Command::Eval => cmd_eval(cfg),
        Command::Verify => cmd_verify(cfg),
        Command::Poincare => cmd_poincare(cfg),
    }
}

pub fn cmd_pol(cfg: &JobConfig) -> Result<Outcome, CliError> {
    let mut warnings = Vec::new();
    let a = analysis(cfg, &mut warnings)?;
    Ok(Outcome::ok(line(render(&a.quasi_polynomial, cfg.format)), warnings))
}

pub fn cmd_series(cfg: &JobConfig) -> Result<Outcome, CliError> {
    let terms = cfg.terms.unwrap_or(1);
    let mut oracle = HilbertOracle::with_capacity(&cfg.degrees, terms);
    let values = oracle.values(terms)?;
    let out = if cfg.format == Style::Json {
        let strings: Vec<String> = values.iter().map(Rational::to_string).collect();
        line(serde_json::to_string(&strings).expect("strings serialize"))
    } else {
        let mut out = String::new();
        for (n, v) in values.iter().enumerate() {
            let _ = writeln!(out, "{n}: {v}");
        }
        out
    };
    Ok(Outcome::ok(out, Vec::new()))
}

pub fn cmd_eval(cfg: &JobConfig) -> Result<Outcome, CliError> {
    let n = cfg.n.ok_or_else(|| CliError::Usage("eval needs --n".into()))?;
    let mut warnings = Vec::new();
    let a = analysis(cfg, &mut warnings)?;
    let qp = &a.quasi_polynomial;
    if n < qp.valid_from {
        let h = HilbertOracle::new(&cfg.degrees).value(n)?;
        warnings.push(format!(
            "n = {n} is below {}, where the quasi-polynomial starts to agree with H; H({n}) = {h}",
            qp.valid_from
        ));
    }
    Ok(Outcome::ok(line(qp.evaluate(n).to_string()), warnings))
}

pub fn cmd_verify(cfg: &JobConfig) -> Result<Outcome, CliError> {
    let degrees = cfg.degrees.canonical();
    let a = hilbpoly::analyze(&degrees)?;
    let qp = &a.quasi_polynomial;
    let bound = cfg.terms.unwrap_or(DEFAULT_VERIFY_BOUND);
    let mut oracle = HilbertOracle::with_capacity(&degrees, bound + 1);
    let values = oracle.values(bound + 1)?;
    let mut out = String::new();
    let mut failures = 0;

    let mut report = |out: &mut String, label: &str, range: String, first_bad: Option<(usize, String, &Rational)>| {
        match first_bad {
            None => {
                let _ = writeln!(out, "{label}: {range} ok");
            }
            Some((n, got, want)) => {
                failures += 1;
                let _ = writeln!(out, "{label}: FAIL at n = {n}: got {got}, H(n) = {want}");
            }
        }
    };

    let start = qp.valid_from.min(bound + 1);
    let bad = (start..=bound)
        .map(|n| (n, qp.evaluate(n)))
        .find(|(n, v)| v != &values[*n])
        .map(|(n, v)| (n, v.to_string(), &values[n]));
    report(&mut out, "quasi-polynomial", format!("n = {start}..{bound}"), bad);

    let series = a.poincare.series(bound + 1)?;
    let bad = (0..=bound)
        .find(|&n| series[n] != values[n])
        .map(|n| (n, series[n].to_string(), &values[n]));
    report(&mut out, "poincare series", format!("n = 0..{bound}"), bad);

    if let [d] = degrees.degrees() {
        let mut bad = None;
        for (n, want) in values.iter().enumerate() {
            let q = Rational::from(hilbert_value_qbin(*d as usize, n)?);
            if &q != want {
                bad = Some((n, q.to_string(), want));
                break;
            }
        }
        report(&mut out, "q-binomial", format!("n = 0..{bound}"), bad);
    }

    let success = failures == 0;
    out.push_str(if success { "PASS\n" } else { "FAIL\n" });
    Ok(Outcome { stdout: out, warnings: Vec::new(), success })
}

pub fn cmd_poincare(cfg: &JobConfig) -> Result<Outcome, CliError> {
    let mut warnings = Vec::new();
    let a = analysis(cfg, &mut warnings)?;
    let out = if cfg.format == Style::Json {
        let v = serde_json::json!({
            "degrees": a.degrees,
            "poincare": a.poincare,
            "factorization": a.factorization,
        });
        line(serde_json::to_string_pretty(&v).expect("json value serializes"))
    } else {
        format!(
            "num: {}\nden: {}\nden = {}\n",
            a.poincare.num().to_string_in("z"),
            a.poincare.den().to_string_in("z"),
            factor_text(&a.factorization),
        )
    };
    Ok(Outcome::ok(out, warnings))
}

/// `-Phi_1^4*Phi_2*...`; `1` for an empty product.
pub fn factor_text(fac: &CyclotomicFactorization) -> String {
    let product: Vec<String> = fac
        .factors
        .iter()
        .map(|&(m, k)| if k == 1 { format!("Phi_{m}") } else { format!("Phi_{m}^{k}") })
        .collect();
    let unit = &fac.unit;
    match (product.is_empty(), unit.is_one(), (-unit).is_one()) {
        (true, _, _) => unit.to_string(),
        (false, true, _) => product.join("*"),
        (false, _, true) => format!("-{}", product.join("*")),
        (false, _, _) => format!("{unit}*{}", product.join("*")),
    }
}

fn line(mut s: String) -> String {
    s.push('\n');
    s
}

fn budget(cfg: &JobConfig) -> usize {
    cfg.terms.unwrap_or_else(|| default_term_budget(&cfg.degrees))
}

/// Cache key: pipeline version, command and canonical degree list.
pub fn cache_key(command: Command, degrees: &DegreeVector) -> String {
    format!(
        "hilbpoly {}|{}|{}",
        env!("CARGO_PKG_VERSION"),
        command.name(),
        degrees.canonical()
    )
}

pub fn cache_path(dir: &Path, command: Command, degrees: &DegreeVector) -> PathBuf {
    let digest = Sha256::digest(cache_key(command, degrees).as_bytes());
    dir.join(format!("{}.json", hex::encode(digest)))
}

fn analysis(cfg: &JobConfig, warnings: &mut Vec<String>) -> Result<Analysis, CliError> {
    let degrees = cfg.degrees.canonical();
    let path = cfg
        .cache_dir
        .as_deref()
        .map(|dir| cache_path(dir, cfg.command, &degrees));
    if let Some(path) = &path {
        match fs::read_to_string(path) {
            Ok(text) => match serde_json::from_str::<Analysis>(&text) {
                Ok(a) if a.degrees == degrees => return Ok(a),
                Ok(_) => warnings.push(format!("cache entry {} is for other degrees; recomputing", path.display())),
                Err(e) => warnings.push(format!("cache entry {} is unreadable ({e}); recomputing", path.display())),
            },
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(e) => warnings.push(format!("cannot read cache entry {}: {e}; recomputing", path.display())),
        }
    }
    let a = hilbpoly::analyze_with(&degrees, budget(cfg), ReconOptions::default())?;
    if let Some(path) = &path {
        if let Err(e) = store(path, &a) {
            warnings.push(format!("cannot write cache entry {}: {e}", path.display()));
        }
    }
    Ok(a)
}

fn store(path: &Path, a: &Analysis) -> std::io::Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, serde_json::to_string_pretty(a).expect("analysis serializes"))?;
    fs::rename(&tmp, path)
}
