//! `qdissect`: run verification suites, print series and oracle tables.

mod cache;
mod expr;
mod output;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};
use qdissect::oracle::{self, gf_stats, GF_CEILING};
use qdissect::verify::{self, CheckKind, CheckSpec, Context, Status, VerifyConfig, VerifyError};

use output::Format;

const EXIT_FAIL: u8 = 1;
const EXIT_EMENDED: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Debug, Parser)]
#[command(name = "qdissect", version, about = "Exact q-series checks for rank and crank 11-dissections")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Run check suites and report each outcome.
    Verify(VerifyArgs),
    /// Print a named series as exponent, numerator, denominator triples.
    Series(SeriesArgs),
    /// Dump oracle tables.
    Tables(TablesArgs),
    /// Run a conjecture scan.
    Scan(ScanArgs),
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Suite name, check id, id prefix, or `all`; repeatable.
    #[arg(long = "suite", default_value = "all")]
    suites: Vec<String>,
    /// Overrides the default orders (500 for theta identities, 330 otherwise).
    #[arg(long)]
    order: Option<i64>,
    #[arg(long, default_value_t = oracle::DEFAULT_ORACLE_CEILING)]
    oracle_ceiling: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Oracle table cache; `QDISSECT_CACHE` takes precedence.
    #[arg(long)]
    cache: Option<PathBuf>,
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Debug, Args)]
struct SeriesArgs {
    name: String,
    #[arg(long, default_value_t = 20)]
    order: i64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Stat {
    P,
    Spt,
    Rank,
    Crank,
}

#[derive(Debug, Args)]
struct TablesArgs {
    #[arg(value_enum)]
    stat: Stat,
    #[arg(long, default_value_t = 10)]
    max_n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct ScanArgs {
    /// Conjecture id such as `conj-6.2`, or a prefix such as `conj-6.5`.
    id: String,
    #[arg(long, default_value_t = oracle::DEFAULT_ORACLE_CEILING)]
    ceiling: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// Everything a `verify` run depends on.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub suites: Vec<String>,
    pub order: Option<i64>,
    pub oracle_ceiling: usize,
    pub format: Format,
    pub cache_path: Option<PathBuf>,
    pub jobs: usize,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Other(anyhow::Error),
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::Other(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Other(e.into())
    }
}

/// Errors caused by the request rather than by the computation.
fn classify(e: VerifyError) -> CliError {
    match e {
        VerifyError::Unknown(_) | VerifyError::OracleRange { .. } | VerifyError::BadOrder(_) => {
            CliError::Usage(e.to_string())
        }
        e => CliError::Other(e.into()),
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

impl RunConfig {
    fn from_args(a: VerifyArgs) -> Self {
        let cache_path = std::env::var_os("QDISSECT_CACHE")
            .filter(|v| !v.is_empty())
            .map(PathBuf::from)
            .or(a.cache);
        RunConfig {
            suites: a.suites,
            order: a.order,
            oracle_ceiling: a.oracle_ceiling,
            format: a.format,
            cache_path,
            jobs: a.jobs.unwrap_or_else(default_jobs),
        }
    }

    fn select(&self) -> Result<Vec<CheckSpec>, CliError> {
        let mut specs = Vec::new();
        for s in &self.suites {
            specs.extend(verify::select(s).map_err(classify)?);
        }
        specs.sort_by(|a, b| a.id.cmp(&b.id));
        specs.dedup_by(|a, b| a.id == b.id);
        Ok(specs)
    }

    fn validate(&self, specs: &[CheckSpec]) -> Result<(), CliError> {
        if self.jobs == 0 {
            return Err(usage("--jobs must be at least 1"));
        }
        if self.oracle_ceiling > GF_CEILING {
            return Err(usage(format!("--oracle-ceiling is limited to {GF_CEILING}")));
        }
        if let Some(order) = self.order {
            if order < 1 {
                return Err(usage("--order must be positive"));
            }
            if order as usize > self.oracle_ceiling && specs.iter().any(CheckSpec::uses_oracle) {
                return Err(usage(format!(
                    "--order {order} exceeds --oracle-ceiling {} for oracle-backed checks",
                    self.oracle_ceiling
                )));
            }
        }
        Ok(())
    }
}

fn exit_code(reports: &[verify::VerifyReport]) -> u8 {
    if reports.iter().any(|r| r.status == Status::Fail) {
        EXIT_FAIL
    } else if reports.iter().any(|r| r.status == Status::EmendedPass) {
        EXIT_EMENDED
    } else {
        0
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, CliError> {
    let config = RunConfig::from_args(args);
    let specs = config.select()?;
    config.validate(&specs)?;
    let (tables, _) = cache::load_or_build(config.cache_path.as_deref(), config.oracle_ceiling)?;
    let ctx = Context::new(
        VerifyConfig {
            order: config.order,
            oracle_ceiling: config.oracle_ceiling,
            ..VerifyConfig::default()
        },
        tables,
    )
    .map_err(classify)?;
    let reports = verify::run_checks(&specs, &ctx, config.jobs).map_err(classify)?;
    let mut out = io::stdout().lock();
    output::reports(&mut out, &reports, config.format)?;
    out.flush()?;
    Ok(exit_code(&reports))
}

fn cmd_series(a: SeriesArgs) -> Result<u8, CliError> {
    let s = expr::evaluate(&a.name, a.order).map_err(|e| usage(format!("{e:#}")))?;
    output::series(&mut io::stdout().lock(), &s, a.format)?;
    Ok(0)
}

fn cmd_tables(a: TablesArgs) -> Result<u8, CliError> {
    if a.max_n > GF_CEILING {
        return Err(usage(format!("--max-n is limited to {GF_CEILING}")));
    }
    let t = gf_stats(a.max_n).map_err(|e| CliError::Other(e.into()))?;
    let mut rows = Vec::new();
    for n in 0..=a.max_n {
        let scalar = |v: i128| (n, None, v);
        match a.stat {
            Stat::P => rows.push(scalar(t.p(n).map_err(anyhow::Error::from)?)),
            Stat::Spt => rows.push(scalar(t.spt(n).map_err(anyhow::Error::from)?)),
            Stat::Rank | Stat::Crank => {
                let row = match a.stat {
                    Stat::Rank => t.rank_row(n),
                    _ => t.crank_row(n),
                }
                .map_err(anyhow::Error::from)?;
                for (i, &c) in row.iter().enumerate() {
                    if c != 0 {
                        rows.push((n, Some(i as i64 - n as i64), c));
                    }
                }
            }
        }
    }
    output::table(&mut io::stdout().lock(), &rows, a.format)?;
    Ok(0)
}

fn cmd_scan(a: ScanArgs) -> Result<u8, CliError> {
    if a.ceiling > GF_CEILING {
        return Err(usage(format!("--ceiling is limited to {GF_CEILING}")));
    }
    let specs = verify::select(&a.id).map_err(classify)?;
    if let Some(s) = specs.iter().find(|s| s.kind != CheckKind::ConjectureScan) {
        return Err(usage(format!("{} is not a conjecture scan", s.id)));
    }
    let ctx = Context::build(VerifyConfig {
        oracle_ceiling: a.ceiling,
        ..VerifyConfig::default()
    })
    .map_err(classify)?;
    let reports = verify::run_checks(&specs, &ctx, default_jobs()).map_err(classify)?;
    output::reports(&mut io::stdout().lock(), &reports, a.format)?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.cmd {
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Series(a) => cmd_series(a),
        Cmd::Tables(a) => cmd_tables(a),
        Cmd::Scan(a) => cmd_scan(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}
