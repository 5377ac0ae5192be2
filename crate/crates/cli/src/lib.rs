//! Command-line front end: `compute`, `verify`, `table` and `congruence`.
//!
//! Exit status is 0 on success, 1 on a mathematical discrepancy and 2 on a
//! usage error. Data goes to stdout, diagnostics to stderr.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use spt_core::series::partition_series;
use spt_core::spt::{self, Family, Route, SptRequest};
use spt_core::stats::{CountTable, MomentKind};
use spt_core::verify::{self, Identity, Params};

pub mod cache;

use cache::Cache;

#[derive(Debug, Parser)]
#[command(name = "spt", version, about = "Exact tables of generalized smallest-parts functions")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Values of a partition function for n = 1..=n_max
    Compute(ComputeArgs),
    /// Expand both sides of an identity and compare them
    Verify(VerifyArgs),
    /// Rank, crank and j-rank counts and moments
    Table(TableArgs),
    /// Check p(ln+m) and Spt_j(ln+m) modulo l for (l, m) = (5,4), (7,5), (11,6)
    Congruence(CongruenceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    #[value(name = "p")]
    P,
    #[value(name = "spt")]
    Spt,
    #[value(name = "spt_k")]
    SptK,
    #[value(name = "Spt_j")]
    SptJ,
    #[value(name = "jspt_k")]
    JsptK,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Gf,
    Weight,
    Moments,
    All,
}

#[derive(Debug, Args)]
struct ComputeArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    j: Option<usize>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    n_max: usize,
    /// Series order; defaults to n_max and must not be smaller
    #[arg(long = "N")]
    order: Option<usize>,
    #[arg(long, value_enum, default_value = "gf")]
    route: RouteArg,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Cache file for generating-function tables (default: $SPT_CACHE)
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// One of: genn1, sptpn, sptpng, kn1, genjmu2k, appbp, gtjsptk, relos,
    /// fdyson, sptdiff, jgn, Rk-forms, lemma31, lemma32, genineq
    identity: String,
    #[arg(long = "N", default_value_t = 30)]
    order: usize,
    #[arg(long, default_value_t = 1)]
    j: usize,
    #[arg(long, default_value_t = 1)]
    k: u32,
    #[arg(long, default_value_t = 1)]
    r: usize,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Count,
    Moment,
    Sym,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SourceArg {
    Gf,
    Partitions,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long)]
    j: usize,
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Rank value, for --kind count
    #[arg(long, allow_hyphen_values = true)]
    m: Option<i64>,
    /// Power, for --kind moment
    #[arg(long)]
    t: Option<u32>,
    /// Order of the symmetrized moment, for --kind sym
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    n_max: usize,
    #[arg(long, value_enum, default_value = "gf")]
    source: SourceArg,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Debug, Args)]
struct CongruenceArgs {
    #[arg(long, default_value_t = 30)]
    n_max: usize,
    /// Largest j checked; defaults to n_max + 1
    #[arg(long)]
    j_max: Option<usize>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Discrepancy(String),
    #[error(transparent)]
    Core(#[from] spt_core::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(spt_core::Error::InvalidParameter(_)) => 2,
            _ => 1,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Parses `args` and runs the command, returning the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return e.exit_code();
        }
    };
    let result = match cli.command {
        Command::Compute(a) => compute(a, out, err),
        Command::Verify(a) => verify_cmd(a, out, err),
        Command::Table(a) => table(a, out),
        Command::Congruence(a) => congruence(a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

#[derive(Serialize)]
struct ValueRow {
    n: usize,
    value: String,
}

#[derive(Serialize)]
struct VerifyRow<'a> {
    n: usize,
    lhs: &'a str,
    rhs: &'a str,
    ok: bool,
}

fn write_values(out: &mut dyn Write, format: Format, values: &[BigInt], n_max: usize) -> io::Result<()> {
    let rows = (1..=n_max).map(|n| ValueRow {
        n,
        value: values[n].to_string(),
    });
    match format {
        Format::Csv => {
            writeln!(out, "n,value")?;
            for r in rows {
                writeln!(out, "{},{}", r.n, r.value)?;
            }
        }
        Format::Plain => {
            for r in rows {
                writeln!(out, "{} {}", r.n, r.value)?;
            }
        }
        Format::Json => write_json(out, &rows.collect::<Vec<_>>())?,
    }
    Ok(())
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(io::Error::other)?;
    writeln!(out)
}

fn compute(a: ComputeArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    let order = a.order.unwrap_or(a.n_max);
    if order < a.n_max {
        return Err(CliError::Usage(format!("--N {order} is smaller than --n-max {}", a.n_max)));
    }
    let family = match a.family {
        FamilyArg::P => {
            if a.j.is_some() || a.k.is_some() {
                return Err(CliError::Usage("family p takes no j or k".into()));
            }
            let values = partition_series(order).into_coeffs();
            write_values(out, a.format, &values, a.n_max)?;
            return Ok(0);
        }
        FamilyArg::Spt => Family::Spt,
        FamilyArg::SptK => Family::SptK,
        FamilyArg::SptJ => Family::SptJ,
        FamilyArg::JsptK => Family::JsptK,
    };
    let route = match a.route {
        RouteArg::Gf => Route::Gf,
        RouteArg::Weight => Route::Weight,
        RouteArg::Moments => Route::Moments,
        RouteArg::All => Route::All,
    };
    let req = SptRequest::new(family, a.j, a.k, order, route)?;

    let cache_path = a.cache.or_else(|| std::env::var_os(cache::ENV_VAR).map(PathBuf::from));
    let mut cache = match (&cache_path, route) {
        (Some(path), Route::Gf) => {
            let (c, warning) = Cache::open(path);
            if let Some(w) = warning {
                writeln!(err, "warning: {w}")?;
            }
            Some(c)
        }
        _ => None,
    };
    let key = cache::key(family.name(), a.j, a.k, order);
    let values = match cache.as_ref().and_then(|c| c.get(&key)) {
        Some(v) if v.len() == order + 1 => v,
        _ => {
            let v = spt::compute(&req).map_err(|e| match e {
                spt_core::Error::RouteMismatch { .. } => CliError::Discrepancy(e.to_string()),
                other => other.into(),
            })?;
            if let Some(c) = cache.as_mut() {
                c.insert(key, &v);
                c.save()?;
            }
            v
        }
    };
    write_values(out, a.format, &values, a.n_max)?;
    Ok(0)
}

fn verify_cmd(a: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    let identity: Identity = a
        .identity
        .parse()
        .map_err(|e: spt_core::Error| CliError::Usage(e.to_string()))?;
    let params = Params::new(a.order).j(a.j).k(a.k).r(a.r);
    let report = verify::run(identity, params)?;
    let status = match report.first_failure() {
        Some(row) if !report.pass => format!(
            "FAIL {identity} (N={}, j={}, k={}, r={}): first discrepancy at n={}: lhs={} rhs={}",
            a.order, a.j, a.k, a.r, row.n, row.lhs, row.rhs
        ),
        _ if !report.pass => format!("FAIL {identity}: {}", report.notes.join("; ")),
        _ => format!("PASS {identity} (N={}, j={}, k={}, r={})", a.order, a.j, a.k, a.r),
    };
    let rows: Vec<VerifyRow> = report
        .rows
        .iter()
        .map(|r| VerifyRow {
            n: r.n,
            lhs: &r.lhs,
            rhs: &r.rhs,
            ok: r.ok,
        })
        .collect();
    match a.format {
        Format::Plain => {
            writeln!(out, "{status}")?;
            for note in &report.notes {
                writeln!(out, "  {note}")?;
            }
        }
        Format::Csv => {
            writeln!(out, "n,lhs,rhs,ok")?;
            for r in &rows {
                writeln!(out, "{},{},{},{}", r.n, csv_field(r.lhs), csv_field(r.rhs), r.ok)?;
            }
            writeln!(err, "{status}")?;
            for note in &report.notes {
                writeln!(err, "  {note}")?;
            }
        }
        Format::Json => {
            write_json(out, &rows)?;
            writeln!(err, "{status}")?;
            for note in &report.notes {
                writeln!(err, "  {note}")?;
            }
        }
    }
    Ok(if report.pass { 0 } else { 1 })
}

/// Laurent polynomials contain spaces and signs but never commas or quotes;
/// quote them anyway when they are not plain integers.
fn csv_field(s: &str) -> String {
    if s.parse::<BigInt>().is_ok() {
        s.to_string()
    } else {
        format!("\"{s}\"")
    }
}

fn table(a: TableArgs, out: &mut dyn Write) -> CliResult<i32> {
    let kind = match (a.kind, a.m, a.t, a.k) {
        (KindArg::Count, Some(m), None, None) => MomentKind::Count { m },
        (KindArg::Moment, None, Some(t), None) => MomentKind::Moment { t },
        (KindArg::Sym, None, None, Some(k)) if k >= 1 => MomentKind::Symmetrized { k },
        _ => {
            return Err(CliError::Usage(
                "--kind count needs --m, moment needs --t, sym needs --k >= 1 (and nothing else)".into(),
            ))
        }
    };
    let counts = match a.source {
        SourceArg::Gf => CountTable::from_gf(a.j, a.n_max)?,
        SourceArg::Partitions => CountTable::from_partitions(a.j, a.n_max)?,
    };
    let column = counts.table(kind);
    write_values(out, a.format, &column.values, a.n_max)?;
    Ok(0)
}

#[derive(Serialize)]
struct CongruenceRow {
    modulus: u32,
    residue: u32,
    argument: usize,
    function: String,
    value: String,
    ok: bool,
}

fn congruence(a: CongruenceArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    let j_max = a.j_max.unwrap_or(a.n_max + 1);
    let rows: Vec<CongruenceRow> = verify::congruences(a.n_max, j_max)
        .into_iter()
        .map(|c| CongruenceRow {
            modulus: c.modulus,
            residue: c.residue,
            argument: c.argument,
            function: c.j.map_or_else(|| "p".to_string(), |j| format!("Spt_{j}")),
            value: c.value.to_string(),
            ok: c.ok,
        })
        .collect();
    match a.format {
        Format::Csv => {
            writeln!(out, "modulus,residue,argument,function,value,ok")?;
            for r in &rows {
                writeln!(out, "{},{},{},{},{},{}", r.modulus, r.residue, r.argument, r.function, r.value, r.ok)?;
            }
        }
        Format::Plain => {
            for r in &rows {
                let verdict = if r.ok { "ok" } else { "VIOLATION" };
                writeln!(out, "{}({}) = {} mod {}: {verdict}", r.function, r.argument, r.value, r.modulus)?;
            }
        }
        Format::Json => write_json(out, &rows)?,
    }
    if let Some(w) = rows.iter().find(|r| !r.ok) {
        writeln!(err, "violation: {}({}) = {} is not divisible by {}", w.function, w.argument, w.value, w.modulus)?;
        return Ok(1);
    }
    Ok(0)
}
