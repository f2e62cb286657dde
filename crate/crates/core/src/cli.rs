//! The `etamodeq` command line: `expand`, `cusps`, `modeq` and `verify`.
//!
//! Every command can print a JSON [`OutputDocument`]. Big integers and
//! rationals are always decimal strings. Solved modular equations are cached
//! as one JSON file per level.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::arith::is_prime;
use crate::cusps::{cusp_set, width};
use crate::eta::{named_j, named_w, named_x, EtaError, EtaQuotient};
use crate::modeq::{
    kronecker_inner, solve_with, BivarPoly, ModEqError, ModEqResult, Normalization, NullspaceMethod, Term,
};
use crate::series::QSeries;
use crate::verify::{run_suite, Golden, GoldenError, Subset};

pub const SCHEMA_VERSION: &str = "1";
/// Overrides the default cache directory.
pub const CACHE_ENV: &str = "ETAMODEQ_CACHE_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "etamodeq", version, about = "Eta quotients on Gamma0(N) and modular equations for w = X(t)X(3t)")]
pub struct Cli {
    /// Emit `"timing_ms": null` so output is byte-reproducible.
    #[arg(long, global = true)]
    pub no_timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// q-expansion of a named function or an eta quotient.
    Expand(ExpandArgs),
    /// Inequivalent cusps of Gamma0(N) with widths.
    Cusps(CuspsArgs),
    /// Modular equation F_n(w(t), w(nt)) = 0.
    Modeq(ModeqArgs),
    /// Reproduction checks.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Plain,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Named {
    W,
    #[value(name = "X")]
    X,
    J,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    /// w, X or j.
    #[arg(long, conflicts_with = "quotient", required_unless_present = "quotient")]
    pub name: Option<Named>,
    /// "N; d1:r1, d2:r2, ...".
    #[arg(long)]
    pub quotient: Option<String>,
    /// Coefficients are reported below q^prec.
    #[arg(long, default_value_t = 20)]
    pub prec: i64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CuspsArgs {
    pub level: u64,
    /// Attach the orders of this quotient ("N; d:r, ...", or w / X) at each cusp.
    #[arg(long)]
    pub divisor: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Multimodular,
    Exact,
}

#[derive(Debug, Args)]
pub struct ModeqArgs {
    pub level: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Defaults to $ETAMODEQ_CACHE_DIR, then the platform cache directory.
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
    #[arg(long)]
    pub no_cache: bool,
    #[arg(long, value_enum, default_value_t = Method::Multimodular)]
    pub method: Method,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(default_value = "all")]
    pub subset: Subset,
    #[arg(long)]
    pub fail_fast: bool,
    /// Golden tables to compare against instead of the embedded copy.
    #[arg(long)]
    pub golden: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Eta(#[from] EtaError),
    #[error(transparent)]
    Golden(#[from] GoldenError),
    #[error(transparent)]
    Solver(#[from] ModEqError),
    #[error("cache: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Eta(_) | CliError::Golden(_) => EXIT_USAGE,
            CliError::Solver(ModEqError::InvalidLevel(_)) => EXIT_USAGE,
            CliError::Solver(_) | CliError::Io(_) => EXIT_INTERNAL,
        }
    }
}

/// The envelope printed by every command in JSON format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub schema_version: String,
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub timing_ms: Option<u64>,
}

/// What a command produced: the document, its plain/LaTeX rendering, and
/// the exit code.
pub struct Outcome {
    pub document: OutputDocument,
    pub text: String,
    pub exit_code: i32,
}

fn rational_string(r: &Ratio<i64>) -> String {
    r.to_string()
}

/// LaTeX for a truncated series: `q - q^{2} + \frac{1}{2}q^{3/4} + O(q^{8})`.
pub fn series_latex(s: &QSeries) -> String {
    let h = s.denom() as i64;
    let exp = |e: i64| {
        let r = Ratio::new(e, h);
        if r.is_integer() {
            r.to_integer().to_string()
        } else {
            format!("{}/{}", r.numer(), r.denom())
        }
    };
    let mut out = String::new();
    for (e, c) in s.terms() {
        let neg = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let coeff = if abs.is_integer() {
            abs.to_integer().to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", abs.numer(), abs.denom())
        };
        let unit = abs.is_one();
        match e {
            0 => out.push_str(&coeff),
            _ => {
                if !unit {
                    out.push_str(&coeff);
                }
                if e == h {
                    out.push('q');
                } else {
                    out.push_str(&format!("q^{{{}}}", exp(e)));
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out.push_str(&format!(" + O(q^{{{}}})", exp(s.prec())));
    out
}

fn series_payload(s: &QSeries) -> Value {
    let h = s.denom() as i64;
    let coefficients: Vec<String> = match s.valuation() {
        Some(v) => (v..s.prec()).map(|e| s.coeff(e).expect("known coefficient").to_string()).collect(),
        None => Vec::new(),
    };
    json!({
        "valuation": s.valuation_q().map(|v| rational_string(&v)),
        "exponent_denominator": s.denom(),
        "precision": rational_string(&Ratio::new(s.prec(), h)),
        "coefficients": coefficients,
    })
}

fn parse_quotient(spec: &str) -> Result<EtaQuotient, CliError> {
    match spec.trim() {
        "w" => Ok(named_w()),
        "X" => Ok(named_x()),
        other => Ok(other.parse()?),
    }
}

pub fn cmd_expand(args: &ExpandArgs) -> Result<(Value, Value, String), CliError> {
    if args.prec < 1 {
        return Err(CliError::Usage("--prec must be at least 1".into()));
    }
    let (label, series) = match (&args.name, &args.quotient) {
        (Some(Named::J), _) => ("j".to_string(), named_j(args.prec)),
        (Some(Named::W), _) => ("w".to_string(), named_w().expand(args.prec)),
        (Some(Named::X), _) => ("X".to_string(), named_x().expand(args.prec)),
        (None, Some(q)) => {
            let eq = parse_quotient(q)?;
            (eq.to_string(), eq.expand(args.prec))
        }
        (None, None) => return Err(CliError::Usage("one of --name or --quotient is required".into())),
    };
    let inputs = json!({ "function": label, "prec": args.prec });
    let text = match args.format {
        Format::Latex => series_latex(&series),
        _ => series.to_string(),
    };
    Ok((inputs, series_payload(&series), text))
}

pub fn cmd_cusps(args: &CuspsArgs) -> Result<(Value, Value, String), CliError> {
    let n = args.level;
    if n == 0 {
        return Err(CliError::Usage("level must be positive".into()));
    }
    let quotient = match &args.divisor {
        Some(spec) => {
            let q = parse_quotient(spec)?;
            let q = if q.level() == n { q } else { q.lift(n)? };
            Some(q)
        }
        None => None,
    };
    let mut rows = Vec::new();
    let mut lines = Vec::new();
    for c in cusp_set(n) {
        let w = width(n, c);
        let mut row = json!({ "cusp": c.to_string(), "width": w });
        let mut line = format!("{c:>8}  width {w}");
        if let Some(q) = &quotient {
            let order = q.order_at_cusp(c)?;
            row["order"] = Value::String(rational_string(&order));
            line.push_str(&format!("  order {order}"));
        }
        rows.push(row);
        lines.push(line);
    }
    let mut inputs = json!({ "level": n });
    let mut result = json!({ "level": n, "count": rows.len(), "cusps": rows });
    if let Some(q) = &quotient {
        inputs["divisor"] = Value::String(q.to_string());
        result["quotient"] = Value::String(q.to_string());
        result["modular_function"] = Value::Bool(q.is_modular_function());
    }
    Ok((inputs, result, lines.join("\n")))
}

/// A solved equation as stored in the cache and printed by `modeq`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModeqPayload {
    pub level: u64,
    pub d1: u64,
    pub d2: u64,
    pub degree_x: u32,
    pub degree_y: u32,
    pub precision_used: i64,
    pub nullspace_dim: usize,
    pub normalization: Normalization,
    /// `[i, j, "C_{i,j}"]`, ordered by `j` then `i`.
    pub terms: Vec<Term>,
    pub polynomial: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factored: Option<Factored>,
}

/// `F = (X^p - Y)(X - Y^p) - p X Y G`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factored {
    pub prime: u64,
    pub frame: String,
    pub inner: Vec<Term>,
}

impl ModeqPayload {
    pub fn from_result(r: &ModEqResult) -> Self {
        let n = r.level;
        let factored = (n >= 5 && is_prime(n)).then(|| kronecker_inner(&r.poly, n)).flatten().map(|g| Factored {
            prime: n,
            frame: format!("(X^{n} - Y)(X - Y^{n})"),
            inner: g.to_terms(),
        });
        ModeqPayload {
            level: n,
            d1: r.d1,
            d2: r.d2,
            degree_x: r.poly.deg_x(),
            degree_y: r.poly.deg_y(),
            precision_used: r.precision_used,
            nullspace_dim: r.nullspace_dim,
            normalization: r.normalization.clone(),
            terms: r.poly.to_terms(),
            polynomial: r.poly.to_compact(),
            factored,
        }
    }

    pub fn poly(&self) -> Result<BivarPoly, num_bigint::ParseBigIntError> {
        BivarPoly::from_term_list(&self.terms)
    }

    /// Internal consistency plus vanishing of the polynomial on the expansions.
    pub fn validate(&self, level: u64) -> Result<(), String> {
        if self.level != level {
            return Err(format!("stored level {} but {level} requested", self.level));
        }
        let poly = self.poly().map_err(|e| e.to_string())?;
        if poly.deg_x() != self.degree_x || poly.deg_y() != self.degree_y || poly.to_compact() != self.polynomial {
            return Err("terms disagree with the recorded degrees or polynomial".into());
        }
        if self.degree_x as u64 > self.d2 || self.degree_y as u64 > self.d1 || self.nullspace_dim != 1 {
            return Err("degrees or kernel dimension out of range".into());
        }
        if let Some(f) = &self.factored {
            let inner = BivarPoly::from_term_list(&f.inner).map_err(|e| e.to_string())?;
            if crate::modeq::from_kronecker_inner(f.prime, &inner) != poly {
                return Err("factored presentation does not expand to the terms".into());
            }
        }
        let prec = self.precision_used;
        if prec < 1 {
            return Err("nonpositive precision".into());
        }
        let w = named_w().expand(prec);
        let v = w.rescale(level).truncate(prec);
        if !poly.evaluate(&w, &v).is_zero() {
            return Err("polynomial does not vanish on the expansions".into());
        }
        Ok(())
    }
}

/// `--cache-dir`, then `$ETAMODEQ_CACHE_DIR`, then `$XDG_CACHE_HOME/etamodeq`,
/// then `~/.cache/etamodeq`.
pub fn cache_dir(flag: Option<&Path>) -> Option<PathBuf> {
    if let Some(p) = flag {
        return Some(p.to_path_buf());
    }
    let env = |k: &str| std::env::var_os(k).filter(|v| !v.is_empty());
    if let Some(p) = env(CACHE_ENV) {
        return Some(PathBuf::from(p));
    }
    if let Some(p) = env("XDG_CACHE_HOME") {
        return Some(PathBuf::from(p).join("etamodeq"));
    }
    env("HOME").map(|h| PathBuf::from(h).join(".cache").join("etamodeq"))
}

pub fn cache_file(dir: &Path, level: u64) -> PathBuf {
    dir.join(format!("modeq-v{SCHEMA_VERSION}-{level}.json"))
}

#[derive(Debug, Serialize, Deserialize)]
struct CacheEntry {
    schema_version: String,
    result: ModeqPayload,
}

/// Outcome of a cache lookup.
pub enum Cached {
    Hit(ModeqPayload),
    Miss,
    /// The file exists but does not validate.
    Corrupt(String),
}

pub fn read_cache(path: &Path, level: u64) -> Cached {
    let Ok(text) = std::fs::read_to_string(path) else { return Cached::Miss };
    let entry: CacheEntry = match serde_json::from_str(&text) {
        Ok(e) => e,
        Err(e) => return Cached::Corrupt(e.to_string()),
    };
    if entry.schema_version != SCHEMA_VERSION {
        return Cached::Corrupt(format!("schema version {}", entry.schema_version));
    }
    match entry.result.validate(level) {
        Ok(()) => Cached::Hit(entry.result),
        Err(e) => Cached::Corrupt(e),
    }
}

/// Writes through a temporary file in the same directory and renames it into place.
pub fn write_cache(path: &Path, payload: &ModeqPayload) -> std::io::Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    std::fs::create_dir_all(dir)?;
    let entry = CacheEntry { schema_version: SCHEMA_VERSION.into(), result: payload.clone() };
    let tmp = dir.join(format!(".{}.{}.tmp", path.file_name().and_then(|n| n.to_str()).unwrap_or("modeq"), std::process::id()));
    {
        let mut f = std::fs::File::create(&tmp)?;
        serde_json::to_writer_pretty(&mut f, &entry).map_err(std::io::Error::other)?;
        f.write_all(b"\n")?;
        f.sync_all()?;
    }
    std::fs::rename(&tmp, path)
}

pub fn cmd_modeq(args: &ModeqArgs, warn: &mut dyn Write) -> Result<(Value, Value, String), CliError> {
    let n = args.level;
    if n < 2 {
        return Err(CliError::Usage(format!("level must be at least 2, got {n}")));
    }
    let method = match args.method {
        Method::Multimodular => NullspaceMethod::Multimodular,
        Method::Exact => NullspaceMethod::ExactRational,
    };
    let path = (!args.no_cache).then(|| cache_dir(args.cache_dir.as_deref())).flatten().map(|d| cache_file(&d, n));
    let mut payload = None;
    if let Some(p) = &path {
        match read_cache(p, n) {
            Cached::Hit(c) => payload = Some(c),
            Cached::Miss => {}
            Cached::Corrupt(why) => {
                let _ = writeln!(warn, "warning: ignoring corrupt cache entry {}: {why}", p.display());
            }
        }
    }
    let payload = match payload {
        Some(p) => p,
        None => {
            let fresh = ModeqPayload::from_result(&solve_with(n, method)?);
            if let Some(p) = &path {
                if let Err(e) = write_cache(p, &fresh) {
                    let _ = writeln!(warn, "warning: could not write cache {}: {e}", p.display());
                }
            }
            fresh
        }
    };
    let poly = payload.poly().expect("validated terms");
    let mut text = match args.format {
        Format::Latex => poly.to_compact(),
        _ => poly.to_plain(),
    };
    if let (Format::Latex, Some(f)) = (args.format, &payload.factored) {
        let inner = BivarPoly::from_term_list(&f.inner).expect("validated terms");
        text.push_str(&format!("\n= {} - {}XY({})", f.frame, f.prime, inner.to_compact()));
    }
    let inputs = json!({ "level": n });
    Ok((inputs, serde_json::to_value(&payload).expect("serializable"), text))
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<(Value, Value, String, bool), CliError> {
    let golden = match &args.golden {
        Some(p) => Golden::from_path(p)?,
        None => Golden::embedded(),
    };
    let report = run_suite(args.subset, args.fail_fast, &golden);
    let mut lines: Vec<String> = report.checks.iter().map(|c| c.to_string()).collect();
    lines.push(format!("{} passed, {} failed", report.passed, report.failed));
    for a in &report.not_reproduced {
        lines.push(format!("NOT REPRODUCED {}: {}; proxy: {}", a.claim, a.reason, a.proxy));
    }
    let inputs = json!({
        "subset": args.subset.to_string(),
        "fail_fast": args.fail_fast,
        "golden": args.golden.as_ref().map(|p| p.display().to_string()),
    });
    let ok = report.all_passed();
    Ok((inputs, serde_json::to_value(&report).expect("serializable"), lines.join("\n"), ok))
}

/// Runs a parsed command line. Warnings go to `warn`.
pub fn execute(cli: &Cli, warn: &mut dyn Write) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let (name, format, (inputs, result, text), ok) = match &cli.command {
        Command::Expand(a) => ("expand", a.format, cmd_expand(a)?, true),
        Command::Cusps(a) => ("cusps", a.format, cmd_cusps(a)?, true),
        Command::Modeq(a) => ("modeq", a.format, cmd_modeq(a, warn)?, true),
        Command::Verify(a) => {
            let (i, r, t, ok) = cmd_verify(a)?;
            ("verify", a.format, (i, r, t), ok)
        }
    };
    let timing_ms = (!cli.no_timing).then(|| start.elapsed().as_millis() as u64);
    let document = OutputDocument { schema_version: SCHEMA_VERSION.into(), command: name.into(), inputs, result, timing_ms };
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&document).expect("serializable"),
        _ => text,
    };
    Ok(Outcome { document, text, exit_code: if ok { EXIT_OK } else { EXIT_VERIFY_FAILED } })
}

/// Parses `args`, runs, prints, and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let mut stderr = std::io::stderr();
    match execute(&cli, &mut stderr) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(stdout, "{}", out.text);
            out.exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
