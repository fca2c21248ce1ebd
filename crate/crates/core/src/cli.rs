//! Command-line surface: input ingestion, report rendering, batch runs.
//!
//! Exit status taxonomy: 0 on success, 1 on user errors (unreadable or
//! malformed files, validation violations, non-reduced divisors), 2 when an
//! internal cross-check fails (the two nearby-cycle forms or the two `Sp_f`
//! derivations disagree), which indicates corrupted data or a bug and prints
//! both polynomials.

use crate::hodge::HodgeData;
use crate::kkp::{self, WeightGradedInput};
use crate::snc::{parse_pair, SncPair};
use crate::spectrum::{self, irregular_spectrum, SpectrumError, SpectrumReport};
use crate::FracPoly;
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USER_ERROR: i32 = 1;
pub const EXIT_IDENTITY_FAILURE: i32 = 2;

/// Environment variable that disables output styling when set to `0`.
pub const COLOR_ENV: &str = "SNC_SPECTRUM_COLOR";

#[derive(Parser, Debug)]
#[command(
    name = "snc-spectrum",
    version,
    about = "Spectrum polynomials and irregular Hodge numbers on simple normal crossing pairs"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Consistency checks to report alongside spectrum output.
    #[arg(long, global = true, value_enum, default_value_t = CheckLevel::None)]
    pub check: CheckLevel,
    /// Write the report to this path instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Subcommand, Debug)]
pub enum CliCommand {
    /// Full spectrum report (Sp_f, Sp_psi, irregular table, diagnostics).
    Spectrum { input: PathBuf },
    /// Spectrum polynomial and irregular Hodge number table only.
    Irregular { input: PathBuf },
    /// Limiting-filtration table, f_LG numbers, and the equality verdict.
    Kkp {
        input: PathBuf,
        /// JSON map from "p,q" to weight-graded dimensions.
        #[arg(long, value_name = "PATH")]
        weights: Option<PathBuf>,
    },
    /// Print a built-in Hodge table: P<n>, points k=9, curve genus=1,
    /// hypersurface n=4 d=5, toric f=1,3,3.
    Catalog { name: String, params: Vec<String> },
    /// Validate a pair description and run all internal consistency checks.
    Check { input: PathBuf },
    /// Run every .json pair description in a directory.
    Batch {
        dir: PathBuf,
        /// Worker threads; output is identical for any value.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CheckLevel {
    None,
    Forms,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

/// Fully resolved invocation.
#[derive(Debug)]
pub struct RunConfig {
    pub command: CliCommand,
    pub format: OutputFormat,
    pub check: CheckLevel,
    pub out: Option<PathBuf>,
    pub color: bool,
}

impl RunConfig {
    pub fn from_cli(cli: Cli, color: bool) -> Self {
        RunConfig {
            command: cli.command,
            format: if cli.json {
                OutputFormat::Json
            } else {
                OutputFormat::Text
            },
            check: cli.check,
            out: cli.out,
            color: color && !cli.json,
        }
    }
}

#[derive(Debug)]
pub struct RunOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn user(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USER_ERROR,
            message: message.into(),
        }
    }
}

pub fn run(config: &RunConfig) -> RunOutcome {
    match execute(config) {
        Ok((stdout, exit_code)) => RunOutcome {
            exit_code,
            stdout,
            stderr: String::new(),
        },
        Err(err) => RunOutcome {
            exit_code: err.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", err.message),
        },
    }
}

fn execute(config: &RunConfig) -> Result<(String, i32), CliError> {
    match &config.command {
        CliCommand::Spectrum { input } => {
            let (pair, report) = load_report(input)?;
            Ok((render_spectrum(config, &pair, &report, true)?, EXIT_OK))
        }
        CliCommand::Irregular { input } => {
            let (pair, report) = load_report(input)?;
            Ok((render_spectrum(config, &pair, &report, false)?, EXIT_OK))
        }
        CliCommand::Kkp { input, weights } => {
            let (_, report) = load_report(input)?;
            let weights = weights.as_deref().map(load_weights).transpose()?;
            Ok((render_kkp(config, &report, weights.as_ref())?, EXIT_OK))
        }
        CliCommand::Catalog { name, params } => {
            let (label, hodge) = catalog_entry(name, params)?;
            Ok((render_catalog(config, &label, &hodge), EXIT_OK))
        }
        CliCommand::Check { input } => render_check(config, input),
        CliCommand::Batch { dir, jobs } => render_batch(config, dir, *jobs),
    }
}

fn load_pair(path: &Path) -> Result<SncPair, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::user(format!("cannot read {}: {e}", path.display())))?;
    parse_pair(&text).map_err(|e| CliError::user(format!("{}: {e}", path.display())))
}

fn load_report(path: &Path) -> Result<(SncPair, SpectrumReport), CliError> {
    let pair = load_pair(path)?;
    let report = irregular_spectrum(&pair).map_err(|e| spectrum_error(path, e))?;
    Ok((pair, report))
}

fn spectrum_error(path: &Path, err: SpectrumError) -> CliError {
    let code = match err {
        SpectrumError::FormMismatch { .. } | SpectrumError::InternalIdentityFailure { .. } => {
            EXIT_IDENTITY_FAILURE
        }
        _ => EXIT_USER_ERROR,
    };
    CliError {
        code,
        message: format!("{}: {err}", path.display()),
    }
}

fn load_weights(path: &Path) -> Result<WeightGradedInput, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::user(format!("cannot read {}: {e}", path.display())))?;
    let raw: BTreeMap<String, u64> = serde_json::from_str(&text).map_err(|e| {
        CliError::user(format!(
            "{}: json error at line {}, column {}: {e}",
            path.display(),
            e.line(),
            e.column()
        ))
    })?;
    let mut pairs = Vec::new();
    for (key, dim) in raw {
        let mut split = key.split(',');
        let (p, q) = match (split.next(), split.next(), split.next()) {
            (Some(p), Some(q), None) => (p.trim(), q.trim()),
            _ => {
                return Err(CliError::user(format!(
                    "{}: weight key '{key}' is not of the form \"p,q\"",
                    path.display()
                )))
            }
        };
        let p: i64 = p
            .parse()
            .map_err(|_| CliError::user(format!("{}: bad index in '{key}'", path.display())))?;
        let q: i64 = q
            .parse()
            .map_err(|_| CliError::user(format!("{}: bad index in '{key}'", path.display())))?;
        pairs.push(((p, q), dim));
    }
    Ok(WeightGradedInput::from_pairs(pairs))
}

// ---- rendering ----

fn style(config: &RunConfig, text: &str) -> String {
    if config.color {
        format!("\x1b[1m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

fn irregular_table_string(table: &BTreeMap<BigRational, BigInt>) -> String {
    let mut out = String::from("{");
    for (i, (gamma, value)) in table.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{gamma}: {value}");
    }
    out.push('}');
    out
}

fn bigint_json(value: &BigInt) -> Value {
    match i64::try_from(value) {
        Ok(v) => json!(v),
        Err(_) => json!(value.to_string()),
    }
}

fn irregular_json(table: &BTreeMap<BigRational, BigInt>) -> Value {
    Value::Array(
        table
            .iter()
            .map(|(gamma, value)| {
                json!({
                    "gamma": gamma.to_string(),
                    "dim": bigint_json(value),
                })
            })
            .collect(),
    )
}

fn render_spectrum(
    config: &RunConfig,
    pair: &SncPair,
    report: &SpectrumReport,
    full: bool,
) -> Result<String, CliError> {
    let checks = run_checks(config, pair)?;
    if config.format == OutputFormat::Json {
        let mut doc = json!({
            "schema_version": crate::SCHEMA_VERSION,
            "sp_f": report.sp_f.to_string(),
            "irregular": irregular_json(&report.irregular),
        });
        if full {
            doc["sp_psi"] = json!(report.sp_psi.to_string());
            doc["diagnostics"] = json!({
                "euler_value": report.diagnostics.euler_value.to_string(),
                "palindrome_about_n": report.diagnostics.palindrome_about_n,
                "middle_degree": report.diagnostics.middle_degree,
                "warnings": report.diagnostics.warnings,
            });
        }
        if let Some(checks) = checks {
            doc["checks"] = checks_json(&checks);
        }
        return Ok(pretty_json(&doc));
    }

    let mut out = String::new();
    if full {
        let _ = writeln!(out, "{}   = {}", style(config, "Sp_f"), report.sp_f);
        let _ = writeln!(out, "{} = {}", style(config, "Sp_psi"), report.sp_psi);
    } else {
        let _ = writeln!(out, "{} = {}", style(config, "Sp_f"), report.sp_f);
    }
    let _ = writeln!(
        out,
        "h_irr(degree {}) = {}",
        report.diagnostics.middle_degree,
        irregular_table_string(&report.irregular)
    );
    if full {
        let _ = writeln!(out, "diagnostics:");
        let _ = writeln!(out, "  Sp_f(1) = {}", report.diagnostics.euler_value);
        let _ = writeln!(
            out,
            "  palindrome about {}: {}",
            report.diagnostics.middle_degree,
            yes_no(report.diagnostics.palindrome_about_n)
        );
        for warning in &report.diagnostics.warnings {
            let _ = writeln!(out, "  warning: {warning}");
        }
    } else {
        for warning in &report.diagnostics.warnings {
            let _ = writeln!(out, "warning: {warning}");
        }
    }
    if let Some(checks) = checks {
        out.push_str(&checks_text(&checks));
    }
    Ok(out)
}

struct CheckResults {
    forms_agree: bool,
    identity_holds: bool,
    mobius: Option<bool>,
}

/// The engine asserts form agreement and the Sp_f identity at construction,
/// so a report in hand means they held; `--check full` additionally runs the
/// Mobius round trip over every stored stratum.
fn run_checks(config: &RunConfig, pair: &SncPair) -> Result<Option<CheckResults>, CliError> {
    match config.check {
        CheckLevel::None => Ok(None),
        CheckLevel::Forms => Ok(Some(CheckResults {
            forms_agree: true,
            identity_holds: true,
            mobius: None,
        })),
        CheckLevel::Full => {
            let mobius = spectrum::mobius_round_trip_holds(pair)
                .map_err(|e| CliError::user(e.to_string()))?;
            if !mobius {
                return Err(CliError {
                    code: EXIT_IDENTITY_FAILURE,
                    message: "Mobius round trip failed: open and closed strata are inconsistent"
                        .to_string(),
                });
            }
            Ok(Some(CheckResults {
                forms_agree: true,
                identity_holds: true,
                mobius: Some(mobius),
            }))
        }
    }
}

fn checks_text(checks: &CheckResults) -> String {
    let mut out = String::from("checks:\n");
    let _ = writeln!(
        out,
        "  nearby-cycle forms agree: {}",
        yes_no(checks.forms_agree)
    );
    let _ = writeln!(
        out,
        "  Sp_f = Sp_U - t*Sp_psi: {}",
        yes_no(checks.identity_holds)
    );
    if let Some(mobius) = checks.mobius {
        let _ = writeln!(out, "  Mobius round trip: {}", yes_no(mobius));
    }
    out
}

fn checks_json(checks: &CheckResults) -> Value {
    let mut doc = json!({
        "nearby_cycle_forms_agree": checks.forms_agree,
        "sp_f_identity": checks.identity_holds,
    });
    if let Some(mobius) = checks.mobius {
        doc["mobius_round_trip"] = json!(mobius);
    }
    doc
}

fn render_kkp(
    config: &RunConfig,
    report: &SpectrumReport,
    weights: Option<&WeightGradedInput>,
) -> Result<String, CliError> {
    let table = kkp::to_limiting_table(report);
    let f_lg = kkp::f_lg_numbers(report).map_err(|e| CliError::user(e.to_string()))?;
    let verdict = weights
        .map(|w| kkp::kkp_equality_check(report, w))
        .transpose()
        .map_err(|e| CliError::user(e.to_string()))?;

    if config.format == OutputFormat::Json {
        let mut doc = json!({
            "schema_version": crate::SCHEMA_VERSION,
            "middle_degree": table.degree,
            "f_lg": f_lg
                .iter()
                .map(|((p, q), v)| json!({"p": p, "q": q, "dim": bigint_json(v)}))
                .collect::<Vec<_>>(),
            "limiting": table
                .entries
                .iter()
                .map(|((alpha, p), v)| {
                    json!({
                        "alpha": alpha.to_string(),
                        "p": p,
                        "dim": bigint_json(v),
                    })
                })
                .collect::<Vec<_>>(),
        });
        if let Some(verdict) = verdict {
            doc["verdict"] = json!({
                "holds": verdict.holds,
                "hodge_tate": verdict.hodge_tate,
                "witness": verdict.witness.map(|(p, q)| json!([p, q])),
            });
        }
        return Ok(pretty_json(&doc));
    }

    let mut out = String::new();
    let _ = writeln!(out, "middle degree: {}", table.degree);
    let _ = writeln!(out, "{}:", style(config, "f_LG"));
    if f_lg.is_empty() {
        let _ = writeln!(out, "  (all zero)");
    }
    for ((p, q), value) in &f_lg {
        let _ = writeln!(out, "  ({p},{q}) = {value}");
    }
    let _ = writeln!(
        out,
        "{} (lambda = exp(-2*pi*i*alpha)):",
        style(config, "limiting filtration")
    );
    if table.entries.is_empty() {
        let _ = writeln!(out, "  (all zero)");
    }
    for ((alpha, p), value) in &table.entries {
        let _ = writeln!(out, "  alpha={alpha} p={p}: {value}");
    }
    if let Some(verdict) = verdict {
        match verdict.witness {
            None => {
                let _ = writeln!(out, "kkp equality: {}", style(config, "holds"));
            }
            Some((p, q)) => {
                let _ = writeln!(
                    out,
                    "kkp equality: {} at (p,q) = ({p},{q})",
                    style(config, "fails")
                );
            }
        }
        let _ = writeln!(out, "hodge-tate shape: {}", yes_no(verdict.hodge_tate));
    }
    Ok(out)
}

fn render_catalog(config: &RunConfig, label: &str, hodge: &HodgeData) -> String {
    let spectrum = spectrum::spectrum_of_variety(hodge);
    if config.format == OutputFormat::Json {
        let doc = json!({
            "schema_version": crate::SCHEMA_VERSION,
            "name": label,
            "hodge": hodge,
            "spectrum": spectrum.to_string(),
        });
        return pretty_json(&doc);
    }
    format!("{}\n{hodge}\nSp = {spectrum}\n", style(config, label))
}

fn render_check(config: &RunConfig, input: &Path) -> Result<(String, i32), CliError> {
    let pair = load_pair(input)?;
    let violations = pair.validate();
    let name = input.display();

    if !violations.is_empty() {
        if config.format == OutputFormat::Json {
            let doc = json!({
                "schema_version": crate::SCHEMA_VERSION,
                "file": input.to_string_lossy(),
                "status": "invalid",
                "violations": violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            });
            return Ok((pretty_json(&doc), EXIT_USER_ERROR));
        }
        let mut out = format!("{name}: {}\n", style(config, "invalid"));
        for violation in &violations {
            let _ = writeln!(out, "  - {violation}");
        }
        return Ok((out, EXIT_USER_ERROR));
    }

    // Reduced pairs get the full engine run with its construction-time
    // assertions plus the Mobius audit; non-reduced pairs stop at validation.
    let mut checks = None;
    if pair.is_reduced() {
        irregular_spectrum(&pair).map_err(|e| spectrum_error(input, e))?;
        let mobius = spectrum::mobius_round_trip_holds(&pair)
            .map_err(|e| CliError::user(e.to_string()))?;
        if !mobius {
            return Err(CliError {
                code: EXIT_IDENTITY_FAILURE,
                message: format!("{name}: Mobius round trip failed"),
            });
        }
        checks = Some(CheckResults {
            forms_agree: true,
            identity_holds: true,
            mobius: Some(true),
        });
    }

    if config.format == OutputFormat::Json {
        let mut doc = json!({
            "schema_version": crate::SCHEMA_VERSION,
            "file": input.to_string_lossy(),
            "status": "ok",
            "warnings": pair.warnings(),
        });
        if let Some(checks) = &checks {
            doc["checks"] = checks_json(checks);
        } else {
            doc["note"] = json!("non-reduced divisor: spectrum checks skipped");
        }
        return Ok((pretty_json(&doc), EXIT_OK));
    }

    let mut out = format!("{name}: {}\n", style(config, "ok"));
    for warning in pair.warnings() {
        let _ = writeln!(out, "  warning: {warning}");
    }
    match &checks {
        Some(checks) => out.push_str(&checks_text(checks)),
        None => {
            let _ = writeln!(out, "note: non-reduced divisor, spectrum checks skipped");
        }
    }
    Ok((out, EXIT_OK))
}

enum BatchStatus {
    Ok { sp_f: FracPoly },
    Failed { message: String },
    IdentityFailure { message: String },
}

fn render_batch(config: &RunConfig, dir: &Path, jobs: usize) -> Result<(String, i32), CliError> {
    if jobs == 0 {
        return Err(CliError::user("--jobs must be at least 1"));
    }
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| CliError::user(format!("cannot read directory {}: {e}", dir.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|path| path.extension().is_some_and(|ext| ext == "json"))
        .collect();
    files.sort();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::user(format!("cannot build thread pool: {e}")))?;
    let results: Vec<BatchStatus> = pool.install(|| {
        files
            .par_iter()
            .map(|path| match load_report(path) {
                Ok((_, report)) => BatchStatus::Ok { sp_f: report.sp_f },
                Err(err) if err.code == EXIT_IDENTITY_FAILURE => BatchStatus::IdentityFailure {
                    message: err.message,
                },
                Err(err) => BatchStatus::Failed {
                    message: err.message,
                },
            })
            .collect()
    });

    let ok = results
        .iter()
        .filter(|s| matches!(s, BatchStatus::Ok { .. }))
        .count();
    let failed = results
        .iter()
        .filter(|s| matches!(s, BatchStatus::Failed { .. }))
        .count();
    let identity = results
        .iter()
        .filter(|s| matches!(s, BatchStatus::IdentityFailure { .. }))
        .count();
    let exit_code = if identity > 0 {
        EXIT_IDENTITY_FAILURE
    } else if failed > 0 {
        EXIT_USER_ERROR
    } else {
        EXIT_OK
    };

    if config.format == OutputFormat::Json {
        let doc = json!({
            "schema_version": crate::SCHEMA_VERSION,
            "results": files
                .iter()
                .zip(&results)
                .map(|(path, status)| {
                    let name = file_name(path);
                    match status {
                        BatchStatus::Ok { sp_f } => {
                            json!({"file": name, "status": "ok", "sp_f": sp_f.to_string()})
                        }
                        BatchStatus::Failed { message } => {
                            json!({"file": name, "status": "failed", "message": message})
                        }
                        BatchStatus::IdentityFailure { message } => {
                            json!({"file": name, "status": "identity-failure", "message": message})
                        }
                    }
                })
                .collect::<Vec<_>>(),
            "summary": {"ok": ok, "failed": failed, "identity_failures": identity},
        });
        return Ok((pretty_json(&doc), exit_code));
    }

    let mut out = String::new();
    for (path, status) in files.iter().zip(&results) {
        let name = file_name(path);
        match status {
            BatchStatus::Ok { sp_f } => {
                let _ = writeln!(out, "{name}: {} (Sp_f = {sp_f})", style(config, "ok"));
            }
            BatchStatus::Failed { message } => {
                let _ = writeln!(out, "{name}: {} ({message})", style(config, "failed"));
            }
            BatchStatus::IdentityFailure { message } => {
                let _ = writeln!(
                    out,
                    "{name}: {} ({message})",
                    style(config, "identity failure")
                );
            }
        }
    }
    let _ = writeln!(
        out,
        "{}: {ok} ok, {failed} failed, {identity} identity failures",
        style(config, "summary")
    );
    Ok((out, exit_code))
}

fn file_name(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn pretty_json(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("json rendering");
    text.push('\n');
    text
}

// ---- catalog ----

fn catalog_entry(name: &str, params: &[String]) -> Result<(String, HodgeData), CliError> {
    let kv = parse_params(params)?;
    let lookup = |keys: &[&str]| -> Option<&str> {
        keys.iter().find_map(|k| kv.get(*k).map(String::as_str))
    };
    let want = |keys: &[&str]| -> Result<&str, CliError> {
        lookup(keys).ok_or_else(|| {
            CliError::user(format!("catalog {name} requires a '{}' parameter", keys[0]))
        })
    };

    if let Some(n) = name
        .strip_prefix('P')
        .or_else(|| name.strip_prefix('p'))
        .and_then(|s| s.parse::<u32>().ok())
    {
        return Ok((
            format!("projective-space n={n}"),
            HodgeData::projective_space(n),
        ));
    }
    match name {
        "projective-space" => {
            let n: u32 = parse_number(want(&["n"])?)?;
            Ok((
                format!("projective-space n={n}"),
                HodgeData::projective_space(n),
            ))
        }
        "points" => {
            let k: u64 = parse_number(want(&["k"])?)?;
            Ok((format!("points k={k}"), HodgeData::points(k)))
        }
        "curve" => {
            let genus: u64 = parse_number(want(&["genus", "g"])?)?;
            Ok((format!("curve genus={genus}"), HodgeData::curve(genus)))
        }
        "hypersurface" => {
            let n: u32 = parse_number(want(&["n"])?)?;
            let d: u64 = parse_number(want(&["d"])?)?;
            if n < 1 || d < 1 {
                return Err(CliError::user("hypersurface requires n >= 1 and d >= 1"));
            }
            let hodge = HodgeData::hypersurface_in_projective_space(n, d)
                .map_err(|e| CliError::user(e.to_string()))?;
            Ok((format!("hypersurface n={n} d={d}"), hodge))
        }
        "toric" => {
            let f = want(&["f"])?
                .split(',')
                .map(|s| parse_number::<u64>(s.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            let hodge = HodgeData::toric_from_cone_counts(&f)
                .map_err(|e| CliError::user(e.to_string()))?;
            Ok((
                format!(
                    "toric f={}",
                    f.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
                ),
                hodge,
            ))
        }
        other => Err(CliError::user(format!(
            "unknown catalog entry '{other}'; known: P<n>, projective-space, points, curve, hypersurface, toric"
        ))),
    }
}

fn parse_params(params: &[String]) -> Result<BTreeMap<String, String>, CliError> {
    let mut kv = BTreeMap::new();
    for param in params {
        let (key, value) = param
            .split_once('=')
            .ok_or_else(|| CliError::user(format!("parameter '{param}' is not of the form k=v")))?;
        kv.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(kv)
}

fn parse_number<T: std::str::FromStr>(text: &str) -> Result<T, CliError> {
    text.parse()
        .map_err(|_| CliError::user(format!("'{text}' is not a valid number")))
}
