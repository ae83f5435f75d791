//! Command-line front end: coefficient tables, object listings and
//! verification runs.
//!
//! Output formats (frozen at schema version 1):
//!
//! - `series`, JSON lines: `{"schema":1,"function":..,"k":..,"n":..,"exponents":[..],"coefficient":".."}`;
//!   CSV columns `n,exponents,coefficient`. Only nonzero terms are listed, ordered
//!   by `n` then exponent vector. Coefficients are decimal strings.
//! - `series --specialize`, one record per `n`: exact roots give
//!   `re`/`im` decimal strings (CSV `n,re,im`), other roots give floats plus
//!   `error_bound` (CSV `n,re,im,error_bound`).
//! - `enumerate`: `{"schema":1,"object":..,"n":..,"k":..,"index":..,"ranks":[..],"text":..,"symbol":..}`;
//!   CSV columns `index,ranks,text,symbol`.
//! - `verify`: one line per cell, `PASS` or `FAIL <counterexample>`, then a
//!   summary; `--format json` emits the same as JSON lines.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 invalid invocation.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::combinat::{
    durfee_decompose, dyson_rank, enumerate_kmarked_durfee, enumerate_kmarked_su,
    enumerate_partitions, enumerate_su_sequences, su_rank, su_symbol, Strategy,
};
use crate::genfun::{
    build_omega_epsilon_diff, build_partition_genfn, build_psi, build_r1, build_rk, build_scuk,
    build_u1, build_uk, PsiForm, ScuForm,
};
use crate::series::TruncatedSeries;
use crate::specialize::{specialize_exact, specialize_numeric, RootAngle, RootOfUnityVector};
use crate::verify::{estimate_objects, run_suite, Suite};

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_BUDGET: f64 = 1e8;

#[derive(Parser, Debug)]
#[command(
    name = "kmarked",
    version,
    about = "Rank generating functions for k-marked symbols"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit generating-function coefficients.
    Series(SeriesArgs),
    /// List combinatorial objects with their rank vectors.
    Enumerate(EnumerateArgs),
    /// Check generating functions against enumeration.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Function {
    R1,
    Rk,
    U1,
    Uk,
    Scuk,
    Psi,
    Partition,
    OmegaEps,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Form {
    Raw,
    Simplified,
    Theta,
    Pochhammer,
    Enumerative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Object {
    Partition,
    SuSeq,
    Kdurfee,
    Ksu,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    #[arg(long, value_enum)]
    function: Function,
    /// Number of marks (rk, uk, scuk, omega-eps).
    #[arg(long, default_value_t = 1)]
    k: u32,
    /// Truncation order N.
    #[arg(long)]
    n_max: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Comma-separated roots of unity `a/b` (or `1`, `-1`, `i`, `-i`), one per variable.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    specialize: Option<Vec<String>>,
    /// scuk: raw|simplified; psi: theta|pochhammer|enumerative.
    #[arg(long, value_enum)]
    form: Option<Form>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: f64,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long, value_enum)]
    object: Object,
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 1)]
    k: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: f64,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// unimodal, durfee, self-conjugate, psi, bijections or all.
    #[arg(long)]
    suite: String,
    #[arg(long, default_value_t = 12)]
    n_max: u32,
    #[arg(long, default_value_t = 2)]
    k_max: u32,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: f64,
}

/// Invalid invocation; reported on the error stream with exit code 2.
#[derive(Debug)]
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                2
            } else {
                let _ = write!(out, "{e}");
                0
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Series(a) => cmd_series(&a, out).map(|()| 0),
        Command::Enumerate(a) => cmd_enumerate(&a, out).map(|()| 0),
        Command::Verify(a) => cmd_verify(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn check_budget(estimate: f64, budget: f64) -> Result<(), Usage> {
    if estimate > budget {
        return Err(Usage(format!(
            "estimated work of {estimate:.3e} objects exceeds the budget of {budget:.3e}; \
             lower the bounds or raise --budget"
        )));
    }
    Ok(())
}

fn build_series(a: &SeriesArgs) -> Result<(TruncatedSeries, Option<u32>), Usage> {
    let order = a.n_max as usize;
    let uses_k = matches!(
        a.function,
        Function::Rk | Function::Uk | Function::Scuk | Function::OmegaEps
    );
    if a.k == 0 {
        return Err(Usage("--k must be at least 1".into()));
    }
    let form_ok = matches!(
        (a.function, a.form),
        (_, None)
            | (Function::Scuk, Some(Form::Raw | Form::Simplified))
            | (
                Function::Psi,
                Some(Form::Theta | Form::Pochhammer | Form::Enumerative)
            )
    );
    if !form_ok {
        return Err(Usage(format!("--form does not apply to {:?}", a.function)));
    }
    // monomials the output can hold: (N + 1)^(k + 1)
    let vars = match a.function {
        Function::R1 | Function::U1 => 1,
        Function::Rk | Function::Uk => a.k,
        _ => 0,
    };
    check_budget((a.n_max as f64 + 1.0).powi(vars as i32 + 1), a.budget)?;
    let series = match a.function {
        Function::Partition => build_partition_genfn(order),
        Function::R1 => build_r1(order),
        Function::U1 => build_u1(order),
        Function::Rk => build_rk(a.k, order)?,
        Function::Uk => build_uk(a.k, order)?,
        Function::Scuk => {
            let form = match a.form {
                Some(Form::Simplified) => ScuForm::Simplified,
                _ => ScuForm::Raw,
            };
            build_scuk(a.k, order, form)?
        }
        Function::Psi => {
            let form = match a.form {
                Some(Form::Pochhammer) => PsiForm::Pochhammer,
                Some(Form::Enumerative) => PsiForm::Enumerative,
                _ => PsiForm::Theta,
            };
            if form == PsiForm::Enumerative {
                check_budget(estimate_objects(Suite::Psi, a.n_max, 1), a.budget)?;
            }
            build_psi(order, form)?
        }
        Function::OmegaEps => {
            check_budget(
                estimate_objects(Suite::SelfConjugate, a.n_max, a.k),
                a.budget,
            )?;
            build_omega_epsilon_diff(a.k, order)?
        }
    };
    Ok((series, uses_k.then_some(a.k)))
}

#[derive(Serialize)]
struct CoefficientRecord<'a> {
    schema: u32,
    function: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u32>,
    n: usize,
    exponents: &'a [i32],
    coefficient: String,
}

#[derive(Serialize)]
struct ExactRecord<'a> {
    schema: u32,
    function: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u32>,
    n: usize,
    re: String,
    im: String,
}

#[derive(Serialize)]
struct NumericRecord<'a> {
    schema: u32,
    function: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u32>,
    n: usize,
    re: f64,
    im: f64,
    error_bound: f64,
}

fn function_name(f: Function) -> &'static str {
    match f {
        Function::R1 => "r1",
        Function::Rk => "rk",
        Function::U1 => "u1",
        Function::Uk => "uk",
        Function::Scuk => "scuk",
        Function::Psi => "psi",
        Function::Partition => "partition",
        Function::OmegaEps => "omega-eps",
    }
}

fn exponent_list(e: &[i32]) -> String {
    let parts: Vec<String> = e.iter().map(i32::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn io<T>(r: std::io::Result<T>) -> Result<T, Usage> {
    r.map_err(|e| Usage(format!("write failed: {e}")))
}

fn json_line<T: Serialize>(out: &mut dyn Write, record: &T) -> Result<(), Usage> {
    let line = serde_json::to_string(record)?;
    io(writeln!(out, "{line}"))
}

fn cmd_series(a: &SeriesArgs, out: &mut dyn Write) -> Result<(), Usage> {
    let (series, k) = build_series(a)?;
    let name = function_name(a.function);
    if let Some(angles) = &a.specialize {
        let roots = RootOfUnityVector(
            angles
                .iter()
                .map(|s| s.parse::<RootAngle>())
                .collect::<Result<_, _>>()?,
        );
        return write_specialized(&series, &roots, name, k, a.format, out);
    }
    let mut csv = (a.format == Format::Csv).then(|| csv::Writer::from_writer(Vec::new()));
    if let Some(w) = csv.as_mut() {
        w.write_record(["n", "exponents", "coefficient"])?;
    }
    for (n, c) in series.coeffs().iter().enumerate() {
        for (e, v) in c.terms() {
            match csv.as_mut() {
                Some(w) => w.write_record([n.to_string(), exponent_list(e), v.to_string()])?,
                None => json_line(
                    out,
                    &CoefficientRecord {
                        schema: SCHEMA_VERSION,
                        function: name,
                        k,
                        n,
                        exponents: e,
                        coefficient: v.to_string(),
                    },
                )?,
            }
        }
    }
    if let Some(w) = csv {
        io(out.write_all(&w.into_inner().map_err(|e| Usage(e.to_string()))?))?;
    }
    Ok(())
}

fn write_specialized(
    series: &TruncatedSeries,
    roots: &RootOfUnityVector,
    name: &str,
    k: Option<u32>,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), Usage> {
    let mut csv = (format == Format::Csv).then(|| csv::Writer::from_writer(Vec::new()));
    if roots.is_fourth_roots() {
        let g = specialize_exact(series, roots)?;
        if let Some(w) = csv.as_mut() {
            w.write_record(["n", "re", "im"])?;
        }
        for (n, c) in g.coeffs.iter().enumerate() {
            match csv.as_mut() {
                Some(w) => w.write_record([n.to_string(), c.re.to_string(), c.im.to_string()])?,
                None => json_line(
                    out,
                    &ExactRecord {
                        schema: SCHEMA_VERSION,
                        function: name,
                        k,
                        n,
                        re: c.re.to_string(),
                        im: c.im.to_string(),
                    },
                )?,
            }
        }
    } else {
        let z = specialize_numeric(series, roots)?;
        if let Some(w) = csv.as_mut() {
            w.write_record(["n", "re", "im", "error_bound"])?;
        }
        for (n, (c, bound)) in z.coeffs.iter().zip(&z.error_bounds).enumerate() {
            match csv.as_mut() {
                Some(w) => w.write_record([
                    n.to_string(),
                    c.re.to_string(),
                    c.im.to_string(),
                    bound.to_string(),
                ])?,
                None => json_line(
                    out,
                    &NumericRecord {
                        schema: SCHEMA_VERSION,
                        function: name,
                        k,
                        n,
                        re: c.re,
                        im: c.im,
                        error_bound: *bound,
                    },
                )?,
            }
        }
    }
    if let Some(w) = csv {
        io(out.write_all(&w.into_inner().map_err(|e| Usage(e.to_string()))?))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct ObjectRecord<'a> {
    schema: u32,
    object: &'a str,
    n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u32>,
    index: usize,
    ranks: Vec<i64>,
    text: String,
    symbol: Option<String>,
}

fn cmd_enumerate(a: &EnumerateArgs, out: &mut dyn Write) -> Result<(), Usage> {
    let (object, k) = match a.object {
        Object::Partition => ("partition", None),
        Object::SuSeq => ("su-seq", None),
        Object::Kdurfee => ("kdurfee", Some(a.k)),
        Object::Ksu => ("ksu", Some(a.k)),
    };
    if a.object != Object::Partition && a.n == 0 {
        return Err(Usage(
            "--n must be at least 1 for sequences and symbols".into(),
        ));
    }
    if k == Some(0) {
        return Err(Usage("--k must be at least 1".into()));
    }
    let suite = match a.object {
        Object::Kdurfee => Suite::DurfeeRanks,
        Object::Ksu => Suite::UnimodalRanks,
        _ => Suite::Bijections,
    };
    // estimate covers all sizes up to n; scale down to the single size requested
    check_budget(
        estimate_objects(suite, a.n, a.k) / (a.n as f64 + 1.0),
        a.budget,
    )?;

    // (ranks, text, symbol)
    let rows: Vec<(Vec<i64>, String, Option<String>)> = match a.object {
        Object::Partition => enumerate_partitions(a.n)
            .iter()
            .map(|p| {
                let ranks = dyson_rank(p).map(|r| vec![r]).unwrap_or_default();
                let sym = durfee_decompose(p).ok().map(|d| d.to_string());
                (ranks, p.to_string(), sym)
            })
            .collect(),
        Object::SuSeq => enumerate_su_sequences(a.n)
            .iter()
            .map(|s| {
                (
                    vec![su_rank(s)],
                    s.to_string(),
                    Some(su_symbol(s).to_string()),
                )
            })
            .collect(),
        Object::Kdurfee => enumerate_kmarked_durfee(a.n, a.k)?
            .iter()
            .map(|s| (s.ranks().0, s.to_string(), None))
            .collect(),
        Object::Ksu => enumerate_kmarked_su(a.n, a.k, Strategy::Constructive)?
            .iter()
            .map(|s| (s.ranks().0, s.to_string(), None))
            .collect(),
    };

    match a.format {
        Format::Json => {
            for (index, (ranks, text, symbol)) in rows.into_iter().enumerate() {
                json_line(
                    out,
                    &ObjectRecord {
                        schema: SCHEMA_VERSION,
                        object,
                        n: a.n,
                        k,
                        index,
                        ranks,
                        text,
                        symbol,
                    },
                )?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["index", "ranks", "text", "symbol"])?;
            for (index, (ranks, text, symbol)) in rows.into_iter().enumerate() {
                let r: Vec<i32> = ranks.iter().map(|&x| x as i32).collect();
                w.write_record([
                    index.to_string(),
                    exponent_list(&r),
                    text,
                    symbol.unwrap_or_default(),
                ])?;
            }
            io(out.write_all(&w.into_inner().map_err(|e| Usage(e.to_string()))?))?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct CellRecord<'a> {
    schema: u32,
    suite: &'a str,
    k: Option<u32>,
    n: u32,
    pass: bool,
    counterexample: Option<&'a str>,
}

#[derive(Serialize)]
struct SummaryRecord {
    schema: u32,
    cells: usize,
    failed: usize,
    pass: bool,
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, Usage> {
    let suite: Suite = a.suite.parse().map_err(Usage)?;
    check_budget(estimate_objects(suite, a.n_max, a.k_max), a.budget)?;
    let report = run_suite(suite, a.n_max, a.k_max)?;
    let failed = report.failures().count();
    match a.format {
        ReportFormat::Text => {
            for cell in &report.cells {
                io(writeln!(out, "{cell}"))?;
            }
            io(writeln!(
                out,
                "summary: {} cells, {} failed: {}",
                report.cells.len(),
                failed,
                if failed == 0 { "PASS" } else { "FAIL" }
            ))?;
        }
        ReportFormat::Json => {
            for cell in &report.cells {
                json_line(
                    out,
                    &CellRecord {
                        schema: SCHEMA_VERSION,
                        suite: cell.suite.name(),
                        k: cell.k,
                        n: cell.n,
                        pass: cell.passed(),
                        counterexample: cell.failure.as_deref(),
                    },
                )?;
            }
            json_line(
                out,
                &SummaryRecord {
                    schema: SCHEMA_VERSION,
                    cells: report.cells.len(),
                    failed,
                    pass: failed == 0,
                },
            )?;
        }
    }
    Ok(if failed == 0 { 0 } else { 1 })
}
