use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use zetasums::special::bernoulli_numbers;
use zetasums::{
    check_identity, eulerian_polynomial, eval_auto, eval_closed, eval_direct_with, eval_transformed,
    even_arg_moment_combination, faulhaber_coeffs, kappa_alt_combination, kappa_combination, moment_alt_combination,
    moment_combination, shifted_alt_combination, shifted_combination, term_count_estimate, EvalOptions, Family,
    Identity, IdentityPoint, IdentityReport, Method, RationalCoeffs, Side, Sign, SumResult, SumSpec, TailMode,
    Tolerance, ZetaCombination, DEFAULT_TERM_BUDGET,
};

use crate::output::{csv_field, emit, json, machine_num, text_num, Format};
use crate::{
    BenchmarkArgs, CoefficientTable, EvalArgs, IdentityArgs, MethodArg, OutputArgs, SumArgs, TableArgs, TailArg,
};

const BUDGET_VAR: &str = "ZS_TERM_BUDGET";

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Library(#[from] zetasums::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

pub type CliResult = Result<Status, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl From<Status> for ExitCode {
    fn from(status: Status) -> Self {
        match status {
            Status::Pass => ExitCode::SUCCESS,
            Status::Fail => ExitCode::from(1),
        }
    }
}

fn term_budget() -> Result<u64, CliError> {
    match std::env::var(BUDGET_VAR) {
        Err(_) => Ok(DEFAULT_TERM_BUDGET),
        Ok(raw) => {
            let parsed = raw.trim().parse::<u64>().ok().or_else(|| {
                raw.trim()
                    .parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite() && *v >= 1.0 && v.fract() == 0.0 && *v < u64::MAX as f64)
                    .map(|v| v as u64)
            });
            parsed
                .filter(|&v| v >= 1)
                .ok_or_else(|| CliError::Usage(format!("{BUDGET_VAR} must be a positive integer (got {raw:?})")))
        }
    }
}

fn options(tail: TailArg) -> Result<EvalOptions, CliError> {
    let tail = match tail {
        TailArg::Auto => TailMode::Auto,
        TailArg::Truncate => TailMode::Truncate,
        TailArg::EulerMaclaurin => TailMode::EulerMaclaurin,
    };
    Ok(EvalOptions {
        term_budget: term_budget()?,
        tail,
    })
}

fn parse_sign(raw: &str) -> Result<Sign, CliError> {
    Ok(raw.parse::<Sign>()?)
}

fn tolerance(tol: f64) -> Result<Tolerance, CliError> {
    Ok(Tolerance::absolute(tol)?)
}

fn require_s(sum: &SumArgs) -> Result<f64, CliError> {
    sum.s.ok_or_else(|| CliError::Usage("--s is required".into()))
}

fn finish(out: &OutputArgs, content: &str, status: Status) -> CliResult {
    emit(out.output.as_deref(), content)?;
    Ok(status)
}

#[derive(Serialize)]
struct EvalRecord {
    family: Family,
    s: f64,
    m: u32,
    a: f64,
    b: f64,
    c: f64,
    sign: Sign,
    tol: f64,
    #[serde(flatten)]
    result: SumResult,
}

pub fn eval(args: EvalArgs) -> CliResult {
    let family: Family = args.family.parse()?;
    let s = require_s(&args.sum)?;
    let spec = SumSpec::new(family, s)
        .with_m(args.sum.m)
        .with_a(args.sum.a)
        .with_b(args.sum.b)
        .with_c(args.sum.c)
        .with_sign(parse_sign(&args.sum.sign)?)
        .with_tol(tolerance(args.sum.tol)?);
    let opts = options(args.tail)?;
    let result = match args.method {
        MethodArg::Auto => eval_auto(&spec, &opts)?,
        MethodArg::Direct => eval_direct_with(&spec, &opts)?,
        MethodArg::Closed => eval_closed(&spec)?,
        MethodArg::Transformed => eval_transformed(&spec, &opts)?,
    };
    let record = EvalRecord {
        family,
        s,
        m: spec.m,
        a: spec.a,
        b: spec.b,
        c: spec.c,
        sign: spec.sign,
        tol: spec.tol.abs_tol,
        result,
    };
    let content = match args.out.format {
        Format::Json => json(&record),
        Format::Csv => format!(
            "family,s,value,terms_used,tail_bound,method\n{},{},{},{},{},{}\n",
            family,
            machine_num(s),
            machine_num(result.value),
            result.terms_used,
            machine_num(result.tail_bound),
            method_label(result.method)
        ),
        Format::Text => format!(
            "value       {}\nterms_used  {}\ntail_bound  {}\nmethod      {}\n",
            text_num(result.value),
            result.terms_used,
            text_num(result.tail_bound),
            method_label(result.method)
        ),
    };
    finish(&args.out, &content, Status::Pass)
}

fn method_label(method: Method) -> &'static str {
    match method {
        Method::Direct => "DIRECT",
        Method::ClosedForm => "CLOSED",
        Method::Transformed => "TRANSFORMED",
    }
}

fn point_from(sum: &SumArgs, s: f64) -> Result<IdentityPoint, CliError> {
    Ok(IdentityPoint::at(s)
        .with_a(sum.a)
        .with_b(sum.b)
        .with_c(sum.c)
        .with_sign(parse_sign(&sum.sign)?))
}

fn run_checks(jobs: &[(Identity, IdentityPoint)], tol: Tolerance) -> Result<Vec<IdentityReport>, CliError> {
    let opts = options(TailArg::Auto)?;
    jobs.iter()
        .map(|(id, point)| check_identity(*id, point, tol, &opts).map_err(CliError::from))
        .collect()
}

fn status_of(reports: &[IdentityReport]) -> Status {
    if reports.iter().all(|r| r.pass) {
        Status::Pass
    } else {
        Status::Fail
    }
}

pub fn identity_check(args: IdentityArgs) -> CliResult {
    let tol = tolerance(args.sum.tol)?;
    let ids: Vec<Identity> = if args.name.eq_ignore_ascii_case("all") {
        Identity::ALL.to_vec()
    } else {
        vec![args.name.parse()?]
    };
    let sweep = args.grid.is_some() || args.sum.s.is_none() || ids.len() > 1;
    let mut jobs = Vec::new();
    for id in ids {
        if sweep {
            jobs.extend(id.default_grid().into_iter().map(|p| (id, p)));
        } else {
            jobs.push((id, point_from(&args.sum, require_s(&args.sum)?)?));
        }
    }
    let reports = run_checks(&jobs, tol)?;
    let content = match args.out.format {
        Format::Json => json(&reports),
        Format::Csv => identity_csv(&reports, false),
        Format::Text => identity_text(&reports),
    };
    finish(&args.out, &content, status_of(&reports))
}

fn identity_text(reports: &[IdentityReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let mut params = format!("s={}", r.s);
        for (name, value) in [("a", r.a), ("b", r.b), ("c", r.c)] {
            if let Some(v) = value {
                let _ = write!(params, " {name}={v}");
            }
        }
        if let Some(sign) = r.sign {
            let _ = write!(params, " sign={sign}");
        }
        let _ = writeln!(
            out,
            "{} {:<9} {params}  lhs={} rhs={} diff={:.2e} budget={:.2e}",
            if r.pass { "PASS" } else { "FAIL" },
            r.identity,
            text_num(r.lhs),
            text_num(r.rhs),
            r.abs_diff,
            r.budget
        );
    }
    let passed = reports.iter().filter(|r| r.pass).count();
    let _ = writeln!(out, "{passed}/{} passed", reports.len());
    out
}

fn identity_csv(reports: &[IdentityReport], with_c: bool) -> String {
    let mut out = String::from(if with_c {
        "identity,s,c,lhs,rhs,abs_diff,pass\n"
    } else {
        "identity,s,lhs,rhs,abs_diff,pass\n"
    });
    for r in reports {
        let c = if with_c {
            format!("{},", machine_num(r.c.unwrap_or(0.0)))
        } else {
            String::new()
        };
        let _ = writeln!(
            out,
            "{},{},{c}{},{},{},{}",
            csv_field(&r.identity),
            machine_num(r.s),
            machine_num(r.lhs),
            machine_num(r.rhs),
            machine_num(r.abs_diff),
            r.pass
        );
    }
    out
}

#[derive(Debug, Serialize)]
struct BenchmarkRow {
    s: f64,
    a: f64,
    b: f64,
    tol: f64,
    predicted_direct_terms: u64,
    predicted_transformed_terms: u64,
    direct_terms: Option<u64>,
    transformed_terms: Option<u64>,
    direct_value: Option<f64>,
    transformed_value: Option<f64>,
    direct_seconds: Option<f64>,
    transformed_seconds: Option<f64>,
    agreement: Option<f64>,
    speedup_estimate: Option<f64>,
    error: Option<String>,
}

fn timed<T>(f: impl FnOnce() -> zetasums::Result<T>) -> (zetasums::Result<T>, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64())
}

pub fn benchmark(args: BenchmarkArgs) -> CliResult {
    let tol = tolerance(args.tol)?;
    let opts = options(args.tail)?;
    if args.a_list.is_empty() {
        return Err(CliError::Usage("--a-list needs at least one value".into()));
    }
    let mut rows = Vec::new();
    for &a in &args.a_list {
        let spec = SumSpec::new(Family::GeneralAb, args.s)
            .with_a(a)
            .with_b(args.b)
            .with_tol(tol);
        spec.validate()?;
        let predicted_direct_terms = term_count_estimate(args.s, a, args.b, tol, Side::Direct)?;
        let predicted_transformed_terms = term_count_estimate(args.s, a, args.b, tol, Side::Transformed)?;
        let (direct, direct_secs) = timed(|| eval_direct_with(&spec, &opts));
        let (transformed, transformed_secs) = timed(|| eval_transformed(&spec, &opts));
        let mut errors = Vec::new();
        let direct = direct.map_err(|e| errors.push(format!("direct: {e}"))).ok();
        let transformed = transformed.map_err(|e| errors.push(format!("transformed: {e}"))).ok();
        let both = direct.zip(transformed);
        rows.push(BenchmarkRow {
            s: args.s,
            a,
            b: args.b,
            tol: args.tol,
            predicted_direct_terms,
            predicted_transformed_terms,
            direct_terms: direct.map(|r| r.terms_used),
            transformed_terms: transformed.map(|r| r.terms_used),
            direct_value: direct.map(|r| r.value),
            transformed_value: transformed.map(|r| r.value),
            direct_seconds: direct.map(|_| direct_secs),
            transformed_seconds: transformed.map(|_| transformed_secs),
            agreement: both.map(|(d, t)| (d.value - t.value).abs()),
            speedup_estimate: both.map(|(d, t)| d.terms_used as f64 / t.terms_used as f64),
            error: (!errors.is_empty()).then(|| errors.join("; ")),
        });
    }
    let content = match args.out.format {
        Format::Json => json(&rows),
        Format::Csv => benchmark_csv(&rows),
        Format::Text => benchmark_text(&rows),
    };
    finish(&args.out, &content, Status::Pass)
}

fn opt<T>(value: Option<T>, f: impl Fn(T) -> String) -> String {
    value.map(f).unwrap_or_else(|| "-".to_string())
}

fn benchmark_text(rows: &[BenchmarkRow]) -> String {
    let mut out = format!(
        "{:>8} {:>12} {:>12} {:>12} {:>12} {:>11} {:>11} {:>10} {:>10}\n",
        "a", "pred_direct", "pred_transf", "direct", "transformed", "direct_s", "transf_s", "agreement", "speedup"
    );
    for r in rows {
        let _ = writeln!(
            out,
            "{:>8} {:>12} {:>12} {:>12} {:>12} {:>11} {:>11} {:>10} {:>10}",
            r.a,
            r.predicted_direct_terms,
            r.predicted_transformed_terms,
            opt(r.direct_terms, |v| v.to_string()),
            opt(r.transformed_terms, |v| v.to_string()),
            opt(r.direct_seconds, |v| format!("{v:.3e}")),
            opt(r.transformed_seconds, |v| format!("{v:.3e}")),
            opt(r.agreement, |v| format!("{v:.2e}")),
            opt(r.speedup_estimate, |v| format!("{v:.4}")),
        );
        if let Some(err) = &r.error {
            let _ = writeln!(out, "{:>8} error: {err}", "");
        }
    }
    out
}

fn benchmark_csv(rows: &[BenchmarkRow]) -> String {
    let mut out = String::from(
        "s,a,b,tol,predicted_direct_terms,predicted_transformed_terms,direct_terms,transformed_terms,direct_value,transformed_value,direct_seconds,transformed_seconds,agreement,speedup_estimate,error\n",
    );
    let num = |v: Option<f64>| v.map(machine_num).unwrap_or_default();
    let int = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            machine_num(r.s),
            machine_num(r.a),
            machine_num(r.b),
            machine_num(r.tol),
            r.predicted_direct_terms,
            r.predicted_transformed_terms,
            int(r.direct_terms),
            int(r.transformed_terms),
            num(r.direct_value),
            num(r.transformed_value),
            num(r.direct_seconds),
            num(r.transformed_seconds),
            num(r.agreement),
            num(r.speedup_estimate),
            csv_field(r.error.as_deref().unwrap_or(""))
        );
    }
    out
}

/// Parses `start:stop:step` into `start + i*step` for every `i` that stays
/// within `stop`.
fn parse_grid(raw: &str) -> Result<Vec<f64>, CliError> {
    let bad = || {
        CliError::Usage(format!(
            "grid must look like start:stop:step with step > 0 (got {raw:?})"
        ))
    };
    let parts: Vec<f64> = raw
        .split(':')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    let [start, stop, step] = parts[..] else {
        return Err(bad());
    };
    if step.is_nan() || step <= 0.0 || !start.is_finite() || !stop.is_finite() || stop < start {
        return Err(bad());
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize;
    if count > 100_000 {
        return Err(CliError::Usage(format!("grid {raw:?} has too many points")));
    }
    Ok((0..=count).map(|i| start + i as f64 * step).collect())
}

pub fn table(args: TableArgs) -> CliResult {
    match (&args.identity, args.family) {
        (Some(name), _) => identity_table(&args, name),
        (None, Some(table)) => coefficient_table(&args, table),
        (None, None) => Err(CliError::Usage("table needs --identity or --family".into())),
    }
}

fn identity_table(args: &TableArgs, name: &str) -> CliResult {
    let id: Identity = name.parse()?;
    let tol = tolerance(args.sum.tol)?;
    let (points, with_c) = match (&args.s_grid, &args.c_grid) {
        (Some(grid), None) => {
            let points = parse_grid(grid)?
                .into_iter()
                .map(|s| point_from(&args.sum, s))
                .collect::<Result<Vec<_>, _>>()?;
            (points, false)
        }
        (None, Some(grid)) => {
            let base = point_from(&args.sum, require_s(&args.sum)?)?;
            (parse_grid(grid)?.into_iter().map(|c| base.with_c(c)).collect(), true)
        }
        _ => {
            return Err(CliError::Usage(
                "table --identity needs exactly one of --s-grid or --c-grid".into(),
            ))
        }
    };
    let jobs: Vec<_> = points.into_iter().map(|p| (id, p)).collect();
    let reports = run_checks(&jobs, tol)?;
    let content = match args.out.format {
        Format::Json => json(&reports),
        Format::Csv => identity_csv(&reports, with_c),
        Format::Text => identity_text(&reports),
    };
    finish(&args.out, &content, status_of(&reports))
}

#[derive(Serialize)]
struct CoefficientRow {
    index: u32,
    #[serde(flatten)]
    coeffs: RationalCoeffs,
}

#[derive(Serialize)]
struct ClosedFormRow {
    family: Family,
    m: u32,
    text: String,
    combination: ZetaCombination,
}

fn coefficient_table(args: &TableArgs, table: CoefficientTable) -> CliResult {
    let m_max = args.m_max;
    if table == CoefficientTable::ClosedForms {
        return closed_form_table(args);
    }
    let rows: Vec<CoefficientRow> = match table {
        CoefficientTable::Eulerian => (1..=m_max)
            .map(|m| {
                Ok(CoefficientRow {
                    index: m,
                    coeffs: eulerian_polynomial(m)?,
                })
            })
            .collect::<Result<_, CliError>>()?,
        CoefficientTable::Faulhaber => (0..=m_max)
            .map(|m| {
                Ok(CoefficientRow {
                    index: m,
                    coeffs: faulhaber_coeffs(m)?,
                })
            })
            .collect::<Result<_, CliError>>()?,
        CoefficientTable::Bernoulli => {
            let all = bernoulli_numbers(m_max as usize)?;
            all.coeffs()
                .iter()
                .enumerate()
                .map(|(n, b)| CoefficientRow {
                    index: n as u32,
                    coeffs: RationalCoeffs::new(vec![b.clone()], 0),
                })
                .collect()
        }
        CoefficientTable::ClosedForms => unreachable!(),
    };
    let label = match table {
        CoefficientTable::Eulerian => "m",
        CoefficientTable::Faulhaber => "m",
        _ => "n",
    };
    let content = match args.out.format {
        Format::Json => json(&rows),
        Format::Csv => {
            let mut out = format!("{label},offset,coefficients\n");
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{},{},{}",
                    r.index,
                    r.coeffs.offset(),
                    r.coeffs.to_strings().join(" ")
                );
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for r in &rows {
                let _ = writeln!(out, "{label}={:<3} [{}]", r.index, r.coeffs.to_strings().join(", "));
            }
            out
        }
    };
    finish(&args.out, &content, Status::Pass)
}

fn closed_form_table(args: &TableArgs) -> CliResult {
    let a = args.sum.a;
    let mut rows = vec![
        (Family::Kappa, 0, kappa_combination()),
        (Family::KappaAlt, 0, kappa_alt_combination()),
        (Family::Shifted, 0, shifted_combination(a)),
        (Family::ShiftedAlt, 0, shifted_alt_combination(a)),
    ];
    for m in 1..=args.m_max.min(zetasums::MAX_MOMENT) {
        rows.push((Family::Moment, m, moment_combination(m)?));
    }
    for m in 1..=args.m_max.min(2) {
        rows.push((Family::MomentAlt, m, moment_alt_combination(m)?));
        rows.push((Family::EvenArgMoment, m, even_arg_moment_combination(m)?));
    }
    let rows: Vec<ClosedFormRow> = rows
        .into_iter()
        .map(|(family, m, combination)| ClosedFormRow {
            family,
            m,
            text: combination.to_string(),
            combination,
        })
        .collect();
    let content = match args.out.format {
        Format::Json => json(&rows),
        Format::Csv => {
            let mut out = String::from("family,m,closed_form\n");
            for r in &rows {
                let _ = writeln!(out, "{},{},{}", r.family, r.m, csv_field(&r.text));
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for r in &rows {
                let _ = writeln!(out, "{:<16} m={:<2} {}", r.family.slug(), r.m, r.text);
            }
            out
        }
    };
    finish(&args.out, &content, Status::Pass)
}
