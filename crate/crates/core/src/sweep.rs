//! Parameter grids, parallel execution and report documents.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lab::{check_info, run_check, CheckArgs};
use crate::report::CongruenceReport;
use crate::sequences::alpha_by_name;

pub const DEFAULT_GUARD: u128 = 1_000_000;
pub const GUARD_ENV: &str = "QCONG_GUARD";

/// Inclusive range `lo..hi` with a positive step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParamRange {
    pub lo: i64,
    pub hi: i64,
    pub step: i64,
}

impl ParamRange {
    pub fn single(v: i64) -> Self {
        Self { lo: v, hi: v, step: 1 }
    }

    pub fn len(&self) -> u128 {
        if self.hi < self.lo {
            0
        } else {
            ((self.hi - self.lo) / self.step) as u128 + 1
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn values(&self) -> impl Iterator<Item = i64> {
        (self.lo..=self.hi).step_by(self.step as usize)
    }
}

impl FromStr for ParamRange {
    type Err = Error;

    /// `v`, `lo..hi` or `lo..hi:step`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadParams(format!("bad range '{s}', expected v, lo..hi or lo..hi:step"));
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|_| bad());
        let Some((lo, rest)) = s.split_once("..") else {
            return Ok(Self::single(parse(s)?));
        };
        let (hi, step) = match rest.split_once(':') {
            Some((hi, step)) => (parse(hi)?, parse(step)?),
            None => (parse(rest)?, 1),
        };
        let range = Self {
            lo: parse(lo)?,
            hi,
            step,
        };
        if step <= 0 {
            return Err(Error::BadParams(format!("range '{s}' needs a positive step")));
        }
        if range.is_empty() {
            return Err(Error::BadParams(format!("range '{s}' is empty")));
        }
        Ok(range)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(Self::Table),
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            other => Err(Error::BadParams(format!(
                "unknown format '{other}', expected table, json or csv"
            ))),
        }
    }
}

/// A check name with a range for every parameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepSpec {
    #[serde(rename = "check")]
    pub check_name: String,
    pub ranges: BTreeMap<String, ParamRange>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    pub jobs: usize,
    #[serde(rename = "format")]
    pub output_format: OutputFormat,
}

impl SweepSpec {
    pub fn new(check_name: &str) -> Self {
        Self {
            check_name: check_name.to_string(),
            ranges: BTreeMap::new(),
            alpha: None,
            jobs: 1,
            output_format: OutputFormat::Table,
        }
    }

    pub fn range(mut self, key: &str, range: ParamRange) -> Self {
        self.ranges.insert(key.to_string(), range);
        self
    }

    pub fn with_alpha(mut self, alpha: &str) -> Self {
        self.alpha = Some(alpha.to_string());
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn instance_count(&self) -> u128 {
        self.ranges.values().map(ParamRange::len).product()
    }

    /// Checks names and arity against the registry.
    pub fn validate(&self) -> Result<()> {
        let info = check_info(&self.check_name)?;
        for p in info.params {
            if !self.ranges.contains_key(*p) {
                return Err(Error::BadParams(format!("'{}' needs --{p}", self.check_name)));
            }
        }
        for key in self.ranges.keys() {
            if !info.params.contains(&key.as_str()) {
                return Err(Error::BadParams(format!("'{}' takes no --{key}", self.check_name)));
            }
        }
        if let Some(alpha) = &self.alpha {
            if !info.takes_alpha {
                return Err(Error::BadParams(format!("'{}' takes no --alpha", self.check_name)));
            }
            alpha_by_name(alpha)?;
        }
        if self.jobs == 0 {
            return Err(Error::BadParams("--jobs must be positive".into()));
        }
        Ok(())
    }

    /// Instances in lexicographic order of the check's parameter list.
    pub fn instances(&self) -> Result<Vec<CheckArgs>> {
        let info = check_info(&self.check_name)?;
        let mut out = vec![CheckArgs {
            values: BTreeMap::new(),
            alpha: self.alpha.clone(),
        }];
        for p in info.params {
            let range = self.ranges[*p];
            out = out
                .into_iter()
                .flat_map(|args| range.values().map(move |v| args.clone().with(p, v)))
                .collect();
        }
        Ok(out)
    }
}

/// An instance rejected by a precondition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkippedInstance {
    pub params: BTreeMap<String, i64>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub held: usize,
    pub failed: usize,
    pub skipped: usize,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub spec: SweepSpec,
    pub results: Vec<CongruenceReport>,
    pub skipped: Vec<SkippedInstance>,
    pub summary: Summary,
}

impl ReportDocument {
    pub fn all_hold(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CongruenceReport> {
        self.results.iter().filter(|r| !r.holds)
    }
}

pub fn tool_version() -> String {
    env!("CARGO_PKG_VERSION").to_string()
}

/// `QCONG_GUARD` if set and valid, else [`DEFAULT_GUARD`].
pub fn guard_from_env() -> Result<u128> {
    match std::env::var(GUARD_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::BadParams(format!("{GUARD_ENV}='{v}' is not a nonnegative integer"))),
        Err(_) => Ok(DEFAULT_GUARD),
    }
}

fn is_skip(e: &Error) -> bool {
    matches!(e, Error::Precondition(_) | Error::DegreeGuard { .. })
}

/// Runs every instance on a pool of `spec.jobs` threads. Output order does
/// not depend on scheduling.
pub fn run_sweep(spec: &SweepSpec, guard: u128) -> Result<ReportDocument> {
    spec.validate()?;
    let count = spec.instance_count();
    if count > guard {
        return Err(Error::GuardExceeded { count, guard });
    }
    let started = Instant::now();
    let instances = spec.instances()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.jobs)
        .build()
        .map_err(|e| Error::BadParams(format!("cannot start {} workers: {e}", spec.jobs)))?;
    let outcomes: Vec<(CheckArgs, Result<CongruenceReport>)> = pool.install(|| {
        instances
            .into_par_iter()
            .map(|args| {
                let r = run_check(&spec.check_name, &args);
                (args, r)
            })
            .collect()
    });
    let mut results = Vec::new();
    let mut skipped = Vec::new();
    for (args, outcome) in outcomes {
        match outcome {
            Ok(r) => results.push(r),
            Err(e) if is_skip(&e) => skipped.push(SkippedInstance {
                params: args.values,
                reason: e.to_string(),
            }),
            Err(e) => return Err(e),
        }
    }
    let held = results.iter().filter(|r| r.holds).count();
    let summary = Summary {
        total: results.len(),
        held,
        failed: results.len() - held,
        skipped: skipped.len(),
        elapsed_ms: started.elapsed().as_millis() as u64,
    };
    Ok(ReportDocument {
        tool_version: tool_version(),
        spec: spec.clone(),
        results,
        skipped,
        summary,
    })
}

fn params_text(params: &BTreeMap<String, i64>, order: &[&str]) -> String {
    let mut keys: Vec<&str> = order.iter().copied().filter(|k| params.contains_key(*k)).collect();
    keys.extend(params.keys().map(String::as_str).filter(|k| !order.contains(k)));
    keys.iter()
        .map(|k| format!("{k}={}", params[*k]))
        .collect::<Vec<_>>()
        .join(" ")
}

fn param_order(reports: &[CongruenceReport]) -> Vec<&'static str> {
    reports
        .first()
        .and_then(|r| {
            let base = r.check_name.split('[').next().unwrap_or_default();
            check_info(base).ok()
        })
        .map(|info| info.params.to_vec())
        .unwrap_or_default()
}

/// Aligned text table with a summary line.
pub fn render_table(reports: &[CongruenceReport], summary: Option<&Summary>) -> String {
    let order = param_order(reports);
    let rows: Vec<[String; 6]> = reports
        .iter()
        .map(|r| {
            [
                r.check_name.clone(),
                params_text(&r.parameters, &order),
                r.modulus.clone(),
                if r.holds { "holds".into() } else { "FAILS".into() },
                r.residue_at_one.to_string(),
                r.elapsed.as_millis().to_string(),
            ]
        })
        .collect();
    let header = ["check", "params", "modulus", "result", "residue_at_one", "ms"].map(String::from);
    let mut widths = header.clone().map(|h| h.len());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(&header).chain(&rows) {
        let cells: Vec<String> = row.iter().zip(widths).map(|(c, w)| format!("{c:<w$}")).collect();
        writeln!(out, "{}", cells.join("  ").trim_end()).unwrap();
    }
    if let Some(s) = summary {
        writeln!(
            out,
            "total {}  held {}  failed {}  skipped {}  elapsed {} ms",
            s.total, s.held, s.failed, s.skipped, s.elapsed_ms
        )
        .unwrap();
    }
    out
}

/// One row per report with a column per parameter.
pub fn render_csv(reports: &[CongruenceReport]) -> Result<String> {
    let mut keys: Vec<String> = param_order(reports).iter().map(|s| s.to_string()).collect();
    for r in reports {
        for k in r.parameters.keys() {
            if !keys.contains(k) {
                keys.push(k.clone());
            }
        }
    }
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["check".to_string()];
    header.extend(keys.iter().cloned());
    header.extend(["modulus", "holds", "residue_at_one", "elapsed_ms"].map(String::from));
    let csv_err = |e: csv::Error| Error::BadParams(format!("csv: {e}"));
    writer.write_record(&header).map_err(csv_err)?;
    for r in reports {
        let mut row = vec![r.check_name.clone()];
        row.extend(
            keys.iter()
                .map(|k| r.parameters.get(k).map(i64::to_string).unwrap_or_default()),
        );
        row.push(r.modulus.clone());
        row.push(r.holds.to_string());
        row.push(r.residue_at_one.to_string());
        row.push(r.elapsed.as_millis().to_string());
        writer.write_record(&row).map_err(csv_err)?;
    }
    let bytes = writer.into_inner().map_err(|e| Error::BadParams(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn render_document(doc: &ReportDocument, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Table => {
            let mut out = render_table(&doc.results, Some(&doc.summary));
            for s in &doc.skipped {
                let params: Vec<String> = s.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                writeln!(out, "skipped {}: {}", params.join(" "), s.reason).unwrap();
            }
            Ok(out)
        }
        OutputFormat::Json => Ok(serde_json::to_string_pretty(doc).expect("document serializes") + "\n"),
        OutputFormat::Csv => render_csv(&doc.results),
    }
}

pub fn render_report(report: &CongruenceReport, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Table => Ok(render_table(std::slice::from_ref(report), None)),
        OutputFormat::Json => Ok(serde_json::to_string_pretty(report).expect("report serializes") + "\n"),
        OutputFormat::Csv => render_csv(std::slice::from_ref(report)),
    }
}

/// Drops timing so two documents can be compared.
pub fn canonical_json(doc: &ReportDocument) -> serde_json::Value {
    let mut v = serde_json::to_value(doc).expect("document serializes");
    if let Some(results) = v["results"].as_array_mut() {
        for r in results {
            r.as_object_mut().map(|o| o.remove("elapsed_ms"));
        }
    }
    v["summary"].as_object_mut().map(|o| o.remove("elapsed_ms"));
    v["spec"].as_object_mut().map(|o| o.remove("jobs"));
    v
}
