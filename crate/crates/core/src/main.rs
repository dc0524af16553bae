use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use qcong::compute::{compute, kind_label};
use qcong::lab::{check_info, run_check, CheckArgs, CHECKS};
use qcong::sequences::alpha_registry;
use qcong::sweep::{guard_from_env, render_document, render_report, run_sweep, OutputFormat, ParamRange, SweepSpec};
use qcong::Error;

/// Exact q-analogs of Apéry-type numbers and checks of their cyclotomic congruences.
#[derive(Parser)]
#[command(name = "qcong", version)]
struct Cli {
    /// table, json or csv
    #[arg(long, global = true, default_value = "table")]
    format: String,
    /// Worker threads for sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a sequence value, polynomial or table.
    Compute {
        target: String,
        args: Vec<String>,
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Run one check instance, e.g. `verify ljunggren --n 2 --a 2 --b 1`.
    Verify {
        check: String,
        #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Run a check over a grid, e.g. `sweep wolstenholme-q --n 1..20`.
    Sweep {
        check: String,
        #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Registered checks and their parameters.
    ListChecks,
    /// Registered exponent functions.
    ListAlphas,
}

struct Options {
    format: OutputFormat,
    jobs: usize,
    output: Option<PathBuf>,
}

/// Splits `--key value` pairs; the global flags may also appear here.
fn parse_pairs(raw: &[String], opts: &mut Options) -> Result<(BTreeMap<String, String>, Option<String>), Error> {
    let mut pairs = BTreeMap::new();
    let mut alpha = None;
    let mut it = raw.iter();
    while let Some(flag) = it.next() {
        let (key, inline) = match flag.strip_prefix("--") {
            Some(k) => match k.split_once('=') {
                Some((k, v)) => (k.to_string(), Some(v.to_string())),
                None => (k.to_string(), None),
            },
            None => return Err(Error::BadParams(format!("expected --name value, got '{flag}'"))),
        };
        let value = match inline {
            Some(v) => v,
            None => it
                .next()
                .cloned()
                .ok_or_else(|| Error::BadParams(format!("--{key} needs a value")))?,
        };
        match key.as_str() {
            "format" => opts.format = value.parse()?,
            "jobs" => {
                opts.jobs = value
                    .parse()
                    .map_err(|_| Error::BadParams(format!("--jobs must be a positive integer, got '{value}'")))?
            }
            "output" => opts.output = Some(PathBuf::from(value)),
            "alpha" => alpha = Some(value),
            _ => {
                if pairs.insert(key.clone(), value).is_some() {
                    return Err(Error::BadParams(format!("--{key} given twice")));
                }
            }
        }
    }
    Ok((pairs, alpha))
}

fn emit(text: &str, opts: &Options) -> Result<(), Error> {
    match &opts.output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Error::BadParams(format!("cannot write {}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_verify(check: &str, raw: &[String], opts: &mut Options) -> Result<bool, Error> {
    check_info(check)?;
    let (pairs, alpha) = parse_pairs(raw, opts)?;
    let mut args = CheckArgs::new();
    for (k, v) in pairs {
        let v: i64 = v
            .parse()
            .map_err(|_| Error::BadParams(format!("--{k} must be an integer, got '{v}'")))?;
        args = args.with(&k, v);
    }
    if let Some(a) = alpha {
        args = args.with_alpha(&a);
    }
    let report = run_check(check, &args)?;
    emit(&render_report(&report, opts.format)?, opts)?;
    Ok(report.holds)
}

fn cmd_sweep(check: &str, raw: &[String], opts: &mut Options) -> Result<bool, Error> {
    check_info(check)?;
    let (pairs, alpha) = parse_pairs(raw, opts)?;
    let mut spec = SweepSpec::new(check).with_jobs(opts.jobs);
    spec.output_format = opts.format;
    for (k, v) in pairs {
        spec = spec.range(&k, v.parse::<ParamRange>()?);
    }
    if let Some(a) = alpha {
        spec = spec.with_alpha(&a);
    }
    let doc = run_sweep(&spec, guard_from_env()?)?;
    emit(&render_document(&doc, opts.format)?, opts)?;
    Ok(doc.all_hold())
}

fn cmd_compute(target: &str, raw: &[String], alpha: Option<&str>, opts: &Options) -> Result<(), Error> {
    let (value, args) = compute(target, raw, alpha)?;
    let text = match opts.format {
        OutputFormat::Table => value.text() + "\n",
        OutputFormat::Json => serde_json::to_string_pretty(&value.json(target, &args)).expect("json") + "\n",
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let joined = args.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
            w.write_record(["target", "args", "value"])
                .and_then(|_| w.write_record([target, joined.as_str(), value.text().as_str()]))
                .map_err(|e| Error::BadParams(format!("csv: {e}")))?;
            String::from_utf8(w.into_inner().map_err(|e| Error::BadParams(format!("csv: {e}")))?).expect("utf-8")
        }
    };
    emit(&text, opts)
}

fn cmd_list_checks(opts: &Options) -> Result<(), Error> {
    let text = match opts.format {
        OutputFormat::Json => {
            let rows: Vec<_> = CHECKS
                .iter()
                .map(|c| json!({ "name": c.name, "params": c.params, "alpha": c.takes_alpha, "summary": c.summary }))
                .collect();
            serde_json::to_string_pretty(&rows).expect("json") + "\n"
        }
        _ => {
            let width = CHECKS.iter().map(|c| c.name.len()).max().unwrap_or(0);
            let mut out = String::new();
            for c in CHECKS {
                let mut params: Vec<String> = c.params.iter().map(|p| format!("--{p}")).collect();
                if c.takes_alpha {
                    params.push("[--alpha]".into());
                }
                out += &format!("{:<width$}  {:<36}  {}\n", c.name, params.join(" "), c.summary);
            }
            out
        }
    };
    emit(&text, opts)
}

fn cmd_list_alphas(opts: &Options) -> Result<(), Error> {
    let text = match opts.format {
        OutputFormat::Json => {
            let rows: Vec<_> = alpha_registry()
                .iter()
                .map(|a| json!({ "name": a.name(), "formula": a.formula(), "kind": kind_label(a.kind()) }))
                .collect();
            serde_json::to_string_pretty(&rows).expect("json") + "\n"
        }
        _ => alpha_registry()
            .iter()
            .map(|a| format!("{:<8} {:<16} {}\n", a.name(), a.formula(), kind_label(a.kind())))
            .collect(),
    };
    emit(&text, opts)
}

fn run(cli: Cli) -> Result<bool, Error> {
    let mut opts = Options {
        format: cli.format.parse()?,
        jobs: cli.jobs,
        output: cli.output,
    };
    match cli.command {
        Command::Compute { target, args, alpha } => cmd_compute(&target, &args, alpha.as_deref(), &opts).map(|_| true),
        Command::Verify { check, params } => cmd_verify(&check, &params, &mut opts),
        Command::Sweep { check, params } => cmd_sweep(&check, &params, &mut opts),
        Command::ListChecks => cmd_list_checks(&opts).map(|_| true),
        Command::ListAlphas => cmd_list_alphas(&opts).map(|_| true),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
