//! Named values for the `compute` subcommand.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::cyclotomic::cyclotomic;
use crate::error::{Error, Result};
use crate::exact::LaurentPoly;
use crate::qcomb::q_binomial;
use crate::sequences::{
    almkvist_zudilin, alpha_by_name, alpha_registry, apery, apery_multivariate, apery_q_krz_binform,
    apery_q_multivariate, apery_q_zheng, AlphaKind, IndexTuple,
};

pub struct Target {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub takes_alpha: bool,
    pub summary: &'static str,
}

pub static TARGETS: &[Target] = &[
    Target {
        name: "apery",
        args: &["n"],
        takes_alpha: false,
        summary: "Apéry number A(n)",
    },
    Target {
        name: "apery-q",
        args: &["n"],
        takes_alpha: false,
        summary: "q-Apéry polynomial with weight q^{k^2}",
    },
    Target {
        name: "zheng",
        args: &["n"],
        takes_alpha: false,
        summary: "q-Apéry polynomial with weight q^{k(k-2n)}",
    },
    Target {
        name: "az",
        args: &["n"],
        takes_alpha: false,
        summary: "Almkvist-Zudilin number Z(n)",
    },
    Target {
        name: "qbinom",
        args: &["n", "k"],
        takes_alpha: false,
        summary: "Gaussian binomial C(n,k)_q",
    },
    Target {
        name: "cyclotomic",
        args: &["m"],
        takes_alpha: false,
        summary: "cyclotomic polynomial Phi_m(q)",
    },
    Target {
        name: "multivariate",
        args: &["n1", "n2", "n3", "n4"],
        takes_alpha: true,
        summary: "multivariate A(n); with --alpha the q-analog",
    },
    Target {
        name: "alpha",
        args: &[],
        takes_alpha: false,
        summary: "registered exponent functions",
    },
];

#[derive(Clone, Debug, PartialEq)]
pub enum Computed {
    Integer(BigInt),
    Poly(LaurentPoly),
    /// Rows of `name`, `formula`, `kind`.
    Alphas(Vec<[String; 3]>),
}

impl Computed {
    pub fn text(&self) -> String {
        match self {
            Computed::Integer(v) => v.to_string(),
            Computed::Poly(p) => p.to_string(),
            Computed::Alphas(rows) => rows
                .iter()
                .map(|[n, f, k]| format!("{n:<8} {f:<16} {k}"))
                .collect::<Vec<_>>()
                .join("\n"),
        }
    }

    pub fn json(&self, target: &str, args: &[u64]) -> Value {
        let mut out = json!({ "target": target, "args": args });
        match self {
            Computed::Integer(v) => out["value"] = json!(v.to_string()),
            Computed::Poly(p) => {
                out["value"] = json!(p.to_string());
                out["coefficients"] = serde_json::to_value(p).expect("polynomial serializes");
            }
            Computed::Alphas(rows) => {
                out["value"] = rows
                    .iter()
                    .map(|[n, f, k]| json!({ "name": n, "formula": f, "kind": k }))
                    .collect();
            }
        }
        out
    }
}

pub fn kind_label(kind: AlphaKind) -> &'static str {
    match kind {
        AlphaKind::Any => "any",
        AlphaKind::Multivariate => "multivariate",
        AlphaKind::Univariate => "univariate",
    }
}

fn parse_args(target: &Target, raw: &[String]) -> Result<Vec<u64>> {
    if raw.len() != target.args.len() {
        return Err(Error::BadArity {
            target: target.name.to_string(),
            expected: target.args.len(),
            got: raw.len(),
        });
    }
    raw.iter()
        .zip(target.args)
        .map(|(s, name)| {
            s.parse::<u64>()
                .map_err(|_| Error::BadParams(format!("{name} must be a nonnegative integer, got '{s}'")))
        })
        .collect()
}

/// Evaluates `target` on its arguments; returns the parsed arguments too.
pub fn compute(target: &str, raw: &[String], alpha: Option<&str>) -> Result<(Computed, Vec<u64>)> {
    let spec = TARGETS
        .iter()
        .find(|t| t.name == target)
        .ok_or_else(|| Error::UnknownTarget(target.to_string()))?;
    if alpha.is_some() && !spec.takes_alpha {
        return Err(Error::BadParams(format!("'{target}' takes no --alpha")));
    }
    let a = parse_args(spec, raw)?;
    let value = match target {
        "apery" => Computed::Integer(apery(a[0])),
        "apery-q" => Computed::Poly(apery_q_krz_binform(a[0])),
        "zheng" => Computed::Poly(apery_q_zheng(a[0])),
        "az" => Computed::Integer(almkvist_zudilin(a[0])?),
        "qbinom" => Computed::Poly(q_binomial(a[0] as i64, a[1] as i64)),
        "cyclotomic" => {
            if a[0] == 0 {
                return Err(Error::Precondition("cyclotomic needs m >= 1".into()));
            }
            Computed::Poly(cyclotomic(a[0]))
        }
        "multivariate" => {
            let n = IndexTuple::new(a[0], a[1], a[2], a[3]);
            match alpha {
                Some(name) => Computed::Poly(apery_q_multivariate(&n, &alpha_by_name(name)?)?),
                None => Computed::Integer(apery_multivariate(&n)),
            }
        }
        "alpha" => Computed::Alphas(
            alpha_registry()
                .iter()
                .map(|e| {
                    [
                        e.name().to_string(),
                        e.formula().to_string(),
                        kind_label(e.kind()).to_string(),
                    ]
                })
                .collect(),
        ),
        _ => unreachable!("target table and dispatch agree"),
    };
    Ok((value, a))
}
