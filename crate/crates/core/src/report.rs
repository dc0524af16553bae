//! Outcome records for theorem checks.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::cyclotomic::{reduce_mod, Modulus};
use crate::exact::{int, LaurentPoly, Rational, RationalFunction};

pub const IDENTITY: &str = "identity";

/// Result of one parameterized check.
#[derive(Clone, Debug)]
pub struct CongruenceReport {
    pub check_name: String,
    pub parameters: BTreeMap<String, i64>,
    /// `Phi(m)^k`, `identity`, or an integer modulus such as `125`.
    pub modulus: String,
    pub holds: bool,
    /// Value at `q = 1` of the (shift dependent) residue; 0 when the check holds.
    pub residue_at_one: Rational,
    /// Lowest nonzero term of the residue, for diagnosing failures.
    pub first_nonzero: Option<(i64, Rational)>,
    pub elapsed: Duration,
}

impl CongruenceReport {
    /// Equality of everything except timing.
    pub fn same_outcome(&self, other: &Self) -> bool {
        self.check_name == other.check_name
            && self.parameters == other.parameters
            && self.modulus == other.modulus
            && self.holds == other.holds
            && self.residue_at_one == other.residue_at_one
            && self.first_nonzero == other.first_nonzero
    }

    pub fn param(&self, key: &str) -> Option<i64> {
        self.parameters.get(key).copied()
    }

    /// `name(k=v, ...)`.
    pub fn describe(&self) -> String {
        let params: Vec<String> = self.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("{}({})", self.check_name, params.join(", "))
    }
}

impl Serialize for CongruenceReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("check", &self.check_name)?;
        map.serialize_entry("params", &self.parameters)?;
        map.serialize_entry("modulus", &self.modulus)?;
        map.serialize_entry("holds", &self.holds)?;
        map.serialize_entry("residue_at_one", &self.residue_at_one.to_string())?;
        map.serialize_entry("elapsed_ms", &(self.elapsed.as_millis() as u64))?;
        if let Some((e, c)) = &self.first_nonzero {
            map.serialize_entry(
                "first_nonzero",
                &serde_json::json!({ "exponent": e, "coefficient": c.to_string() }),
            )?;
        }
        map.end()
    }
}

/// Outcome of a single comparison inside a check.
#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub holds: bool,
    pub residue_at_one: Rational,
    pub first_nonzero: Option<(i64, Rational)>,
}

impl Verdict {
    pub fn pass() -> Self {
        Self {
            holds: true,
            residue_at_one: Rational::zero(),
            first_nonzero: None,
        }
    }

    fn fail(residue_at_one: Rational, first_nonzero: Option<(i64, Rational)>) -> Self {
        Self {
            holds: false,
            residue_at_one,
            first_nonzero,
        }
    }

    /// `diff = 0` modulo the given cyclotomic power.
    pub fn congruence(diff: &LaurentPoly, modulus: &Modulus) -> Self {
        let r = reduce_mod(diff, modulus);
        if r.is_zero() {
            Self::pass()
        } else {
            Self::fail(r.value_at_one(), r.first_nonzero())
        }
    }

    /// `lhs = rhs (mod modulus)`.
    pub fn congruent(lhs: &LaurentPoly, rhs: &LaurentPoly, modulus: &Modulus) -> Self {
        Self::congruence(&(lhs - rhs), modulus)
    }

    /// `diff = 0` exactly.
    pub fn identity(diff: &LaurentPoly) -> Self {
        if diff.is_zero() {
            Self::pass()
        } else {
            let at_one = diff.eval_at(&int(1)).unwrap_or_else(|_| Rational::zero());
            Self::fail(at_one, diff.terms().next().map(|(e, c)| (e, c.clone())))
        }
    }

    pub fn equal(lhs: &LaurentPoly, rhs: &LaurentPoly) -> Self {
        Self::identity(&(lhs - rhs))
    }

    /// `diff` is the zero rational function.
    pub fn zero_ratfun(diff: &RationalFunction) -> Self {
        if diff.is_zero() {
            return Self::pass();
        }
        let one = int(1);
        let den = diff.denom().eval_at(&one).unwrap_or_else(|_| Rational::zero());
        let at_one = if den.is_zero() {
            Rational::zero()
        } else {
            diff.numer().eval_at(&one).unwrap_or_else(|_| Rational::zero()) / den
        };
        Self::fail(at_one, diff.numer().terms().next().map(|(e, c)| (e, c.clone())))
    }

    /// `diff = 0` exactly, over the rationals.
    pub fn rational_zero(diff: &Rational) -> Self {
        if diff.is_zero() {
            Self::pass()
        } else {
            Self::fail(diff.clone(), None)
        }
    }

    /// `modulus | diff` over the integers.
    pub fn divisible(diff: &BigInt, modulus: &BigInt) -> Self {
        let r = diff.mod_floor(modulus);
        if r.is_zero() {
            Self::pass()
        } else {
            Self::fail(int(r), None)
        }
    }

    pub fn from_bool(holds: bool) -> Self {
        if holds {
            Self::pass()
        } else {
            Self::fail(Rational::one(), None)
        }
    }
}

/// Accumulates verdicts for one check and stamps the elapsed time.
#[derive(Debug)]
pub struct ReportBuilder {
    check_name: String,
    parameters: BTreeMap<String, i64>,
    modulus: String,
    started: Instant,
    verdicts: Vec<Verdict>,
}

impl ReportBuilder {
    pub fn new(check_name: impl Into<String>, modulus: impl Into<String>) -> Self {
        Self {
            check_name: check_name.into(),
            parameters: BTreeMap::new(),
            modulus: modulus.into(),
            started: Instant::now(),
            verdicts: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl TryInto<i64>) -> Self {
        let value = value.try_into().unwrap_or(i64::MAX);
        self.parameters.insert(key.to_string(), value);
        self
    }

    pub fn push(&mut self, verdict: Verdict) -> bool {
        let holds = verdict.holds;
        self.verdicts.push(verdict);
        holds
    }

    pub fn finish(self) -> CongruenceReport {
        let failing = self.verdicts.iter().find(|v| !v.holds);
        let (holds, residue_at_one, first_nonzero) = match failing {
            None => (true, Rational::zero(), None),
            Some(v) => (false, v.residue_at_one.clone(), v.first_nonzero.clone()),
        };
        CongruenceReport {
            check_name: self.check_name,
            parameters: self.parameters,
            modulus: self.modulus,
            holds,
            residue_at_one,
            first_nonzero,
            elapsed: self.started.elapsed(),
        }
    }
}
