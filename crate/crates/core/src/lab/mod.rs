//! Named, parameterized checks. Each returns a [`CongruenceReport`].

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::{rat, LaurentPoly, Rational};
use crate::qcomb;
use crate::report::CongruenceReport;
use crate::sequences::{alpha_by_name, AlphaExponent, IndexTuple};

pub mod apery;
pub mod binomial;
pub mod classical;
pub mod harmonic;
pub mod oracles;

/// Integer parameters plus an optional exponent name.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckArgs {
    pub values: BTreeMap<String, i64>,
    pub alpha: Option<String>,
}

impl CheckArgs {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: i64) -> Self {
        self.values.insert(key.to_string(), value);
        self
    }

    pub fn with_alpha(mut self, alpha: &str) -> Self {
        self.alpha = Some(alpha.to_string());
        self
    }

    pub fn int(&self, key: &str) -> Result<i64> {
        self.values
            .get(key)
            .copied()
            .ok_or_else(|| Error::BadParams(format!("missing parameter --{key}")))
    }

    pub fn nonneg(&self, key: &str) -> Result<u64> {
        let v = self.int(key)?;
        u64::try_from(v).map_err(|_| Error::BadParams(format!("--{key} must be nonnegative, got {v}")))
    }

    pub fn small(&self, key: &str) -> Result<u32> {
        let v = self.nonneg(key)?;
        u32::try_from(v).map_err(|_| Error::BadParams(format!("--{key} is too large: {v}")))
    }

    pub fn positive(&self, key: &str) -> Result<u64> {
        let v = self.nonneg(key)?;
        if v == 0 {
            return Err(Error::Precondition(format!("--{key} must be positive")));
        }
        Ok(v)
    }

    pub fn tuple(&self) -> Result<IndexTuple> {
        Ok(IndexTuple::new(
            self.nonneg("n1")?,
            self.nonneg("n2")?,
            self.nonneg("n3")?,
            self.nonneg("n4")?,
        ))
    }

    /// The named exponent, or `k^2` when none was given.
    pub fn alpha_or_default(&self) -> Result<AlphaExponent> {
        alpha_by_name(self.alpha.as_deref().unwrap_or("ksq"))
    }
}

/// A registered check.
pub struct CheckInfo {
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub takes_alpha: bool,
    pub summary: &'static str,
    run: fn(&CheckArgs) -> Result<CongruenceReport>,
}

impl std::fmt::Debug for CheckInfo {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CheckInfo({})", self.name)
    }
}

const TUPLE: &[&str] = &["m", "n1", "n2", "n3", "n4"];

pub static CHECKS: &[CheckInfo] = &[
    CheckInfo {
        name: "ljunggren",
        params: &["n", "a", "b"],
        takes_alpha: false,
        summary: "C(an,bn)_q vs C(a,b)_{q^{n^2}} with second-order correction, mod Phi(n)^3",
        run: |a| binomial::check_ljunggren_q(a.nonneg("n")?, a.nonneg("a")?, a.nonneg("b")?),
    },
    CheckInfo {
        name: "wolstenholme-q",
        params: &["n"],
        takes_alpha: false,
        summary: "C(2n,n)_q in both closed forms and via harmonic sums, mod Phi(n)^3",
        run: |a| binomial::check_wolstenholme_q(a.nonneg("n")?),
    },
    CheckInfo {
        name: "sp1",
        params: &["n"],
        takes_alpha: false,
        summary: "sum 1/[i]_q, mod Phi(n)^2",
        run: |a| harmonic::check_harmonic_sp(a.nonneg("n")?, harmonic::HarmonicSum::Reciprocals),
    },
    CheckInfo {
        name: "sp2",
        params: &["n"],
        takes_alpha: false,
        summary: "sum 1/[i]_q^2, mod Phi(n)",
        run: |a| harmonic::check_harmonic_sp(a.nonneg("n")?, harmonic::HarmonicSum::Squares),
    },
    CheckInfo {
        name: "sp3",
        params: &["n"],
        takes_alpha: false,
        summary: "sum_{i<j} 1/([i]_q [j]_q), mod Phi(n)",
        run: |a| harmonic::check_harmonic_sp(a.nonneg("n")?, harmonic::HarmonicSum::Pairs),
    },
    CheckInfo {
        name: "lucas",
        params: &["n", "a", "b", "r", "s"],
        takes_alpha: false,
        summary: "C(an+b, rn+s)_q vs C(a,r) C(b,s)_q, mod Phi(n)",
        run: |a| {
            qcomb::check_q_lucas(
                a.nonneg("n")?,
                a.nonneg("a")?,
                a.nonneg("b")?,
                a.nonneg("r")?,
                a.nonneg("s")?,
            )
        },
    },
    CheckInfo {
        name: "chu-vandermonde",
        params: &["a", "b", "n"],
        takes_alpha: false,
        summary: "C(an,bn)_q as a sum over compositions, exactly",
        run: |a| qcomb::check_q_chu_vandermonde(a.nonneg("a")?, a.nonneg("b")?, a.nonneg("n")?),
    },
    CheckInfo {
        name: "qbin-prop",
        params: &["m", "n", "k", "j"],
        takes_alpha: false,
        summary: "C(mn, mk+j)_q for 0 < j < m, mod Phi(m)^2",
        run: |a| binomial::check_qbin_prop(a.nonneg("m")?, a.nonneg("n")?, a.nonneg("k")?, a.nonneg("j")?),
    },
    CheckInfo {
        name: "central-binomial",
        params: &["m", "n"],
        takes_alpha: false,
        summary: "C(2mn,mn)_q vs C(2n,n)_{q^{m^2}} with correction, mod Phi(m)^3",
        run: |a| binomial::check_central_binomial(a.nonneg("m")?, a.nonneg("n")?),
    },
    CheckInfo {
        name: "main",
        params: TUPLE,
        takes_alpha: true,
        summary: "multivariate q-Apery numbers at mn vs n, mod Phi(m)^3",
        run: |a| apery::check_main_theorem(a.positive("m")?, &a.tuple()?, &a.alpha_or_default()?),
    },
    CheckInfo {
        name: "s1s2",
        params: TUPLE,
        takes_alpha: true,
        summary: "the split into k = 0 and k != 0 (mod m) parts, each mod Phi(m)^3",
        run: |a| apery::check_s1_s2_decomposition(a.positive("m")?, &a.tuple()?, &a.alpha_or_default()?),
    },
    CheckInfo {
        name: "corollary",
        params: &["m", "n"],
        takes_alpha: false,
        summary: "q-Apery numbers A_q(mn) vs A_{q^{m^2}}(n), mod Phi(m)^3",
        run: |a| apery::check_corollary(a.positive("m")?, a.nonneg("n")?),
    },
    CheckInfo {
        name: "corollary-at-one",
        params: &["p", "n"],
        takes_alpha: false,
        summary: "the q-Apery congruence for prime p and its image A(pn) = A(n) mod p^3",
        run: |a| apery::check_corollary_at_one(a.nonneg("p")?, a.nonneg("n")?),
    },
    CheckInfo {
        name: "generalized",
        params: &["m", "n", "lambda", "mu"],
        takes_alpha: true,
        summary: "sum q^alpha C(n,k)_q^lambda C(n+k,k)_q^mu at mn vs n, mod Phi(m)^3",
        run: |a| {
            apery::check_generalized_theorem(
                a.positive("m")?,
                a.nonneg("n")?,
                a.small("lambda")?,
                a.small("mu")?,
                &a.alpha_or_default()?,
            )
        },
    },
    CheckInfo {
        name: "harmonic-identity",
        params: &["n"],
        takes_alpha: false,
        summary: "classical harmonic-sum identity for Apery summands, exactly",
        run: |a| harmonic::check_harmonic_identity_classical(a.nonneg("n")?),
    },
    CheckInfo {
        name: "zheng-identity",
        params: &["n"],
        takes_alpha: false,
        summary: "q-harmonic identity for the Zheng-normalized summands, exactly",
        run: |a| harmonic::check_zheng_identity(a.nonneg("n")?),
    },
    CheckInfo {
        name: "supercongruence-apery",
        params: &["p", "n"],
        takes_alpha: false,
        summary: "A(pn) = A(n) mod p^3",
        run: |a| classical::check_apery(a.nonneg("p")?, a.nonneg("n")?),
    },
    CheckInfo {
        name: "supercongruence-lambda-mu",
        params: &["p", "n", "lambda", "mu"],
        takes_alpha: false,
        summary: "sum C(n,k)^lambda C(n+k,k)^mu at pn vs n, mod p^3",
        run: |a| classical::check_lambda_mu(a.nonneg("p")?, a.nonneg("n")?, a.small("lambda")?, a.small("mu")?),
    },
    CheckInfo {
        name: "supercongruence-az",
        params: &["p", "n"],
        takes_alpha: false,
        summary: "Almkvist-Zudilin Z(pn) = Z(n) mod p^3",
        run: |a| classical::check_almkvist_zudilin(a.nonneg("p")?, a.nonneg("n")?),
    },
    CheckInfo {
        name: "krz-lemma",
        params: &["n"],
        takes_alpha: false,
        summary: "partial-fraction coefficients, Pochhammer ratio and the binomial-sum form",
        run: |a| apery::check_krz_lemma(a.nonneg("n")?),
    },
    CheckInfo {
        name: "pochhammer-transform",
        params: &["n"],
        takes_alpha: false,
        summary: "(q;q)_n = (-1)^n q^{n(n+1)/2} (1/q;1/q)_n",
        run: |a| oracles::check_pochhammer_transform(a.nonneg("n")?),
    },
    CheckInfo {
        name: "diagonal",
        params: &["n1", "n2", "n3", "n4"],
        takes_alpha: false,
        summary: "series coefficient of the rational function vs the binomial sum",
        run: |a| oracles::check_diagonal(&a.tuple()?),
    },
    CheckInfo {
        name: "az-diagonal",
        params: &["n"],
        takes_alpha: false,
        summary: "diagonal coefficient of the Almkvist-Zudilin rational function vs Z(n)",
        run: |a| oracles::check_az_diagonal(a.nonneg("n")?),
    },
    CheckInfo {
        name: "qcommute-nonsym",
        params: &["n1", "n2", "n3", "n4"],
        takes_alpha: false,
        summary: "q-commuting coefficient extraction vs the k(n2+n3+k)-weighted sum",
        run: |a| oracles::check_qcommute(&a.tuple()?, oracles::ProductOrder::Nonsymmetric),
    },
    CheckInfo {
        name: "qcommute-sym",
        params: &["n1", "n2", "n3", "n4"],
        takes_alpha: false,
        summary: "q-commuting coefficient extraction vs the k^2-weighted sum",
        run: |a| oracles::check_qcommute(&a.tuple()?, oracles::ProductOrder::Symmetric),
    },
    CheckInfo {
        name: "lower-index-swap",
        params: &["n1", "n2", "n3", "n4"],
        takes_alpha: true,
        summary: "whether C(n3+n4-k, n4)_q may replace C(n3+n4-k, n3)_q in the multivariate sum",
        run: |a| oracles::check_lower_index_swap(&a.tuple()?, &a.alpha_or_default()?),
    },
    CheckInfo {
        name: "qbinom-methods",
        params: &["n", "k"],
        takes_alpha: false,
        summary: "factorial, Pascal and cyclotomic q-binomials agree",
        run: |a| qcomb::check_qbinom_methods(a.nonneg("n")?, a.nonneg("k")?),
    },
    CheckInfo {
        name: "qbin-support",
        params: &["n", "k"],
        takes_alpha: false,
        summary: "the cyclotomic support set rebuilds the q-binomial",
        run: |a| qcomb::check_qbin_support(a.nonneg("n")?, a.nonneg("k")?),
    },
];

pub fn check_info(name: &str) -> Result<&'static CheckInfo> {
    CHECKS
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownCheck(name.to_string()))
}

/// Runs one instance after validating the parameter names.
pub fn run_check(name: &str, args: &CheckArgs) -> Result<CongruenceReport> {
    let info = check_info(name)?;
    if let Some(extra) = args.values.keys().find(|k| !info.params.contains(&k.as_str())) {
        return Err(Error::BadParams(format!(
            "'{name}' takes {}, not --{extra}",
            info.params
                .iter()
                .map(|p| format!("--{p}"))
                .collect::<Vec<_>>()
                .join(" ")
        )));
    }
    if args.alpha.is_some() && !info.takes_alpha {
        return Err(Error::BadParams(format!("'{name}' takes no --alpha")));
    }
    (info.run)(args)
}

/// `(m^2 - 1)/12 * (q^m - 1)^2 * weight`.
pub(crate) fn second_order_correction(m: u64, weight: &Rational) -> LaurentPoly {
    let m2 = (m * m) as i64;
    let q_m_minus_one = &LaurentPoly::q_pow(m as i64) - &LaurentPoly::one();
    q_m_minus_one.pow(2).scale(&(rat(m2 - 1, 12) * weight))
}

/// Check name with the exponent appended, e.g. `main[alpha=ksq]`.
pub(crate) fn with_alpha(name: &str, alpha: &AlphaExponent) -> String {
    format!("{name}[alpha={}]", alpha.name())
}
