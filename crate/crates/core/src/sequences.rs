//! Apéry-type sequences: classical, multivariate, diagonal oracles, their
//! q-analogs and correction terms, and the Almkvist-Zudilin numbers.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::cyclotomic::{cyclotomic, ResidueRing};
use crate::error::{Error, Result};
use crate::exact::{int, LaurentPoly, Rational, RationalFunction};
use crate::qcomb::{binomial, q_binomial, q_pochhammer, qbin_cyclotomic_support};

/// Largest total degree the diagonal oracles will expand.
pub const DIAGONAL_GUARD: u64 = 16;

/// `(n1, n2, n3, n4)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IndexTuple(pub [u64; 4]);

impl IndexTuple {
    pub fn new(n1: u64, n2: u64, n3: u64, n4: u64) -> Self {
        Self([n1, n2, n3, n4])
    }

    /// `(n, n, n, n)`.
    pub fn diagonal(n: u64) -> Self {
        Self([n; 4])
    }

    pub fn scaled(&self, m: u64) -> Self {
        Self(self.0.map(|x| x * m))
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn as_i64(&self) -> [i64; 4] {
        self.0.map(|x| x as i64)
    }

    /// `n1 n2 + n3 n4`.
    pub fn cross_weight(&self) -> u64 {
        self.0[0] * self.0[1] + self.0[2] * self.0[3]
    }

    /// Every tuple with entries in `0..=max`, in lexicographic order.
    pub fn all_up_to(max: u64) -> Vec<Self> {
        let r = 0..=max;
        let mut out = Vec::new();
        for a in r.clone() {
            for b in r.clone() {
                for c in r.clone() {
                    for d in r.clone() {
                        out.push(Self([a, b, c, d]));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a},{b},{c},{d})")
    }
}

/// Which index vectors an exponent accepts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphaKind {
    /// Depends on `k` only, so it works for one index or four.
    Any,
    /// Needs `(n1, n2, n3, n4)`.
    Multivariate,
    /// Needs a single `n`.
    Univariate,
}

/// Exponent evaluator on index entries and summation variable `k`.
pub type AlphaFn = fn(&[i64], i64) -> i64;

/// An exponent `alpha(n, k)` with `alpha(m n, m k) = m^2 alpha(n, k)` and
/// `alpha(0, k) = k^2`, both checked by sampling when constructed.
#[derive(Clone)]
pub struct AlphaExponent {
    name: String,
    formula: String,
    kind: AlphaKind,
    eval: AlphaFn,
}

impl AlphaExponent {
    pub fn new(name: impl Into<String>, formula: impl Into<String>, kind: AlphaKind, eval: AlphaFn) -> Result<Self> {
        let alpha = Self {
            name: name.into(),
            formula: formula.into(),
            kind,
            eval,
        };
        alpha.validate()?;
        Ok(alpha)
    }

    fn arities(&self) -> &'static [usize] {
        match self.kind {
            AlphaKind::Any => &[1, 4],
            AlphaKind::Multivariate => &[4],
            AlphaKind::Univariate => &[1],
        }
    }

    fn violation(&self, detail: String) -> Error {
        Error::AlphaInvariant(self.name.clone(), detail)
    }

    fn validate(&self) -> Result<()> {
        for &arity in self.arities() {
            for k in -10..=10i64 {
                let zero = vec![0i64; arity];
                let v = (self.eval)(&zero, k);
                if v != k * k {
                    return Err(self.violation(format!("alpha(0, {k}) = {v}, expected {}", k * k)));
                }
            }
            let points = (0..7i64.pow(arity as u32)).map(|mut code| {
                let mut n = vec![0i64; arity];
                for slot in n.iter_mut() {
                    *slot = code % 7;
                    code /= 7;
                }
                n
            });
            for n in points {
                for k in -6..=6i64 {
                    let base = (self.eval)(&n, k);
                    for m in 1..=6i64 {
                        let scaled: Vec<i64> = n.iter().map(|x| m * x).collect();
                        let v = (self.eval)(&scaled, m * k);
                        if v != m * m * base {
                            return Err(
                                self.violation(format!("alpha({m}*{n:?}, {m}*{k}) = {v}, expected {}", m * m * base))
                            );
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn formula(&self) -> &str {
        &self.formula
    }

    pub fn kind(&self) -> AlphaKind {
        self.kind
    }

    pub fn eval_multivariate(&self, n: &IndexTuple, k: i64) -> Result<i64> {
        if self.kind == AlphaKind::Univariate {
            return Err(Error::BadParams(format!(
                "alpha '{}' takes a single index, not a 4-tuple",
                self.name
            )));
        }
        Ok((self.eval)(&n.as_i64(), k))
    }

    pub fn eval_univariate(&self, n: u64, k: i64) -> Result<i64> {
        if self.kind == AlphaKind::Multivariate {
            return Err(Error::BadParams(format!(
                "alpha '{}' takes a 4-tuple, not a single index",
                self.name
            )));
        }
        Ok((self.eval)(&[n as i64], k))
    }
}

impl fmt::Debug for AlphaExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlphaExponent({} = {})", self.name, self.formula)
    }
}

impl PartialEq for AlphaExponent {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

/// Built-in exponents, validated on first use.
pub fn alpha_registry() -> &'static [AlphaExponent] {
    static REGISTRY: OnceLock<Vec<AlphaExponent>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let built_in: [(&str, &str, AlphaKind, AlphaFn); 4] = [
            ("ksq", "k^2", AlphaKind::Any, |_, k| k * k),
            ("nonsym", "k(n2+n3+k)", AlphaKind::Multivariate, |n, k| {
                k * (n[1] + n[2] + k)
            }),
            ("krz", "(n-k)^2", AlphaKind::Univariate, |n, k| (n[0] - k) * (n[0] - k)),
            ("zheng", "k(k-2n)", AlphaKind::Univariate, |n, k| k * (k - 2 * n[0])),
        ];
        built_in
            .into_iter()
            .map(|(name, formula, kind, eval)| {
                AlphaExponent::new(name, formula, kind, eval).expect("built-in exponent is valid")
            })
            .collect()
    })
}

pub fn alpha_by_name(name: &str) -> Result<AlphaExponent> {
    alpha_registry()
        .iter()
        .find(|a| a.name == name)
        .cloned()
        .ok_or_else(|| Error::UnknownAlpha(name.to_string()))
}

/// Classical Apéry numbers `sum_k C(n,k)^2 C(n+k,k)^2`.
pub fn apery(n: u64) -> BigInt {
    apery_lambda_mu(n, 2, 2)
}

/// `sum_k C(n,k)^lambda C(n+k,k)^mu`.
pub fn apery_lambda_mu(n: u64, lambda: u32, mu: u32) -> BigInt {
    let n = n as i64;
    (0..=n)
        .map(|k| num_traits::pow(binomial(n, k), lambda as usize) * num_traits::pow(binomial(n + k, k), mu as usize))
        .sum()
}

/// `C(n1,k) C(n3,k) C(n1+n2-k, n1) C(n3+n4-k, n3)`.
pub fn multivariate_term(n: &IndexTuple, k: i64) -> BigInt {
    let [n1, n2, n3, n4] = n.as_i64();
    binomial(n1, k) * binomial(n3, k) * binomial(n1 + n2 - k, n1) * binomial(n3 + n4 - k, n3)
}

fn k_range(n: &IndexTuple) -> std::ops::RangeInclusive<i64> {
    0..=(n.0[0].min(n.0[2]) as i64)
}

pub fn apery_multivariate(n: &IndexTuple) -> BigInt {
    k_range(n).map(|k| multivariate_term(n, k)).sum()
}

/// Coefficient of `x^target` in `1 / (1 - u)` for a polynomial `u` without
/// constant term, given as `(exponent vector, coefficient)` pairs.
fn diagonal_coefficient(u: &[([u64; 4], i64)], target: &IndexTuple) -> Result<BigInt> {
    let degree = target.total();
    if degree > DIAGONAL_GUARD {
        return Err(Error::DegreeGuard {
            degree,
            guard: DIAGONAL_GUARD,
        });
    }
    let dims = target.0.map(|x| x as usize + 1);
    let index =
        |e: [u64; 4]| ((e[0] as usize * dims[1] + e[1] as usize) * dims[2] + e[2] as usize) * dims[3] + e[3] as usize;
    let mut table = vec![BigInt::zero(); dims.iter().product()];
    // c(e) = [e = 0] + sum_t u_t c(e - t), filled in lexicographic order
    for a in 0..dims[0] as u64 {
        for b in 0..dims[1] as u64 {
            for c in 0..dims[2] as u64 {
                for d in 0..dims[3] as u64 {
                    let e = [a, b, c, d];
                    let mut value = if e == [0; 4] { BigInt::one() } else { BigInt::zero() };
                    for (t, coeff) in u {
                        if t.iter().zip(&e).all(|(ti, ei)| ti <= ei) {
                            let prev = [e[0] - t[0], e[1] - t[1], e[2] - t[2], e[3] - t[3]];
                            value += &table[index(prev)] * coeff;
                        }
                    }
                    table[index(e)] = value;
                }
            }
        }
    }
    Ok(table[index(target.0)].clone())
}

/// Taylor coefficient of `x^n` in `1/((1-x1-x2)(1-x3-x4) - x1 x2 x3 x4)`.
pub fn apery_diagonal_oracle(n: &IndexTuple) -> Result<BigInt> {
    // 1 - u with u = x1+x2+x3+x4 - x1x3 - x1x4 - x2x3 - x2x4 + x1x2x3x4
    let u = [
        ([1, 0, 0, 0], 1),
        ([0, 1, 0, 0], 1),
        ([0, 0, 1, 0], 1),
        ([0, 0, 0, 1], 1),
        ([1, 0, 1, 0], -1),
        ([1, 0, 0, 1], -1),
        ([0, 1, 1, 0], -1),
        ([0, 1, 0, 1], -1),
        ([1, 1, 1, 1], 1),
    ];
    diagonal_coefficient(&u, n)
}

/// Coefficient of `(x1 x2 x3 x4)^n` in `1/(1 - (x1+x2+x3+x4) + 27 x1 x2 x3 x4)`.
pub fn az_diagonal_oracle(n: u64) -> Result<BigInt> {
    let u = [
        ([1, 0, 0, 0], 1),
        ([0, 1, 0, 0], 1),
        ([0, 0, 1, 0], 1),
        ([0, 0, 0, 1], 1),
        ([1, 1, 1, 1], -27),
    ];
    diagonal_coefficient(&u, &IndexTuple::diagonal(n))
}

fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Almkvist-Zudilin numbers `sum_k (-3)^{n-3k} (n+k)! / ((n-3k)! k!^4)`.
pub fn almkvist_zudilin(n: u64) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for k in 0..=n / 3 {
        let numer = factorial(n + k);
        let denom = factorial(n - 3 * k) * num_traits::pow(factorial(k), 4);
        let (quot, rem) = numer.div_rem(&denom);
        if !rem.is_zero() {
            return Err(Error::InexactDivision(format!(
                "({}+{k})! / (({}-3*{k})! {k}!^4)",
                n, n
            )));
        }
        total += num_traits::pow(BigInt::from(-3), (n - 3 * k) as usize) * quot;
    }
    Ok(total)
}

/// `sum_k q^{(n-k)^2} C(n,k)_q^2 C(n+k,k)_q^2`, the q-Apéry polynomial
/// normalized to start at `q^0`.
pub fn apery_q_krz_binform(n: u64) -> LaurentPoly {
    let n = n as i64;
    (0..=n)
        .map(|k| {
            let b = q_binomial(n, k) * q_binomial(n + k, k);
            b.pow(2).shift((n - k) * (n - k))
        })
        .sum()
}

/// `sum_k q^{k(k-2n)} C(n,k)_q^2 C(n+k,k)_q^2`.
pub fn apery_q_zheng(n: u64) -> LaurentPoly {
    let n = n as i64;
    (0..=n)
        .map(|k| {
            let b = q_binomial(n, k) * q_binomial(n + k, k);
            b.pow(2).shift(k * (k - 2 * n))
        })
        .sum()
}

/// `a_q(n,k) = q^{2k(k+1)-(n+k)(n+k+1)} C(n,k)_q^2 C(n+k,k)_q^2`.
pub fn krz_partial_fraction_coeff(n: u64, k: u64) -> Result<LaurentPoly> {
    if k > n {
        return Err(Error::Precondition(format!("needs k <= n, got n={n}, k={k}")));
    }
    let (n, k) = (n as i64, k as i64);
    let b = q_binomial(n, k) * q_binomial(n + k, k);
    Ok(b.pow(2).shift(2 * k * (k + 1) - (n + k) * (n + k + 1)))
}

/// `(q^-1; q^-1)_{n+k} / ((q^-1; q^-1)_k^2 (q; q)_{n-k})`, whose square is
/// `a_q(n,k)`.
pub fn krz_pochhammer_ratio(n: u64, k: u64) -> Result<RationalFunction> {
    if k > n {
        return Err(Error::Precondition(format!("needs k <= n, got n={n}, k={k}")));
    }
    let numer = q_pochhammer(-1, n + k, true);
    let denom = q_pochhammer(-1, k, true).pow(2) * q_pochhammer(1, n - k, false);
    RationalFunction::new(numer, denom)
}

/// `lim_{T -> q^-k} (1 - q^k T) (q^-n T; q)_n / (T; q)_{n+1}`, evaluated by
/// cancelling the vanishing factor of the denominator.
pub fn krz_pochhammer_limit(n: u64, k: u64) -> Result<RationalFunction> {
    if k > n {
        return Err(Error::Precondition(format!("needs k <= n, got n={n}, k={k}")));
    }
    let (n, k) = (n as i64, k as i64);
    let one = LaurentPoly::one();
    let numer: LaurentPoly = (0..n).map(|i| &one - &LaurentPoly::q_pow(i - n - k)).product();
    let denom: LaurentPoly = (0..=n)
        .filter(|&j| j != k)
        .map(|j| &one - &LaurentPoly::q_pow(j - k))
        .product();
    RationalFunction::new(numer, denom)
}

/// The sum with `lower` as the last binomial's lower index, 2 for `n3`
/// and 3 for `n4`.
fn multivariate_q_sum(n: &IndexTuple, alpha: &AlphaExponent, lower: usize) -> Result<LaurentPoly> {
    let [n1, n2, n3, n4] = n.as_i64();
    let lower = n.0[lower] as i64;
    let mut total = LaurentPoly::zero();
    for k in k_range(n) {
        let term = q_binomial(n1, k) * q_binomial(n3, k) * q_binomial(n1 + n2 - k, n1) * q_binomial(n3 + n4 - k, lower);
        total += term.shift(alpha.eval_multivariate(n, k)?);
    }
    Ok(total)
}

/// `sum_k q^{alpha(n,k)} C(n1,k)_q C(n3,k)_q C(n1+n2-k,n1)_q C(n3+n4-k,n3)_q`.
pub fn apery_q_multivariate(n: &IndexTuple, alpha: &AlphaExponent) -> Result<LaurentPoly> {
    multivariate_q_sum(n, alpha, 2)
}

/// The same sum with `C(n3+n4-k, n4)_q` as the last factor.
pub fn apery_q_multivariate_fourth_lower(n: &IndexTuple, alpha: &AlphaExponent) -> Result<LaurentPoly> {
    multivariate_q_sum(n, alpha, 3)
}

/// `(n1 n2 + n3 n4)/2 * A(n)`.
pub fn correction_r_multivariate(n: &IndexTuple) -> Rational {
    Rational::new(BigInt::from(n.cross_weight()) * apery_multivariate(n), BigInt::from(2))
}

fn check_lambda_mu(lambda: u32) -> Result<()> {
    if lambda < 2 {
        return Err(Error::Precondition(format!("needs lambda >= 2, got {lambda}")));
    }
    Ok(())
}

/// `sum_k q^{alpha(n,k)} C(n,k)_q^lambda C(n+k,k)_q^mu`.
pub fn apery_q_lambda_mu(n: u64, lambda: u32, mu: u32, alpha: &AlphaExponent) -> Result<LaurentPoly> {
    check_lambda_mu(lambda)?;
    let mut total = LaurentPoly::zero();
    for k in 0..=n as i64 {
        let term = q_binomial(n as i64, k).pow(lambda) * q_binomial(n as i64 + k, k).pow(mu);
        total += term.shift(alpha.eval_univariate(n, k)?);
    }
    Ok(total)
}

/// `c_{n,k}`: `n^2 + (mu-2) n k / 2` when `lambda = 2`, otherwise
/// `((lambda+mu) n - lambda k) k / 2`.
pub fn correction_weight(n: u64, k: u64, lambda: u32, mu: u32) -> Rational {
    let (n, k, lambda, mu) = (n as i64, k as i64, lambda as i64, mu as i64);
    let twice = if lambda == 2 {
        2 * n * n + (mu - 2) * n * k
    } else {
        ((lambda + mu) * n - lambda * k) * k
    };
    Rational::new(BigInt::from(twice), BigInt::from(2))
}

/// `sum_k c_{n,k} C(n,k)^lambda C(n+k,k)^mu`.
pub fn correction_r_lambda_mu(n: u64, lambda: u32, mu: u32) -> Result<Rational> {
    check_lambda_mu(lambda)?;
    Ok((0..=n)
        .map(|k| {
            let b = num_traits::pow(binomial(n as i64, k as i64), lambda as usize)
                * num_traits::pow(binomial((n + k) as i64, k as i64), mu as usize);
            correction_weight(n, k, lambda, mu) * int(b)
        })
        .sum())
}

/// q-binomials reduced into a fixed residue ring, built from the cyclotomic
/// factorization.
pub struct ResidueBinomials<'a> {
    ring: &'a ResidueRing,
    phi: HashMap<u64, LaurentPoly>,
    cache: HashMap<(u64, u64), LaurentPoly>,
}

impl<'a> ResidueBinomials<'a> {
    pub fn new(ring: &'a ResidueRing) -> Self {
        Self {
            ring,
            phi: HashMap::new(),
            cache: HashMap::new(),
        }
    }

    pub fn ring(&self) -> &ResidueRing {
        self.ring
    }

    /// `C(n,k)_q` reduced; zero outside `0 <= k <= n`.
    pub fn get(&mut self, n: i64, k: i64) -> LaurentPoly {
        if n < 0 || k < 0 || k > n {
            return LaurentPoly::zero();
        }
        let key = (n as u64, k.min(n - k) as u64);
        if let Some(v) = self.cache.get(&key) {
            return v.clone();
        }
        let mut acc = LaurentPoly::one();
        for d in qbin_cyclotomic_support(key.0, key.1).expect("k <= n") {
            let ring = self.ring;
            let factor = self.phi.entry(d).or_insert_with(|| ring.reduce(&cyclotomic(d)));
            acc = ring.mul(&acc, factor);
        }
        self.cache.insert(key, acc.clone());
        acc
    }
}

/// [`apery_q_krz_binform`] reduced into `ring`.
pub fn apery_q_krz_binform_mod(n: u64, ring: &ResidueRing) -> LaurentPoly {
    let mut binoms = ResidueBinomials::new(ring);
    let n = n as i64;
    let mut total = LaurentPoly::zero();
    for k in 0..=n {
        let b = ring.mul(&binoms.get(n, k), &binoms.get(n + k, k));
        let term = ring.product([&ring.mul(&b, &b), &ring.q_pow((n - k) * (n - k))]);
        total += term;
    }
    ring.reduce(&total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::Modulus;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(c)
    }

    fn ksq() -> AlphaExponent {
        alpha_by_name("ksq").unwrap()
    }

    #[test]
    fn classical_values() {
        let expected = [1, 5, 73, 1445, 33001, 819005];
        for (n, &v) in expected.iter().enumerate() {
            assert_eq!(apery(n as u64), BigInt::from(v));
        }
        assert_eq!(apery_multivariate(&IndexTuple::default()), BigInt::one());
        assert_eq!(apery_multivariate(&IndexTuple::diagonal(2)), BigInt::from(73));
        assert_eq!(apery_multivariate(&IndexTuple::new(1, 0, 1, 0)), BigInt::one());
    }

    #[test]
    fn diagonal_oracle_values() {
        assert_eq!(apery_diagonal_oracle(&IndexTuple::default()).unwrap(), BigInt::one());
        assert_eq!(
            apery_diagonal_oracle(&IndexTuple::diagonal(1)).unwrap(),
            BigInt::from(5)
        );
        let t = IndexTuple::new(2, 1, 1, 2);
        assert_eq!(apery_diagonal_oracle(&t).unwrap(), apery_multivariate(&t));
        assert!(matches!(
            apery_diagonal_oracle(&IndexTuple::new(5, 5, 5, 2)),
            Err(Error::DegreeGuard { degree: 17, .. })
        ));
    }

    #[test]
    fn diagonal_oracle_matches_sum() {
        for a in 0..=4u64 {
            for b in 0..=4u64 {
                for c in 0..=4u64 {
                    for d in 0..=4u64 {
                        let t = IndexTuple::new(a, b, c, d);
                        if t.total() <= 10 {
                            assert_eq!(apery_diagonal_oracle(&t).unwrap(), apery_multivariate(&t), "{t}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn almkvist_zudilin_values() {
        assert_eq!(almkvist_zudilin(0).unwrap(), BigInt::one());
        assert_eq!(almkvist_zudilin(1).unwrap(), BigInt::from(-3));
        assert_eq!(almkvist_zudilin(3).unwrap(), BigInt::from(-3));
        for n in 0..=3 {
            assert_eq!(az_diagonal_oracle(n).unwrap(), almkvist_zudilin(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn q_apery_forms() {
        assert_eq!(apery_q_krz_binform(0), LaurentPoly::one());
        assert_eq!(apery_q_krz_binform(1), p(&[1, 3, 1]));
        assert_eq!(apery_q_krz_binform(2).eval_at(&int(1)).unwrap(), int(73));
        assert_eq!(apery_q_zheng(0), LaurentPoly::one());
        assert_eq!(apery_q_zheng(1), p(&[1, 3, 1]).shift(-1));
        for n in 0..=8u64 {
            let bin = apery_q_krz_binform(n);
            assert_eq!(bin.eval_at(&int(1)).unwrap(), int(apery(n)));
            assert_eq!(apery_q_zheng(n), bin.shift(-((n * n) as i64)));
            let d = 2 * (n * n) as i64;
            assert_eq!(bin.max_deg(), Some(d));
            assert_eq!(bin.reciprocal_reflect(d), bin);
        }
    }

    #[test]
    fn partial_fraction_chain() {
        assert_eq!(krz_partial_fraction_coeff(0, 0).unwrap(), LaurentPoly::one());
        assert_eq!(krz_partial_fraction_coeff(1, 1).unwrap(), p(&[1, 2, 1]).shift(-2));
        assert!(krz_partial_fraction_coeff(1, 2).is_err());
        for n in 0..=6u64 {
            let mut sum = LaurentPoly::zero();
            for k in 0..=n {
                let a = krz_partial_fraction_coeff(n, k).unwrap();
                let ratio = krz_pochhammer_ratio(n, k).unwrap();
                assert_eq!(RationalFunction::from_poly(a.clone()), &ratio * &ratio, "n={n}, k={k}");
                assert_eq!(krz_pochhammer_limit(n, k).unwrap(), ratio, "n={n}, k={k}");
                sum += a.shift(-(k as i64));
            }
            assert_eq!(sum.shift((n * (2 * n + 1)) as i64), apery_q_krz_binform(n));
        }
    }

    #[test]
    fn alpha_registry_contents() {
        let names: Vec<&str> = alpha_registry().iter().map(|a| a.name()).collect();
        assert_eq!(names, ["ksq", "nonsym", "krz", "zheng"]);
        assert!(matches!(alpha_by_name("cube"), Err(Error::UnknownAlpha(_))));
        let bad = AlphaExponent::new("shifted", "k^2+1", AlphaKind::Any, |_, k| k * k + 1);
        assert!(matches!(bad, Err(Error::AlphaInvariant(..))));
        let not_homogeneous = AlphaExponent::new("linear", "k^2+n", AlphaKind::Univariate, |n, k| k * k + n[0]);
        assert!(matches!(not_homogeneous, Err(Error::AlphaInvariant(..))));
        let krz = alpha_by_name("krz").unwrap();
        assert!(krz.eval_multivariate(&IndexTuple::default(), 0).is_err());
        let nonsym = alpha_by_name("nonsym").unwrap();
        assert!(nonsym.eval_univariate(1, 0).is_err());
    }

    #[test]
    fn multivariate_q_values() {
        for alpha in [ksq(), alpha_by_name("nonsym").unwrap()] {
            assert_eq!(
                apery_q_multivariate(&IndexTuple::default(), &alpha).unwrap(),
                LaurentPoly::one()
            );
        }
        for n in 0..=4u64 {
            let diag = apery_q_multivariate(&IndexTuple::diagonal(n), &ksq()).unwrap();
            assert_eq!(diag, apery_q_krz_binform(n), "n = {n}");
            if n <= 3 {
                let d = 2 * (n * n) as i64;
                assert_eq!(diag.reciprocal_reflect(d), diag);
            }
        }
        assert_eq!(correction_r_multivariate(&IndexTuple::default()), int(0));
        assert_eq!(correction_r_multivariate(&IndexTuple::diagonal(1)), int(5));
        assert_eq!(correction_r_multivariate(&IndexTuple::diagonal(2)), int(292));
    }

    #[test]
    fn lambda_mu_values() {
        let krz = alpha_by_name("krz").unwrap();
        assert_eq!(apery_q_lambda_mu(2, 2, 0, &ksq()).unwrap(), p(&[1, 1, 2, 1, 1]));
        assert_eq!(apery_q_lambda_mu(1, 2, 2, &krz).unwrap(), p(&[1, 3, 1]));
        for n in 0..=5 {
            assert_eq!(apery_q_lambda_mu(n, 2, 2, &krz).unwrap(), apery_q_krz_binform(n));
        }
        for n in 0..=10u64 {
            assert_eq!(
                apery_q_lambda_mu(n, 2, 0, &ksq()).unwrap(),
                q_binomial(2 * n as i64, n as i64)
            );
        }
        for (l, m) in [(2, 0), (3, 1), (4, 2)] {
            assert_eq!(apery_q_lambda_mu(0, l, m, &ksq()).unwrap(), LaurentPoly::one());
            assert_eq!(correction_r_lambda_mu(0, l, m).unwrap(), int(0));
        }
        assert!(apery_q_lambda_mu(1, 1, 0, &ksq()).is_err());
        assert_eq!(correction_r_lambda_mu(1, 2, 2).unwrap(), int(5));
        for n in 0..=8u64 {
            assert_eq!(correction_r_lambda_mu(n, 2, 2).unwrap(), int(apery(n) * (n * n)));
            assert_eq!(
                correction_r_lambda_mu(n, 2, 0).unwrap(),
                rat((n * n) as i64, 2) * int(binomial(2 * n as i64, n as i64))
            );
        }
    }

    #[test]
    fn residue_binform_matches_direct() {
        for (m, n) in [(2u64, 2u64), (3, 2), (5, 1), (4, 3)] {
            let ring = ResidueRing::new(Modulus::new(m, 3));
            assert_eq!(apery_q_krz_binform_mod(n, &ring), ring.reduce(&apery_q_krz_binform(n)));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn q_one_specializations(a in 0u64..=3, b in 0u64..=3, c in 0u64..=3, d in 0u64..=3) {
            let t = IndexTuple::new(a, b, c, d);
            for alpha in [ksq(), alpha_by_name("nonsym").unwrap()] {
                let v = apery_q_multivariate(&t, &alpha).unwrap();
                prop_assert_eq!(v.eval_at(&int(1)).unwrap(), int(apery_multivariate(&t)));
            }
        }
    }
}
