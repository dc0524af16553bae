//! q-integers, q-factorials, q-binomials, q-Pochhammer symbols and
//! q-harmonic numbers, with checks of q-Lucas and q-Chu-Vandermonde.

use std::collections::{BTreeSet, HashMap};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cyclotomic::{cyclotomic, divisors, Modulus};
use crate::error::{Error, Result};
use crate::exact::{int, LaurentPoly, RationalFunction};
use crate::report::{CongruenceReport, ReportBuilder, Verdict, IDENTITY};

/// How a q-binomial is computed. All three agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QBinomialMethod {
    /// `[n]! / ([k]! [n-k]!)` by exact division.
    Factorial,
    /// `C(n,k) = C(n-1,k-1) + q^k C(n-1,k)`.
    Pascal,
    /// Product of `Phi_d` over the support set.
    CyclotomicFactorization,
}

impl QBinomialMethod {
    pub const ALL: [QBinomialMethod; 3] = [
        QBinomialMethod::Factorial,
        QBinomialMethod::Pascal,
        QBinomialMethod::CyclotomicFactorization,
    ];
}

/// `[n]_q = 1 + q + ... + q^{n-1}`.
pub fn q_integer(n: u64) -> LaurentPoly {
    LaurentPoly::from_terms((0..n as i64).map(|e| (e, int(1))))
}

pub fn q_factorial(n: u64) -> LaurentPoly {
    (1..=n).map(q_integer).product()
}

/// Ordinary binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `{d in 2..=n : floor(n/d) - floor(k/d) - floor((n-k)/d) = 1}`; the
/// q-binomial is the product of `Phi_d` over this set.
pub fn qbin_cyclotomic_support(n: u64, k: u64) -> Result<BTreeSet<u64>> {
    if k > n {
        return Err(Error::Precondition(format!("support needs k <= n, got ({n}, {k})")));
    }
    Ok((2..=n).filter(|d| n / d - k / d - (n - k) / d == 1).collect())
}

/// Row `n` of the q-Pascal triangle.
pub fn pascal_row(n: u64) -> Vec<LaurentPoly> {
    let mut row = vec![LaurentPoly::one()];
    for m in 1..=n as usize {
        let mut next = Vec::with_capacity(m + 1);
        for k in 0..=m {
            let left = if k > 0 { row[k - 1].clone() } else { LaurentPoly::zero() };
            let right = if k < m {
                row[k].shift(k as i64)
            } else {
                LaurentPoly::zero()
            };
            next.push(left + right);
        }
        row = next;
    }
    row
}

/// Gaussian binomial by the chosen method; zero when `k < 0` or `k > n`.
pub fn q_binomial_with(n: u64, k: i64, method: QBinomialMethod) -> LaurentPoly {
    if k < 0 || k as u64 > n {
        return LaurentPoly::zero();
    }
    let k = k as u64;
    match method {
        QBinomialMethod::Factorial => q_factorial(n)
            .exact_div(&(q_factorial(k) * q_factorial(n - k)))
            .expect("q-factorials divide"),
        QBinomialMethod::Pascal => pascal_row(n).swap_remove(k as usize),
        QBinomialMethod::CyclotomicFactorization => qbin_cyclotomic_support(n, k)
            .expect("k <= n")
            .into_iter()
            .map(cyclotomic)
            .product(),
    }
}

fn qbin_cache() -> &'static RwLock<HashMap<(u64, u64), LaurentPoly>> {
    static CACHE: OnceLock<RwLock<HashMap<(u64, u64), LaurentPoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Memoized q-binomial, zero-extended to all integer arguments.
pub fn q_binomial(n: i64, k: i64) -> LaurentPoly {
    if n < 0 || k < 0 || k > n {
        return LaurentPoly::zero();
    }
    let key = (n as u64, k.min(n - k) as u64);
    if let Some(p) = qbin_cache().read().unwrap().get(&key) {
        return p.clone();
    }
    let p = q_binomial_with(key.0, key.1 as i64, QBinomialMethod::CyclotomicFactorization);
    qbin_cache().write().unwrap().insert(key, p.clone());
    p
}

/// `(q^a; q)_n`, or `(q^a; 1/q)_n` when `inverted_base` is set.
pub fn q_pochhammer(a_exponent: i64, n: u64, inverted_base: bool) -> LaurentPoly {
    let step = if inverted_base { -1 } else { 1 };
    (0..n as i64)
        .map(|i| &LaurentPoly::one() - &LaurentPoly::q_pow(a_exponent + step * i))
        .product()
}

/// `H_q(n) = sum_{k=1}^n 1/[k]_q`, or `H_{1/q}(n)` with
/// `1/[k]_{1/q} = q^{k-1}/[k]_q` when `inverted_base` is set.
pub fn q_harmonic(n: u64, inverted_base: bool) -> RationalFunction {
    if n == 0 {
        return RationalFunction::zero();
    }
    // common denominator lcm([1]..[n]) = prod_{2<=d<=n} Phi_d
    let common: LaurentPoly = (2..=n).map(cyclotomic).product();
    let mut numer = LaurentPoly::zero();
    for k in 1..=n {
        let cofactor: LaurentPoly = (2..=n).filter(|d| k % d != 0).map(cyclotomic).product();
        numer += if inverted_base {
            cofactor.shift(k as i64 - 1)
        } else {
            cofactor
        };
    }
    RationalFunction::new(numer, common).expect("denominator is nonzero")
}

/// q-Lucas: `C(an+b, rn+s)_q = C(a,r) C(b,s)_q (mod Phi_n)` for `b, s < n`.
pub fn check_q_lucas(n: u64, a: u64, b: u64, r: u64, s: u64) -> Result<CongruenceReport> {
    if n == 0 || b >= n || s >= n {
        return Err(Error::Precondition(format!(
            "q-Lucas needs b, s < n (n={n}, b={b}, s={s})"
        )));
    }
    let modulus = Modulus::new(n, 1);
    let mut report = ReportBuilder::new("lucas", modulus.label())
        .param("n", n)
        .param("a", a)
        .param("b", b)
        .param("r", r)
        .param("s", s);
    let lhs = q_binomial((a * n + b) as i64, (r * n + s) as i64);
    let rhs = q_binomial(b as i64, s as i64).scale(&int(binomial(a as i64, r as i64)));
    report.push(Verdict::congruent(&lhs, &rhs, &modulus));
    Ok(report.finish())
}

fn chu_vandermonde_sum(a: u64, b: u64, n: u64) -> LaurentPoly {
    fn go(i: u64, a: u64, n: u64, remaining: u64, parts: &mut Vec<u64>, binoms: &[LaurentPoly], out: &mut LaurentPoly) {
        if i == a {
            if remaining != 0 {
                return;
            }
            let linear: i64 = parts.iter().enumerate().map(|(idx, &c)| idx as i64 * c as i64).sum();
            let mut cross = 0i64;
            let mut prefix = 0i64;
            for &c in parts.iter() {
                cross += prefix * c as i64;
                prefix += c as i64;
            }
            let term: LaurentPoly = parts.iter().map(|&c| binoms[c as usize].clone()).product();
            *out += term.shift(n as i64 * linear - cross);
            return;
        }
        // parts still to place after this one can absorb at most (a - i - 1) * n
        let max_rest = (a - i - 1) * n;
        let lo = remaining.saturating_sub(max_rest);
        for c in lo..=remaining.min(n) {
            parts.push(c);
            go(i + 1, a, n, remaining - c, parts, binoms, out);
            parts.pop();
        }
    }

    let binoms: Vec<LaurentPoly> = (0..=n).map(|c| q_binomial(n as i64, c as i64)).collect();
    let mut out = LaurentPoly::zero();
    go(0, a, n, b * n, &mut Vec::new(), &binoms, &mut out);
    out
}

/// `C(an, bn)_q = sum_{c_1+...+c_a = bn} q^{n sum (i-1) c_i - sum_{i<j} c_i c_j}
/// prod C(n, c_i)_q`, checked as an exact identity.
pub fn check_q_chu_vandermonde(a: u64, b: u64, n: u64) -> Result<CongruenceReport> {
    if a < 2 || n == 0 || b > a {
        return Err(Error::Precondition(format!(
            "q-Chu-Vandermonde needs a >= 2, n >= 1, b <= a (a={a}, b={b}, n={n})"
        )));
    }
    let mut report = ReportBuilder::new("chu-vandermonde", IDENTITY)
        .param("a", a)
        .param("b", b)
        .param("n", n);
    let lhs = q_binomial((a * n) as i64, (b * n) as i64);
    report.push(Verdict::equal(&lhs, &chu_vandermonde_sum(a, b, n)));
    Ok(report.finish())
}

/// All three q-binomial methods agree at `(n, k)`.
pub fn check_qbinom_methods(n: u64, k: u64) -> Result<CongruenceReport> {
    if k > n {
        return Err(Error::Precondition(format!("needs k <= n, got ({n}, {k})")));
    }
    let mut report = ReportBuilder::new("qbinom-methods", IDENTITY)
        .param("n", n)
        .param("k", k);
    let pascal = q_binomial_with(n, k as i64, QBinomialMethod::Pascal);
    for method in [QBinomialMethod::Factorial, QBinomialMethod::CyclotomicFactorization] {
        report.push(Verdict::equal(&q_binomial_with(n, k as i64, method), &pascal));
    }
    Ok(report.finish())
}

/// The product of `Phi_d` over the support set rebuilds the Pascal q-binomial,
/// and every `d` in the set divides it.
pub fn check_qbin_support(n: u64, k: u64) -> Result<CongruenceReport> {
    let support = qbin_cyclotomic_support(n, k)?;
    let mut report = ReportBuilder::new("qbin-support", IDENTITY).param("n", n).param("k", k);
    let pascal = q_binomial_with(n, k as i64, QBinomialMethod::Pascal);
    let rebuilt: LaurentPoly = support.iter().map(|&d| cyclotomic(d)).product();
    report.push(Verdict::equal(&rebuilt, &pascal));
    // [n]_q = prod_{d | n, d > 1} Phi_d, the first step of the factorization
    let q_int: LaurentPoly = divisors(n.max(1))
        .into_iter()
        .filter(|&d| d > 1)
        .map(cyclotomic)
        .product();
    report.push(Verdict::equal(&q_int, &q_integer(n.max(1))));
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn p(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(c)
    }

    #[test]
    fn integers_and_factorials() {
        assert!(q_integer(0).is_zero());
        assert_eq!(q_integer(1), LaurentPoly::one());
        assert_eq!(q_integer(4), p(&[1, 1, 1, 1]));
        assert_eq!(q_factorial(0), LaurentPoly::one());
        assert_eq!(q_factorial(2), p(&[1, 1]));
        assert_eq!(q_factorial(3), p(&[1, 2, 2, 1]));
    }

    #[test]
    fn binomial_examples() {
        for method in QBinomialMethod::ALL {
            assert_eq!(q_binomial_with(2, 1, method), p(&[1, 1]));
            assert_eq!(q_binomial_with(4, 2, method), p(&[1, 1, 2, 1, 1]));
            assert!(q_binomial_with(5, 7, method).is_zero());
            assert!(q_binomial_with(5, -1, method).is_zero());
        }
        assert!(q_binomial(-1, 0).is_zero());
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(3, 5), BigInt::zero());
    }

    #[test]
    fn support_examples() {
        assert_eq!(qbin_cyclotomic_support(4, 2).unwrap(), BTreeSet::from([3, 4]));
        for n in 0..8 {
            assert!(qbin_cyclotomic_support(n, 0).unwrap().is_empty());
        }
        assert!(qbin_cyclotomic_support(5, 2).unwrap().contains(&5));
        assert!(qbin_cyclotomic_support(2, 3).is_err());
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(q_pochhammer(1, 0, false), LaurentPoly::one());
        assert_eq!(q_pochhammer(1, 2, false), p(&[1, -1]) * p(&[1, 0, -1]));
        for n in 0..=8u64 {
            let lhs = q_pochhammer(1, n, false);
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let rhs = q_pochhammer(-1, n, true)
                .shift((n * (n + 1) / 2) as i64)
                .scale(&int(sign));
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn harmonic_examples() {
        assert!(q_harmonic(0, false).is_zero());
        assert_eq!(q_harmonic(1, false), RationalFunction::one());
        assert_eq!(
            q_harmonic(2, false),
            RationalFunction::new(p(&[2, 1]), p(&[1, 1])).unwrap()
        );
        // oracle: term-by-term sums with normalization after each step
        for n in 0..=7u64 {
            for inverted in [false, true] {
                let mut expected = RationalFunction::zero();
                for k in 1..=n {
                    let term = RationalFunction::recip_of(q_integer(k)).unwrap();
                    let term = if inverted {
                        term.scale_poly(&LaurentPoly::q_pow(k as i64 - 1))
                    } else {
                        term
                    };
                    expected = expected + term;
                }
                assert_eq!(q_harmonic(n, inverted), expected, "n = {n}, inverted = {inverted}");
            }
        }
        // H_{1/q}(2) = 1 + q/(1+q)
        assert_eq!(
            q_harmonic(2, true),
            RationalFunction::new(p(&[1, 2]), p(&[1, 1])).unwrap()
        );
    }

    #[test]
    fn lucas_examples() {
        assert!(check_q_lucas(2, 2, 1, 1, 0).unwrap().holds);
        // oracle: C(5,2)_q at q = -1 is 2
        assert_eq!(q_binomial(5, 2).eval_at(&int(-1)).unwrap(), int(2));
        assert!(check_q_lucas(3, 1, 0, 1, 0).unwrap().holds);
        assert!(check_q_lucas(5, 2, 4, 1, 3).unwrap().holds);
        assert!(check_q_lucas(3, 1, 3, 0, 0).is_err());
    }

    #[test]
    fn chu_vandermonde_examples() {
        assert_eq!(chu_vandermonde_sum(2, 1, 1), p(&[1, 1]));
        assert_eq!(chu_vandermonde_sum(2, 1, 2), q_binomial(4, 2));
        assert_eq!(chu_vandermonde_sum(3, 1, 2), q_binomial(6, 2));
        assert!(check_q_chu_vandermonde(4, 2, 3).unwrap().holds);
        assert!(check_q_chu_vandermonde(1, 0, 3).is_err());
    }

    #[test]
    fn structural_identities() {
        for a in 1..=12u64 {
            for b in 1..=12u64 {
                // [ab]_q = [a]_{q^b} [b]_q
                assert_eq!(q_integer(a * b), q_integer(a).substitute_power(b) * q_integer(b));
                // [a+b]_q = [a]_q + q^a [b]_q
                assert_eq!(q_integer(a + b), q_integer(a) + q_integer(b).shift(a as i64));
            }
        }
        let _ = rat(1, 1);
    }
}
