//! Congruences for the q-Apéry families and the partial-fraction lemma.

use num_bigint::BigInt;
use num_traits::One;

use super::{second_order_correction, with_alpha};
use crate::cyclotomic::{inverse_mod, is_prime, Modulus, ResidueRing};
use crate::error::{Error, Result};
use crate::exact::{int, rat, LaurentPoly, Rational, RationalFunction};
use crate::qcomb::{q_binomial, q_integer};
use crate::report::{CongruenceReport, ReportBuilder, Verdict, IDENTITY};
use crate::sequences::{
    apery, apery_q_krz_binform, apery_q_krz_binform_mod, apery_q_lambda_mu, apery_q_multivariate, apery_q_zheng,
    correction_r_lambda_mu, correction_r_multivariate, krz_partial_fraction_coeff, krz_pochhammer_limit,
    krz_pochhammer_ratio, multivariate_term, AlphaExponent, IndexTuple,
};

fn tuple_report(name: String, modulus: &Modulus, n: &IndexTuple) -> ReportBuilder {
    let [n1, n2, n3, n4] = n.0;
    ReportBuilder::new(name, modulus.label())
        .param("m", modulus.index())
        .param("n1", n1)
        .param("n2", n2)
        .param("n3", n3)
        .param("n4", n4)
}

/// `A_q(mn) = A_{q^{m^2}}(n) - (m^2-1)/12 (q^m-1)^2 R(n) (mod Phi_m^3)` with
/// `R(n) = (n1 n2 + n3 n4)/2 A(n)`.
pub fn check_main_theorem(m: u64, n: &IndexTuple, alpha: &AlphaExponent) -> Result<CongruenceReport> {
    if m == 0 {
        return Err(Error::Precondition("main needs m >= 1".into()));
    }
    let modulus = Modulus::new(m, 3);
    let mut report = tuple_report(with_alpha("main", alpha), &modulus, n);
    let lhs = apery_q_multivariate(&n.scaled(m), alpha)?;
    let rhs = &apery_q_multivariate(n, alpha)?.substitute_power(m * m)
        - &second_order_correction(m, &correction_r_multivariate(n));
    report.push(Verdict::congruent(&lhs, &rhs, &modulus));
    Ok(report.finish())
}

/// `B_q(n; k)`, the `k`-th summand of the multivariate sum.
fn summand(n: &IndexTuple, k: i64, alpha: &AlphaExponent) -> Result<LaurentPoly> {
    let [n1, n2, n3, n4] = n.as_i64();
    let b = q_binomial(n1, k) * q_binomial(n3, k) * q_binomial(n1 + n2 - k, n1) * q_binomial(n3 + n4 - k, n3);
    Ok(b.shift(alpha.eval_multivariate(n, k)?))
}

/// The parts of `A_q(mn)` with `m | k` and with `m` not dividing `k`.
pub fn s1_s2_parts(m: u64, n: &IndexTuple, alpha: &AlphaExponent) -> Result<(LaurentPoly, LaurentPoly)> {
    let scaled = n.scaled(m);
    let mut s1 = LaurentPoly::zero();
    let mut s2 = LaurentPoly::zero();
    for k in 0..=(scaled.0[0].min(scaled.0[2]) as i64) {
        let term = summand(&scaled, k, alpha)?;
        if k % m as i64 == 0 {
            s1 += term;
        } else {
            s2 += term;
        }
    }
    Ok((s1, s2))
}

/// The proof's decomposition `A_q(mn) = S1 + S2`, exactly, together with
/// `S1 = A_{q^{m^2}}(n) - (m^2-1)/12 (q^m-1)^2 R1(n)`,
/// `S2 = -(m^2-1)/12 (q^m-1)^2 sum k^2 C(n;k)` (both mod `Phi_m^3`), the
/// intermediate form of `S2` built from `q^j/[j]_q^2`, and
/// `sum_{0<j<m} q^j/[j]_q^2 = -(m^2-1)/12 (q-1)^2 (mod Phi_m)`.
pub fn check_s1_s2_decomposition(m: u64, n: &IndexTuple, alpha: &AlphaExponent) -> Result<CongruenceReport> {
    if m == 0 {
        return Err(Error::Precondition("s1s2 needs m >= 1".into()));
    }
    let modulus = Modulus::new(m, 3);
    let mut report = tuple_report(with_alpha("s1s2", alpha), &modulus, n);
    let (s1, s2) = s1_s2_parts(m, n, alpha)?;
    report.push(Verdict::equal(
        &(&s1 + &s2),
        &apery_q_multivariate(&n.scaled(m), alpha)?,
    ));

    let half_cross = rat(n.cross_weight() as i64, 2);
    let ks = 0..=(n.0[0].min(n.0[2]) as i64);
    let r1: Rational = ks
        .clone()
        .map(|k| (half_cross.clone() - int(k * k)) * int(multivariate_term(n, k)))
        .sum();
    let k2_sum: Rational = ks.map(|k| int(k * k) * int(multivariate_term(n, k))).sum();

    let s1_rhs = &apery_q_multivariate(n, alpha)?.substitute_power(m * m) - &second_order_correction(m, &r1);
    report.push(Verdict::congruent(&s1, &s1_rhs, &modulus));
    report.push(Verdict::congruent(&s2, &-second_order_correction(m, &k2_sum), &modulus));

    // [m n1]_q [m n3]_q / (n1 n3) sum_j q^j/[j]_q^2 sum_k (k+1)^2 C(n; k+1)
    let mut inverse_sum = LaurentPoly::zero();
    for j in 1..m {
        let inv = inverse_mod(&q_integer(j), &modulus)?;
        inverse_sum += (&inv * &inv).shift(j as i64);
    }
    let [n1, _, n3, _] = n.0;
    if n1 * n3 == 0 {
        report.push(Verdict::identity(&s2));
    } else {
        let shifted: Rational = (1..=(n1.min(n3) as i64))
            .map(|k| int(k * k) * int(multivariate_term(n, k)))
            .sum();
        let prefactor = (q_integer(m * n1) * q_integer(m * n3)).scale(&rat(1, (n1 * n3) as i64));
        let intermediate = (prefactor * inverse_sum.clone()).scale(&shifted);
        report.push(Verdict::congruent(&s2, &intermediate, &modulus));
    }
    let phi = Modulus::new(m, 1);
    let d2 = LaurentPoly::from_coeffs(&[-1, 1]).pow(2);
    report.push(Verdict::congruent(
        &inverse_sum,
        &d2.scale(&rat(-((m * m) as i64 - 1), 12)),
        &phi,
    ));
    Ok(report.finish())
}

/// `A_q(mn) = A_{q^{m^2}}(n) - (m^2-1)/12 (q^m-1)^2 n^2 A(n) (mod Phi_m^3)`.
pub fn check_corollary(m: u64, n: u64) -> Result<CongruenceReport> {
    if m == 0 {
        return Err(Error::Precondition("corollary needs m >= 1".into()));
    }
    let modulus = Modulus::new(m, 3);
    let mut report = ReportBuilder::new("corollary", modulus.label())
        .param("m", m)
        .param("n", n);
    let lhs = apery_q_krz_binform(m * n);
    let weight = int(apery(n) * BigInt::from(n * n));
    let rhs = &apery_q_krz_binform(n).substitute_power(m * m) - &second_order_correction(m, &weight);
    report.push(Verdict::congruent(&lhs, &rhs, &modulus));
    Ok(report.finish())
}

/// For a prime `p >= 5`: the polynomial congruence of [`check_corollary`] at
/// `m = p`, computed in the quotient ring, and its value at `q = 1`,
/// `A(pn) = A(n) (mod p^3)`, checked over the integers.
pub fn check_corollary_at_one(p: u64, n: u64) -> Result<CongruenceReport> {
    if p < 5 || !is_prime(p) {
        return Err(Error::Precondition(format!(
            "corollary-at-one needs a prime p >= 5, got {p}"
        )));
    }
    let modulus = Modulus::new(p, 3);
    let mut report = ReportBuilder::new("corollary-at-one", modulus.label())
        .param("p", p)
        .param("n", n);
    let ring = ResidueRing::new(modulus.clone());
    let weight = int(apery(n) * BigInt::from(n * n));
    let correction = second_order_correction(p, &weight);
    report.push(Verdict::from_bool(correction.has_integer_coefficients()));
    let lifted = ring.reduce(&apery_q_krz_binform(n).substitute_power(p * p));
    let diff = &(&apery_q_krz_binform_mod(p * n, &ring) - &lifted) + &ring.reduce(&correction);
    report.push(Verdict::congruence(&ring.reduce(&diff), &modulus));
    let cube = BigInt::from(p).pow(3);
    report.push(Verdict::divisible(&(apery(p * n) - apery(n)), &cube));
    Ok(report.finish())
}

/// `A^{(l,u)}_q(mn) = A^{(l,u)}_{q^{m^2}}(n) - (m^2-1)/12 (q^m-1)^2 R^{(l,u)}(n) (mod Phi_m^3)`.
pub fn check_generalized_theorem(
    m: u64,
    n: u64,
    lambda: u32,
    mu: u32,
    alpha: &AlphaExponent,
) -> Result<CongruenceReport> {
    if m == 0 || lambda < 2 {
        return Err(Error::Precondition(format!(
            "generalized needs m >= 1 and lambda >= 2, got m={m}, lambda={lambda}"
        )));
    }
    let modulus = Modulus::new(m, 3);
    let mut report = ReportBuilder::new(with_alpha("generalized", alpha), modulus.label())
        .param("m", m)
        .param("n", n)
        .param("lambda", lambda)
        .param("mu", mu);
    let lhs = apery_q_lambda_mu(m * n, lambda, mu, alpha)?;
    let rhs = &apery_q_lambda_mu(n, lambda, mu, alpha)?.substitute_power(m * m)
        - &second_order_correction(m, &correction_r_lambda_mu(n, lambda, mu)?);
    report.push(Verdict::congruent(&lhs, &rhs, &modulus));
    Ok(report.finish())
}

/// For every `0 <= k <= n`: the cancelled limit equals the Pochhammer ratio,
/// the ratio equals `(-1)^{n+k} q^{k(k+1) - (n+k)(n+k+1)/2} C(n,k)_q C(n+k,k)_q`,
/// and its square is `a_q(n,k)`. Then `q^{n(2n+1)} sum_k a_q(n,k) q^-k` is the
/// binomial-sum form, and the Zheng sum is that form times `q^{-n^2}`.
pub fn check_krz_lemma(n: u64) -> Result<CongruenceReport> {
    let mut report = ReportBuilder::new("krz-lemma", IDENTITY).param("n", n);
    let ni = n as i64;
    let mut sum = LaurentPoly::zero();
    for k in 0..=n {
        let ki = k as i64;
        let ratio = krz_pochhammer_ratio(n, k)?;
        report.push(Verdict::zero_ratfun(&(&krz_pochhammer_limit(n, k)? - &ratio)));
        let sign = if (ni + ki) % 2 == 0 { 1 } else { -1 };
        let signed = (q_binomial(ni, ki) * q_binomial(ni + ki, ki))
            .shift(ki * (ki + 1) - (ni + ki) * (ni + ki + 1) / 2)
            .scale(&int(sign));
        report.push(Verdict::zero_ratfun(&(&ratio - &RationalFunction::from_poly(signed))));
        let a = krz_partial_fraction_coeff(n, k)?;
        report.push(Verdict::zero_ratfun(
            &(&(&ratio * &ratio) - &RationalFunction::from_poly(a.clone())),
        ));
        sum += a.shift(-ki);
    }
    let binform = apery_q_krz_binform(n);
    report.push(Verdict::equal(&sum.shift(ni * (2 * ni + 1)), &binform));
    report.push(Verdict::equal(&apery_q_zheng(n), &binform.shift(-ni * ni)));
    report.push(Verdict::rational_zero(
        &(binform.eval_at(&Rational::one())? - int(apery(n))),
    ));
    Ok(report.finish())
}
