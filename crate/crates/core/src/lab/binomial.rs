//! q-binomial congruences: Ljunggren, Wolstenholme, the `mk + j` proposition
//! and the central-binomial case.

use num_bigint::BigInt;

use super::second_order_correction;
use crate::cyclotomic::{inverse_mod, Modulus};
use crate::error::{Error, Result};
use crate::exact::{int, rat, LaurentPoly, Rational};
use crate::qcomb::{binomial, q_binomial, q_integer};
use crate::report::{CongruenceReport, ReportBuilder, Verdict};

/// `C(an, bn)_q = C(a,b)_{q^{n^2}} - (a-b) b C(a,b) (n^2-1)/24 (q^n-1)^2 (mod Phi_n^3)`.
///
/// Also checks the weaker statement mod `Phi_n^2` and the intermediate form
/// `C(a,b)_{q^{n^2}} + (a-b)b/2 C(a,b) [C(2n,n)_q - [2]_{q^{n^2}}]`.
pub fn check_ljunggren_q(n: u64, a: u64, b: u64) -> Result<CongruenceReport> {
    if n == 0 {
        return Err(Error::Precondition("ljunggren needs n >= 1".into()));
    }
    let modulus = Modulus::new(n, 3);
    let mut report = ReportBuilder::new("ljunggren", modulus.label())
        .param("n", n)
        .param("a", a)
        .param("b", b);
    let (ai, bi, ni) = (a as i64, b as i64, n as i64);
    let lhs = q_binomial(ai * ni, bi * ni);
    let lifted = q_binomial(ai, bi).substitute_power(n * n);
    let classical = binomial(ai, bi);
    let weight = int((ai - bi) * bi) * int(classical.clone());
    // (n^2-1)/24 = (1/2) (n^2-1)/12
    let rhs = &lifted - &second_order_correction(n, &(weight.clone() * rat(1, 2)));
    report.push(Verdict::congruent(&lhs, &rhs, &modulus));
    report.push(Verdict::congruent(&lhs, &lifted, &Modulus::new(n, 2)));
    let two_lifted = q_integer(2).substitute_power(n * n);
    let reduced = &lifted + &(&q_binomial(2 * ni, ni) - &two_lifted).scale(&(weight * rat(1, 2)));
    report.push(Verdict::congruent(&lhs, &reduced, &modulus));
    Ok(report.finish())
}

/// `C(2n, n)_q` modulo `Phi_n^3` in both closed forms, their mutual
/// equivalence, the expansion of `[2]_{q^{n^2}}`, and the second-order
/// harmonic expansion built from inverses of `[i]_q`.
pub fn check_wolstenholme_q(n: u64) -> Result<CongruenceReport> {
    if n == 0 {
        return Err(Error::Precondition("wolstenholme-q needs n >= 1".into()));
    }
    let modulus = Modulus::new(n, 3);
    let mut report = ReportBuilder::new("wolstenholme-q", modulus.label()).param("n", n);
    let ni = n as i64;
    let central = q_binomial(2 * ni, ni);
    let two_lifted = q_integer(2).substitute_power(n * n);
    let d = &LaurentPoly::q_pow(ni) - &LaurentPoly::one();
    let d2 = d.pow(2);

    let first = &two_lifted - &second_order_correction(n, &int(1));
    let second = LaurentPoly::from(2) + d.scale(&int(ni)) + d2.scale(&rat((ni - 1) * (5 * ni - 1), 12));
    report.push(Verdict::congruent(&central, &first, &modulus));
    report.push(Verdict::congruent(&central, &second, &modulus));
    report.push(Verdict::congruent(&first, &second, &modulus));
    let two_expanded = LaurentPoly::from(2) + d.scale(&int(ni)) + d2.scale(&rat(ni * (ni - 1), 2));
    report.push(Verdict::congruent(&two_lifted, &two_expanded, &modulus));

    // [2]_{q^n} (q^{(n-1)n} + q^{(n-2)n} sum [n]/[i] + q^{(n-3)n} sum_{i<j} [n]^2/([i][j]))
    let qn = q_integer(n);
    let ratios: Vec<LaurentPoly> = (1..n)
        .map(|i| Ok(&qn * &inverse_mod(&q_integer(i), &modulus)?))
        .collect::<Result<_>>()?;
    let single: LaurentPoly = ratios.iter().cloned().sum();
    let mut pairs = LaurentPoly::zero();
    let mut prefix = LaurentPoly::zero();
    for r in &ratios {
        pairs += &prefix * r;
        prefix += r;
    }
    let expansion = q_integer(2).substitute_power(n)
        * (LaurentPoly::q_pow((ni - 1) * ni) + single.shift((ni - 2) * ni) + pairs.shift((ni - 3) * ni));
    report.push(Verdict::congruent(&central, &expansion, &modulus));
    Ok(report.finish())
}

/// `[j]_q C(mn, mk+j)_q = (-1)^{j-1} q^{(j-1)(2m-j)/2} [mn]_q C(n-1, k) (mod Phi_m^2)`
/// for `0 < j < m`, with the `1/[j]_q` form checked through an inverse.
pub fn check_qbin_prop(m: u64, n: u64, k: u64, j: u64) -> Result<CongruenceReport> {
    if j == 0 || j >= m {
        return Err(Error::Precondition(format!(
            "qbin-prop needs 0 < j < m, got j={j}, m={m}"
        )));
    }
    let modulus = Modulus::new(m, 2);
    let mut report = ReportBuilder::new("qbin-prop", modulus.label())
        .param("m", m)
        .param("n", n)
        .param("k", k)
        .param("j", j);
    let (mi, ni, ki, ji) = (m as i64, n as i64, k as i64, j as i64);
    let twice = (ji - 1) * (2 * mi - ji);
    if twice % 2 != 0 {
        return Err(Error::Precondition(format!("(j-1)(2m-j) = {twice} is odd")));
    }
    let sign: i64 = if (j - 1).is_multiple_of(2) { 1 } else { -1 };
    let scalar = int(BigInt::from(sign) * binomial(ni - 1, ki));
    let rhs_core = q_integer(m * n).shift(twice / 2).scale(&scalar);
    let target = q_binomial(mi * ni, mi * ki + ji);
    report.push(Verdict::congruent(&(&q_integer(j) * &target), &rhs_core, &modulus));
    let with_inverse = &rhs_core * &inverse_mod(&q_integer(j), &modulus)?;
    report.push(Verdict::congruent(&target, &with_inverse, &modulus));
    Ok(report.finish())
}

/// `C(2mn, mn)_q = C(2n,n)_{q^{m^2}} - (m^2-1)/12 (q^m-1)^2 (n^2/2) C(2n,n) (mod Phi_m^3)`,
/// with the two identities that reduce it to this form.
pub fn check_central_binomial(m: u64, n: u64) -> Result<CongruenceReport> {
    if m == 0 {
        return Err(Error::Precondition("central-binomial needs m >= 1".into()));
    }
    let modulus = Modulus::new(m, 3);
    let mut report = ReportBuilder::new("central-binomial", modulus.label())
        .param("m", m)
        .param("n", n);
    let (mi, ni) = (m as i64, n as i64);
    let central = int(binomial(2 * ni, ni));
    let lhs = q_binomial(2 * mi * ni, mi * ni);
    let weight = rat(ni * ni, 2) * central.clone();
    let rhs = &q_binomial(2 * ni, ni).substitute_power(m * m) - &second_order_correction(m, &weight);
    report.push(Verdict::congruent(&lhs, &rhs, &modulus));

    let q_square_sum: LaurentPoly = (0..=ni).map(|k| q_binomial(ni, k).pow(2).shift(k * k)).sum();
    report.push(Verdict::equal(&q_square_sum, &q_binomial(2 * ni, ni)));
    let weighted: Rational = (0..=ni).map(|k| int(ni - k) * int(binomial(ni, k).pow(2))).sum();
    report.push(Verdict::rational_zero(&(weighted - rat(ni, 2) * central)));
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ljunggren_examples() {
        assert!(check_ljunggren_q(2, 2, 1).unwrap().holds);
        for n in 1..=4 {
            for a in 0..=3 {
                assert!(check_ljunggren_q(n, a, a).unwrap().holds);
                assert!(check_ljunggren_q(n, a, a + 1).unwrap().holds);
            }
        }
        assert!(check_ljunggren_q(1, 4, 2).unwrap().holds);
        assert!(check_ljunggren_q(0, 1, 1).is_err());
    }

    #[test]
    fn wolstenholme_examples() {
        for n in [1, 2, 6] {
            let r = check_wolstenholme_q(n).unwrap();
            assert!(r.holds, "n = {n}: {r:?}");
            assert_eq!(r.modulus, format!("Phi({n})^3"));
        }
    }

    #[test]
    fn ljunggren_agrees_with_wolstenholme() {
        for n in 1..=12 {
            assert_eq!(
                check_ljunggren_q(n, 2, 1).unwrap().holds,
                check_wolstenholme_q(n).unwrap().holds
            );
        }
    }

    #[test]
    fn proposition_examples() {
        assert!(check_qbin_prop(2, 1, 0, 1).unwrap().holds);
        assert!(check_qbin_prop(3, 2, 1, 1).unwrap().holds);
        assert!(check_qbin_prop(5, 1, 0, 3).unwrap().holds);
        assert!(check_qbin_prop(3, 1, 0, 3).is_err());
        assert!(check_qbin_prop(3, 1, 0, 0).is_err());
    }

    #[test]
    fn central_binomial_examples() {
        assert!(check_central_binomial(2, 1).unwrap().holds);
        assert!(check_central_binomial(1, 3).unwrap().holds);
        assert!(check_central_binomial(4, 2).unwrap().holds);
    }

    #[test]
    fn wrong_correction_is_caught() {
        // dropping the second-order term breaks the congruence at n = 2
        let modulus = Modulus::new(2, 3);
        let lhs = q_binomial(4, 2);
        let lifted = q_integer(2).substitute_power(4);
        assert!(!Verdict::congruent(&lhs, &lifted, &modulus).holds);
    }
}
