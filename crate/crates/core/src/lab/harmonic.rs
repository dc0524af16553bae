//! Harmonic-sum congruences and identities.

use crate::cyclotomic::{inverse_mod, Modulus};
use crate::error::{Error, Result};
use crate::exact::{int, rat, LaurentPoly, Rational, RationalFunction};
use crate::qcomb::{binomial, q_binomial, q_factorial, q_harmonic, q_integer};
use crate::report::{CongruenceReport, ReportBuilder, Verdict, IDENTITY};

/// Which sum over `0 < i < n` is checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HarmonicSum {
    /// `sum 1/[i]_q = -(n-1)/2 (q-1) + (n^2-1)/24 (q-1)^2 [n]_q (mod Phi_n^2)`.
    Reciprocals,
    /// `sum 1/[i]_q^2 = -(n-1)(n-5)/12 (q-1)^2 (mod Phi_n)`.
    Squares,
    /// `sum_{i<j} 1/([i]_q [j]_q) = (n-1)(n-2)/6 (q-1)^2 (mod Phi_n)`.
    Pairs,
}

impl HarmonicSum {
    pub fn name(self) -> &'static str {
        match self {
            HarmonicSum::Reciprocals => "sp1",
            HarmonicSum::Squares => "sp2",
            HarmonicSum::Pairs => "sp3",
        }
    }

    fn power(self) -> u32 {
        match self {
            HarmonicSum::Reciprocals => 2,
            _ => 1,
        }
    }

    fn closed_form(self, n: i64) -> LaurentPoly {
        let d = LaurentPoly::from_coeffs(&[-1, 1]);
        match self {
            HarmonicSum::Reciprocals => {
                d.scale(&rat(-(n - 1), 2)) + (d.pow(2) * q_integer(n as u64)).scale(&rat(n * n - 1, 24))
            }
            HarmonicSum::Squares => d.pow(2).scale(&rat(-(n - 1) * (n - 5), 12)),
            HarmonicSum::Pairs => d.pow(2).scale(&rat((n - 1) * (n - 2), 6)),
        }
    }

    /// The sum built from terms `t_i` standing for `1/[i]_q`.
    fn combine(self, terms: &[LaurentPoly]) -> LaurentPoly {
        match self {
            HarmonicSum::Reciprocals => terms.iter().cloned().sum(),
            HarmonicSum::Squares => terms.iter().map(|t| t * t).sum(),
            HarmonicSum::Pairs => {
                let mut pairs = LaurentPoly::zero();
                let mut prefix = LaurentPoly::zero();
                for t in terms {
                    pairs += &prefix * t;
                    prefix += t;
                }
                pairs
            }
        }
    }
}

/// Multiplies through by `P = [1]_q ... [n-1]_q` (or `P^2`), which is a unit
/// modulo `Phi_n`; then repeats the check with modular inverses.
pub fn check_harmonic_sp(n: u64, which: HarmonicSum) -> Result<CongruenceReport> {
    if n < 2 {
        return Err(Error::Precondition(format!("{} needs n >= 2", which.name())));
    }
    let modulus = Modulus::new(n, which.power());
    let mut report = ReportBuilder::new(which.name(), modulus.label()).param("n", n);
    let ni = n as i64;
    let p = q_factorial(n - 1);
    let cleared: Vec<LaurentPoly> = (1..n).map(|i| p.exact_div(&q_integer(i))).collect::<Result<_>>()?;
    let p_power = if which == HarmonicSum::Reciprocals {
        p.clone()
    } else {
        &p * &p
    };
    report.push(Verdict::congruent(
        &which.combine(&cleared),
        &(&p_power * &which.closed_form(ni)),
        &modulus,
    ));
    let inverses: Vec<LaurentPoly> = (1..n)
        .map(|i| inverse_mod(&q_integer(i), &modulus))
        .collect::<Result<_>>()?;
    report.push(Verdict::congruent(
        &which.combine(&inverses),
        &which.closed_form(ni),
        &modulus,
    ));
    Ok(report.finish())
}

fn harmonic(n: i64) -> Rational {
    (1..=n).map(|k| rat(1, k)).sum()
}

/// `sum_{k=1}^n C(n,k)^2 C(n+k,k)^2 (1 + 2k H_{n+k} + 2k H_{n-k} - 4k H_k) = 0`.
pub fn check_harmonic_identity_classical(n: u64) -> Result<CongruenceReport> {
    if n == 0 {
        return Err(Error::Precondition("harmonic-identity needs n >= 1".into()));
    }
    let mut report = ReportBuilder::new("harmonic-identity", IDENTITY).param("n", n);
    let ni = n as i64;
    let total: Rational = (1..=ni)
        .map(|k| {
            let b = int((binomial(ni, k) * binomial(ni + k, k)).pow(2));
            let kk = int(k);
            let bracket =
                int(1) + int(2) * &kk * harmonic(ni + k) + int(2) * &kk * harmonic(ni - k) - int(4) * &kk * harmonic(k);
            b * bracket
        })
        .sum();
    report.push(Verdict::rational_zero(&total));
    Ok(report.finish())
}

/// `sum_{k=0}^n q^{k(k-2n)} C(n,k)_q^2 C(n+k,k)_q^2 (2 H_q(k) - H_q(n+k) - q H_{1/q}(n-k)) = 0`
/// as rational functions.
pub fn check_zheng_identity(n: u64) -> Result<CongruenceReport> {
    if n == 0 {
        return Err(Error::Precondition("zheng-identity needs n >= 1".into()));
    }
    let mut report = ReportBuilder::new("zheng-identity", IDENTITY).param("n", n);
    let ni = n as i64;
    let q = RationalFunction::from_poly(LaurentPoly::q());
    let mut total = RationalFunction::zero();
    for k in 0..=n {
        let ki = k as i64;
        let weight = (q_binomial(ni, ki) * q_binomial(ni + ki, ki))
            .pow(2)
            .shift(ki * (ki - 2 * ni));
        let bracket = &(&(&q_harmonic(k, false) + &q_harmonic(k, false)) - &q_harmonic(n + k, false))
            - &(&q * &q_harmonic(n - k, true));
        total = &total + &bracket.scale_poly(&weight);
    }
    report.push(Verdict::zero_ratfun(&total));
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sp_examples() {
        for which in [HarmonicSum::Reciprocals, HarmonicSum::Squares, HarmonicSum::Pairs] {
            for n in 2..=9 {
                let r = check_harmonic_sp(n, which).unwrap();
                assert!(r.holds, "{} n = {n}: {r:?}", which.name());
            }
            assert!(check_harmonic_sp(1, which).is_err());
        }
        // n = 2: the pair sum is empty and its closed form vanishes
        assert!(HarmonicSum::Pairs.closed_form(2).is_zero());
    }

    #[test]
    fn sp1_at_two_by_hand() {
        // 1 + (q-1)/2 - (1/8)(q-1)^2 (1+q) vanishes to second order at q = -1
        let d = LaurentPoly::from_coeffs(&[-1, 1]);
        let f =
            LaurentPoly::one() + d.scale(&rat(1, 2)) - (d.pow(2) * LaurentPoly::from_coeffs(&[1, 1])).scale(&rat(1, 8));
        assert!(crate::cyclotomic::reduce_mod(&f, &Modulus::new(2, 2)).is_zero());
    }

    #[test]
    fn classical_identity_examples() {
        for n in [1, 2, 10] {
            assert!(check_harmonic_identity_classical(n).unwrap().holds);
        }
    }

    #[test]
    fn zheng_identity_examples() {
        for n in [1, 2, 4] {
            let r = check_zheng_identity(n).unwrap();
            assert!(r.holds, "n = {n}: {r:?}");
        }
    }

    #[test]
    fn perturbed_identity_fails() {
        // dropping the factor q in front of H_{1/q} breaks the identity
        let n = 2i64;
        let mut total = RationalFunction::zero();
        for k in 0..=n {
            let w = (q_binomial(n, k) * q_binomial(n + k, k)).pow(2).shift(k * (k - 2 * n));
            let bracket = &(&(&q_harmonic(k as u64, false) + &q_harmonic(k as u64, false))
                - &q_harmonic((n + k) as u64, false))
                - &q_harmonic((n - k) as u64, true);
            total = &total + &bracket.scale_poly(&w);
        }
        assert!(!total.is_zero());
    }
}
