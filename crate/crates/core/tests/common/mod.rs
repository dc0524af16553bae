//! Property bodies shared by the proptest suite and the acceptance runner.
#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use qcong::cyclotomic::{cyclotomic, cyclotomic_at_one, divisors, inverse_mod, reduce_mod, Modulus};
use qcong::exact::{rat, LaurentPoly, Rational};
use qcong::lab::{run_check, CheckArgs};
use qcong::qcomb::{binomial, q_binomial, q_binomial_with, QBinomialMethod};
use qcong::sweep::{canonical_json, run_sweep, ParamRange, SweepSpec, DEFAULT_GUARD};

pub type PropResult = Result<(), TestCaseError>;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

pub fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-5i64..=5, rational()), 0..6).prop_map(LaurentPoly::from_terms)
}

pub fn ring_laws(a: &LaurentPoly, b: &LaurentPoly, c: &LaurentPoly) -> PropResult {
    prop_assert_eq!(a + b, b + a);
    prop_assert_eq!(a * b, b * a);
    prop_assert_eq!(&(a + b) + c, a + &(b + c));
    prop_assert_eq!(&(a * b) * c, a * &(b * c));
    prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    prop_assert_eq!(a * &LaurentPoly::one(), a.clone());
    prop_assert!((a + &(-a.clone())).is_zero());
    Ok(())
}

/// `C(n,k)_q` is palindromic of degree `k(n-k)` and equals `C(n,k)` at 1.
pub fn qbinomial_shape(n: u64, k: u64) -> PropResult {
    let (ni, ki) = (n as i64, k as i64);
    let b = q_binomial(ni, ki);
    prop_assert_eq!(b.reciprocal_reflect(ki * (ni - ki)), b.clone());
    prop_assert_eq!(
        b.eval_at(&Rational::from_integer(1.into())).unwrap(),
        Rational::from_integer(binomial(ni, ki))
    );
    Ok(())
}

pub fn qbinomial_methods(n: u64, k: u64) -> PropResult {
    let reference = q_binomial_with(n, k as i64, QBinomialMethod::Pascal);
    for method in QBinomialMethod::ALL {
        prop_assert_eq!(q_binomial_with(n, k as i64, method), reference.clone(), "{:?}", method);
    }
    let r = run_check(
        "qbin-support",
        &CheckArgs::new().with("n", n as i64).with("k", k as i64),
    )
    .unwrap();
    prop_assert!(r.holds);
    Ok(())
}

/// `prod_{d | m} Phi_d = q^m - 1` and `Phi_m(1)` against trial division.
pub fn cyclotomic_laws(m: u64) -> PropResult {
    let product: LaurentPoly = divisors(m).into_iter().map(cyclotomic).product();
    prop_assert_eq!(product, &LaurentPoly::q_pow(m as i64) - &LaurentPoly::one());
    if m >= 2 {
        let mut primes = (2..=m).filter(|p| m.is_multiple_of(*p) && (2..*p).all(|d| p % d != 0));
        let p = primes.next().unwrap();
        let expected = if primes.next().is_none() { p } else { 1 };
        let one = Rational::from_integer(1.into());
        prop_assert_eq!(
            cyclotomic(m).eval_at(&one).unwrap(),
            Rational::from_integer(expected.into())
        );
        prop_assert_eq!(cyclotomic_at_one(m).unwrap(), expected);
    }
    Ok(())
}

/// `f * f^{-1} = 1 (mod Phi_m^k)` whenever an inverse exists.
pub fn bezout(f: &LaurentPoly, m: u64, k: u32) -> PropResult {
    let modulus = Modulus::new(m, k);
    match inverse_mod(f, &modulus) {
        Ok(h) => prop_assert!(reduce_mod(&(&(f * &h) - &LaurentPoly::one()), &modulus).is_zero()),
        Err(_) => {
            let (g, _) = f.shift_to_ordinary();
            prop_assert!(g.is_zero() || !g.gcd(&cyclotomic(m)).is_one());
        }
    }
    Ok(())
}

pub fn ljunggren_matches_wolstenholme(n: u64) -> PropResult {
    let lj = run_check(
        "ljunggren",
        &CheckArgs::new().with("n", n as i64).with("a", 2).with("b", 1),
    )
    .unwrap();
    let wo = run_check("wolstenholme-q", &CheckArgs::new().with("n", n as i64)).unwrap();
    prop_assert!(lj.holds && wo.holds);
    Ok(())
}

/// With `m = 1` both sides of the main congruence coincide.
pub fn main_at_m_one(n: [u64; 4], alpha: &str) -> PropResult {
    let args = CheckArgs::new()
        .with("m", 1)
        .with("n1", n[0] as i64)
        .with("n2", n[1] as i64)
        .with("n3", n[2] as i64)
        .with("n4", n[3] as i64)
        .with_alpha(alpha);
    prop_assert!(run_check("main", &args).unwrap().holds);
    Ok(())
}

pub fn q_one_pathway(p: u64, n: u64) -> PropResult {
    let at_one = run_check(
        "corollary-at-one",
        &CheckArgs::new().with("p", p as i64).with("n", n as i64),
    )
    .unwrap();
    let classical = run_check(
        "supercongruence-apery",
        &CheckArgs::new().with("p", p as i64).with("n", n as i64),
    )
    .unwrap();
    prop_assert!(at_one.holds);
    prop_assert_eq!(at_one.holds, classical.holds);
    Ok(())
}

pub fn parallel_matches_serial(hi: i64, jobs: usize) -> PropResult {
    let spec = SweepSpec::new("ljunggren")
        .range("n", ParamRange { lo: 1, hi, step: 1 })
        .range("a", "0..3".parse().unwrap())
        .range("b", "0..3".parse().unwrap());
    let serial = run_sweep(&spec, DEFAULT_GUARD).unwrap();
    let parallel = run_sweep(&spec.clone().with_jobs(jobs), DEFAULT_GUARD).unwrap();
    prop_assert_eq!(canonical_json(&serial), canonical_json(&parallel));
    Ok(())
}
