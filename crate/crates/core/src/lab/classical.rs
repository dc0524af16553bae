//! Integer supercongruences modulo `p^3`.

use num_bigint::BigInt;

use crate::cyclotomic::is_prime;
use crate::error::{Error, Result};
use crate::report::{CongruenceReport, ReportBuilder, Verdict};
use crate::sequences::{almkvist_zudilin, apery, apery_lambda_mu};

fn require_prime(name: &str, p: u64, least: u64) -> Result<()> {
    if p < least || !is_prime(p) {
        return Err(Error::Precondition(format!(
            "{name} needs a prime p >= {least}, got {p}"
        )));
    }
    Ok(())
}

fn cube(p: u64) -> BigInt {
    BigInt::from(p).pow(3)
}

/// `A(pn) = A(n) (mod p^3)` for primes `p >= 5`.
pub fn check_apery(p: u64, n: u64) -> Result<CongruenceReport> {
    require_prime("supercongruence-apery", p, 5)?;
    let mut report = ReportBuilder::new("supercongruence-apery", cube(p).to_string())
        .param("p", p)
        .param("n", n);
    report.push(Verdict::divisible(&(apery(p * n) - apery(n)), &cube(p)));
    Ok(report.finish())
}

/// `A^{(l,u)}(pn) = A^{(l,u)}(n) (mod p^3)` for primes `p >= 5` and `lambda >= 2`.
pub fn check_lambda_mu(p: u64, n: u64, lambda: u32, mu: u32) -> Result<CongruenceReport> {
    require_prime("supercongruence-lambda-mu", p, 5)?;
    if lambda < 2 {
        return Err(Error::Precondition(format!("needs lambda >= 2, got {lambda}")));
    }
    let mut report = ReportBuilder::new("supercongruence-lambda-mu", cube(p).to_string())
        .param("p", p)
        .param("n", n)
        .param("lambda", lambda)
        .param("mu", mu);
    let diff = apery_lambda_mu(p * n, lambda, mu) - apery_lambda_mu(n, lambda, mu);
    report.push(Verdict::divisible(&diff, &cube(p)));
    Ok(report.finish())
}

/// `Z(pn) = Z(n) (mod p^3)` for primes `p >= 3`.
pub fn check_almkvist_zudilin(p: u64, n: u64) -> Result<CongruenceReport> {
    require_prime("supercongruence-az", p, 3)?;
    let mut report = ReportBuilder::new("supercongruence-az", cube(p).to_string())
        .param("p", p)
        .param("n", n);
    let diff = almkvist_zudilin(p * n)? - almkvist_zudilin(n)?;
    report.push(Verdict::divisible(&diff, &cube(p)));
    Ok(report.finish())
}
