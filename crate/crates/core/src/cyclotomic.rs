//! Cyclotomic polynomials and congruences modulo their powers in `Q[q, 1/q]`.
//!
//! A congruence `f = 0 (mod Phi_m^k)` between Laurent polynomials is decided
//! on `q^s f` for the shift `s` that makes it an ordinary polynomial. This is
//! sound because `Phi_m(0) != 0`, so `q` is a unit modulo every `Phi_m^k` and
//! multiplying by `q^s` cannot change divisibility.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::exact::{int, LaurentPoly, Rational};

/// Memo table `m -> Phi_m(q)`.
///
/// Reads are concurrent. A fill computes outside the lock and then inserts;
/// two racing fills insert the same polynomial, so the race is harmless.
#[derive(Debug, Default)]
pub struct CyclotomicCache {
    table: RwLock<HashMap<u64, LaurentPoly>>,
}

impl CyclotomicCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `Phi_m(q) = (q^m - 1) / prod_{d | m, d < m} Phi_d(q)`.
    pub fn get(&self, m: u64) -> LaurentPoly {
        assert!(m >= 1, "cyclotomic index must be positive");
        if let Some(p) = self.table.read().unwrap().get(&m) {
            return p.clone();
        }
        let mut p = &LaurentPoly::q_pow(m as i64) - &LaurentPoly::one();
        for d in divisors(m) {
            if d < m {
                p = p.exact_div(&self.get(d)).expect("Phi_d divides q^m - 1");
            }
        }
        self.table.write().unwrap().insert(m, p.clone());
        p
    }

    pub fn len(&self) -> usize {
        self.table.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Process-wide cache shared by every computation.
pub fn global_cache() -> &'static CyclotomicCache {
    static CACHE: OnceLock<CyclotomicCache> = OnceLock::new();
    CACHE.get_or_init(CyclotomicCache::new)
}

pub fn cyclotomic(m: u64) -> LaurentPoly {
    global_cache().get(m)
}

pub fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= m {
        if m.is_multiple_of(i) {
            small.push(i);
            if i != m / i {
                large.push(m / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn euler_phi(m: u64) -> u64 {
    prime_factors(m).into_iter().fold(m, |acc, p| acc / p * (p - 1))
}

/// `Phi_m(1)`: `p` when `m` is a power of the prime `p`, otherwise 1.
pub fn cyclotomic_at_one(m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::Precondition(format!("Phi_m(1) needs m >= 2, got {m}")));
    }
    match prime_factors(m).as_slice() {
        [p] => Ok(*p),
        _ => Ok(1),
    }
}

/// `Phi_m(q)^k`.
#[derive(Clone, PartialEq, Eq)]
pub struct Modulus {
    m: u64,
    k: u32,
    polynomial: LaurentPoly,
}

impl Modulus {
    pub fn new(m: u64, k: u32) -> Self {
        assert!(m >= 1 && k >= 1, "modulus Phi(m)^k needs m, k >= 1");
        Self {
            m,
            k,
            polynomial: cyclotomic(m).pow(k),
        }
    }

    pub fn index(&self) -> u64 {
        self.m
    }

    pub fn power(&self) -> u32 {
        self.k
    }

    pub fn polynomial(&self) -> &LaurentPoly {
        &self.polynomial
    }

    pub fn degree(&self) -> u64 {
        self.polynomial.max_deg().unwrap() as u64
    }

    /// Report label, e.g. `Phi(5)^3`.
    pub fn label(&self) -> String {
        format!("Phi({})^{}", self.m, self.k)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl fmt::Debug for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Modulus({})", self.label())
    }
}

/// Remainder of `q^shift * f` modulo the modulus polynomial.
///
/// Only the zero test and the value at `q = 1` are meaningful: the
/// remainder itself depends on the shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residue {
    pub remainder: LaurentPoly,
    pub shift: i64,
}

impl Residue {
    pub fn is_zero(&self) -> bool {
        self.remainder.is_zero()
    }

    pub fn value_at_one(&self) -> Rational {
        self.remainder.eval_at(&int(1)).expect("remainder is ordinary")
    }

    pub fn first_nonzero(&self) -> Option<(i64, Rational)> {
        self.remainder.terms().next().map(|(e, c)| (e, c.clone()))
    }
}

pub fn reduce_mod(f: &LaurentPoly, modulus: &Modulus) -> Residue {
    let (g, shift) = f.shift_to_ordinary();
    let (_, remainder) = g.divrem(modulus.polynomial()).expect("modulus is nonzero");
    Residue { remainder, shift }
}

pub fn congruent(f: &LaurentPoly, g: &LaurentPoly, modulus: &Modulus) -> bool {
    reduce_mod(&(f - g), modulus).is_zero()
}

fn inverse_ordinary(g: &LaurentPoly, modulus: &Modulus) -> Result<LaurentPoly> {
    let not_invertible = || Error::NotInvertible(g.to_string(), modulus.label());
    if g.is_zero() {
        return Err(not_invertible());
    }
    let (d, u, _) = g.ext_gcd(modulus.polynomial())?;
    if !d.is_one() {
        return Err(not_invertible());
    }
    Ok(u.divrem(modulus.polynomial())?.1)
}

/// `h` with `f h = 1 (mod Phi_m^k)` and `deg h < deg Phi_m^k`.
pub fn inverse_mod(f: &LaurentPoly, modulus: &Modulus) -> Result<LaurentPoly> {
    let (g, s) = f.shift_to_ordinary();
    // f = q^{-s} g, so f^{-1} = q^s g^{-1}
    let g_inv = inverse_ordinary(&g, modulus).map_err(|_| Error::NotInvertible(f.to_string(), modulus.label()))?;
    let h = if s >= 0 {
        g_inv.shift(s)
    } else {
        &g_inv * &inverse_ordinary(&LaurentPoly::q_pow(-s), modulus)?
    };
    Ok(h.divrem(modulus.polynomial())?.1)
}

pub fn integer_coefficient_check(f: &LaurentPoly) -> bool {
    f.has_integer_coefficients()
}

/// Arithmetic in the quotient ring `Q[q, 1/q] / (Phi_m^k)`, with elements
/// kept as reduced ordinary polynomials. Used where the full polynomials
/// would be needlessly large.
#[derive(Clone, Debug)]
pub struct ResidueRing {
    modulus: Modulus,
    q_inv: LaurentPoly,
}

impl ResidueRing {
    pub fn new(modulus: Modulus) -> Self {
        let q_inv = inverse_mod(&LaurentPoly::q(), &modulus).expect("q is a unit modulo Phi_m^k");
        Self { modulus, q_inv }
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    fn rem(&self, f: &LaurentPoly) -> LaurentPoly {
        f.divrem(self.modulus.polynomial()).expect("modulus is nonzero").1
    }

    /// Canonical representative of the class of `f`.
    pub fn reduce(&self, f: &LaurentPoly) -> LaurentPoly {
        let (g, s) = f.shift_to_ordinary();
        let r = self.rem(&g);
        if s == 0 {
            return r;
        }
        // f = q^{-s} g
        let correction = if s > 0 {
            self.pow(&self.q_inv, s as u64)
        } else {
            self.pow(&LaurentPoly::q(), (-s) as u64)
        };
        self.mul(&r, &correction)
    }

    pub fn mul(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        self.rem(&(a * b))
    }

    pub fn pow(&self, base: &LaurentPoly, mut exp: u64) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        let mut base = self.rem(base);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base);
            }
        }
        self.rem(&acc)
    }

    /// Residue of `q^e`, by repeated squaring so that huge exponents stay cheap.
    pub fn q_pow(&self, e: i64) -> LaurentPoly {
        if e >= 0 {
            self.pow(&LaurentPoly::q(), e as u64)
        } else {
            self.pow(&self.q_inv, e.unsigned_abs())
        }
    }

    pub fn product<'a, I: IntoIterator<Item = &'a LaurentPoly>>(&self, factors: I) -> LaurentPoly {
        factors
            .into_iter()
            .fold(LaurentPoly::one(), |acc, f| self.mul(&acc, &self.reduce(f)))
    }

    pub fn is_zero(&self, f: &LaurentPoly) -> bool {
        self.reduce(f).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use num_traits::Zero;

    fn p(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(c)
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(2), p(&[1, 1]));
        assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic(6).to_string(), "1 - q + q^2");
    }

    #[test]
    fn values_at_one() {
        assert_eq!(cyclotomic_at_one(9).unwrap(), 3);
        assert_eq!(cyclotomic_at_one(6).unwrap(), 1);
        assert_eq!(cyclotomic_at_one(5).unwrap(), 5);
        assert!(cyclotomic_at_one(1).is_err());
    }

    #[test]
    fn product_over_divisors_and_shape() {
        for m in 1..=60u64 {
            let prod: LaurentPoly = divisors(m).into_iter().map(cyclotomic).product();
            assert_eq!(prod, &LaurentPoly::q_pow(m as i64) - &LaurentPoly::one(), "m = {m}");
            let phi = cyclotomic(m);
            assert_eq!(phi.max_deg(), Some(euler_phi(m) as i64), "m = {m}");
            assert!(phi.leading_coeff().unwrap() == &int(1));
            assert!(phi.has_integer_coefficients());
            assert!(!phi.coeff(0).is_zero(), "Phi_{m}(0) must be nonzero");
            if m >= 2 {
                assert_eq!(phi.eval_at(&int(1)).unwrap(), int(cyclotomic_at_one(m).unwrap()));
            }
        }
    }

    #[test]
    fn separate_caches_agree() {
        let cache = CyclotomicCache::new();
        assert!(cache.is_empty());
        assert_eq!(cache.get(30), cyclotomic(30));
        // 30 pulls in all of its divisors
        assert_eq!(cache.len(), divisors(30).len());
    }

    #[test]
    fn reduce_examples() {
        assert!(reduce_mod(&p(&[-1, 0, 1]), &Modulus::new(2, 1)).is_zero());
        let f = &LaurentPoly::q_pow(5) - &LaurentPoly::one();
        assert!(reduce_mod(&f, &Modulus::new(5, 1)).is_zero());

        // C(4,2)_q - (1 + q^4) + (1/4)(q^2 - 1)^2 vanishes modulo (q+1)^3
        let qbin42 = p(&[1, 1, 2, 1, 1]);
        let diff = &(&qbin42 - &p(&[1, 0, 0, 0, 1])) + &p(&[-1, 0, 1]).pow(2).scale(&rat(1, 4));
        // oracle: value and first two derivatives at q = -1 vanish
        let mut g = diff.clone();
        for _ in 0..3 {
            assert_eq!(g.eval_at(&int(-1)).unwrap(), int(0));
            g = LaurentPoly::from_terms(g.terms().map(|(e, c)| (e - 1, c * int(e))));
        }
        assert!(reduce_mod(&diff, &Modulus::new(2, 3)).is_zero());
        assert!(!reduce_mod(&diff, &Modulus::new(3, 1)).is_zero());
    }

    #[test]
    fn congruence_examples() {
        let q = LaurentPoly::q();
        let one = LaurentPoly::one();
        assert!(congruent(&q, &one, &Modulus::new(1, 1)));
        assert!(!congruent(&q, &one, &Modulus::new(2, 1)));
        // Laurent inputs are handled through the shift
        assert!(congruent(
            &LaurentPoly::q_pow(-1),
            &LaurentPoly::from(-1),
            &Modulus::new(2, 1)
        ));
    }

    #[test]
    fn residue_reports_value_at_one() {
        let r = reduce_mod(&p(&[3, 1]), &Modulus::new(3, 1));
        assert_eq!(r.value_at_one(), int(4));
        assert_eq!(r.first_nonzero(), Some((0, int(3))));
        assert_eq!(Modulus::new(5, 3).label(), "Phi(5)^3");
        assert_eq!(Modulus::new(6, 2).degree(), 4);
    }

    #[test]
    fn inverses() {
        let m3 = Modulus::new(3, 1);
        assert_eq!(inverse_mod(&LaurentPoly::one(), &m3).unwrap(), LaurentPoly::one());
        let h = inverse_mod(&p(&[1, 1]), &m3).unwrap();
        assert!(reduce_mod(&(&h * &p(&[1, 1]) - &LaurentPoly::one()), &m3).is_zero());
        assert_eq!(h, p(&[0, -1]));
        assert!(matches!(
            inverse_mod(&p(&[1, 1, 1]), &m3),
            Err(Error::NotInvertible(..))
        ));

        let m = Modulus::new(7, 3);
        let f = LaurentPoly::from_terms([(-3, int(2)), (1, int(1))]);
        let h = inverse_mod(&f, &m).unwrap();
        assert!((h.max_deg().unwrap() as u64) < m.degree());
        assert!(congruent(&(&f * &h), &LaurentPoly::one(), &m));
    }

    #[test]
    fn residue_ring_matches_direct_reduction() {
        let ring = ResidueRing::new(Modulus::new(5, 3));
        let f = LaurentPoly::from_terms([(-7, int(3)), (2, rat(1, 2)), (40, int(-1))]);
        let g = p(&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16]);
        let direct = &f * &g;
        let via_ring = ring.mul(&ring.reduce(&f), &ring.reduce(&g));
        assert!(ring.is_zero(&(&direct - &via_ring)));
        assert_eq!(ring.reduce(&direct), via_ring);
        assert_eq!(ring.q_pow(-3), ring.reduce(&LaurentPoly::q_pow(-3)));
        assert_eq!(ring.q_pow(1000), ring.reduce(&LaurentPoly::q_pow(1000)));
    }

    #[test]
    fn integer_check() {
        assert!(integer_coefficient_check(&p(&[1, 3, 1])));
        assert!(!integer_coefficient_check(&LaurentPoly::monomial(rat(1, 4), 1)));
    }
}
