use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use super::rational::{int, parse_rational, Rational};
use crate::error::{Error, Result};

/// Sparse Laurent polynomial in `q` with rational coefficients.
///
/// The term map never stores a zero coefficient, so the zero polynomial is
/// the empty map and structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(int(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^exp`.
    pub fn monomial(c: Rational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(int(1), exp)
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// Builds `c_0 + c_1 q + c_2 q^2 + ...` from integer coefficients.
    pub fn from_coeffs<T: Into<BigInt> + Clone>(coeffs: &[T]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(e, c)| (e as i64, int(c.clone().into()))),
        )
    }

    /// Sums the given terms; repeated exponents are combined.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, &c);
        }
        out
    }

    fn add_term(&mut self, exp: i64, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(One::is_one)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_deg(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_deg(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    /// True for the zero polynomial and for polynomials without negative
    /// exponents.
    pub fn is_ordinary(&self) -> bool {
        self.min_deg().is_none_or(|d| d >= 0)
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Multiplies by `q^s`.
    pub fn shift(&self, s: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + s, c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Returns `(g, s)` with `g = q^s * self` an ordinary polynomial with
    /// nonzero constant term (`s = 0` for the zero polynomial).
    pub fn shift_to_ordinary(&self) -> (Self, i64) {
        match self.min_deg() {
            None => (Self::zero(), 0),
            Some(d) => (self.shift(-d), -d),
        }
    }

    /// `f(q) -> f(q^t)`.
    pub fn substitute_power(&self, t: u64) -> Self {
        assert!(t >= 1, "substitution power must be positive");
        let t = t as i64;
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e * t, c.clone())).collect(),
        }
    }

    /// `q^d * f(1/q)`.
    pub fn reciprocal_reflect(&self, d: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (d - e, c.clone())).collect(),
        }
    }

    pub fn eval_at(&self, x: &Rational) -> Result<Rational> {
        if x.is_zero() {
            return match self.min_deg() {
                Some(d) if d < 0 => Err(Error::ZeroEvaluation),
                _ => Ok(self.coeff(0)),
            };
        }
        if x.is_one() {
            return Ok(self.terms.values().fold(Rational::zero(), |acc, c| acc + c));
        }
        let mut sum = Rational::zero();
        for (&e, c) in &self.terms {
            let p = if e >= 0 {
                num_traits::pow(x.clone(), e as usize)
            } else {
                num_traits::pow(x.recip(), (-e) as usize)
            };
            sum += c * p;
        }
        Ok(sum)
    }

    /// Integer numerators over a common denominator.
    fn integer_parts(&self) -> (Vec<(i64, BigInt)>, BigInt) {
        let den = self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let parts = self
            .terms
            .iter()
            .map(|(&e, c)| {
                if den.is_one() {
                    (e, c.numer().clone())
                } else {
                    (e, c.numer() * (&den / c.denom()))
                }
            })
            .collect();
        (parts, den)
    }

    fn from_integer_parts<I: IntoIterator<Item = (i64, BigInt)>>(parts: I, den: &BigInt) -> Self {
        let terms = parts
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| {
                let c = if den.is_one() {
                    Rational::from_integer(c)
                } else {
                    Rational::new(c, den.clone())
                };
                (e, c)
            })
            .collect();
        Self { terms }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (a, da) = self.integer_parts();
        let (b, db) = other.integer_parts();
        let den = da * db;
        let lo = a[0].0 + b[0].0;
        let hi = a[a.len() - 1].0 + b[b.len() - 1].0;
        let span = (hi - lo + 1) as u128;
        if span <= 4 * (a.len() as u128) * (b.len() as u128) + 64 {
            let mut acc = vec![BigInt::zero(); span as usize];
            for (ea, ca) in &a {
                for (eb, cb) in &b {
                    acc[(ea + eb - lo) as usize] += ca * cb;
                }
            }
            Self::from_integer_parts(acc.into_iter().enumerate().map(|(i, c)| (lo + i as i64, c)), &den)
        } else {
            let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
            for (ea, ca) in &a {
                for (eb, cb) in &b {
                    *acc.entry(ea + eb).or_default() += ca * cb;
                }
            }
            Self::from_integer_parts(acc, &den)
        }
    }

    fn add_signed(&mut self, other: &Self, negate: bool) {
        for (&e, c) in &other.terms {
            if negate {
                self.add_term(e, &-c);
            } else {
                self.add_term(e, c);
            }
        }
    }

    /// Dense ascending coefficient vector of an ordinary polynomial.
    fn dense(&self) -> Vec<Rational> {
        debug_assert!(self.is_ordinary());
        let len = self.max_deg().map_or(0, |d| d as usize + 1);
        let mut v = vec![Rational::zero(); len];
        for (&e, c) in &self.terms {
            v[e as usize] = c.clone();
        }
        v
    }

    fn is_monic_integral(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one) && self.has_integer_coefficients()
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Euclidean division of ordinary polynomials over the rationals:
    /// `self = quotient * g + remainder` with `deg(remainder) < deg(g)`.
    pub fn divrem(&self, g: &Self) -> Result<(Self, Self)> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if !self.is_ordinary() || !g.is_ordinary() {
            return Err(Error::Precondition(
                "polynomial division needs ordinary polynomials (shift first)".into(),
            ));
        }
        let dg = g.max_deg().unwrap();
        let df = match self.max_deg() {
            None => return Ok((Self::zero(), Self::zero())),
            Some(d) => d,
        };
        if df < dg {
            return Ok((Self::zero(), self.clone()));
        }
        if g.is_monic_integral() {
            return Ok(self.divrem_monic_integral(g));
        }
        let (df, dg) = (df as usize, dg as usize);
        let mut r = self.dense();
        let gd = g.dense();
        let lead_inv = gd[dg].recip();
        let mut quot = Vec::with_capacity(df - dg + 1);
        for i in (0..=df - dg).rev() {
            let c = std::mem::take(&mut r[i + dg]) * &lead_inv;
            if !c.is_zero() {
                for (j, gj) in gd.iter().enumerate().take(dg) {
                    if !gj.is_zero() {
                        r[i + j] -= &c * gj;
                    }
                }
            }
            quot.push((i as i64, c));
        }
        r.truncate(dg);
        let rem = Self::from_terms(r.into_iter().enumerate().map(|(e, c)| (e as i64, c)));
        Ok((Self::from_terms(quot), rem))
    }

    /// Division by a monic integer polynomial, carried out on integer
    /// numerators over the common denominator of `self`.
    fn divrem_monic_integral(&self, g: &Self) -> (Self, Self) {
        let df = self.max_deg().unwrap() as usize;
        let dg = g.max_deg().unwrap() as usize;
        let (parts, den) = self.integer_parts();
        let mut r = vec![BigInt::zero(); df + 1];
        for (e, c) in parts {
            r[e as usize] = c;
        }
        let lower: Vec<(usize, BigInt)> = g
            .terms
            .iter()
            .filter(|(&e, _)| (e as usize) < dg)
            .map(|(&e, c)| (e as usize, c.numer().clone()))
            .collect();
        let mut quot = Vec::with_capacity(df - dg + 1);
        for i in (0..=df - dg).rev() {
            let c = std::mem::take(&mut r[i + dg]);
            if c.is_zero() {
                continue;
            }
            for (j, gj) in &lower {
                r[i + j] -= &c * gj;
            }
            quot.push((i as i64, c));
        }
        r.truncate(dg);
        let rem = Self::from_integer_parts(r.into_iter().enumerate().map(|(e, c)| (e as i64, c)), &den);
        (Self::from_integer_parts(quot, &den), rem)
    }

    /// Exact quotient in the Laurent polynomial ring; fails unless `g`
    /// divides `self`.
    pub fn exact_div(&self, g: &Self) -> Result<Self> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (f0, sf) = self.shift_to_ordinary();
        let (g0, sg) = g.shift_to_ordinary();
        let (quot, rem) = f0.divrem(&g0)?;
        if !rem.is_zero() {
            return Err(Error::InexactDivision(format!("{self} by {g}")));
        }
        Ok(quot.shift(sg - sf))
    }

    /// Monic gcd of the ordinary parts of `self` and `other` (powers of `q`
    /// are units and ignored). Uses a primitive remainder sequence over the
    /// integers to keep coefficient growth in check.
    pub fn gcd(&self, other: &Self) -> Self {
        let a = self.shift_to_ordinary().0;
        let b = other.shift_to_ordinary().0;
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        let mut a = primitive_dense(&a);
        let mut b = primitive_dense(&b);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = if r.is_empty() { r } else { primitive(r) };
        }
        Self::from_terms(a.into_iter().enumerate().map(|(e, c)| (e as i64, int(c)))).monic()
    }

    /// Extended Euclid on ordinary polynomials: returns `(d, u, v)` with
    /// `d = u*self + v*other` and `d` the monic gcd.
    pub fn ext_gcd(&self, other: &Self) -> Result<(Self, Self, Self)> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::Precondition("ext_gcd of two zero polynomials".into()));
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (quot, rem) = r0.divrem(&r1)?;
            let s2 = &s0 - &(&quot * &s1);
            let t2 = &t0 - &(&quot * &t1);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = r0.leading_coeff().unwrap().recip();
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let content = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let negate = v.last().is_some_and(Signed::is_negative);
    if !content.is_one() || negate {
        let content = if negate { -content } else { content };
        for c in &mut v {
            *c = &*c / &content;
        }
    }
    v
}

fn primitive_dense(f: &LaurentPoly) -> Vec<BigInt> {
    let (parts, _) = f.integer_parts();
    let mut v = vec![BigInt::zero(); f.max_deg().unwrap() as usize + 1];
    for (e, c) in parts {
        v[e as usize] = c;
    }
    primitive(v)
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[dr - db + j] -= &lr * bj;
        }
        trim(&mut r);
    }
    r
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(int(c))
    }
}

impl From<Rational> for LaurentPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.add_signed(rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.add_signed(rhs, true);
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.mul_ref(rhs);
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.mul_ref(rhs)
    }
}

macro_rules! forward_owned_binop {
    ($imp:ident, $method:ident, $assign:ident, $assign_method:ident) => {
        impl $assign<LaurentPoly> for LaurentPoly {
            fn $assign_method(&mut self, rhs: LaurentPoly) {
                self.$assign_method(&rhs);
            }
        }
        impl $imp<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(mut self, rhs: LaurentPoly) -> LaurentPoly {
                self.$assign_method(&rhs);
                self
            }
        }
        impl $imp<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(mut self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$assign_method(rhs);
                self
            }
        }
        impl $imp<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $imp::$method(self, &rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add, AddAssign, add_assign);
forward_owned_binop!(Sub, sub, SubAssign, sub_assign);
forward_owned_binop!(Mul, mul, MulAssign, mul_assign);

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, x| acc * x)
    }
}

/// Ascending terms, e.g. `q^-1 + 3 + q` or `1 - q + 1/4*q^2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if e == 1 {
                f.write_str("q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// JSON form: `{"0": "1", "1": "3", "2": "1"}`.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            map.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct TermVisitor;

        impl<'de> Visitor<'de> for TermVisitor {
            type Value = LaurentPoly;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map from exponent strings to coefficient strings")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> std::result::Result<LaurentPoly, A::Error> {
                let mut out = LaurentPoly::zero();
                while let Some((e, c)) = access.next_entry::<String, String>()? {
                    let e: i64 = e.parse().map_err(de::Error::custom)?;
                    let c = parse_rational(&c).map_err(de::Error::custom)?;
                    out.add_term(e, &c);
                }
                Ok(out)
            }
        }

        deserializer.deserialize_map(TermVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn p(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(c)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(p(&[-1, 1]) * p(&[1, 1]), p(&[-1, 0, 1]));
        assert_eq!(p(&[1, 1]).pow(2), p(&[1, 2, 1]));
        let f = LaurentPoly::q_pow(-1) * p(&[0, 1, 3]);
        assert_eq!(f, p(&[1, 3]));
        assert!((&f - &f).is_zero());
        assert_eq!(p(&[1, 1]).pow(0), LaurentPoly::one());
    }

    #[test]
    fn sparse_product_with_large_gap() {
        let f = &LaurentPoly::one() + &LaurentPoly::q_pow(10_000);
        let g = f.pow(2);
        assert_eq!(g.len(), 3);
        assert_eq!(g.coeff(10_000), int(2));
    }

    #[test]
    fn shift_to_ordinary_examples() {
        let f = LaurentPoly::from_terms([(-1, int(1)), (0, int(3)), (1, int(1))]);
        assert_eq!(f.shift_to_ordinary(), (p(&[1, 3, 1]), 1));
        assert_eq!(LaurentPoly::zero().shift_to_ordinary(), (LaurentPoly::zero(), 0));
        assert_eq!(LaurentPoly::q_pow(3).shift_to_ordinary(), (LaurentPoly::one(), -3));
    }

    #[test]
    fn divrem_examples() {
        assert_eq!(
            p(&[-1, 0, 1]).divrem(&p(&[1, 1])).unwrap(),
            (p(&[-1, 1]), LaurentPoly::zero())
        );
        assert_eq!(p(&[1, 0, 1]).divrem(&p(&[1, 1])).unwrap(), (p(&[-1, 1]), p(&[2])));
        let cube = p(&[1, 1]).pow(3);
        assert_eq!(
            cube.divrem(&p(&[1, 1]).pow(2)).unwrap(),
            (p(&[1, 1]), LaurentPoly::zero())
        );
        assert_eq!(p(&[1]).divrem(&LaurentPoly::zero()), Err(Error::DivisionByZero));
        // non-monic divisor goes through the rational path
        let (quot, rem) = p(&[1, 0, 1]).divrem(&p(&[1, 2])).unwrap();
        assert_eq!(&quot * &p(&[1, 2]) + rem.clone(), p(&[1, 0, 1]));
        assert_eq!(rem, LaurentPoly::constant(rat(5, 4)));
    }

    #[test]
    fn ext_gcd_examples() {
        let (d, u, v) = p(&[1, 1]).ext_gcd(&p(&[-1, 1])).unwrap();
        assert_eq!(d, LaurentPoly::one());
        assert_eq!(u, LaurentPoly::constant(rat(1, 2)));
        assert_eq!(v, LaurentPoly::constant(rat(-1, 2)));

        let (d, _, _) = p(&[-1, 0, 1]).ext_gcd(&p(&[1, 1])).unwrap();
        assert_eq!(d, p(&[1, 1]));

        let (f, g) = (p(&[1, 1]), p(&[1, 1, 1]));
        let (d, u, v) = f.ext_gcd(&g).unwrap();
        assert_eq!(d, LaurentPoly::one());
        assert_eq!(&u * &f + &v * &g, d);
        // oracle: the plain remainder chain ends in a nonzero constant
        let (_, r1) = g.divrem(&f).unwrap();
        assert_eq!(r1.max_deg(), Some(0));

        assert!(LaurentPoly::zero().ext_gcd(&LaurentPoly::zero()).is_err());
    }

    #[test]
    fn gcd_matches_ext_gcd() {
        let a = p(&[1, 1]).pow(3) * p(&[1, 0, 1]) * p(&[2, 3]);
        let b = p(&[1, 1]).pow(2) * p(&[5, 0, 0, 1]) * p(&[1, 0, 1]);
        let expected = p(&[1, 1]).pow(2) * p(&[1, 0, 1]);
        assert_eq!(a.gcd(&b), expected);
        assert_eq!(a.ext_gcd(&b).unwrap().0, expected);
    }

    #[test]
    fn substitute_and_reflect() {
        assert_eq!(p(&[1, 1]).substitute_power(4), p(&[1, 0, 0, 0, 1]));
        assert_eq!(LaurentPoly::q_pow(-1).substitute_power(3), LaurentPoly::q_pow(-3));
        assert_eq!(p(&[1, 3, 1]).substitute_power(1), p(&[1, 3, 1]));
        assert_eq!(p(&[1, 3, 1]).reciprocal_reflect(2), p(&[1, 3, 1]));
        assert_eq!(p(&[1, 1]).reciprocal_reflect(1), p(&[1, 1]));
        assert_eq!(LaurentPoly::q().reciprocal_reflect(0), LaurentPoly::q_pow(-1));
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[1, 3, 1]).eval_at(&int(1)).unwrap(), int(5));
        assert_eq!(p(&[1, 1]).eval_at(&int(1)).unwrap(), int(2));
        let zheng1 = LaurentPoly::from_terms([(-1, int(1)), (0, int(3)), (1, int(1))]);
        assert_eq!(zheng1.eval_at(&int(1)).unwrap(), int(5));
        assert_eq!(zheng1.eval_at(&int(0)), Err(Error::ZeroEvaluation));
        assert_eq!(zheng1.eval_at(&rat(1, 2)).unwrap(), rat(11, 2));
        assert_eq!(p(&[7, 1]).eval_at(&int(0)).unwrap(), int(7));
    }

    #[test]
    fn text_and_json_forms() {
        assert_eq!(p(&[1, 3, 1]).to_string(), "1 + 3*q + q^2");
        assert_eq!(p(&[1, -1, 1]).to_string(), "1 - q + q^2");
        let f = LaurentPoly::from_terms([(-1, int(1)), (0, int(3)), (1, int(1))]);
        assert_eq!(f.to_string(), "q^-1 + 3 + q");
        assert_eq!(LaurentPoly::monomial(rat(-1, 4), 2).to_string(), "-1/4*q^2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");

        let json = serde_json::to_string(&p(&[1, 3, 1])).unwrap();
        assert_eq!(json, r#"{"0":"1","1":"3","2":"1"}"#);
        let back: LaurentPoly = serde_json::from_str(r#"{"-1":"1/2","3":"-2"}"#).unwrap();
        assert_eq!(back, LaurentPoly::from_terms([(-1, rat(1, 2)), (3, int(-2))]));
    }
}
