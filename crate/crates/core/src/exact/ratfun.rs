use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Zero;

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// Quotient of two Laurent polynomials in canonical form.
///
/// The denominator is an ordinary polynomial with constant term 1 that is
/// coprime to the numerator; every power of `q` lives in the numerator.
/// Two equal rational functions therefore have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    numer: LaurentPoly,
    denom: LaurentPoly,
}

impl RationalFunction {
    pub fn new(numer: LaurentPoly, denom: LaurentPoly) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if numer.is_zero() {
            return Ok(Self::zero());
        }
        let (n0, sn) = numer.shift_to_ordinary();
        let (d0, sd) = denom.shift_to_ordinary();
        let g = n0.gcd(&d0);
        let (n0, d0) = if g.is_one() {
            (n0, d0)
        } else {
            (n0.exact_div(&g)?, d0.exact_div(&g)?)
        };
        // d0 has a nonzero constant term: it divides a polynomial that does
        let c = d0.coeff(0).recip();
        Ok(Self {
            numer: n0.scale(&c).shift(sd - sn),
            denom: d0.scale(&c),
        })
    }

    pub fn zero() -> Self {
        Self {
            numer: LaurentPoly::zero(),
            denom: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self {
            numer: p,
            denom: LaurentPoly::one(),
        }
    }

    /// `1 / p`.
    pub fn recip_of(p: LaurentPoly) -> Result<Self> {
        Self::new(LaurentPoly::one(), p)
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.numer
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    /// Returns the polynomial if the denominator is trivial.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.denom.is_one().then_some(&self.numer)
    }

    pub fn scale_poly(&self, p: &LaurentPoly) -> Self {
        Self::new(&self.numer * p, self.denom.clone()).expect("denominator is nonzero")
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(&self.numer * &rhs.denom, &self.denom * &rhs.numer)
    }

    fn add_impl(&self, rhs: &Self, negate: bool) -> Self {
        let rhs_numer = if negate { -&rhs.numer } else { rhs.numer.clone() };
        if self.denom == rhs.denom {
            return Self::new(&self.numer + &rhs_numer, self.denom.clone()).expect("denominator is nonzero");
        }
        let g = self.denom.gcd(&rhs.denom);
        let left_cof = rhs.denom.exact_div(&g).expect("gcd divides");
        let right_cof = self.denom.exact_div(&g).expect("gcd divides");
        let numer = &self.numer * &left_cof + &rhs_numer * &right_cof;
        Self::new(numer, &self.denom * &left_cof).expect("denominator is nonzero")
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }

    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        self.add_impl(rhs, false)
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        self.add_impl(&rhs, false)
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self.add_impl(rhs, true)
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: RationalFunction) -> RationalFunction {
        self.add_impl(&rhs, true)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.numer * &rhs.numer, &self.denom * &rhs.denom).expect("denominator is nonzero")
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: RationalFunction) -> RationalFunction {
        &self * &rhs
    }
}

/// Panics on division by zero; see [`RationalFunction::checked_div`].
impl Div<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("division by the zero rational function")
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            numer: -self.numer,
            denom: self.denom,
        }
    }
}

impl std::iter::Sum for RationalFunction {
    fn sum<I: Iterator<Item = RationalFunction>>(iter: I) -> Self {
        iter.fold(RationalFunction::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "({}) / ({})", self.numer, self.denom)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn p(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(c)
    }

    #[test]
    fn harmonic_two() {
        let h = RationalFunction::recip_of(p(&[1])).unwrap() + RationalFunction::recip_of(p(&[1, 1])).unwrap();
        assert_eq!(h, RationalFunction::new(p(&[2, 1]), p(&[1, 1])).unwrap());
        assert_eq!(h.numer(), &p(&[2, 1]));
    }

    #[test]
    fn normalization() {
        let x = RationalFunction::new(p(&[-1, 0, 1]), p(&[1, 1])).unwrap();
        assert_eq!(x.as_poly(), Some(&p(&[-1, 1])));
        assert!((&x - &x).is_zero());

        // q-powers move to the numerator and the denominator is made monic at q^0
        let y = RationalFunction::new(LaurentPoly::one(), p(&[0, 2, 2])).unwrap();
        assert_eq!(y.denom(), &p(&[1, 1]));
        assert_eq!(y.numer(), &LaurentPoly::monomial(crate::exact::rat(1, 2), -1));

        let z = RationalFunction::new(LaurentPoly::zero(), p(&[1, 1])).unwrap();
        assert!(z.is_zero());
        let w = RationalFunction::new(p(&[-1, 1]), p(&[1, 1])).unwrap();
        assert!(!w.is_zero());
    }

    #[test]
    fn field_operations() {
        let a = RationalFunction::new(p(&[1, 2]), p(&[1, 0, 1])).unwrap();
        let b = RationalFunction::new(p(&[3, 0, 1]), p(&[1, 1])).unwrap();
        let prod = &a * &b;
        assert_eq!(&prod / &b, a);
        let sum = &a + &b;
        assert_eq!(&sum - &b, a);
        assert_eq!(a.checked_div(&RationalFunction::zero()), Err(Error::DivisionByZero));
        assert_eq!(
            RationalFunction::new(p(&[1]), LaurentPoly::zero()),
            Err(Error::DivisionByZero)
        );
        let half = RationalFunction::from_poly(LaurentPoly::constant(crate::exact::rat(1, 2)));
        assert_eq!(
            &half + &half,
            RationalFunction::from_poly(LaurentPoly::constant(int(1)))
        );
    }
}
