//! Polynomials in variables `x_1, ..., x_v` with `x_j x_i = q x_i x_j` for `i < j`,
//! kept in normal order.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::LaurentPoly;

/// Largest total degree [`expand_linear_form_product`] will expand.
pub const DEGREE_GUARD: u64 = 16;

/// `coefficient * x_1^{e_1} ... x_v^{e_v}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QWord {
    pub coefficient: LaurentPoly,
    pub exponents: Vec<u32>,
}

/// Sum of normal-ordered words with nonzero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct QPolynomial {
    arity: usize,
    words: BTreeMap<Vec<u32>, LaurentPoly>,
}

/// q-power picked up when `x^left * x^right` is normal ordered:
/// `sum_{i<j} left_j right_i`.
fn transpositions(left: &[u32], right: &[u32]) -> i64 {
    let mut count = 0i64;
    let mut right_prefix = 0i64;
    for j in 0..left.len() {
        count += left[j] as i64 * right_prefix;
        right_prefix += right[j] as i64;
    }
    count
}

impl QPolynomial {
    pub fn zero(arity: usize) -> Self {
        Self {
            arity,
            words: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::word(LaurentPoly::one(), vec![0; arity])
    }

    pub fn word(coefficient: LaurentPoly, exponents: Vec<u32>) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_word(exponents, coefficient);
        p
    }

    /// `x_index` with 1-based `index`.
    pub fn variable(arity: usize, index: usize) -> Result<Self> {
        if index == 0 || index > arity {
            return Err(Error::BadParams(format!(
                "variable x_{index} out of range for arity {arity}"
            )));
        }
        let mut e = vec![0; arity];
        e[index - 1] = 1;
        Ok(Self::word(LaurentPoly::one(), e))
    }

    /// `sum_{i in subset} x_i` with 1-based indices.
    pub fn linear_form(arity: usize, subset: &[usize]) -> Result<Self> {
        let mut p = Self::zero(arity);
        for &i in subset {
            p = &p + &Self::variable(arity, i)?;
        }
        Ok(p)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> impl Iterator<Item = QWord> + '_ {
        self.words.iter().map(|(e, c)| QWord {
            coefficient: c.clone(),
            exponents: e.clone(),
        })
    }

    /// Coefficient of `x^exponents`; zero if absent or of the wrong arity.
    pub fn coefficient_of(&self, exponents: &[u32]) -> LaurentPoly {
        self.words.get(exponents).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    fn add_word(&mut self, exponents: Vec<u32>, coefficient: LaurentPoly) {
        if coefficient.is_zero() {
            return;
        }
        match self.words.entry(exponents) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coefficient;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Normal-ordered product, dropping words that exceed `bound` in some
    /// coordinate when a bound is given.
    fn mul_bounded(&self, rhs: &Self, bound: Option<&[u32]>) -> Self {
        let mut out = Self::zero(self.arity);
        for (ea, ca) in &self.words {
            for (eb, cb) in &rhs.words {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                if let Some(bound) = bound {
                    if e.iter().zip(bound).any(|(x, b)| x > b) {
                        continue;
                    }
                }
                out.add_word(e, (ca * cb).shift(transpositions(ea, eb)));
            }
        }
        out
    }

    pub fn qcommute_mul(&self, rhs: &Self) -> Result<Self> {
        if self.arity != rhs.arity {
            return Err(Error::ArityMismatch(self.arity, rhs.arity));
        }
        Ok(self.mul_bounded(rhs, None))
    }

    /// Sets `q = 1` in every coefficient.
    pub fn at_q_one(&self) -> BTreeMap<Vec<u32>, crate::exact::Rational> {
        self.words
            .iter()
            .map(|(e, c)| (e.clone(), c.eval_at(&crate::exact::int(1)).expect("q = 1")))
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }
}

impl std::ops::Add<&QPolynomial> for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.words {
            out.add_word(e.clone(), c.clone());
        }
        out
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.words.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.words {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{k}", i + 1)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPolynomial[{}]({self})", self.arity)
    }
}

fn product_impl(arity: usize, factors: &[(Vec<usize>, u32)], bound: Option<&[u32]>) -> Result<QPolynomial> {
    let degree: u64 = factors.iter().map(|(_, k)| *k as u64).sum();
    if degree > DEGREE_GUARD {
        return Err(Error::DegreeGuard {
            degree,
            guard: DEGREE_GUARD,
        });
    }
    let mut acc = QPolynomial::one(arity);
    for (subset, power) in factors {
        let form = QPolynomial::linear_form(arity, subset)?;
        for _ in 0..*power {
            acc = acc.mul_bounded(&form, bound);
        }
    }
    Ok(acc)
}

/// Normal-ordered expansion of `prod (sum_{i in subset} x_i)^power` in the
/// given order; variable indices are 1-based.
pub fn expand_linear_form_product(arity: usize, factors: &[(Vec<usize>, u32)]) -> Result<QPolynomial> {
    product_impl(arity, factors, None)
}

/// Coefficient of `x^target` in the product, discarding words that overshoot
/// the target during the expansion.
pub fn extract_coefficient(arity: usize, factors: &[(Vec<usize>, u32)], target: &[u32]) -> Result<LaurentPoly> {
    if target.len() != arity {
        return Err(Error::ArityMismatch(arity, target.len()));
    }
    Ok(product_impl(arity, factors, Some(target))?.coefficient_of(target))
}

/// `(x1+x2+x3)^{n1} (x1+x2)^{n2} (x3+x4)^{n3} (x2+x3+x4)^{n4}`.
pub fn nonsymmetric_order(n: [u32; 4]) -> Vec<(Vec<usize>, u32)> {
    vec![
        (vec![1, 2, 3], n[0]),
        (vec![1, 2], n[1]),
        (vec![3, 4], n[2]),
        (vec![2, 3, 4], n[3]),
    ]
}

/// `(x1+x2)^{n2} (x1+x2+x3)^{n1} (x2+x3+x4)^{n4} (x3+x4)^{n3}`.
pub fn symmetric_order(n: [u32; 4]) -> Vec<(Vec<usize>, u32)> {
    vec![
        (vec![1, 2], n[1]),
        (vec![1, 2, 3], n[0]),
        (vec![2, 3, 4], n[3]),
        (vec![3, 4], n[2]),
    ]
}
