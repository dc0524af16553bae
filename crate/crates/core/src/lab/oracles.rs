//! Agreement between independent computations of the same quantity.

use crate::error::Result;
use crate::exact::{int, LaurentPoly};
use crate::qcomb::q_pochhammer;
use crate::qcommute::{extract_coefficient, nonsymmetric_order, symmetric_order};
use crate::report::{CongruenceReport, ReportBuilder, Verdict, IDENTITY};
use crate::sequences::{
    almkvist_zudilin, alpha_by_name, apery_diagonal_oracle, apery_multivariate, apery_q_krz_binform,
    apery_q_multivariate, apery_q_multivariate_fourth_lower, az_diagonal_oracle, AlphaExponent, IndexTuple,
};

fn tuple_report(name: &str, n: &IndexTuple) -> ReportBuilder {
    let [n1, n2, n3, n4] = n.0;
    ReportBuilder::new(name, IDENTITY)
        .param("n1", n1)
        .param("n2", n2)
        .param("n3", n3)
        .param("n4", n4)
}

/// `(q;q)_n = (-1)^n q^{n(n+1)/2} (1/q;1/q)_n`.
pub fn check_pochhammer_transform(n: u64) -> Result<CongruenceReport> {
    let mut report = ReportBuilder::new("pochhammer-transform", IDENTITY).param("n", n);
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let rhs = q_pochhammer(-1, n, true)
        .shift((n * (n + 1) / 2) as i64)
        .scale(&int(sign));
    report.push(Verdict::equal(&q_pochhammer(1, n, false), &rhs));
    Ok(report.finish())
}

/// Series coefficient of `1/((1-x1-x2)(1-x3-x4) - x1x2x3x4)` vs the binomial sum.
pub fn check_diagonal(n: &IndexTuple) -> Result<CongruenceReport> {
    let mut report = tuple_report("diagonal", n);
    let series = apery_diagonal_oracle(n)?;
    report.push(Verdict::rational_zero(&int(series - apery_multivariate(n))));
    Ok(report.finish())
}

/// Diagonal coefficient of `1/(1 - (x1+x2+x3+x4) + 27 x1x2x3x4)` vs `Z(n)`.
pub fn check_az_diagonal(n: u64) -> Result<CongruenceReport> {
    let mut report = ReportBuilder::new("az-diagonal", IDENTITY).param("n", n);
    let series = az_diagonal_oracle(n)?;
    report.push(Verdict::rational_zero(&int(series - almkvist_zudilin(n)?)));
    Ok(report.finish())
}

/// Order of the linear forms in a q-commuting product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductOrder {
    /// `(x1+x2+x3)^{n1} (x1+x2)^{n2} (x3+x4)^{n3} (x2+x3+x4)^{n4}`, weight `k(n2+n3+k)`.
    Nonsymmetric,
    /// `(x1+x2)^{n2} (x1+x2+x3)^{n1} (x2+x3+x4)^{n4} (x3+x4)^{n3}`, weight `k^2`.
    Symmetric,
}

impl ProductOrder {
    pub fn check_name(self) -> &'static str {
        match self {
            ProductOrder::Nonsymmetric => "qcommute-nonsym",
            ProductOrder::Symmetric => "qcommute-sym",
        }
    }

    pub fn alpha(self) -> AlphaExponent {
        let name = match self {
            ProductOrder::Nonsymmetric => "nonsym",
            ProductOrder::Symmetric => "ksq",
        };
        alpha_by_name(name).expect("built-in exponent")
    }

    pub fn factors(self, n: &IndexTuple) -> Vec<(Vec<usize>, u32)> {
        let e = n.0.map(|x| x as u32);
        match self {
            ProductOrder::Nonsymmetric => nonsymmetric_order(e),
            ProductOrder::Symmetric => symmetric_order(e),
        }
    }

    /// Coefficient of `x^n` in the q-commuting product.
    pub fn extract(self, n: &IndexTuple) -> Result<LaurentPoly> {
        let target: Vec<u32> = n.0.iter().map(|&x| x as u32).collect();
        extract_coefficient(4, &self.factors(n), &target)
    }
}

/// Coefficient extraction in q-commuting variables vs the weighted binomial
/// sum; on the diagonal the symmetric order also gives the q-Apéry polynomial.
pub fn check_qcommute(n: &IndexTuple, order: ProductOrder) -> Result<CongruenceReport> {
    let mut report = tuple_report(order.check_name(), n);
    let extracted = order.extract(n)?;
    report.push(Verdict::equal(&extracted, &apery_q_multivariate(n, &order.alpha())?));
    let [n1, n2, n3, n4] = n.0;
    if order == ProductOrder::Symmetric && n1 == n2 && n2 == n3 && n3 == n4 {
        report.push(Verdict::equal(&extracted, &apery_q_krz_binform(n1)));
    }
    Ok(report.finish())
}

/// Compares the multivariate sum with last factor `C(n3+n4-k, n3)_q` against
/// the variant with `C(n3+n4-k, n4)_q`. These differ in general.
pub fn check_lower_index_swap(n: &IndexTuple, alpha: &AlphaExponent) -> Result<CongruenceReport> {
    let mut report = tuple_report(&super::with_alpha("lower-index-swap", alpha), n);
    report.push(Verdict::equal(
        &apery_q_multivariate(n, alpha)?,
        &apery_q_multivariate_fourth_lower(n, alpha)?,
    ));
    Ok(report.finish())
}
