//! Exact arithmetic: rationals, Laurent polynomials in `q` and rational
//! functions of `q`.

mod laurent;
mod ratfun;
mod rational;

pub use laurent::LaurentPoly;
pub use ratfun::RationalFunction;
pub use rational::{int, parse_rational, rat, Rational};
