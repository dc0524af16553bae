//! Exact q-analogs of Apéry-type numbers and machine checks of their
//! cyclotomic supercongruences.

pub mod compute;
pub mod cyclotomic;
pub mod error;
pub mod exact;
pub mod lab;
pub mod qcomb;
pub mod qcommute;
pub mod report;
pub mod sequences;
pub mod sweep;

pub use error::{Error, Result};
pub use exact::{LaurentPoly, Rational, RationalFunction};
