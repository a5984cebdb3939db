//! Arithmetic, factorization and length sets in the monoid of finite sets of
//! nonnegative integers containing `0`, under sumset addition.

mod bits;
pub mod cancellativity;
pub mod cli;
pub mod constructors;
pub mod error;
pub mod factorizer;
pub mod finset;
pub mod fixtures;
pub mod rational;
pub mod report;

pub use error::{Error, Precondition, Result};
pub use factorizer::{fact_gcd, Factorization, Factorizer, LengthSet, SharedMemo};
pub use finset::FinSet;
pub use rational::Rational;
