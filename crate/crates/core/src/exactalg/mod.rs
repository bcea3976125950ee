//! Exact Laurent polynomials in `q, z_1..z_n` over big rationals and
//! characters with factored denominators `Π (1 - q^k z^μ)`.

mod character;
pub mod format;
mod laurent;

pub use character::RationalCharacter;
#[cfg(test)]
pub(crate) use laurent::int;
pub use laurent::{GradedWeight, LaurentPoly};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactAlgError {
    #[error("denominator factor (1 - q^{q} z^{z:?}) has no q-adic expansion")]
    NonExpandable { q: i64, z: Vec<i64> },
    #[error("invalid denominator factor (1 - q^{q} z^{z:?})")]
    InvalidFactor { q: i64, z: Vec<i64> },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("parse error: {0}")]
    Parse(String),
}
