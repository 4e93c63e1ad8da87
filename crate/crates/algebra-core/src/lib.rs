//! Exact scalars and free-module arithmetic over canonical basis keys.
//!
//! Everything downstream (operad elements, tensor words, symmetric monomials,
//! dual vectors) is an [`Element`] over some ordered key type. Coefficients
//! are arbitrary-precision rationals; there is no floating point anywhere.

mod element;
mod pairing;
mod rational;
mod words;

pub use element::{combine, lin2, tensor, Element};
pub use pairing::{pair_elements, pair_keys, pair_monomials, pair_words};
pub use rational::{factorial, format_rat, parse_rat, rat, ratio, Rational};
pub use words::{symmetrize, Monomial, Word};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("cannot parse rational from {0:?}")]
    BadRational(String),
    #[error("{what} exceeds guard ({limit})")]
    Guard { what: String, limit: usize },
}

/// Guard ceiling shared by the enumerating crates. The CLI may lower or
/// (within hard maxima) raise effective guards; this is only the error type's
/// home so every crate reports capacity problems the same way.
pub fn guard_err(what: impl Into<String>, limit: usize) -> CoreError {
    CoreError::Guard { what: what.into(), limit }
}
