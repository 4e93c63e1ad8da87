//! Products that an operad induces on words and monomials over it.
//!
//! Every operad carries a brace family ⟨p, q₁…q_k⟩ = Σ p∘_{i₁,…,i_k}(q⃗)
//! over increasing slot tuples, hence a pre-Lie product p•q = Σᵢ p∘ᵢq and a
//! symmetric bracket ⌊p, q₁…q_k⌋ over injective tuples. Extending the
//! brackets to block decompositions turns the tensor coalgebra into an
//! associative (in fact dendriform) algebra via [`star_tensor`], and the
//! symmetric coalgebra into one via [`star_sym`]. The bracket families are
//! abstracted by two small traits, so the same block sums also produce
//! shuffles (zero brackets), quasi-shuffles (an associative product on
//! letters), and the Grossman–Larson product (a pre-Lie product expanded by
//! the Oudom–Guin recursion).

mod brace;
mod sources;
mod star;
mod theta;

pub use brace::BraceContext;
pub use sources::{
    grafting, operadic_prelie, PreLieBrackets, QuasiShuffle, SymBrackets, TensorBrackets, Trivial,
    XMono,
};
pub use star::{dend_left, dend_right, star_sym, star_tensor};
pub use theta::{ascom_m, ascom_star, theta_image};

use operads::OperadError;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum InducedError {
    #[error(transparent)]
    Operad(#[from] OperadError),
    #[error("theta images live in qo, o or sg, not {family}")]
    Family { family: &'static str },
}
