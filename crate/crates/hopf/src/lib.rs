//! Bialgebras carried by the tensor and symmetric (co)algebras over an
//! operad: star products on one side, their transposed coproducts on the
//! dual side, the Grossman–Larson / Connes–Kreimer pair on decorated
//! forests, and the insertion action with its dual coaction.
//!
//! Everything is organised around [`BialgebraHandle`]: a choice of carrier
//! (words or monomials, over operad keys, decorated trees, or tree/output
//! pairs), a product, and a coproduct. Law checks and the antipode are
//! generic over the [`Bialgebra`] trait, so the same recursion serves every
//! handle.

mod antipode;
mod dual;
mod forest;
mod handle;
mod laws;
mod orbit;
mod pairing;
mod pairs;
mod psi;

pub use antipode::antipode;
pub use dual::DualStar;
pub use forest::{
    aut_forest, aut_tree, ck_coproduct, colored_forests, colored_trees, forest_pairing, gl_star,
    sym_coproduct,
};
pub use handle::{
    product_elem, Bialgebra, BialgebraHandle, CoproductKind, ForestHandle, HandleName, MonoHandle,
    PairHandle, WordHandle,
};
pub use laws::{antipode_law, bialgebra_compat, coassociative, counit_law};
pub use orbit::Coinv;
pub use pairing::{padded_mono_pairing, padded_word_pairing};
pub use pairs::{
    action, ec_coproduct, pair_bullet, pair_degree, pair_star, reduce_pair_monomial, rho, DecPair,
};
pub use psi::{psi_monomial, psi_word};

use operads::OperadError;

#[derive(Debug, thiserror::Error)]
pub enum HopfError {
    #[error(transparent)]
    Operad(#[from] OperadError),
    #[error(transparent)]
    Induced(#[from] induced_structures::InducedError),
    #[error("antipode needs a connected handle, {handle} is not")]
    NotConnected { handle: String },
    #[error("coproduct kind {kind} is not defined on handle {handle}")]
    KindMismatch { handle: String, kind: &'static str },
    #[error("letter of arity {arity} not allowed in the positive handle {handle}")]
    NotPositive { handle: String, arity: usize },
    #[error("color {color} outside 1..={colors}")]
    ColorRange { color: usize, colors: usize },
    #[error("handle {name} with {got} needs {needs}")]
    BadHandle {
        name: &'static str,
        got: &'static str,
        needs: &'static str,
    },
}
