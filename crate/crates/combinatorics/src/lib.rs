//! Labelled combinatorial structures: permutations, rooted trees, quasi-orders
//! and simple digraphs, with canonical forms, enumeration caches and the text
//! notations used across the workspace.

mod dg;
mod perm;
mod qo;
mod sets;
mod tree;

pub use dg::{enumerate_dgs, for_each_dg, Dg, MAX_DG_N};
pub use perm::{block_perm, enumerate_perms, Perm, MAX_PERM_N};
pub use qo::{enumerate_orders, enumerate_qos, Qo, MAX_QO_N};
pub use sets::{positive_compositions, set_partitions, subsets_of};
pub use tree::{enumerate_trees, IsoTree, Tree, MAX_TREE_N};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("bad {kind} literal {text:?}: {reason}")]
    Bad { kind: &'static str, text: String, reason: String },
}

pub(crate) fn bad(kind: &'static str, text: &str, reason: impl Into<String>) -> ParseError {
    ParseError::Bad { kind, text: text.to_string(), reason: reason.into() }
}
