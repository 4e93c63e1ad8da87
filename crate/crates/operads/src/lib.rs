//! Symmetric operads on explicit combinatorial bases.
//!
//! Seven families share one key type: `com` (a single basis element per
//! arity), `as` (permutations), `prelie` (labelled rooted trees), `qo` and `o`
//! (quasi-orders and orders), `sg` and `ncsg` (simple digraphs, the latter
//! acyclic). The first three compose by substitution, the relational four by
//! enumerating all candidates on the merged vertex set and filtering on
//! window restriction, contraction and — under `circ` — convexity; `nabla`
//! drops the convexity condition and only exists for the digraph families.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! the relational sums are finite at the guarded arities.

mod descriptor;
mod key;
mod rules;

pub use descriptor::{Descriptor, Family, Mode, OperadElement, OperadError};
pub use key::{guest_label, host_label, OpKey};
