//! The isomorphism between the two dual bialgebra structures.
//!
//! Ψ fixes every letter of positive arity and sends the unit letter I* to
//! I* − 1, extended multiplicatively. It turns Δ_* into Δ′_*, i.e.
//! (Ψ ⊗ Ψ) ∘ Δ_* = Δ′_* ∘ Ψ.

use algebra_core::{lin2, rat, Element, Monomial, Word};
use operads::{Descriptor, OpKey};

pub fn psi_word(desc: &Descriptor, w: &Word<OpKey>) -> Element<Word<OpKey>> {
    let unit = desc.unit_key();
    let mut acc = Element::basis(Word::empty());
    for letter in &w.0 {
        let img = if *letter == unit {
            Element::from_terms([
                (Word::single(unit.clone()), rat(1)),
                (Word::empty(), rat(-1)),
            ])
        } else {
            Element::basis(Word::single(letter.clone()))
        };
        acc = lin2(&acc, &img, |a, b| Element::basis(a.concat(b)));
    }
    acc
}

pub fn psi_monomial(desc: &Descriptor, m: &Monomial<OpKey>) -> Element<Monomial<OpKey>> {
    let unit = desc.unit_key();
    let mut acc = Element::basis(Monomial::one());
    for letter in m.iter_letters() {
        let img = if *letter == unit {
            Element::from_terms([
                (Monomial::single(unit.clone()), rat(1)),
                (Monomial::one(), rat(-1)),
            ])
        } else {
            Element::basis(Monomial::single(letter.clone()))
        };
        acc = lin2(&acc, &img, |a, b| Element::basis(a.mul(b)));
    }
    acc
}
