use algebra_core::Element;
use combinatorics::{Dg, Qo};
use operads::{Descriptor, Family, OpKey, OperadError};

use crate::InducedError;

fn relational(desc: &Descriptor) -> Result<(), InducedError> {
    match desc.family() {
        Family::QOrd | Family::Ord | Family::Sg => Ok(()),
        f => Err(InducedError::Family { family: f.name() }),
    }
}

/// The image of the associative generator: the discrete two-vertex
/// structure, so that m∘(Γ, Γ′) is plain juxtaposition.
pub fn ascom_m(desc: &Descriptor) -> Result<Element<OpKey>, InducedError> {
    relational(desc)?;
    Ok(Element::basis(discrete_key(desc, 2)))
}

/// The image of the commutative generator: discrete plus "first vertex
/// below the second", so that ⋆∘(Γ, Γ′) sums the ways of putting Γ′ above
/// Γ as an ideal.
pub fn ascom_star(desc: &Descriptor) -> Result<Element<OpKey>, InducedError> {
    relational(desc)?;
    let extra = match desc.family() {
        Family::Sg => OpKey::D(Dg::from_edges(2, &[(1, 2)])),
        _ => OpKey::Q(Qo::chain(2)),
    };
    Ok(Element::basis(discrete_key(desc, 2)) + Element::basis(extra))
}

fn discrete_key(desc: &Descriptor, n: usize) -> OpKey {
    match desc.family() {
        Family::Sg => OpKey::D(Dg::empty(n)),
        _ => OpKey::Q(Qo::antichain(n)),
    }
}

fn connected(key: &OpKey) -> bool {
    match key {
        OpKey::Q(q) => q.components().len() == 1,
        OpKey::D(d) => d.components().len() == 1,
        _ => unreachable!("theta composes relational keys only"),
    }
}

/// θ(⌊−,−⌋_{k,l}): the connected part of ⋆∘(discrete_k, discrete_l) in the
/// given relational operad. For k·l ≥ 1 this is the sum of all structures
/// on [k+l] whose relations go from the first k vertices to the last l and
/// connect the whole vertex set — for orders, the connected bipartite
/// posets between the two blocks. ⌊−,−⌋_{1,0} and ⌊−,−⌋_{0,1} are the
/// identity, any other one-sided bracket is zero.
pub fn theta_image(desc: &Descriptor, k: usize, l: usize) -> Result<Element<OpKey>, InducedError> {
    let star = ascom_star(desc)?;
    let n = k + l;
    if n == 0 || n > desc.max_basis_arity() {
        return Err(OperadError::Guard {
            n,
            family: desc.family().name(),
            max: desc.max_basis_arity(),
        }
        .into());
    }
    if k == 0 || l == 0 {
        return Ok(if n == 1 { desc.unit() } else { Element::zero() });
    }
    let blocks = [
        Element::basis(discrete_key(desc, k)),
        Element::basis(discrete_key(desc, l)),
    ];
    let composed = desc.gamma(&star, &blocks)?;
    Ok(composed.lin(|key| {
        if connected(key) {
            Element::basis(key.clone())
        } else {
            Element::zero()
        }
    }))
}
