//! Antipode of a connected graded bialgebra, by degree recursion.

use std::collections::BTreeMap;

use algebra_core::Element;

use crate::handle::{product_elem, Bialgebra};
use crate::HopfError;

/// S(x) for a basis key, via S(1) = 1 and
/// S(x) = −x − Σ S(x′) x″ over the reduced coproduct.
///
/// Connectedness is what makes the recursion well-founded, so non-connected
/// carriers are rejected.
pub fn antipode<B: Bialgebra>(b: &B, x: &B::Key) -> Result<Element<B::Key>, HopfError> {
    if !b.connected() {
        return Err(HopfError::NotConnected { handle: b.name() });
    }
    let mut memo = BTreeMap::new();
    s_key(b, x, &mut memo)
}

fn s_key<B: Bialgebra>(
    b: &B,
    x: &B::Key,
    memo: &mut BTreeMap<B::Key, Element<B::Key>>,
) -> Result<Element<B::Key>, HopfError> {
    let unit = b.unit();
    if *x == unit {
        return Ok(Element::basis(unit));
    }
    if let Some(e) = memo.get(x) {
        return Ok(e.clone());
    }
    let mut acc = -Element::basis(x.clone());
    for ((a, b2), c) in b.coproduct(x)?.iter() {
        if *a == unit || *b2 == unit {
            continue;
        }
        let sa = s_key(b, a, memo)?;
        let prod = product_elem(b, &sa, &Element::basis(b2.clone()))?;
        acc = acc - prod.scale(c);
    }
    memo.insert(x.clone(), acc.clone());
    Ok(acc)
}
