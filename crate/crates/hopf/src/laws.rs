//! Law checks, generic over [`Bialgebra`]. Each returns Ok(false) rather
//! than panicking, so a verification run can count counterexamples.

use algebra_core::Element;

use crate::antipode::antipode;
use crate::handle::{product_elem, Bialgebra};
use crate::HopfError;

pub fn coassociative<B: Bialgebra>(b: &B, x: &B::Key) -> Result<bool, HopfError> {
    let cop = b.coproduct(x)?;
    let mut lhs = Element::zero();
    let mut rhs = Element::zero();
    for ((a, c2), coeff) in cop.iter() {
        for ((a1, a2), c1) in b.coproduct(a)?.iter() {
            lhs.add_term((a1.clone(), a2.clone(), c2.clone()), coeff * c1);
        }
        for ((b1, b2), c1) in b.coproduct(c2)?.iter() {
            rhs.add_term((a.clone(), b1.clone(), b2.clone()), coeff * c1);
        }
    }
    Ok(lhs == rhs)
}

pub fn counit_law<B: Bialgebra>(b: &B, x: &B::Key) -> Result<bool, HopfError> {
    let cop = b.coproduct(x)?;
    let mut left = Element::zero();
    let mut right = Element::zero();
    for ((a, c2), coeff) in cop.iter() {
        left.add_term(c2.clone(), b.counit(a) * coeff);
        right.add_term(a.clone(), b.counit(c2) * coeff);
    }
    let id = Element::basis(x.clone());
    Ok(left == id && right == id)
}

/// Δ(xy) = Δ(x)Δ(y) and ε(xy) = ε(x)ε(y).
pub fn bialgebra_compat<B: Bialgebra>(b: &B, x: &B::Key, y: &B::Key) -> Result<bool, HopfError> {
    let prod = b.product(x, y)?;
    let mut lhs = Element::zero();
    let mut eps_prod = algebra_core::rat(0);
    for (k, c) in prod.iter() {
        for (pair, c1) in b.coproduct(k)?.iter() {
            lhs.add_term(pair.clone(), c * c1);
        }
        eps_prod += b.counit(k) * c;
    }
    let dx = b.coproduct(x)?;
    let dy = b.coproduct(y)?;
    let mut rhs = Element::zero();
    for ((a1, a2), c1) in dx.iter() {
        for ((b1, b2), c2) in dy.iter() {
            let p1 = b.product(a1, b1)?;
            let p2 = b.product(a2, b2)?;
            for (k1, d1) in p1.iter() {
                for (k2, d2) in p2.iter() {
                    rhs.add_term((k1.clone(), k2.clone()), c1 * c2 * d1 * d2);
                }
            }
        }
    }
    Ok(lhs == rhs && eps_prod == b.counit(x) * b.counit(y))
}

/// m(S⊗id)Δ(x) = ε(x)1 = m(id⊗S)Δ(x).
pub fn antipode_law<B: Bialgebra>(b: &B, x: &B::Key) -> Result<bool, HopfError> {
    let cop = b.coproduct(x)?;
    let mut left = Element::zero();
    let mut right = Element::zero();
    for ((a, c2), coeff) in cop.iter() {
        let sa = antipode(b, a)?;
        left += product_elem(b, &sa, &Element::basis(c2.clone()))?.scale(coeff);
        let sc = antipode(b, c2)?;
        right += product_elem(b, &Element::basis(a.clone()), &sc)?.scale(coeff);
    }
    let expected = Element::term(b.unit(), b.counit(x));
    Ok(left == expected && right == expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::handle::{BialgebraHandle, HandleName};
    use operads::{Descriptor, Family};

    #[test]
    fn deconcatenation_laws_hold() {
        let desc = Descriptor::circ(Family::Com);
        let h = match BialgebraHandle::new(HandleName::BoldB, desc, None).unwrap() {
            BialgebraHandle::Word(h) => h,
            _ => unreachable!(),
        };
        for d in 0..=3 {
            for w in h.basis(d).unwrap() {
                assert!(coassociative(&h, &w).unwrap(), "coassoc fails at {w}");
                assert!(counit_law(&h, &w).unwrap(), "counit fails at {w}");
            }
        }
        for x in h.basis(1).unwrap() {
            for y in h.basis(2).unwrap() {
                assert!(bialgebra_compat(&h, &x, &y).unwrap());
            }
        }
    }

    #[test]
    fn antipode_law_on_a_connected_dual() {
        let desc = Descriptor::circ(Family::Com);
        let h = match BialgebraHandle::new(HandleName::BoldBDual, desc, None).unwrap() {
            BialgebraHandle::Word(h) => h,
            _ => unreachable!(),
        };
        for d in 0..=3 {
            for w in h.basis(d).unwrap() {
                assert!(antipode_law(&h, &w).unwrap(), "antipode law fails at {w}");
            }
        }
    }
}
