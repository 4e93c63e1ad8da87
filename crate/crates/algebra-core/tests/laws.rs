use algebra_core::{pair_elements, pair_keys, rat, symmetrize, Element, Word};
use proptest::prelude::*;

fn elem() -> impl Strategy<Value = Element<u8>> {
    proptest::collection::vec((0u8..6, -4i64..=4), 0..6)
        .prop_map(|v| Element::from_terms(v.into_iter().map(|(k, c)| (k, rat(c)))))
}

fn word() -> impl Strategy<Value = Word<u8>> {
    proptest::collection::vec(0u8..4, 0..5).prop_map(Word)
}

proptest! {
    #[test]
    fn add_commutes(a in elem(), b in elem()) {
        prop_assert_eq!(a.clone() + b.clone(), b + a);
    }

    #[test]
    fn add_associates(a in elem(), b in elem(), c in elem()) {
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a + (b + c));
    }

    #[test]
    fn zero_is_neutral(a in elem()) {
        prop_assert_eq!(a.clone() + Element::zero(), a.clone());
        prop_assert!((a.clone() - a).is_zero());
    }

    #[test]
    fn scale_distributes(a in elem(), b in elem(), c in -4i64..=4) {
        let lhs = (a.clone() + b.clone()).scale(&rat(c));
        let rhs = a.scale(&rat(c)) + b.scale(&rat(c));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pairing_is_bilinear(a in elem(), b in elem(), c in elem()) {
        let lhs = pair_elements(&(a.clone() + b.clone()), &c, pair_keys);
        let rhs = pair_elements(&a, &c, pair_keys) + pair_elements(&b, &c, pair_keys);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn symmetrize_splits_concat(u in word(), v in word()) {
        prop_assert_eq!(symmetrize(&u.concat(&v)), symmetrize(&u).mul(&symmetrize(&v)));
    }
}
