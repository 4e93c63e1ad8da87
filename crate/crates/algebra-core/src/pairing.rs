use crate::element::{lin2, Element};
use crate::rational::{rat, Rational};
use crate::words::{Monomial, Word};

/// Kronecker pairing on basis keys.
pub fn pair_keys<K: Ord>(a: &K, b: &K) -> Rational {
    if a == b {
        rat(1)
    } else {
        rat(0)
    }
}

/// Length-diagonal letterwise pairing on tensor words:
/// ⟪f₁…f_k, x₁…x_l⟫ = δ_{kl} ∏ δ_{fᵢxᵢ}.
pub fn pair_words<K: Ord>(a: &Word<K>, b: &Word<K>) -> Rational {
    if a.0.len() != b.0.len() {
        return rat(0);
    }
    if a.0 == b.0 {
        rat(1)
    } else {
        rat(0)
    }
}

/// Monomial pairing with symmetry factor: ⟪f^α, x^β⟫ = α!·δ_{αβ},
/// e.g. ⟪f·f, x·x⟫ = 2 when f is dual to x.
pub fn pair_monomials<K: Ord + Clone>(a: &Monomial<K>, b: &Monomial<K>) -> Rational {
    if a == b {
        rat(a.pair_factor() as i64)
    } else {
        rat(0)
    }
}

/// Bilinear extension of any key-level pairing to elements.
pub fn pair_elements<K: Ord + Clone>(
    a: &Element<K>,
    b: &Element<K>,
    mut pair: impl FnMut(&K, &K) -> Rational,
) -> Rational {
    let scalars = lin2(a, b, |x, y| Element::term((), pair(x, y)));
    scalars.coeff(&())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::symmetrize;

    #[test]
    fn monomial_pairing_counts_symmetries() {
        let ff = Monomial::from_letters(vec!["f", "f"]);
        let xx = Monomial::from_letters(vec!["f", "f"]);
        assert_eq!(pair_monomials(&ff, &xx), rat(2));
        let fg = Monomial::from_letters(vec!["f", "g"]);
        assert_eq!(pair_monomials(&ff, &fg), rat(0));
    }

    #[test]
    fn word_pairing_is_length_diagonal() {
        let u = Word(vec![1, 2]);
        let v = Word(vec![1, 2, 3]);
        assert_eq!(pair_words(&u, &v), rat(0));
        assert_eq!(pair_words(&u, &u), rat(1));
        assert_eq!(pair_words(&Word(vec![2, 1]), &u), rat(0));
        // symmetrized, those same two words collide
        assert_eq!(
            pair_monomials(&symmetrize(&Word(vec![2, 1])), &symmetrize(&u)),
            rat(1)
        );
    }

    #[test]
    fn element_pairing_is_bilinear() {
        let a = Element::from_terms(vec![("x", rat(2)), ("y", rat(1))]);
        let b = Element::from_terms(vec![("x", rat(3)), ("y", rat(-1))]);
        assert_eq!(pair_elements(&a, &b, pair_keys), rat(5));
    }
}
