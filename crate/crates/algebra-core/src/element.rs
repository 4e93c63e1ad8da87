use crate::rational::{format_rat, rat, Rational};
use num::Zero;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// A finite formal linear combination of canonical basis keys with rational
/// coefficients. Zero coefficients are never stored, so structural equality
/// is linear-algebra equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Element<K: Ord + Clone> {
    terms: BTreeMap<K, Rational>,
}

impl<K: Ord + Clone> Default for Element<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord + Clone> Element<K> {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    pub fn basis(key: K) -> Self {
        Element::term(key, rat(1))
    }

    pub fn term(key: K, coeff: Rational) -> Self {
        let mut e = Element::zero();
        e.add_term(key, coeff);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (K, Rational)>>(iter: I) -> Self {
        let mut e = Element::zero();
        for (k, c) in iter {
            e.add_term(k, c);
        }
        e
    }

    pub fn add_term(&mut self, key: K, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (K, Rational)> {
        self.terms.into_iter()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Element::zero();
        }
        Element { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    /// Linear extension of a key-level map `f: K -> Element<K2>`.
    pub fn lin<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Element<K2>) -> Element<K2> {
        let mut out = Element::zero();
        for (k, c) in &self.terms {
            for (k2, c2) in f(k).terms {
                out.add_term(k2, c2 * c);
            }
        }
        out
    }

    /// Key relabeling; merges collisions (useful for orbit projections).
    pub fn map_keys<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> K2) -> Element<K2> {
        let mut out = Element::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }

    pub fn to_string_with(&self, mut fmt_key: impl FnMut(&K) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (k, c) in &self.terms {
            if c == &rat(1) {
                parts.push(fmt_key(k));
            } else {
                parts.push(format!("{} {}", format_rat(c), fmt_key(k)));
            }
        }
        parts.join(" + ")
    }
}

/// Bilinear extension of `f: (K1, K2) -> Element<K3>`.
pub fn lin2<K1, K2, K3>(
    a: &Element<K1>,
    b: &Element<K2>,
    mut f: impl FnMut(&K1, &K2) -> Element<K3>,
) -> Element<K3>
where
    K1: Ord + Clone,
    K2: Ord + Clone,
    K3: Ord + Clone,
{
    let mut out = Element::zero();
    for (k1, c1) in a.iter() {
        for (k2, c2) in b.iter() {
            let c = c1 * c2;
            for (k3, c3) in f(k1, k2).into_terms() {
                out.add_term(k3, c3 * &c);
            }
        }
    }
    out
}

/// Formal tensor product: keys become pairs.
pub fn tensor<K1: Ord + Clone, K2: Ord + Clone>(
    a: &Element<K1>,
    b: &Element<K2>,
) -> Element<(K1, K2)> {
    lin2(a, b, |x, y| Element::basis((x.clone(), y.clone())))
}

impl<K: Ord + Clone> Add for Element<K> {
    type Output = Element<K>;
    fn add(mut self, rhs: Element<K>) -> Element<K> {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl<K: Ord + Clone> AddAssign for Element<K> {
    fn add_assign(&mut self, rhs: Element<K>) {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
    }
}

impl<K: Ord + Clone> Sub for Element<K> {
    type Output = Element<K>;
    fn sub(mut self, rhs: Element<K>) -> Element<K> {
        for (k, c) in rhs.terms {
            self.add_term(k, -c);
        }
        self
    }
}

impl<K: Ord + Clone> Neg for Element<K> {
    type Output = Element<K>;
    fn neg(self) -> Element<K> {
        Element { terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl<K: Ord + Clone> Mul<Rational> for Element<K> {
    type Output = Element<K>;
    fn mul(self, rhs: Rational) -> Element<K> {
        self.scale(&rhs)
    }
}

impl<K: Ord + Clone + fmt::Debug> fmt::Debug for Element<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(|k| format!("{k:?}")))
    }
}

impl<K: Ord + Clone + fmt::Display> fmt::Display for Element<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(|k| k.to_string()))
    }
}

/// Σ cᵢ·eᵢ, normalized.
pub fn combine<K: Ord + Clone>(pairs: Vec<(Rational, Element<K>)>) -> Element<K> {
    let mut out = Element::zero();
    for (c, e) in pairs {
        out += e.scale(&c);
    }
    out
}
