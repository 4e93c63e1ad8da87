//! Forests of colored rooted trees: the Grossman–Larson product, the two
//! forest coproducts, the automorphism-weighted pairing between them, and
//! basis enumeration.

use std::collections::BTreeSet;

use algebra_core::{factorial, lin2, rat, Element, Monomial, Rational};
use combinatorics::{enumerate_trees, IsoTree};
use induced_structures::{grafting, star_sym};

use crate::HopfError;

pub fn aut_tree(t: &IsoTree) -> u64 {
    let mut total = 1u64;
    let kids = t.children();
    let mut i = 0;
    while i < kids.len() {
        let mut j = i;
        while j < kids.len() && kids[j] == kids[i] {
            j += 1;
        }
        let mult = (j - i) as u64;
        let child = aut_tree(&kids[i]);
        total *= (1..=mult).product::<u64>();
        for _ in 0..mult {
            total *= child;
        }
        i = j;
    }
    total
}

pub fn aut_forest(f: &Monomial<IsoTree>) -> u64 {
    let mut total = 1u64;
    for (t, mult) in f.factors() {
        total *= (1..=*mult as u64).product::<u64>();
        let a = aut_tree(t);
        for _ in 0..*mult {
            total *= a;
        }
    }
    total
}

/// Grossman–Larson product: graft the right forest onto the left one in all
/// ways, including leaving trees free.
pub fn gl_star(
    a: &Monomial<IsoTree>,
    b: &Monomial<IsoTree>,
) -> Result<Element<Monomial<IsoTree>>, HopfError> {
    Ok(star_sym(&grafting(), a, b)?)
}

/// Coproduct with primitive letters: binomial splits of each power.
pub fn sym_coproduct<K: Ord + Clone>(m: &Monomial<K>) -> Element<(Monomial<K>, Monomial<K>)> {
    let mut acc = Element::basis((Monomial::one(), Monomial::one()));
    for (k, mult) in m.factors() {
        let mut dx: Element<(Monomial<K>, Monomial<K>)> = Element::zero();
        for i in 0..=*mult {
            let c = factorial(*mult) / (factorial(i) * factorial(*mult - i));
            let left = Monomial::from_letters(std::iter::repeat(k.clone()).take(i));
            let right = Monomial::from_letters(std::iter::repeat(k.clone()).take(*mult - i));
            dx.add_term((left, right), c);
        }
        acc = lin2(&acc, &dx, |(a1, a2), (b1, b2)| {
            Element::basis((a1.mul(b1), a2.mul(b2)))
        });
    }
    acc
}

/// Admissible cuts of one tree: trunk (if the root survives) and cut branches.
fn cuts(t: &IsoTree) -> Element<(Option<IsoTree>, Monomial<IsoTree>)> {
    let mut acc: Element<(Vec<IsoTree>, Monomial<IsoTree>)> =
        Element::basis((Vec::new(), Monomial::one()));
    for child in t.children() {
        let cc = cuts(child);
        acc = lin2(&acc, &cc, |(kept, br), (trunk, br2)| {
            let mut kept2 = kept.clone();
            if let Some(tr) = trunk {
                kept2.push(tr.clone());
            }
            Element::basis((kept2, br.mul(br2)))
        });
    }
    let mut out: Element<(Option<IsoTree>, Monomial<IsoTree>)> = acc.map_keys(|(kept, br)| {
        (Some(IsoTree::node(t.color, kept.clone())), br.clone())
    });
    out.add_term((None, Monomial::single(t.clone())), rat(1));
    out
}

/// Connes–Kreimer-style coproduct, trunk on the left.
pub fn ck_coproduct(
    f: &Monomial<IsoTree>,
) -> Element<(Monomial<IsoTree>, Monomial<IsoTree>)> {
    let mut acc = Element::basis((Monomial::one(), Monomial::one()));
    for t in f.iter_letters() {
        let dt = cuts(t).map_keys(|(trunk, branches)| {
            let left = match trunk {
                Some(tr) => Monomial::single(tr.clone()),
                None => Monomial::one(),
            };
            (left, branches.clone())
        });
        acc = lin2(&acc, &dt, |(a1, a2), (b1, b2)| {
            Element::basis((a1.mul(b1), a2.mul(b2)))
        });
    }
    acc
}

/// ⟨F, G⟩ = δ_{F,G} |Aut F|.
pub fn forest_pairing(a: &Monomial<IsoTree>, b: &Monomial<IsoTree>) -> Rational {
    if a == b {
        rat(aut_forest(a) as i64)
    } else {
        rat(0)
    }
}

/// Isomorphism classes of rooted trees with `n` vertices colored in 1..=colors.
pub fn colored_trees(n: usize, colors: usize) -> Vec<IsoTree> {
    assert!(colors >= 1 && colors <= 26, "colors must lie in 1..=26");
    if n == 0 {
        return Vec::new();
    }
    let mut seen = BTreeSet::new();
    for t in enumerate_trees(n).iter() {
        let (parents, _) = t.flatten();
        let mut painting = vec![1usize; n];
        loop {
            seen.insert(IsoTree::assemble(&parents, &painting));
            let mut i = 0;
            loop {
                if i == n {
                    break;
                }
                painting[i] += 1;
                if painting[i] <= colors {
                    break;
                }
                painting[i] = 1;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    seen.into_iter().collect()
}

/// Forests (commutative monomials of colored trees) with `total` vertices.
pub fn colored_forests(total: usize, colors: usize) -> Vec<Monomial<IsoTree>> {
    let mut pool: Vec<(usize, IsoTree)> = Vec::new();
    for n in 1..=total {
        for t in colored_trees(n, colors) {
            pool.push((n, t));
        }
    }
    let mut out = Vec::new();
    let mut cur: Vec<IsoTree> = Vec::new();
    fn rec(
        pool: &[(usize, IsoTree)],
        start: usize,
        remaining: usize,
        cur: &mut Vec<IsoTree>,
        out: &mut Vec<Monomial<IsoTree>>,
    ) {
        if remaining == 0 {
            out.push(Monomial::from_letters(cur.iter().cloned()));
            return;
        }
        for i in start..pool.len() {
            if pool[i].0 <= remaining {
                cur.push(pool[i].1.clone());
                rec(pool, i, remaining - pool[i].0, cur, out);
                cur.pop();
            }
        }
    }
    rec(&pool, 0, total, &mut cur, &mut out);
    out
}
