//! Decorated pairs (t, j): a colored rooted tree together with an output
//! color. These are the basis letters of the colored bialgebras attached to
//! the pre-Lie operad, where composition substitutes a tree into a vertex of
//! matching color and the dual coproduct extracts connected blocks.

use std::collections::BTreeMap;
use std::fmt;

use algebra_core::{lin2, rat, Element, Monomial};
use combinatorics::IsoTree;
use induced_structures::{star_sym, PreLieBrackets};

use crate::HopfError;

/// A colored tree up to isomorphism with an output color.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct DecPair {
    pub tree: IsoTree,
    pub out: usize,
}

impl DecPair {
    pub fn new(tree: IsoTree, out: usize) -> Self {
        DecPair { tree, out }
    }
}

impl fmt::Display for DecPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.tree, self.out)
    }
}

/// Pairs are graded by their number of internal edges.
pub fn pair_degree(p: &DecPair) -> usize {
    p.tree.size() - 1
}

/// Attach each branch, in every possible way, to a vertex of the host.
fn graft_all(host: &IsoTree, branches: &[IsoTree]) -> Element<IsoTree> {
    let (hp, hc) = host.flatten();
    let m = hp.len();
    let k = branches.len();
    let flat: Vec<(Vec<Option<usize>>, Vec<usize>)> =
        branches.iter().map(IsoTree::flatten).collect();
    let mut out = Element::zero();
    let mut phi = vec![0usize; k];
    loop {
        let mut parents = hp.clone();
        let mut colors = hc.clone();
        for (i, (bp, bc)) in flat.iter().enumerate() {
            let off = parents.len();
            for (j, p) in bp.iter().enumerate() {
                parents.push(match p {
                    Some(q) => Some(q + off),
                    None => Some(phi[i]),
                });
                colors.push(bc[j]);
            }
        }
        out.add_term(IsoTree::assemble(&parents, &colors), rat(1));
        let mut i = 0;
        loop {
            if i == k {
                return out;
            }
            phi[i] += 1;
            if phi[i] < m {
                break;
            }
            phi[i] = 0;
            i += 1;
        }
    }
}

fn subst_walk(
    t: &IsoTree,
    idx: &mut usize,
    assign: &BTreeMap<usize, IsoTree>,
) -> Element<IsoTree> {
    let me = *idx;
    *idx += 1;
    let mut combos: Element<Vec<IsoTree>> = Element::basis(Vec::new());
    for child in t.children() {
        let ce = subst_walk(child, idx, assign);
        combos = lin2(&combos, &ce, |list, sub| {
            let mut l2 = list.clone();
            l2.push(sub.clone());
            Element::basis(l2)
        });
    }
    match assign.get(&me) {
        None => combos.lin(|list| Element::basis(IsoTree::node(t.color, list.clone()))),
        Some(s) => combos.lin(|list| graft_all(s, list)),
    }
}

/// Substitute trees into the vertices named by preorder index. The children
/// of a replaced vertex reattach independently to every vertex of the
/// substitute; the vertex's own color is forgotten.
fn multi_subst(t: &IsoTree, assign: &BTreeMap<usize, IsoTree>) -> Element<IsoTree> {
    let mut idx = 0;
    subst_walk(t, &mut idx, assign)
}

/// (t, d) • (s, e): substitute s into every vertex of t colored e.
pub fn pair_bullet(a: &DecPair, b: &DecPair) -> Element<DecPair> {
    let (_, colors) = a.tree.flatten();
    let mut out = Element::zero();
    for (v, cv) in colors.iter().enumerate() {
        if *cv == b.out {
            let assign = BTreeMap::from([(v, b.tree.clone())]);
            out += multi_subst(&a.tree, &assign)
                .map_keys(|t| DecPair::new(t.clone(), a.out));
        }
    }
    out
}

/// Monoid-style product of the symmetric algebra on pairs, induced by •.
pub fn pair_star(
    a: &Monomial<DecPair>,
    b: &Monomial<DecPair>,
) -> Result<Element<Monomial<DecPair>>, HopfError> {
    let brackets = PreLieBrackets::new(|x: &DecPair, y: &DecPair| Ok(pair_bullet(x, y)));
    Ok(star_sym(&brackets, a, b)?)
}

/// Every way to extract connected blocks from a tree: for each subset of
/// kept edges and each coloring of the resulting blocks, the contracted
/// tree (blocks as vertices, new colors) and the extracted blocks (original
/// colors, output color of each block as assigned).
fn extractions(t: &IsoTree, colors_n: usize) -> Vec<(IsoTree, Monomial<DecPair>)> {
    let (parents, colors) = t.flatten();
    let n = parents.len();
    assert!(n <= 60, "tree too large for edge-subset enumeration");
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << (n - 1)) {
        let mut block_root = vec![0usize; n];
        for v in 1..n {
            let keeps = mask >> (v - 1) & 1 == 1;
            block_root[v] = if keeps { block_root[parents[v].unwrap()] } else { v };
        }
        let roots: Vec<usize> = (0..n).filter(|&v| block_root[v] == v).collect();
        let q = roots.len();
        let mut root_pos = BTreeMap::new();
        for (i, &r) in roots.iter().enumerate() {
            root_pos.insert(r, i);
        }
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); q];
        for v in 0..n {
            members[root_pos[&block_root[v]]].push(v);
        }
        let mut extracted = Vec::with_capacity(q);
        for ms in &members {
            let mut local = BTreeMap::new();
            for (i, &v) in ms.iter().enumerate() {
                local.insert(v, i);
            }
            let ps: Vec<Option<usize>> = ms
                .iter()
                .map(|&v| {
                    if v == ms[0] {
                        None
                    } else {
                        Some(local[&parents[v].unwrap()])
                    }
                })
                .collect();
            let cs: Vec<usize> = ms.iter().map(|&v| colors[v]).collect();
            extracted.push(IsoTree::assemble(&ps, &cs));
        }
        let contracted_parents: Vec<Option<usize>> = roots
            .iter()
            .map(|&r| parents[r].map(|p| root_pos[&block_root[p]]))
            .collect();
        let mut painting = vec![1usize; q];
        loop {
            let contracted = IsoTree::assemble(&contracted_parents, &painting);
            let blocks = Monomial::from_letters(
                extracted
                    .iter()
                    .zip(&painting)
                    .map(|(b, &c)| DecPair::new(b.clone(), c)),
            );
            out.push((contracted, blocks));
            let mut i = 0;
            loop {
                if i == q {
                    break;
                }
                painting[i] += 1;
                if painting[i] <= colors_n {
                    break;
                }
                painting[i] = 1;
                i += 1;
            }
            if i == q {
                break;
            }
        }
    }
    out
}

/// Extraction–contraction coproduct on monomials of pairs.
pub fn ec_coproduct(
    m: &Monomial<DecPair>,
    colors_n: usize,
) -> Element<(Monomial<DecPair>, Monomial<DecPair>)> {
    let mut acc = Element::basis((Monomial::one(), Monomial::one()));
    for letter in m.iter_letters() {
        let mut dx = Element::zero();
        for (contracted, blocks) in extractions(&letter.tree, colors_n) {
            dx.add_term(
                (
                    Monomial::single(DecPair::new(contracted, letter.out)),
                    blocks,
                ),
                rat(1),
            );
        }
        acc = lin2(&acc, &dx, |(a1, a2), (b1, b2)| {
            Element::basis((a1.mul(b1), a2.mul(b2)))
        });
    }
    acc
}

/// Coaction on forests: contracted forest on the left, extracted blocks on
/// the right.
pub fn rho(
    forest: &Monomial<IsoTree>,
    colors_n: usize,
) -> Element<(Monomial<IsoTree>, Monomial<DecPair>)> {
    let mut acc = Element::basis((Monomial::one(), Monomial::one()));
    for tree in forest.iter_letters() {
        let mut dx = Element::zero();
        for (contracted, blocks) in extractions(tree, colors_n) {
            dx.add_term((Monomial::single(contracted), blocks), rat(1));
        }
        acc = lin2(&acc, &dx, |(a1, a2), (b1, b2)| {
            Element::basis((a1.mul(b1), a2.mul(b2)))
        });
    }
    acc
}

/// Quotient map killing mismatched single-vertex pairs and dropping the
/// matched ones; `None` means the whole monomial dies.
pub fn reduce_pair_monomial(m: &Monomial<DecPair>) -> Option<Monomial<DecPair>> {
    let mut letters = Vec::new();
    for p in m.iter_letters() {
        if p.tree.size() == 1 {
            if p.tree.color == p.out {
                continue;
            }
            return None;
        }
        letters.push(p.clone());
    }
    Some(Monomial::from_letters(letters))
}

/// Right action of monomials of pairs on forests: each pair letter is
/// substituted into a distinct vertex of matching color, simultaneously.
pub fn action(forest: &Monomial<IsoTree>, m: &Monomial<DecPair>) -> Element<Monomial<IsoTree>> {
    let factors: Vec<IsoTree> = forest.iter_letters().cloned().collect();
    let vertex_colors: Vec<Vec<usize>> = factors.iter().map(|t| t.flatten().1).collect();
    let letters: Vec<DecPair> = m.iter_letters().cloned().collect();

    fn go(
        factors: &[IsoTree],
        vertex_colors: &[Vec<usize>],
        letters: &[DecPair],
        j: usize,
        assign: &mut Vec<BTreeMap<usize, IsoTree>>,
        out: &mut Element<Monomial<IsoTree>>,
    ) {
        if j == letters.len() {
            let mut acc = Element::basis(Monomial::one());
            for (i, t) in factors.iter().enumerate() {
                let ei = multi_subst(t, &assign[i]);
                acc = lin2(&acc, &ei, |mono, sub| {
                    Element::basis(mono.mul(&Monomial::single(sub.clone())))
                });
            }
            *out += acc;
            return;
        }
        for i in 0..factors.len() {
            for (v, cv) in vertex_colors[i].iter().enumerate() {
                if *cv == letters[j].out && !assign[i].contains_key(&v) {
                    assign[i].insert(v, letters[j].tree.clone());
                    go(factors, vertex_colors, letters, j + 1, assign, out);
                    assign[i].remove(&v);
                }
            }
        }
    }

    let mut out = Element::zero();
    let mut assign = vec![BTreeMap::new(); factors.len()];
    go(&factors, &vertex_colors, &letters, 0, &mut assign, &mut out);
    out
}
