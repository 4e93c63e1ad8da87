//! Basis-level composition rules for the seven families.
//!
//! `Com`, `As` and `PreLie` compose by direct substitution. The relational
//! families compose by scanning every object on the merged vertex set and
//! keeping those that restrict to the right factor on the window i..i+n-1 and
//! contract onto the left factor; the ∘ flavour additionally demands that the
//! window be convex.

use algebra_core::Element;
use combinatorics::{enumerate_orders, enumerate_qos, for_each_dg, Dg, Perm, Qo, Tree};

use crate::key::{guest_label, host_label, OpKey};

/// Word substitution: the letter `i` of `p` is replaced by the word of `q`
/// shifted into the window, all larger letters of `p` jump over it.
pub(crate) fn as_word(p: &Perm, i: usize, q: &Perm) -> Perm {
    let n = q.n();
    let mut out = Vec::with_capacity(p.n() + n - 1);
    for &a in p.images() {
        if a == i {
            out.extend(q.images().iter().map(|&b| guest_label(b, i)));
        } else {
            out.push(host_label(a, i, n));
        }
    }
    Perm::from_images(out).expect("substitution preserves bijectivity")
}

/// Insertion: vertex `i` of `p` is replaced by `q`, and the children that
/// hung off it are re-grafted onto vertices of `q` in all possible ways.
pub(crate) fn prelie_insert(p: &Tree, i: usize, q: &Tree) -> Element<OpKey> {
    let (pp, pl) = p.flatten();
    let (qp, ql) = q.flatten();
    let n = q.size();
    let v = pl.iter().position(|&l| l == i).expect("label present");
    let kids: Vec<usize> = (0..pp.len()).filter(|&u| pp[u] == Some(v)).collect();

    // combined node ids: p-nodes keep their flatten index, q-node w becomes
    // pp.len() + w; node v is dropped at assembly time via an id remap.
    let total = pp.len() + qp.len();
    let mut labels = vec![0; total];
    for (u, &l) in pl.iter().enumerate() {
        if u != v {
            labels[u] = host_label(l, i, n);
        }
    }
    for (w, &l) in ql.iter().enumerate() {
        labels[pp.len() + w] = guest_label(l, i);
    }

    let mut out = Element::zero();
    let mut choice = vec![0usize; kids.len()];
    loop {
        let mut parents = vec![None; total];
        for (u, &par) in pp.iter().enumerate() {
            if u != v && !kids.contains(&u) {
                parents[u] = par;
            }
        }
        for (c, &kid) in kids.iter().enumerate() {
            parents[kid] = Some(pp.len() + choice[c]);
        }
        for (w, &par) in qp.iter().enumerate() {
            parents[pp.len() + w] = match par {
                Some(t) => Some(pp.len() + t),
                None => pp[v],
            };
        }
        // squeeze out the dropped slot v
        let keep: Vec<usize> = (0..total).filter(|&u| u != v).collect();
        let pos = |u: usize| keep.iter().position(|&x| x == u).unwrap();
        let parents: Vec<Option<usize>> = keep.iter().map(|&u| parents[u].map(pos)).collect();
        let labels: Vec<usize> = keep.iter().map(|&u| labels[u]).collect();
        out += Element::basis(OpKey::T(Tree::assemble(&parents, &labels)));

        // next function kids -> vertices of q
        let mut c = 0;
        loop {
            if c == choice.len() {
                return out;
            }
            choice[c] += 1;
            if choice[c] < n {
                break;
            }
            choice[c] = 0;
            c += 1;
        }
    }
}

/// Quasi-order composition: all quasi-orders (or orders) on [m+n-1] whose
/// window restricts to `q` and contracts to `p`; the window must be convex.
pub(crate) fn qo_compose(p: &Qo, i: usize, q: &Qo, orders_only: bool) -> Element<OpKey> {
    let n = q.n();
    let big = p.n() + n - 1;
    let window: Vec<usize> = (i..i + n).collect();
    let candidates = if orders_only {
        enumerate_orders(big)
    } else {
        enumerate_qos(big)
    };
    let mut out = Element::zero();
    for r in candidates.iter() {
        if r.window_is_convex(i, n) && r.restrict(&window) == *q && r.contract_window(i, n) == *p {
            out += Element::basis(OpKey::Q(r.clone()));
        }
    }
    out
}

/// Digraph composition, in both flavours: ∇ drops the convexity condition.
pub(crate) fn dg_compose(
    p: &Dg,
    i: usize,
    q: &Dg,
    convex: bool,
    acyclic_only: bool,
) -> Element<OpKey> {
    let n = q.n();
    let big = p.n() + n - 1;
    let window: Vec<usize> = (i..i + n).collect();
    let mut out = Element::zero();
    for_each_dg(big, |g| {
        if acyclic_only && !g.is_acyclic() {
            return;
        }
        if convex && !g.window_is_convex(i, n) {
            return;
        }
        if g.restrict(&window) == *q && g.contract_window(i, n) == *p {
            out += Element::basis(OpKey::D(g.clone()));
        }
    });
    out
}
