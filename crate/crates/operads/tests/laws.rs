//! The operad axioms, checked exhaustively over small bases in every family
//! and both composition flavours.

use algebra_core::Element;
use combinatorics::{block_perm, enumerate_perms, Perm};
use operads::{Descriptor, Family, Mode, OpKey};

fn descriptors() -> Vec<Descriptor> {
    let mut out: Vec<Descriptor> = Family::ALL.iter().map(|&f| Descriptor::circ(f)).collect();
    out.push(Descriptor::new(Family::Sg, Mode::Nabla).unwrap());
    out.push(Descriptor::new(Family::NcSg, Mode::Nabla).unwrap());
    out
}

fn basis_elems(desc: Descriptor, n: usize) -> Vec<Element<OpKey>> {
    desc.basis(n)
        .unwrap()
        .into_iter()
        .map(Element::basis)
        .collect()
}

/// All picks of one item per pool.
fn tuples<T: Clone>(pools: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![vec![]];
    for pool in pools {
        let mut next = Vec::with_capacity(out.len() * pool.len());
        for partial in &out {
            for item in pool {
                let mut v = partial.clone();
                v.push(item.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

fn assoc_bound(family: Family) -> usize {
    match family {
        Family::Com | Family::As | Family::PreLie => 6,
        _ => 5,
    }
}

#[test]
fn nested_associativity() {
    for desc in descriptors() {
        let total = assoc_bound(desc.family());
        for m in 1..=total - 2 {
            for n in 1..=total - 1 - m {
                for l in 1..=total - m - n {
                    for p in basis_elems(desc, m) {
                        for q in basis_elems(desc, n) {
                            for r in basis_elems(desc, l) {
                                for i in 1..=m {
                                    for j in 1..=n {
                                        let pq = desc.compose(&p, i, &q).unwrap();
                                        let lhs = desc.compose(&pq, i - 1 + j, &r).unwrap();
                                        let qr = desc.compose(&q, j, &r).unwrap();
                                        let rhs = desc.compose(&p, i, &qr).unwrap();
                                        assert_eq!(
                                            lhs, rhs,
                                            "{desc}: ({p} o_{i} {q}) o_{} {r}",
                                            i - 1 + j
                                        );
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn parallel_associativity() {
    for desc in descriptors() {
        let total = assoc_bound(desc.family());
        for m in 2..=total - 2 {
            for n in 1..=total - 1 - m {
                for l in 1..=total - m - n {
                    for p in basis_elems(desc, m) {
                        for q in basis_elems(desc, n) {
                            for r in basis_elems(desc, l) {
                                for i in 1..=m {
                                    for j in i + 1..=m {
                                        let pq = desc.compose(&p, i, &q).unwrap();
                                        let lhs = desc.compose(&pq, j + n - 1, &r).unwrap();
                                        let pr = desc.compose(&p, j, &r).unwrap();
                                        let rhs = desc.compose(&pr, i, &q).unwrap();
                                        assert_eq!(
                                            lhs, rhs,
                                            "{desc}: disjoint slots {i},{j} on {p}"
                                        );
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

/// Under circ, splicing the unit into a slot whose singleton window is not
/// convex annihilates; everywhere else the unit axioms hold on the nose.
fn unit_drops(desc: Descriptor, key: &OpKey, i: usize) -> bool {
    if desc.mode() == Mode::Nabla {
        return false;
    }
    match key {
        OpKey::Q(q) => !q.window_is_convex(i, 1),
        OpKey::D(d) => !d.window_is_convex(i, 1),
        _ => false,
    }
}

#[test]
fn unit_axioms() {
    for desc in descriptors() {
        let unit = desc.unit();
        let max = match desc.family() {
            Family::Sg | Family::NcSg => 3,
            _ => 4,
        };
        for n in 1..=max {
            for key in desc.basis(n).unwrap() {
                let p = Element::basis(key.clone());
                assert_eq!(desc.compose(&unit, 1, &p).unwrap(), p, "{desc}: I o_1 {p}");
                for i in 1..=n {
                    let got = desc.compose(&p, i, &unit).unwrap();
                    let want = if unit_drops(desc, &key, i) {
                        Element::zero()
                    } else {
                        p.clone()
                    };
                    assert_eq!(got, want, "{desc}: {p} o_{i} I");
                }
            }
        }
    }
}

fn equiv_shapes(family: Family) -> Vec<Vec<usize>> {
    match family {
        Family::Com | Family::As | Family::PreLie => vec![
            vec![2],
            vec![1, 1],
            vec![2, 1],
            vec![1, 2],
            vec![2, 2],
            vec![1, 1, 2],
        ],
        Family::QOrd | Family::Ord => vec![vec![1, 1], vec![2, 1], vec![1, 2], vec![2, 2]],
        Family::Sg | Family::NcSg => vec![vec![1, 1], vec![2, 1], vec![1, 2]],
    }
}

#[test]
fn equivariance_inner() {
    for desc in descriptors() {
        for shape in equiv_shapes(desc.family()) {
            let m = shape.len();
            let pools: Vec<Vec<Element<OpKey>>> =
                shape.iter().map(|&k| basis_elems(desc, k)).collect();
            let tau_pools: Vec<Vec<Perm>> = shape.iter().map(|&k| enumerate_perms(k)).collect();
            for p in basis_elems(desc, m) {
                for args in tuples(&pools) {
                    let base = desc.gamma(&p, &args).unwrap();
                    for taus in tuples(&tau_pools) {
                        let twisted: Vec<Element<OpKey>> = args
                            .iter()
                            .zip(&taus)
                            .map(|(a, t)| desc.act(a, t).unwrap())
                            .collect();
                        let lhs = desc.gamma(&p, &twisted).unwrap();
                        let tau = Perm::direct_sum(&taus);
                        let rhs = desc.act(&base, &tau).unwrap();
                        assert_eq!(lhs, rhs, "{desc}: inner twist of {p} by {taus:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn equivariance_outer() {
    for desc in descriptors() {
        for shape in equiv_shapes(desc.family()) {
            let m = shape.len();
            let pools: Vec<Vec<Element<OpKey>>> =
                shape.iter().map(|&k| basis_elems(desc, k)).collect();
            for p in basis_elems(desc, m) {
                for sigma in enumerate_perms(m) {
                    let p_sigma = desc.act(&p, &sigma).unwrap();
                    let inv = sigma.inverse();
                    for args in tuples(&pools) {
                        let lhs = desc.gamma(&p_sigma, &args).unwrap();
                        let permuted: Vec<Element<OpKey>> =
                            (1..=m).map(|s| args[inv.image(s) - 1].clone()).collect();
                        let core = desc.gamma(&p, &permuted).unwrap();
                        let blocks = block_perm(&sigma, &shape);
                        let rhs = desc.act(&core, &blocks).unwrap();
                        assert_eq!(lhs, rhs, "{desc}: outer twist of {p} by {sigma}");
                    }
                }
            }
        }
    }
}

#[test]
fn action_is_a_right_action() {
    for desc in descriptors() {
        for n in 1..=3 {
            let perms = enumerate_perms(n);
            for key in desc.basis(n).unwrap() {
                let x = Element::basis(key);
                assert_eq!(desc.act(&x, &Perm::identity(n)).unwrap(), x);
                for sigma in &perms {
                    let once = desc.act(&x, sigma).unwrap();
                    for tau in &perms {
                        let lhs = desc.act(&once, tau).unwrap();
                        let rhs = desc.act(&x, &sigma.compose(tau)).unwrap();
                        assert_eq!(lhs, rhs, "{desc}: ({x}^{sigma})^{tau}");
                    }
                }
            }
        }
    }
}
