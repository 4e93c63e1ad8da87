//! Worked coproduct, product, coaction and antipode values, checked term by
//! term against the closed forms for small arguments.

use algebra_core::{rat, Element, Monomial, Word};
use combinatorics::{IsoTree, Perm};
use hopf::{
    antipode, ck_coproduct, ec_coproduct, gl_star, pair_bullet, psi_word, rho, Bialgebra,
    BialgebraHandle, Coinv, DecPair, DualStar, HandleName,
};
use operads::{Descriptor, Family, OpKey};

fn e(n: usize) -> OpKey {
    OpKey::E(n)
}

fn w(letters: &[OpKey]) -> Word<OpKey> {
    Word(letters.to_vec())
}

fn leaf(c: usize) -> IsoTree {
    IsoTree::leaf(c)
}

fn l2(a: usize, b: usize) -> IsoTree {
    IsoTree::node(a, vec![leaf(b)])
}

fn l3(a: usize, b: usize, c: usize) -> IsoTree {
    IsoTree::node(a, vec![IsoTree::node(b, vec![leaf(c)])])
}

fn cor(a: usize, b: usize, c: usize) -> IsoTree {
    IsoTree::node(a, vec![leaf(b), leaf(c)])
}

fn dp(tree: IsoTree, out: usize) -> DecPair {
    DecPair::new(tree, out)
}

fn forest(trees: &[IsoTree]) -> Monomial<IsoTree> {
    Monomial::from_letters(trees.iter().cloned())
}

fn pairs(ps: &[DecPair]) -> Monomial<DecPair> {
    Monomial::from_letters(ps.iter().cloned())
}

// ---------------------------------------------------------------------------
// Faà di Bruno over the commutative family.

#[test]
fn com_dual_coproducts_match_the_closed_forms() {
    let dual = DualStar::new(Descriptor::circ(Family::Com));

    let mut exp = Element::zero();
    exp.add_term((w(&[e(1)]), w(&[e(1)])), rat(1));
    assert_eq!(dual.coproduct_word(&w(&[e(1)])).unwrap(), exp);

    let mut exp = Element::zero();
    exp.add_term((w(&[e(2)]), w(&[e(1), e(1)])), rat(1));
    exp.add_term((w(&[e(1)]), w(&[e(2)])), rat(1));
    assert_eq!(dual.coproduct_word(&w(&[e(2)])).unwrap(), exp);

    let mut exp = Element::zero();
    exp.add_term((w(&[e(1)]), w(&[])), rat(1));
    exp.add_term((w(&[]), w(&[e(1)])), rat(1));
    exp.add_term((w(&[e(1)]), w(&[e(1)])), rat(1));
    assert_eq!(dual.coproduct_prime_word(&w(&[e(1)])).unwrap(), exp);

    let mut exp = Element::zero();
    exp.add_term((w(&[e(2)]), w(&[])), rat(1));
    exp.add_term((w(&[]), w(&[e(2)])), rat(1));
    exp.add_term((w(&[e(2)]), w(&[e(1), e(1)])), rat(1));
    exp.add_term((w(&[e(1)]), w(&[e(2)])), rat(1));
    exp.add_term((w(&[e(2)]), w(&[e(1)])), rat(2));
    assert_eq!(dual.coproduct_prime_word(&w(&[e(2)])).unwrap(), exp);
}

#[test]
fn com_orbit_route_gives_the_same_coefficients() {
    let desc = Descriptor::circ(Family::Com);
    let dual = DualStar::new(desc.clone());
    let coinv = Coinv::new(desc);
    let m = |ks: &[OpKey]| Monomial::from_letters(ks.to_vec());

    let mut exp = Element::zero();
    exp.add_term((m(&[e(2)]), m(&[e(1), e(1)])), rat(1));
    exp.add_term((m(&[e(1)]), m(&[e(2)])), rat(1));
    assert_eq!(
        dual.coproduct_orbit(&coinv, &m(&[e(2)])).unwrap(),
        exp
    );

    let mut exp = Element::zero();
    exp.add_term((m(&[e(2)]), m(&[])), rat(1));
    exp.add_term((m(&[]), m(&[e(2)])), rat(1));
    exp.add_term((m(&[e(2)]), m(&[e(1), e(1)])), rat(1));
    exp.add_term((m(&[e(1)]), m(&[e(2)])), rat(1));
    exp.add_term((m(&[e(2)]), m(&[e(1)])), rat(2));
    assert_eq!(
        dual.coproduct_prime_orbit(&coinv, &m(&[e(2)])).unwrap(),
        exp
    );
}

#[test]
fn faa_di_bruno_antipode() {
    let desc = Descriptor::circ(Family::Com);
    let h = match BialgebraHandle::new(HandleName::BoldBDual, desc, None).unwrap() {
        BialgebraHandle::Word(h) => h,
        _ => unreachable!(),
    };
    let s2 = antipode(&h, &w(&[e(2)])).unwrap();
    assert_eq!(s2, Element::term(w(&[e(2)]), rat(-1)));
    let s3 = antipode(&h, &w(&[e(3)])).unwrap();
    let mut exp = Element::term(w(&[e(3)]), rat(-1));
    exp.add_term(w(&[e(2), e(2)]), rat(2));
    assert_eq!(s3, exp);
}

#[test]
fn psi_turns_full_coproduct_into_prime() {
    let dual = DualStar::new(Descriptor::circ(Family::Com));
    let desc = dual.desc();
    for word in [
        w(&[e(1)]),
        w(&[e(2)]),
        w(&[e(3)]),
        w(&[e(1), e(2)]),
        w(&[e(2), e(2)]),
    ] {
        // (Ψ ⊗ Ψ) Δ_*
        let mut lhs = Element::zero();
        for ((a, b), c) in dual.coproduct_word(&word).unwrap().iter() {
            let pa = psi_word(&desc, a);
            let pb = psi_word(&desc, b);
            for (ka, ca) in pa.iter() {
                for (kb, cb) in pb.iter() {
                    lhs.add_term((ka.clone(), kb.clone()), c * ca * cb);
                }
            }
        }
        // Δ'_* Ψ
        let mut rhs = Element::zero();
        for (k, c) in psi_word(&desc, &word).iter() {
            for (pair, c2) in dual.coproduct_prime_word(k).unwrap().iter() {
                rhs.add_term(pair.clone(), c * c2);
            }
        }
        assert_eq!(lhs, rhs, "intertwining fails at {word}");
    }
}

// ---------------------------------------------------------------------------
// The associative family: dual coproduct on permutation words.

#[test]
fn as_dual_coproduct_table_on_small_permutations() {
    let dual = DualStar::new(Descriptor::circ(Family::As));
    let p = |im: &[usize]| OpKey::P(Perm::from_images(im.to_vec()).unwrap());
    let check = |key: OpKey, rows: &[(OpKey, Vec<OpKey>)]| {
        let mut exp = Element::zero();
        for (pat, args) in rows {
            exp.add_term((w(&[pat.clone()]), Word(args.clone())), rat(1));
        }
        assert_eq!(
            dual.coproduct_word(&w(&[key.clone()])).unwrap(),
            exp,
            "table row {key}"
        );
    };
    let i1 = p(&[1]);
    let i2 = p(&[1, 2]);
    let t2 = p(&[2, 1]);

    check(i1.clone(), &[(i1.clone(), vec![i1.clone()])]);
    check(
        i2.clone(),
        &[
            (i2.clone(), vec![i1.clone(), i1.clone()]),
            (i1.clone(), vec![i2.clone()]),
        ],
    );
    check(
        t2.clone(),
        &[
            (t2.clone(), vec![i1.clone(), i1.clone()]),
            (i1.clone(), vec![t2.clone()]),
        ],
    );
    let ones = vec![i1.clone(), i1.clone(), i1.clone()];
    check(
        p(&[1, 2, 3]),
        &[
            (p(&[1, 2, 3]), ones.clone()),
            (i1.clone(), vec![p(&[1, 2, 3])]),
            (i2.clone(), vec![i2.clone(), i1.clone()]),
            (i2.clone(), vec![i1.clone(), i2.clone()]),
        ],
    );
    check(
        p(&[1, 3, 2]),
        &[
            (p(&[1, 3, 2]), ones.clone()),
            (i1.clone(), vec![p(&[1, 3, 2])]),
            (i2.clone(), vec![i1.clone(), t2.clone()]),
        ],
    );
    check(
        p(&[2, 1, 3]),
        &[
            (p(&[2, 1, 3]), ones.clone()),
            (i1.clone(), vec![p(&[2, 1, 3])]),
            (i2.clone(), vec![t2.clone(), i1.clone()]),
        ],
    );
    check(
        p(&[2, 3, 1]),
        &[
            (p(&[2, 3, 1]), ones.clone()),
            (i1.clone(), vec![p(&[2, 3, 1])]),
            (t2.clone(), vec![i2.clone(), i1.clone()]),
        ],
    );
    check(
        p(&[3, 1, 2]),
        &[
            (p(&[3, 1, 2]), ones.clone()),
            (i1.clone(), vec![p(&[3, 1, 2])]),
            (t2.clone(), vec![i1.clone(), i2.clone()]),
        ],
    );
    check(
        p(&[3, 2, 1]),
        &[
            (p(&[3, 2, 1]), ones.clone()),
            (i1.clone(), vec![p(&[3, 2, 1])]),
            (t2.clone(), vec![t2.clone(), i1.clone()]),
            (t2.clone(), vec![i1.clone(), t2.clone()]),
        ],
    );
}

// ---------------------------------------------------------------------------
// Grossman–Larson and Connes–Kreimer on decorated forests.

#[test]
fn grossman_larson_products() {
    let (i, j, k) = (1, 2, 3);
    let star = |a: &Monomial<IsoTree>, b: &Monomial<IsoTree>| gl_star(a, b).unwrap();

    let mut exp = Element::basis(forest(&[leaf(i), leaf(j)]));
    exp.add_term(forest(&[l2(i, j)]), rat(1));
    assert_eq!(star(&forest(&[leaf(i)]), &forest(&[leaf(j)])), exp);

    let mut exp = Element::basis(forest(&[leaf(i), l2(j, k)]));
    exp.add_term(forest(&[l3(i, j, k)]), rat(1));
    assert_eq!(star(&forest(&[leaf(i)]), &forest(&[l2(j, k)])), exp);

    let mut exp = Element::basis(forest(&[l2(i, j), leaf(k)]));
    exp.add_term(forest(&[cor(i, k, j)]), rat(1));
    exp.add_term(forest(&[l3(i, j, k)]), rat(1));
    assert_eq!(star(&forest(&[l2(i, j)]), &forest(&[leaf(k)])), exp);

    let mut exp = Element::basis(forest(&[leaf(i), leaf(j), leaf(k)]));
    exp.add_term(forest(&[l2(i, k), leaf(j)]), rat(1));
    exp.add_term(forest(&[leaf(i), l2(j, k)]), rat(1));
    assert_eq!(
        star(&forest(&[leaf(i), leaf(j)]), &forest(&[leaf(k)])),
        exp
    );

    let mut exp = Element::basis(forest(&[leaf(i), leaf(j), leaf(k)]));
    exp.add_term(forest(&[l2(i, j), leaf(k)]), rat(1));
    exp.add_term(forest(&[l2(i, k), leaf(j)]), rat(1));
    exp.add_term(forest(&[cor(i, k, j)]), rat(1));
    assert_eq!(
        star(&forest(&[leaf(i)]), &forest(&[leaf(j), leaf(k)])),
        exp
    );
}

#[test]
fn connes_kreimer_coproducts() {
    let (i, j, k) = (1, 2, 3);
    let one = Monomial::one;

    let x = forest(&[leaf(i)]);
    let mut exp = Element::zero();
    exp.add_term((x.clone(), one()), rat(1));
    exp.add_term((one(), x.clone()), rat(1));
    assert_eq!(ck_coproduct(&x), exp);

    let x = forest(&[l2(i, j)]);
    let mut exp = Element::zero();
    exp.add_term((x.clone(), one()), rat(1));
    exp.add_term((one(), x.clone()), rat(1));
    exp.add_term((forest(&[leaf(i)]), forest(&[leaf(j)])), rat(1));
    assert_eq!(ck_coproduct(&x), exp);

    let x = forest(&[cor(i, k, j)]);
    let mut exp = Element::zero();
    exp.add_term((x.clone(), one()), rat(1));
    exp.add_term((one(), x.clone()), rat(1));
    exp.add_term((forest(&[l2(i, j)]), forest(&[leaf(k)])), rat(1));
    exp.add_term((forest(&[l2(i, k)]), forest(&[leaf(j)])), rat(1));
    exp.add_term((forest(&[leaf(i)]), forest(&[leaf(j), leaf(k)])), rat(1));
    assert_eq!(ck_coproduct(&x), exp);

    let x = forest(&[l3(i, j, k)]);
    let mut exp = Element::zero();
    exp.add_term((x.clone(), one()), rat(1));
    exp.add_term((one(), x.clone()), rat(1));
    exp.add_term((forest(&[l2(i, j)]), forest(&[leaf(k)])), rat(1));
    exp.add_term((forest(&[leaf(i)]), forest(&[l2(j, k)])), rat(1));
    assert_eq!(ck_coproduct(&x), exp);
}

#[test]
fn ck_antipode_on_small_forests() {
    let h = match BialgebraHandle::new(
        HandleName::ADual,
        Descriptor::circ(Family::PreLie),
        Some(2),
    )
    .unwrap()
    {
        BialgebraHandle::Forest(h) => h,
        _ => unreachable!(),
    };
    let s1 = antipode(&h, &forest(&[leaf(1)])).unwrap();
    assert_eq!(s1, Element::term(forest(&[leaf(1)]), rat(-1)));
    let s2 = antipode(&h, &forest(&[l2(1, 2)])).unwrap();
    let mut exp = Element::term(forest(&[l2(1, 2)]), rat(-1));
    exp.add_term(forest(&[leaf(1), leaf(2)]), rat(1));
    assert_eq!(s2, exp);
}

// ---------------------------------------------------------------------------
// Decorated pairs: insertion, extraction-contraction, quotient, coaction.

#[test]
fn pair_insertion_products() {
    let i = 2;
    let (j, k) = (1, 2);

    let mut exp = Element::zero();
    exp.add_term(dp(cor(j, 2, k), i), rat(1));
    exp.add_term(dp(l3(j, k, 2), i), rat(1));
    assert_eq!(
        pair_bullet(&dp(l2(1, 2), i), &dp(l2(j, k), 1)),
        exp
    );

    let mut exp = Element::zero();
    exp.add_term(dp(l3(1, j, k), i), rat(1));
    assert_eq!(
        pair_bullet(&dp(l2(1, 2), i), &dp(l2(j, k), 2)),
        exp
    );

    let mut exp = Element::zero();
    exp.add_term(dp(cor(j, 1, k), i), rat(1));
    exp.add_term(dp(l3(j, k, 1), i), rat(1));
    exp.add_term(dp(l3(1, j, k), i), rat(1));
    assert_eq!(
        pair_bullet(&dp(l2(1, 1), i), &dp(l2(j, k), 1)),
        exp
    );

    assert!(pair_bullet(&dp(l2(1, 1), i), &dp(l2(j, k), 2)).is_zero());
}

#[test]
fn extraction_contraction_undecorated() {
    // single color: the four smallest trees
    let b = dp(leaf(1), 1);
    let l = dp(l2(1, 1), 1);
    let c = dp(cor(1, 1, 1), 1);
    let ll = dp(l3(1, 1, 1), 1);

    let cop = |x: &DecPair| ec_coproduct(&pairs(&[x.clone()]), 1);

    let mut exp = Element::zero();
    exp.add_term((pairs(&[b.clone()]), pairs(&[b.clone()])), rat(1));
    assert_eq!(cop(&b), exp);

    let mut exp = Element::zero();
    exp.add_term((pairs(&[l.clone()]), pairs(&[b.clone(), b.clone()])), rat(1));
    exp.add_term((pairs(&[b.clone()]), pairs(&[l.clone()])), rat(1));
    assert_eq!(cop(&l), exp);

    // ⊗-legs of the two middle terms coincide, so they merge with weight 2
    let mut exp = Element::zero();
    exp.add_term(
        (pairs(&[c.clone()]), pairs(&[b.clone(), b.clone(), b.clone()])),
        rat(1),
    );
    exp.add_term((pairs(&[l.clone()]), pairs(&[l.clone(), b.clone()])), rat(2));
    exp.add_term((pairs(&[b.clone()]), pairs(&[c.clone()])), rat(1));
    assert_eq!(cop(&c), exp);

    let mut exp = Element::zero();
    exp.add_term(
        (pairs(&[ll.clone()]), pairs(&[b.clone(), b.clone(), b.clone()])),
        rat(1),
    );
    exp.add_term((pairs(&[l.clone()]), pairs(&[l.clone(), b.clone()])), rat(2));
    exp.add_term((pairs(&[b.clone()]), pairs(&[ll.clone()])), rat(1));
    assert_eq!(cop(&ll), exp);
}

#[test]
fn prelie_orbit_route_matches_the_undecorated_displays() {
    let desc = Descriptor::circ(Family::PreLie);
    let dual = DualStar::new(desc.clone());
    let coinv = Coinv::new(desc.clone());
    let unit = desc.unit_key();

    let l_rep = coinv.reps(2).unwrap()[0].clone();
    let reps3 = coinv.reps(3).unwrap();
    assert_eq!(reps3.len(), 2);
    let is_corolla = |k: &OpKey| match k {
        OpKey::T(t) => t.children().len() == 2,
        _ => false,
    };
    let c_rep = reps3.iter().find(|k| is_corolla(k)).unwrap().clone();
    let ll_rep = reps3.iter().find(|k| !is_corolla(k)).unwrap().clone();

    let m = |ks: &[OpKey]| Monomial::from_letters(ks.to_vec());

    let mut exp = Element::zero();
    exp.add_term((m(&[l_rep.clone()]), m(&[unit.clone(), unit.clone()])), rat(1));
    exp.add_term((m(&[unit.clone()]), m(&[l_rep.clone()])), rat(1));
    assert_eq!(dual.coproduct_orbit(&coinv, &m(&[l_rep.clone()])).unwrap(), exp);

    let mut exp = Element::zero();
    exp.add_term(
        (m(&[c_rep.clone()]), m(&[unit.clone(), unit.clone(), unit.clone()])),
        rat(1),
    );
    exp.add_term(
        (m(&[l_rep.clone()]), m(&[l_rep.clone(), unit.clone()])),
        rat(2),
    );
    exp.add_term((m(&[unit.clone()]), m(&[c_rep.clone()])), rat(1));
    assert_eq!(dual.coproduct_orbit(&coinv, &m(&[c_rep.clone()])).unwrap(), exp);

    let mut exp = Element::zero();
    exp.add_term(
        (m(&[ll_rep.clone()]), m(&[unit.clone(), unit.clone(), unit.clone()])),
        rat(1),
    );
    exp.add_term(
        (m(&[l_rep.clone()]), m(&[l_rep.clone(), unit.clone()])),
        rat(2),
    );
    exp.add_term((m(&[unit.clone()]), m(&[ll_rep.clone()])), rat(1));
    assert_eq!(dual.coproduct_orbit(&coinv, &m(&[ll_rep.clone()])).unwrap(), exp);
}

#[test]
fn colored_extraction_displays() {
    let n = 2;
    let cop = |x: DecPair| ec_coproduct(&pairs(&[x]), n);

    // single vertex
    let (a, d) = (1, 2);
    let mut exp = Element::zero();
    for p in 1..=n {
        exp.add_term(
            (pairs(&[dp(leaf(p), d)]), pairs(&[dp(leaf(a), p)])),
            rat(1),
        );
    }
    assert_eq!(cop(dp(leaf(a), d)), exp);

    // two vertices
    let (a, b, d) = (1, 2, 1);
    let mut exp = Element::zero();
    for p in 1..=n {
        for q in 1..=n {
            exp.add_term(
                (
                    pairs(&[dp(l2(p, q), d)]),
                    pairs(&[dp(leaf(a), p), dp(leaf(b), q)]),
                ),
                rat(1),
            );
        }
        exp.add_term((pairs(&[dp(leaf(p), d)]), pairs(&[dp(l2(a, b), p)])), rat(1));
    }
    assert_eq!(cop(dp(l2(a, b), d)), exp);

    // corolla with children b, c
    let (a, b, c, d) = (1, 2, 2, 1);
    let mut exp = Element::zero();
    for p in 1..=n {
        for q in 1..=n {
            for r in 1..=n {
                exp.add_term(
                    (
                        pairs(&[dp(cor(p, q, r), d)]),
                        pairs(&[dp(leaf(a), p), dp(leaf(b), q), dp(leaf(c), r)]),
                    ),
                    rat(1),
                );
            }
            exp.add_term(
                (
                    pairs(&[dp(l2(p, q), d)]),
                    pairs(&[dp(l2(a, b), p), dp(leaf(c), q)]),
                ),
                rat(1),
            );
            exp.add_term(
                (
                    pairs(&[dp(l2(p, q), d)]),
                    pairs(&[dp(l2(a, c), p), dp(leaf(b), q)]),
                ),
                rat(1),
            );
        }
        exp.add_term(
            (pairs(&[dp(leaf(p), d)]), pairs(&[dp(cor(a, b, c), p)])),
            rat(1),
        );
    }
    assert_eq!(cop(dp(cor(a, b, c), d)), exp);

    // ladder on three vertices; the root block keeps the root color slot
    let (a, b, c, d) = (1, 2, 1, 2);
    let mut exp = Element::zero();
    for p in 1..=n {
        for q in 1..=n {
            for r in 1..=n {
                exp.add_term(
                    (
                        pairs(&[dp(l3(p, q, r), d)]),
                        pairs(&[dp(leaf(a), p), dp(leaf(b), q), dp(leaf(c), r)]),
                    ),
                    rat(1),
                );
            }
            exp.add_term(
                (
                    pairs(&[dp(l2(p, q), d)]),
                    pairs(&[dp(l2(a, b), p), dp(leaf(c), q)]),
                ),
                rat(1),
            );
            exp.add_term(
                (
                    pairs(&[dp(l2(p, q), d)]),
                    pairs(&[dp(leaf(a), p), dp(l2(b, c), q)]),
                ),
                rat(1),
            );
        }
        exp.add_term(
            (pairs(&[dp(leaf(p), d)]), pairs(&[dp(l3(a, b, c), p)])),
            rat(1),
        );
    }
    assert_eq!(cop(dp(l3(a, b, c), d)), exp);
}

#[test]
fn quotient_coproduct_displays() {
    let n = 2;
    let h = match BialgebraHandle::new(
        HandleName::BDual,
        Descriptor::circ(Family::PreLie),
        Some(n),
    )
    .unwrap()
    {
        BialgebraHandle::Pair(h) => h,
        _ => unreachable!(),
    };
    let one = Monomial::one;

    let x = pairs(&[dp(l2(1, 2), 1)]);
    let mut exp = Element::zero();
    exp.add_term((x.clone(), one()), rat(1));
    exp.add_term((one(), x.clone()), rat(1));
    assert_eq!(h.coproduct(&x).unwrap(), exp);

    let (a, b, c, d) = (1, 2, 2, 1);
    let x = pairs(&[dp(cor(a, b, c), d)]);
    let mut exp = Element::zero();
    exp.add_term((x.clone(), one()), rat(1));
    exp.add_term((one(), x.clone()), rat(1));
    for p in 1..=n {
        exp.add_term(
            (pairs(&[dp(l2(p, c), d)]), pairs(&[dp(l2(a, b), p)])),
            rat(1),
        );
        exp.add_term(
            (pairs(&[dp(l2(p, b), d)]), pairs(&[dp(l2(a, c), p)])),
            rat(1),
        );
    }
    assert_eq!(h.coproduct(&x).unwrap(), exp);

    let (a, b, c, d) = (1, 2, 1, 2);
    let x = pairs(&[dp(l3(a, b, c), d)]);
    let mut exp = Element::zero();
    exp.add_term((x.clone(), one()), rat(1));
    exp.add_term((one(), x.clone()), rat(1));
    for p in 1..=n {
        exp.add_term(
            (pairs(&[dp(l2(p, c), d)]), pairs(&[dp(l2(a, b), p)])),
            rat(1),
        );
        exp.add_term(
            (pairs(&[dp(l2(a, p), d)]), pairs(&[dp(l2(b, c), p)])),
            rat(1),
        );
    }
    assert_eq!(h.coproduct(&x).unwrap(), exp);
}

#[test]
fn coaction_displays() {
    let n = 2;

    let a = 1;
    let mut exp = Element::zero();
    for p in 1..=n {
        exp.add_term((forest(&[leaf(p)]), pairs(&[dp(leaf(a), p)])), rat(1));
    }
    assert_eq!(rho(&forest(&[leaf(a)]), n), exp);

    let (a, b) = (1, 2);
    let mut exp = Element::zero();
    for p in 1..=n {
        for q in 1..=n {
            exp.add_term(
                (
                    forest(&[l2(p, q)]),
                    pairs(&[dp(leaf(a), p), dp(leaf(b), q)]),
                ),
                rat(1),
            );
        }
        exp.add_term((forest(&[leaf(p)]), pairs(&[dp(l2(a, b), p)])), rat(1));
    }
    assert_eq!(rho(&forest(&[l2(a, b)]), n), exp);

    let (a, b, c) = (1, 2, 2);
    let mut exp = Element::zero();
    for p in 1..=n {
        for q in 1..=n {
            for r in 1..=n {
                exp.add_term(
                    (
                        forest(&[cor(p, q, r)]),
                        pairs(&[dp(leaf(a), p), dp(leaf(b), q), dp(leaf(c), r)]),
                    ),
                    rat(1),
                );
            }
            exp.add_term(
                (
                    forest(&[l2(p, q)]),
                    pairs(&[dp(l2(a, b), p), dp(leaf(c), q)]),
                ),
                rat(1),
            );
            exp.add_term(
                (
                    forest(&[l2(p, q)]),
                    pairs(&[dp(l2(a, c), p), dp(leaf(b), q)]),
                ),
                rat(1),
            );
        }
        exp.add_term((forest(&[leaf(p)]), pairs(&[dp(cor(a, b, c), p)])), rat(1));
    }
    assert_eq!(rho(&forest(&[cor(a, b, c)]), n), exp);

    let (a, b, c) = (1, 2, 1);
    let mut exp = Element::zero();
    for p in 1..=n {
        for q in 1..=n {
            for r in 1..=n {
                exp.add_term(
                    (
                        forest(&[l3(p, q, r)]),
                        pairs(&[dp(leaf(a), p), dp(leaf(b), q), dp(leaf(c), r)]),
                    ),
                    rat(1),
                );
            }
            exp.add_term(
                (
                    forest(&[l2(p, q)]),
                    pairs(&[dp(l2(a, b), p), dp(leaf(c), q)]),
                ),
                rat(1),
            );
            exp.add_term(
                (
                    forest(&[l2(p, q)]),
                    pairs(&[dp(leaf(a), p), dp(l2(b, c), q)]),
                ),
                rat(1),
            );
        }
        exp.add_term((forest(&[leaf(p)]), pairs(&[dp(l3(a, b, c), p)])), rat(1));
    }
    assert_eq!(rho(&forest(&[l3(a, b, c)]), n), exp);
}
