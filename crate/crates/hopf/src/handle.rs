//! Named bialgebra handles over a fixed operad family.
//!
//! A handle picks a carrier (words or commutative monomials of operad keys,
//! forests of colored trees, or monomials of decorated pairs), a product and
//! a coproduct. The `Bialgebra` trait is what the antipode, the law checks
//! and the verification suites program against; `BialgebraHandle` is the
//! name-indexed façade used by the command line.
//!
//! Graded pieces of the non-connected carriers are infinite-dimensional once
//! unit letters are allowed in, so `basis` enumerates the transversal with
//! positive-arity letters only. Unit-letter elements are still valid keys
//! for every operation.

use std::fmt;

use algebra_core::{rat, Element, Monomial, Rational, Word};
use combinatorics::{positive_compositions, IsoTree};
use induced_structures::{star_sym, star_tensor, BraceContext};
use operads::{Descriptor, Family, OpKey};

use crate::dual::DualStar;
use crate::forest::{ck_coproduct, colored_forests, colored_trees, gl_star, sym_coproduct};
use crate::orbit::Coinv;
use crate::pairs::{ec_coproduct, pair_star, reduce_pair_monomial, DecPair};
use crate::HopfError;

pub trait Bialgebra {
    type Key: Ord + Clone + fmt::Display;

    fn name(&self) -> String;
    fn unit(&self) -> Self::Key;
    fn degree(&self, k: &Self::Key) -> usize;
    fn counit(&self, k: &Self::Key) -> Rational;
    fn product(&self, a: &Self::Key, b: &Self::Key) -> Result<Element<Self::Key>, HopfError>;
    fn coproduct(&self, k: &Self::Key)
        -> Result<Element<(Self::Key, Self::Key)>, HopfError>;
    fn basis(&self, degree: usize) -> Result<Vec<Self::Key>, HopfError>;
    fn connected(&self) -> bool;
}

/// Bilinear extension of the product to elements.
pub fn product_elem<B: Bialgebra + ?Sized>(
    b: &B,
    x: &Element<B::Key>,
    y: &Element<B::Key>,
) -> Result<Element<B::Key>, HopfError> {
    let mut out = Element::zero();
    for (kx, cx) in x.iter() {
        for (ky, cy) in y.iter() {
            out += b.product(kx, ky)?.scale(&(cx * cy));
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HandleName {
    D,
    B,
    BoldD,
    BoldB,
    DDual,
    BDual,
    BoldDDual,
    BoldBDual,
    A,
    ADual,
}

impl HandleName {
    pub fn as_str(&self) -> &'static str {
        match self {
            HandleName::D => "D",
            HandleName::B => "B",
            HandleName::BoldD => "DD",
            HandleName::BoldB => "BB",
            HandleName::DDual => "D*",
            HandleName::BDual => "B*",
            HandleName::BoldDDual => "DD*",
            HandleName::BoldBDual => "BB*",
            HandleName::A => "A",
            HandleName::ADual => "A*",
        }
    }

    pub fn from_name(s: &str) -> Option<HandleName> {
        Some(match s {
            "D" => HandleName::D,
            "B" => HandleName::B,
            "DD" => HandleName::BoldD,
            "BB" => HandleName::BoldB,
            "D*" => HandleName::DDual,
            "B*" => HandleName::BDual,
            "DD*" => HandleName::BoldDDual,
            "BB*" => HandleName::BoldBDual,
            "A" => HandleName::A,
            "A*" => HandleName::ADual,
            _ => return None,
        })
    }

    /// Positive handles reject unit letters in their keys.
    fn positive(&self) -> bool {
        matches!(
            self,
            HandleName::B | HandleName::BDual | HandleName::BoldB | HandleName::BoldBDual
        )
    }
}

impl fmt::Display for HandleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoproductKind {
    Dec,
    Sym,
    Ck,
    Ec,
    DualStar,
    DualStarReduced,
    DualStarPrime,
}

impl CoproductKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CoproductKind::Dec => "dec",
            CoproductKind::Sym => "sym",
            CoproductKind::Ck => "ck",
            CoproductKind::Ec => "ec",
            CoproductKind::DualStar => "dual_star",
            CoproductKind::DualStarReduced => "dual_star_reduced",
            CoproductKind::DualStarPrime => "dual_star_prime",
        }
    }

    pub fn from_name(s: &str) -> Option<CoproductKind> {
        Some(match s {
            "dec" => CoproductKind::Dec,
            "sym" => CoproductKind::Sym,
            "ck" => CoproductKind::Ck,
            "ec" => CoproductKind::Ec,
            "dual_star" => CoproductKind::DualStar,
            "dual_star_reduced" => CoproductKind::DualStarReduced,
            "dual_star_prime" => CoproductKind::DualStarPrime,
            _ => return None,
        })
    }
}

impl fmt::Display for CoproductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn multisets<L: Clone>(pool: &[(usize, L)], total: usize) -> Vec<Vec<L>> {
    fn rec<L: Clone>(
        pool: &[(usize, L)],
        start: usize,
        remaining: usize,
        cur: &mut Vec<L>,
        out: &mut Vec<Vec<L>>,
    ) {
        if remaining == 0 {
            out.push(cur.clone());
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
    let mut out = Vec::new();
    let mut cur = Vec::new();
    rec(pool, 0, total, &mut cur, &mut out);
    out
}

// ---------------------------------------------------------------------------
// Words of operad keys: 𝐃, 𝐁 and their duals.

pub struct WordHandle {
    name: HandleName,
    kind: CoproductKind,
    ctx: BraceContext,
    dual: DualStar,
}

impl WordHandle {
    pub fn new(name: HandleName, desc: Descriptor) -> Result<Self, HopfError> {
        let kind = match name {
            HandleName::BoldD | HandleName::BoldB => CoproductKind::Dec,
            HandleName::BoldDDual => CoproductKind::DualStar,
            HandleName::BoldBDual => CoproductKind::DualStarReduced,
            _ => {
                return Err(HopfError::BadHandle {
                    name: name.as_str(),
                    got: "a word carrier",
                    needs: "one of DD, BB, DD*, BB*",
                })
            }
        };
        Ok(WordHandle {
            name,
            kind,
            ctx: BraceContext::new(desc.clone()),
            dual: DualStar::new(desc),
        })
    }

    pub fn handle_name(&self) -> HandleName {
        self.name
    }

    pub fn kind(&self) -> CoproductKind {
        self.kind
    }

    pub fn admits(&self, kind: CoproductKind) -> bool {
        match self.name {
            HandleName::BoldD | HandleName::BoldB => kind == CoproductKind::Dec,
            HandleName::BoldDDual => {
                kind == CoproductKind::DualStar || kind == CoproductKind::DualStarPrime
            }
            HandleName::BoldBDual => kind == CoproductKind::DualStarReduced,
            _ => false,
        }
    }

    pub fn with_kind(mut self, kind: CoproductKind) -> Result<Self, HopfError> {
        if !self.admits(kind) {
            return Err(HopfError::KindMismatch {
                handle: Bialgebra::name(&self),
                kind: kind.as_str(),
            });
        }
        self.kind = kind;
        Ok(self)
    }

    fn check(&self, w: &Word<OpKey>) -> Result<(), HopfError> {
        let desc = self.ctx.descriptor();
        for letter in &w.0 {
            let arity = desc.validate_key(letter)?;
            if self.name.positive() && arity < 2 {
                return Err(HopfError::NotPositive {
                    handle: Bialgebra::name(self),
                    arity,
                });
            }
        }
        Ok(())
    }
}

impl Bialgebra for WordHandle {
    type Key = Word<OpKey>;

    fn name(&self) -> String {
        format!("{}({})", self.name, self.ctx.descriptor().family().name())
    }

    fn unit(&self) -> Word<OpKey> {
        Word::empty()
    }

    fn degree(&self, k: &Word<OpKey>) -> usize {
        k.0.iter().map(|l| l.arity() - 1).sum()
    }

    fn counit(&self, k: &Word<OpKey>) -> Rational {
        match (self.name, self.kind) {
            (HandleName::BoldDDual, CoproductKind::DualStar) => self.dual.counit_word(k),
            _ => {
                if k.is_empty() {
                    rat(1)
                } else {
                    rat(0)
                }
            }
        }
    }

    fn product(&self, a: &Word<OpKey>, b: &Word<OpKey>) -> Result<Element<Word<OpKey>>, HopfError> {
        self.check(a)?;
        self.check(b)?;
        match self.name {
            HandleName::BoldD | HandleName::BoldB => Ok(star_tensor(&self.ctx, a, b)?),
            _ => Ok(Element::basis(a.concat(b))),
        }
    }

    fn coproduct(
        &self,
        k: &Word<OpKey>,
    ) -> Result<Element<(Word<OpKey>, Word<OpKey>)>, HopfError> {
        self.check(k)?;
        match self.kind {
            CoproductKind::Dec => {
                let mut out = Element::zero();
                for i in 0..=k.len() {
                    out.add_term(
                        (Word(k.0[..i].to_vec()), Word(k.0[i..].to_vec())),
                        rat(1),
                    );
                }
                Ok(out)
            }
            CoproductKind::DualStar => self.dual.coproduct_word(k),
            CoproductKind::DualStarPrime => self.dual.coproduct_prime_word(k),
            CoproductKind::DualStarReduced => self.dual.coproduct_reduced_word(k),
            _ => unreachable!("kind admissibility is checked on construction"),
        }
    }

    fn basis(&self, degree: usize) -> Result<Vec<Word<OpKey>>, HopfError> {
        if degree == 0 {
            return Ok(vec![Word::empty()]);
        }
        let desc = self.ctx.descriptor();
        let mut out = Vec::new();
        for parts in 1..=degree {
            for comp in positive_compositions(degree, parts) {
                let mut words: Vec<Vec<OpKey>> = vec![Vec::new()];
                for &d in &comp {
                    let letters = desc.basis(d + 1)?;
                    let mut next = Vec::with_capacity(words.len() * letters.len());
                    for w in &words {
                        for l in &letters {
                            let mut w2 = w.clone();
                            w2.push(l.clone());
                            next.push(w2);
                        }
                    }
                    words = next;
                }
                out.extend(words.into_iter().map(Word));
            }
        }
        Ok(out)
    }

    fn connected(&self) -> bool {
        matches!(self.name, HandleName::BoldB | HandleName::BoldBDual)
    }
}

// ---------------------------------------------------------------------------
// Commutative monomials of orbit representatives: D, B and their duals.

pub struct MonoHandle {
    name: HandleName,
    kind: CoproductKind,
    ctx: BraceContext,
    dual: DualStar,
    coinv: Coinv,
}

impl MonoHandle {
    pub fn new(name: HandleName, desc: Descriptor) -> Result<Self, HopfError> {
        let kind = match name {
            HandleName::D | HandleName::B => CoproductKind::Sym,
            HandleName::DDual => CoproductKind::DualStar,
            HandleName::BDual => CoproductKind::DualStarReduced,
            _ => {
                return Err(HopfError::BadHandle {
                    name: name.as_str(),
                    got: "a symmetric carrier",
                    needs: "one of D, B, D*, B*",
                })
            }
        };
        Ok(MonoHandle {
            name,
            kind,
            ctx: BraceContext::new(desc.clone()),
            dual: DualStar::new(desc.clone()),
            coinv: Coinv::new(desc),
        })
    }

    pub fn handle_name(&self) -> HandleName {
        self.name
    }

    pub fn kind(&self) -> CoproductKind {
        self.kind
    }

    pub fn coinv(&self) -> &Coinv {
        &self.coinv
    }

    pub fn admits(&self, kind: CoproductKind) -> bool {
        match self.name {
            HandleName::D | HandleName::B => kind == CoproductKind::Sym,
            HandleName::DDual => {
                kind == CoproductKind::DualStar || kind == CoproductKind::DualStarPrime
            }
            HandleName::BDual => kind == CoproductKind::DualStarReduced,
            _ => false,
        }
    }

    pub fn with_kind(mut self, kind: CoproductKind) -> Result<Self, HopfError> {
        if !self.admits(kind) {
            return Err(HopfError::KindMismatch {
                handle: Bialgebra::name(&self),
                kind: kind.as_str(),
            });
        }
        self.kind = kind;
        Ok(self)
    }

    fn check(&self, m: &Monomial<OpKey>) -> Result<(), HopfError> {
        let desc = self.ctx.descriptor();
        for letter in m.iter_letters() {
            let arity = desc.validate_key(letter)?;
            if self.name.positive() && arity < 2 {
                return Err(HopfError::NotPositive {
                    handle: Bialgebra::name(self),
                    arity,
                });
            }
        }
        Ok(())
    }

    fn project(&self, e: Element<Monomial<OpKey>>) -> Result<Element<Monomial<OpKey>>, HopfError> {
        let mut out = Element::zero();
        for (k, c) in e.iter() {
            out.add_term(self.coinv.project(k)?, c.clone());
        }
        Ok(out)
    }
}

impl Bialgebra for MonoHandle {
    type Key = Monomial<OpKey>;

    fn name(&self) -> String {
        format!("{}({})", self.name, self.ctx.descriptor().family().name())
    }

    fn unit(&self) -> Monomial<OpKey> {
        Monomial::one()
    }

    fn degree(&self, k: &Monomial<OpKey>) -> usize {
        k.factors().iter().map(|(l, m)| (l.arity() - 1) * m).sum()
    }

    fn counit(&self, k: &Monomial<OpKey>) -> Rational {
        match (self.name, self.kind) {
            (HandleName::DDual, CoproductKind::DualStar) => self.dual.counit_monomial(k),
            _ => {
                if k.is_one() {
                    rat(1)
                } else {
                    rat(0)
                }
            }
        }
    }

    fn product(
        &self,
        a: &Monomial<OpKey>,
        b: &Monomial<OpKey>,
    ) -> Result<Element<Monomial<OpKey>>, HopfError> {
        self.check(a)?;
        self.check(b)?;
        let a = self.coinv.project(a)?;
        let b = self.coinv.project(b)?;
        match self.name {
            HandleName::D | HandleName::B => self.project(star_sym(&self.ctx, &a, &b)?),
            _ => Ok(Element::basis(a.mul(&b))),
        }
    }

    fn coproduct(
        &self,
        k: &Monomial<OpKey>,
    ) -> Result<Element<(Monomial<OpKey>, Monomial<OpKey>)>, HopfError> {
        self.check(k)?;
        let k = self.coinv.project(k)?;
        match self.kind {
            CoproductKind::Sym => Ok(sym_coproduct(&k)),
            CoproductKind::DualStar => self.dual.coproduct_orbit(&self.coinv, &k),
            CoproductKind::DualStarPrime => self.dual.coproduct_prime_orbit(&self.coinv, &k),
            CoproductKind::DualStarReduced => self.dual.coproduct_reduced_orbit(&self.coinv, &k),
            _ => unreachable!("kind admissibility is checked on construction"),
        }
    }

    fn basis(&self, degree: usize) -> Result<Vec<Monomial<OpKey>>, HopfError> {
        if degree == 0 {
            return Ok(vec![Monomial::one()]);
        }
        let mut pool: Vec<(usize, OpKey)> = Vec::new();
        for d in 1..=degree {
            for r in self.coinv.reps(d + 1)? {
                pool.push((d, r));
            }
        }
        Ok(multisets(&pool, degree)
            .into_iter()
            .map(Monomial::from_letters)
            .collect())
    }

    fn connected(&self) -> bool {
        matches!(self.name, HandleName::B | HandleName::BDual)
    }
}

// ---------------------------------------------------------------------------
// Forests of colored rooted trees: A and its graded dual.

pub struct ForestHandle {
    name: HandleName,
    kind: CoproductKind,
    colors: usize,
}

impl ForestHandle {
    pub fn new(name: HandleName, colors: usize) -> Result<Self, HopfError> {
        if colors == 0 || colors > 26 {
            return Err(HopfError::ColorRange { color: colors, colors: 26 });
        }
        let kind = match name {
            HandleName::A => CoproductKind::Sym,
            HandleName::ADual => CoproductKind::Ck,
            _ => {
                return Err(HopfError::BadHandle {
                    name: name.as_str(),
                    got: "a forest carrier",
                    needs: "A or A*",
                })
            }
        };
        Ok(ForestHandle { name, kind, colors })
    }

    pub fn handle_name(&self) -> HandleName {
        self.name
    }

    pub fn kind(&self) -> CoproductKind {
        self.kind
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn admits(&self, kind: CoproductKind) -> bool {
        match self.name {
            HandleName::A => kind == CoproductKind::Sym,
            HandleName::ADual => kind == CoproductKind::Ck,
            _ => false,
        }
    }

    pub fn with_kind(self, kind: CoproductKind) -> Result<Self, HopfError> {
        if !self.admits(kind) {
            return Err(HopfError::KindMismatch {
                handle: Bialgebra::name(&self),
                kind: kind.as_str(),
            });
        }
        Ok(self)
    }

    fn check(&self, m: &Monomial<IsoTree>) -> Result<(), HopfError> {
        for t in m.iter_letters() {
            let c = t.max_color();
            if c > self.colors {
                return Err(HopfError::ColorRange { color: c, colors: self.colors });
            }
        }
        Ok(())
    }
}

impl Bialgebra for ForestHandle {
    type Key = Monomial<IsoTree>;

    fn name(&self) -> String {
        format!("{}(PreLie,N={})", self.name, self.colors)
    }

    fn unit(&self) -> Monomial<IsoTree> {
        Monomial::one()
    }

    fn degree(&self, k: &Monomial<IsoTree>) -> usize {
        k.factors().iter().map(|(t, m)| t.size() * m).sum()
    }

    fn counit(&self, k: &Monomial<IsoTree>) -> Rational {
        if k.is_one() {
            rat(1)
        } else {
            rat(0)
        }
    }

    fn product(
        &self,
        a: &Monomial<IsoTree>,
        b: &Monomial<IsoTree>,
    ) -> Result<Element<Monomial<IsoTree>>, HopfError> {
        self.check(a)?;
        self.check(b)?;
        match self.name {
            HandleName::A => gl_star(a, b),
            _ => Ok(Element::basis(a.mul(b))),
        }
    }

    fn coproduct(
        &self,
        k: &Monomial<IsoTree>,
    ) -> Result<Element<(Monomial<IsoTree>, Monomial<IsoTree>)>, HopfError> {
        self.check(k)?;
        match self.kind {
            CoproductKind::Sym => Ok(sym_coproduct(k)),
            CoproductKind::Ck => Ok(ck_coproduct(k)),
            _ => unreachable!("kind admissibility is checked on construction"),
        }
    }

    fn basis(&self, degree: usize) -> Result<Vec<Monomial<IsoTree>>, HopfError> {
        Ok(colored_forests(degree, self.colors))
    }

    fn connected(&self) -> bool {
        true
    }
}

// ---------------------------------------------------------------------------
// Monomials of decorated pairs: colored D, B and their duals.

pub struct PairHandle {
    name: HandleName,
    kind: CoproductKind,
    colors: usize,
}

impl PairHandle {
    pub fn new(name: HandleName, colors: usize) -> Result<Self, HopfError> {
        if colors == 0 || colors > 26 {
            return Err(HopfError::ColorRange { color: colors, colors: 26 });
        }
        let kind = match name {
            HandleName::D | HandleName::B => CoproductKind::Sym,
            HandleName::DDual | HandleName::BDual => CoproductKind::Ec,
            _ => {
                return Err(HopfError::BadHandle {
                    name: name.as_str(),
                    got: "a decorated-pair carrier",
                    needs: "one of D, B, D*, B*",
                })
            }
        };
        Ok(PairHandle { name, kind, colors })
    }

    pub fn handle_name(&self) -> HandleName {
        self.name
    }

    pub fn kind(&self) -> CoproductKind {
        self.kind
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn admits(&self, kind: CoproductKind) -> bool {
        match self.name {
            HandleName::D | HandleName::B => kind == CoproductKind::Sym,
            HandleName::DDual | HandleName::BDual => kind == CoproductKind::Ec,
            _ => false,
        }
    }

    pub fn with_kind(self, kind: CoproductKind) -> Result<Self, HopfError> {
        if !self.admits(kind) {
            return Err(HopfError::KindMismatch {
                handle: Bialgebra::name(&self),
                kind: kind.as_str(),
            });
        }
        Ok(self)
    }

    fn check(&self, m: &Monomial<DecPair>) -> Result<(), HopfError> {
        for p in m.iter_letters() {
            let c = p.tree.max_color().max(p.out);
            if c > self.colors || p.out == 0 {
                return Err(HopfError::ColorRange { color: c, colors: self.colors });
            }
            if self.name.positive() && p.tree.size() < 2 {
                return Err(HopfError::NotPositive {
                    handle: Bialgebra::name(self),
                    arity: p.tree.size(),
                });
            }
        }
        Ok(())
    }
}

impl Bialgebra for PairHandle {
    type Key = Monomial<DecPair>;

    fn name(&self) -> String {
        format!("{}(PreLie,N={})", self.name, self.colors)
    }

    fn unit(&self) -> Monomial<DecPair> {
        Monomial::one()
    }

    fn degree(&self, k: &Monomial<DecPair>) -> usize {
        k.factors().iter().map(|(p, m)| (p.tree.size() - 1) * m).sum()
    }

    fn counit(&self, k: &Monomial<DecPair>) -> Rational {
        match self.name {
            HandleName::DDual => {
                if k.iter_letters().all(|p| p.tree.size() == 1 && p.tree.color == p.out) {
                    rat(1)
                } else {
                    rat(0)
                }
            }
            _ => {
                if k.is_one() {
                    rat(1)
                } else {
                    rat(0)
                }
            }
        }
    }

    fn product(
        &self,
        a: &Monomial<DecPair>,
        b: &Monomial<DecPair>,
    ) -> Result<Element<Monomial<DecPair>>, HopfError> {
        self.check(a)?;
        self.check(b)?;
        match self.name {
            HandleName::D | HandleName::B => pair_star(a, b),
            _ => Ok(Element::basis(a.mul(b))),
        }
    }

    fn coproduct(
        &self,
        k: &Monomial<DecPair>,
    ) -> Result<Element<(Monomial<DecPair>, Monomial<DecPair>)>, HopfError> {
        self.check(k)?;
        match self.kind {
            CoproductKind::Sym => Ok(sym_coproduct(k)),
            CoproductKind::Ec => {
                let full = ec_coproduct(k, self.colors);
                if self.name == HandleName::BDual {
                    let mut out = Element::zero();
                    for ((l, r), c) in full.iter() {
                        if let (Some(l2), Some(r2)) =
                            (reduce_pair_monomial(l), reduce_pair_monomial(r))
                        {
                            out.add_term((l2, r2), c.clone());
                        }
                    }
                    Ok(out)
                } else {
                    Ok(full)
                }
            }
            _ => unreachable!("kind admissibility is checked on construction"),
        }
    }

    fn basis(&self, degree: usize) -> Result<Vec<Monomial<DecPair>>, HopfError> {
        if degree == 0 {
            return Ok(vec![Monomial::one()]);
        }
        let mut pool: Vec<(usize, DecPair)> = Vec::new();
        for size in 2..=degree + 1 {
            for t in colored_trees(size, self.colors) {
                for out in 1..=self.colors {
                    pool.push((size - 1, DecPair::new(t.clone(), out)));
                }
            }
        }
        Ok(multisets(&pool, degree)
            .into_iter()
            .map(Monomial::from_letters)
            .collect())
    }

    fn connected(&self) -> bool {
        matches!(self.name, HandleName::B | HandleName::BDual)
    }
}

// ---------------------------------------------------------------------------

/// A named bialgebra over a descriptor, built from its CLI-facing name.
pub enum BialgebraHandle {
    Word(WordHandle),
    Mono(MonoHandle),
    Forest(ForestHandle),
    Pair(PairHandle),
}

impl BialgebraHandle {
    /// `colors` selects the decorated variants; they exist for the pre-Lie
    /// family only, as do A and A*.
    pub fn new(
        name: HandleName,
        desc: Descriptor,
        colors: Option<usize>,
    ) -> Result<Self, HopfError> {
        let prelie = desc.family() == Family::PreLie;
        match name {
            HandleName::A | HandleName::ADual => {
                if !prelie {
                    return Err(HopfError::BadHandle {
                        name: name.as_str(),
                        got: desc.family().name(),
                        needs: "the prelie family",
                    });
                }
                Ok(BialgebraHandle::Forest(ForestHandle::new(
                    name,
                    colors.unwrap_or(1),
                )?))
            }
            HandleName::BoldD | HandleName::BoldB | HandleName::BoldDDual
            | HandleName::BoldBDual => {
                if colors.is_some() {
                    return Err(HopfError::BadHandle {
                        name: name.as_str(),
                        got: "colors",
                        needs: "an uncolored word carrier",
                    });
                }
                Ok(BialgebraHandle::Word(WordHandle::new(name, desc)?))
            }
            _ => match colors {
                Some(n) => {
                    if !prelie {
                        return Err(HopfError::BadHandle {
                            name: name.as_str(),
                            got: desc.family().name(),
                            needs: "the prelie family when colored",
                        });
                    }
                    Ok(BialgebraHandle::Pair(PairHandle::new(name, n)?))
                }
                None => Ok(BialgebraHandle::Mono(MonoHandle::new(name, desc)?)),
            },
        }
    }

    pub fn with_kind(self, kind: CoproductKind) -> Result<Self, HopfError> {
        Ok(match self {
            BialgebraHandle::Word(h) => BialgebraHandle::Word(h.with_kind(kind)?),
            BialgebraHandle::Mono(h) => BialgebraHandle::Mono(h.with_kind(kind)?),
            BialgebraHandle::Forest(h) => BialgebraHandle::Forest(h.with_kind(kind)?),
            BialgebraHandle::Pair(h) => BialgebraHandle::Pair(h.with_kind(kind)?),
        })
    }

    pub fn name(&self) -> String {
        match self {
            BialgebraHandle::Word(h) => Bialgebra::name(h),
            BialgebraHandle::Mono(h) => Bialgebra::name(h),
            BialgebraHandle::Forest(h) => Bialgebra::name(h),
            BialgebraHandle::Pair(h) => Bialgebra::name(h),
        }
    }

    pub fn kind(&self) -> CoproductKind {
        match self {
            BialgebraHandle::Word(h) => h.kind(),
            BialgebraHandle::Mono(h) => h.kind(),
            BialgebraHandle::Forest(h) => h.kind(),
            BialgebraHandle::Pair(h) => h.kind(),
        }
    }

    pub fn as_word(&self) -> Option<&WordHandle> {
        match self {
            BialgebraHandle::Word(h) => Some(h),
            _ => None,
        }
    }

    pub fn as_mono(&self) -> Option<&MonoHandle> {
        match self {
            BialgebraHandle::Mono(h) => Some(h),
            _ => None,
        }
    }

    pub fn as_forest(&self) -> Option<&ForestHandle> {
        match self {
            BialgebraHandle::Forest(h) => Some(h),
            _ => None,
        }
    }

    pub fn as_pair(&self) -> Option<&PairHandle> {
        match self {
            BialgebraHandle::Pair(h) => Some(h),
            _ => None,
        }
    }
}
