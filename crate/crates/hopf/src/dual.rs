//! Coproducts on duals, computed by transposing composition.
//!
//! Δ_* on a dual generator x* collects every full composition p∘(q₁,…,q_m)
//! containing x, emitting p* ⊗ q₁*…q_m*; Δ′_* does the same with braces
//! ⟨p; q₁…q_l⟩ (partial compositions over increasing slots) plus the two
//! boundary terms x*⊗1 and 1⊗x*. Both extend multiplicatively. The rows per
//! arity are expensive, so they are built once and cached.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use algebra_core::{lin2, rat, Element, Monomial, Rational, Word};
use combinatorics::positive_compositions;
use induced_structures::BraceContext;
use operads::{Descriptor, OpKey};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::orbit::Coinv;
use crate::HopfError;

/// One tensor term of a generator coproduct: pattern, arguments, weight.
type Row = (OpKey, Vec<OpKey>, Rational);
type Table = Arc<BTreeMap<OpKey, Vec<Row>>>;

pub struct DualStar {
    ctx: BraceContext,
    full: Mutex<BTreeMap<usize, Table>>,
    partial: Mutex<BTreeMap<usize, Table>>,
}

/// All tuples (q₁,…,q_k) with prescribed arities.
fn arg_tuples(desc: &Descriptor, arities: &[usize]) -> Result<Vec<Vec<OpKey>>, HopfError> {
    let mut tuples: Vec<Vec<OpKey>> = vec![Vec::new()];
    for &a in arities {
        let basis = desc.basis(a)?;
        let mut next = Vec::with_capacity(tuples.len() * basis.len());
        for t in &tuples {
            for q in &basis {
                let mut t2 = t.clone();
                t2.push(q.clone());
                next.push(t2);
            }
        }
        tuples = next;
    }
    Ok(tuples)
}

impl DualStar {
    pub fn new(desc: Descriptor) -> Self {
        DualStar {
            ctx: BraceContext::new(desc),
            full: Mutex::new(BTreeMap::new()),
            partial: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn desc(&self) -> Descriptor {
        self.ctx.descriptor()
    }

    fn rows_for_pattern(
        &self,
        p: &OpKey,
        n: usize,
        partial: bool,
    ) -> Result<Vec<(OpKey, Row)>, HopfError> {
        let desc = self.desc();
        let m = desc.validate_key(p)?;
        let mut out = Vec::new();
        let lengths: Vec<usize> = if partial { (1..=m).collect() } else { vec![m] };
        for l in lengths {
            // arity of the result is m - l + Σ arity(qᵢ)
            if n + l < m + 1 {
                continue;
            }
            for comp in positive_compositions(n - m + l, l) {
                for qs in arg_tuples(&desc, &comp)? {
                    let args: Vec<Element<OpKey>> =
                        qs.iter().cloned().map(Element::basis).collect();
                    let image = if partial {
                        self.ctx.brace(&Element::basis(p.clone()), &args)?
                    } else {
                        desc.gamma(&Element::basis(p.clone()), &args)?
                    };
                    for (x, c) in image.iter() {
                        out.push((x.clone(), (p.clone(), qs.clone(), c.clone())));
                    }
                }
            }
        }
        Ok(out)
    }

    fn table(&self, n: usize, partial: bool) -> Result<Table, HopfError> {
        let cache = if partial { &self.partial } else { &self.full };
        if let Some(t) = cache.lock().unwrap().get(&n) {
            return Ok(t.clone());
        }
        let desc = self.desc();
        let mut patterns = Vec::new();
        for m in 1..=n {
            patterns.extend(desc.basis(m)?);
        }
        #[cfg(feature = "parallel")]
        let per_pattern: Result<Vec<_>, HopfError> = patterns
            .par_iter()
            .map(|p| self.rows_for_pattern(p, n, partial))
            .collect();
        #[cfg(not(feature = "parallel"))]
        let per_pattern: Result<Vec<_>, HopfError> = patterns
            .iter()
            .map(|p| self.rows_for_pattern(p, n, partial))
            .collect();
        let mut by_key: BTreeMap<OpKey, Vec<Row>> = BTreeMap::new();
        for rows in per_pattern? {
            for (x, row) in rows {
                by_key.entry(x).or_default().push(row);
            }
        }
        let table: Table = Arc::new(by_key);
        cache.lock().unwrap().insert(n, table.clone());
        Ok(table)
    }

    /// Δ_* of one dual letter, as pattern ⊗ argument word.
    fn letter_full(&self, x: &OpKey) -> Result<Element<(Word<OpKey>, Word<OpKey>)>, HopfError> {
        let n = self.desc().validate_key(x)?;
        let table = self.table(n, false)?;
        let mut out = Element::zero();
        if let Some(rows) = table.get(x) {
            for (p, qs, c) in rows {
                out.add_term((Word::single(p.clone()), Word(qs.clone())), c.clone());
            }
        }
        Ok(out)
    }

    /// Δ′_* of one dual letter, boundary terms included.
    fn letter_prime(&self, x: &OpKey) -> Result<Element<(Word<OpKey>, Word<OpKey>)>, HopfError> {
        let n = self.desc().validate_key(x)?;
        let table = self.table(n, true)?;
        let mut out = Element::zero();
        out.add_term((Word::single(x.clone()), Word::empty()), rat(1));
        out.add_term((Word::empty(), Word::single(x.clone())), rat(1));
        if let Some(rows) = table.get(x) {
            for (p, qs, c) in rows {
                out.add_term((Word::single(p.clone()), Word(qs.clone())), c.clone());
            }
        }
        Ok(out)
    }

    fn word_multiplicative(
        &self,
        w: &Word<OpKey>,
        letter: impl Fn(&OpKey) -> Result<Element<(Word<OpKey>, Word<OpKey>)>, HopfError>,
    ) -> Result<Element<(Word<OpKey>, Word<OpKey>)>, HopfError> {
        let mut acc = Element::basis((Word::empty(), Word::empty()));
        for x in &w.0 {
            let dx = letter(x)?;
            acc = lin2(&acc, &dx, |(a1, a2), (b1, b2)| {
                Element::basis((a1.concat(b1), a2.concat(b2)))
            });
        }
        Ok(acc)
    }

    pub fn coproduct_word(
        &self,
        w: &Word<OpKey>,
    ) -> Result<Element<(Word<OpKey>, Word<OpKey>)>, HopfError> {
        self.word_multiplicative(w, |x| self.letter_full(x))
    }

    pub fn coproduct_prime_word(
        &self,
        w: &Word<OpKey>,
    ) -> Result<Element<(Word<OpKey>, Word<OpKey>)>, HopfError> {
        self.word_multiplicative(w, |x| self.letter_prime(x))
    }

    /// The quotient sending every arity-1 dual letter to 1.
    pub fn reduce_word(&self, w: &Word<OpKey>) -> Word<OpKey> {
        let unit = self.desc().unit_key();
        Word(w.0.iter().filter(|k| **k != unit).cloned().collect())
    }

    pub fn coproduct_reduced_word(
        &self,
        w: &Word<OpKey>,
    ) -> Result<Element<(Word<OpKey>, Word<OpKey>)>, HopfError> {
        let full = self.coproduct_word(&self.reduce_word(w))?;
        Ok(full.map_keys(|(a, b)| (self.reduce_word(a), self.reduce_word(b))))
    }

    /// Δ_* of one orbit dual f_ω as Σ over the orbit, rewritten in the
    /// f-basis: the coefficient of a representative monomial divides out the
    /// symmetry factors of its letters.
    fn orbit_letter(
        &self,
        coinv: &Coinv,
        rep: &OpKey,
        partial: bool,
    ) -> Result<Element<(Monomial<OpKey>, Monomial<OpKey>)>, HopfError> {
        let n = self.desc().validate_key(rep)?;
        let table = self.table(n, partial)?;
        let s_omega = coinv.sym_factor(rep)?;
        let mut raw: Element<(OpKey, Monomial<OpKey>)> = Element::zero();
        for member in coinv.orbit(rep)? {
            if let Some(rows) = table.get(&member) {
                for (p, qs, c) in rows {
                    raw.add_term(
                        (p.clone(), Monomial::from_letters(qs.clone())),
                        c * rat(s_omega as i64),
                    );
                }
            }
        }
        let mut out = Element::zero();
        'terms: for ((p, m), c) in raw.iter() {
            if !coinv.is_rep(p)? {
                continue;
            }
            let mut denom = rat(coinv.sym_factor(p)? as i64);
            for (k, a) in m.factors() {
                if !coinv.is_rep(k)? {
                    continue 'terms;
                }
                let s = rat(coinv.sym_factor(k)? as i64);
                for _ in 0..*a {
                    denom = denom * s.clone();
                }
            }
            out.add_term((Monomial::single(p.clone()), m.clone()), c / denom);
        }
        Ok(out)
    }

    fn mono_multiplicative(
        &self,
        coinv: &Coinv,
        m: &Monomial<OpKey>,
        partial: bool,
    ) -> Result<Element<(Monomial<OpKey>, Monomial<OpKey>)>, HopfError> {
        let mut acc = Element::basis((Monomial::one(), Monomial::one()));
        for letter in m.iter_letters() {
            let rep = coinv.rep(letter)?;
            let mut dx = self.orbit_letter(coinv, &rep, partial)?;
            if partial {
                dx.add_term((Monomial::single(rep.clone()), Monomial::one()), rat(1));
                dx.add_term((Monomial::one(), Monomial::single(rep.clone())), rat(1));
            }
            acc = lin2(&acc, &dx, |(a1, a2), (b1, b2)| {
                Element::basis((a1.mul(b1), a2.mul(b2)))
            });
        }
        Ok(acc)
    }

    pub fn coproduct_orbit(
        &self,
        coinv: &Coinv,
        m: &Monomial<OpKey>,
    ) -> Result<Element<(Monomial<OpKey>, Monomial<OpKey>)>, HopfError> {
        self.mono_multiplicative(coinv, m, false)
    }

    pub fn coproduct_prime_orbit(
        &self,
        coinv: &Coinv,
        m: &Monomial<OpKey>,
    ) -> Result<Element<(Monomial<OpKey>, Monomial<OpKey>)>, HopfError> {
        self.mono_multiplicative(coinv, m, true)
    }

    pub fn reduce_monomial(&self, m: &Monomial<OpKey>) -> Monomial<OpKey> {
        let unit = self.desc().unit_key();
        Monomial::from_letters(m.iter_letters().filter(|k| **k != unit).cloned())
    }

    pub fn coproduct_reduced_orbit(
        &self,
        coinv: &Coinv,
        m: &Monomial<OpKey>,
    ) -> Result<Element<(Monomial<OpKey>, Monomial<OpKey>)>, HopfError> {
        let full = self.coproduct_orbit(coinv, &self.reduce_monomial(m))?;
        Ok(full.map_keys(|(a, b)| (self.reduce_monomial(a), self.reduce_monomial(b))))
    }

    /// ε on the unreduced dual: every letter evaluated on the operad unit.
    pub fn counit_word(&self, w: &Word<OpKey>) -> Rational {
        let unit = self.desc().unit_key();
        if w.0.iter().all(|k| *k == unit) {
            rat(1)
        } else {
            rat(0)
        }
    }

    pub fn counit_monomial(&self, m: &Monomial<OpKey>) -> Rational {
        let unit = self.desc().unit_key();
        if m.iter_letters().all(|k| *k == unit) {
            rat(1)
        } else {
            rat(0)
        }
    }
}
