use std::collections::HashMap;
use std::sync::Mutex;

use algebra_core::{rat, Element, Rational};
use itertools::Itertools;
use operads::{Descriptor, OpKey};

use crate::InducedError;

type MemoKey = (OpKey, Vec<usize>, Vec<OpKey>);

/// A descriptor plus a memo table for multi-slot compositions.
///
/// The brace ⟨p, q₁…q_k⟩ and its symmetrized companion re-run the same
/// key-level compositions constantly (block sums, coproduct transposes,
/// recursions), so results are cached per (key, slots, argument keys). The
/// table sits behind a mutex: contexts can be shared by reference between
/// threads, and every operation stays pure.
///
/// Grading note: an element of arity n is homogeneous of degree n−1, so all
/// products here add degrees; a k-fold brace on arity n vanishes for k > n,
/// which bounds the bracket families by B(m, n) = m + 1.
pub struct BraceContext {
    desc: Descriptor,
    memo: Mutex<HashMap<MemoKey, Element<OpKey>>>,
}

impl BraceContext {
    pub fn new(desc: Descriptor) -> Self {
        BraceContext { desc, memo: Mutex::new(HashMap::new()) }
    }

    pub fn descriptor(&self) -> Descriptor {
        self.desc
    }

    fn multi_key(
        &self,
        p: &OpKey,
        slots: &[usize],
        args: &[&OpKey],
    ) -> Result<Element<OpKey>, InducedError> {
        let key = (
            p.clone(),
            slots.to_vec(),
            args.iter().map(|&q| q.clone()).collect::<Vec<_>>(),
        );
        if let Some(hit) = self.memo.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let arg_elems: Vec<_> = args.iter().map(|&q| Element::basis(q.clone())).collect();
        let out = self
            .desc
            .compose_multi(&Element::basis(p.clone()), slots, &arg_elems)?;
        self.memo.lock().unwrap().insert(key, out.clone());
        Ok(out)
    }

    /// ⟨p, q₁…q_k⟩: the sum over 1 ≤ i₁ < … < i_k ≤ n of the multi-slot
    /// compositions p∘_{i₁,…,i_k}(q₁,…,q_k). Empty argument list returns `p`
    /// unchanged; k above the arity of `p` returns zero.
    pub fn brace(
        &self,
        p: &Element<OpKey>,
        args: &[Element<OpKey>],
    ) -> Result<Element<OpKey>, InducedError> {
        self.slot_sums(p, args, false)
    }

    /// ⌊p, q₁…q_k⌋: the same sum over all injective slot tuples, in any
    /// order. Equal to Σ_σ ⟨p, q_{σ(1)}…q_{σ(k)}⟩, and symmetric in the
    /// arguments.
    pub fn binfty_bracket(
        &self,
        p: &Element<OpKey>,
        args: &[Element<OpKey>],
    ) -> Result<Element<OpKey>, InducedError> {
        self.slot_sums(p, args, true)
    }

    /// p•q = Σᵢ p∘ᵢq, the pre-Lie product every operad carries.
    pub fn prelie(
        &self,
        p: &Element<OpKey>,
        q: &Element<OpKey>,
    ) -> Result<Element<OpKey>, InducedError> {
        self.brace(p, std::slice::from_ref(q))
    }

    fn slot_sums(
        &self,
        p: &Element<OpKey>,
        args: &[Element<OpKey>],
        all_orders: bool,
    ) -> Result<Element<OpKey>, InducedError> {
        let k = args.len();
        if k == 0 {
            return Ok(p.clone());
        }
        let choices = arg_choices(args);
        let mut out = Element::zero();
        for (pk, pc) in p.iter() {
            let n = self.desc.validate_key(pk)?;
            if k > n {
                continue;
            }
            let tuples: Vec<Vec<usize>> = if all_orders {
                (1..=n).permutations(k).collect()
            } else {
                (1..=n).combinations(k).collect()
            };
            for slots in &tuples {
                for (keys, c) in &choices {
                    out += self.multi_key(pk, slots, keys)?.scale(&(pc * c));
                }
            }
        }
        Ok(out)
    }
}

/// Key picks for each argument with the combined coefficient; empty input
/// yields the single empty pick.
fn arg_choices(args: &[Element<OpKey>]) -> Vec<(Vec<&OpKey>, Rational)> {
    let mut acc = vec![(Vec::new(), rat(1))];
    for a in args {
        let mut next = Vec::with_capacity(acc.len() * a.len());
        for (keys, c) in &acc {
            for (key, ck) in a.iter() {
                let mut keys = keys.clone();
                keys.push(key);
                next.push((keys, c * ck));
            }
        }
        acc = next;
    }
    acc
}
