use algebra_core::{lin2, Element, Monomial, Word};
use combinatorics::set_partitions;
use itertools::Itertools;

use crate::sources::{SymBrackets, TensorBrackets};
use crate::InducedError;

/// Cut `w` into `parts` consecutive, possibly empty, blocks.
fn cuts<K>(w: &[K], parts: usize) -> Vec<Vec<&[K]>> {
    (0..=w.len())
        .combinations_with_replacement(parts - 1)
        .map(|mids| {
            let mut bounds = vec![0];
            bounds.extend(mids);
            bounds.push(w.len());
            bounds.windows(2).map(|b| &w[b[0]..b[1]]).collect()
        })
        .collect()
}

fn block_word<L, B>(
    src: &B,
    us: &[&[L]],
    vs: &[&[L]],
) -> Result<Element<Word<L>>, InducedError>
where
    L: Ord + Clone,
    B: TensorBrackets<L>,
{
    let mut acc = Element::basis(Word::empty());
    for (ub, vb) in us.iter().zip(vs) {
        let factor = src.bracket(ub, vb)?;
        if factor.is_zero() {
            return Ok(Element::zero());
        }
        acc = lin2(&acc, &factor, |w, x| {
            Element::basis(w.concat(&Word::single(x.clone())))
        });
    }
    Ok(acc)
}

#[derive(PartialEq, Clone, Copy)]
enum Keep {
    All,
    LeadingLeft,
    LeadingRight,
}

fn star_blocks<L, B>(
    src: &B,
    u: &Word<L>,
    v: &Word<L>,
    keep: Keep,
) -> Result<Element<Word<L>>, InducedError>
where
    L: Ord + Clone,
    B: TensorBrackets<L>,
{
    if u.is_empty() && v.is_empty() {
        // 1∗1 = 1; the unit term belongs to neither dendriform half.
        return Ok(match keep {
            Keep::All => Element::basis(Word::empty()),
            _ => Element::zero(),
        });
    }
    let mut out = Element::zero();
    for blocks in 1..=(u.len() + v.len()) {
        let vcuts = cuts(&v.0, blocks);
        for us in cuts(&u.0, blocks) {
            match keep {
                Keep::All => {}
                // a term starts in u exactly when its first block draws a
                // nonempty piece of u
                Keep::LeadingLeft if us[0].is_empty() => continue,
                Keep::LeadingRight if !us[0].is_empty() => continue,
                _ => {}
            }
            for vs in &vcuts {
                out += block_word(src, &us, vs)?;
            }
        }
    }
    Ok(out)
}

/// u ∗ v: the sum over simultaneous cuts of both words into the same number
/// of (possibly empty) blocks of the word of blockwise brackets. Terms with
/// a doubly-empty block vanish through the unit conventions, so the sum is
/// finite; the empty word is a unit.
pub fn star_tensor<L, B>(src: &B, u: &Word<L>, v: &Word<L>) -> Result<Element<Word<L>>, InducedError>
where
    L: Ord + Clone,
    B: TensorBrackets<L>,
{
    star_blocks(src, u, v, Keep::All)
}

/// The half of ∗ whose terms start inside `u`. On nonempty words
/// ∗ = ≺ + ≻; the conventions are u≺1 = u, 1≺v = 0, 1≺1 = 0.
pub fn dend_left<L, B>(src: &B, u: &Word<L>, v: &Word<L>) -> Result<Element<Word<L>>, InducedError>
where
    L: Ord + Clone,
    B: TensorBrackets<L>,
{
    star_blocks(src, u, v, Keep::LeadingLeft)
}

/// The half of ∗ whose terms start inside `v`: u≻1 = 0, 1≻v = v, 1≻1 = 0.
pub fn dend_right<L, B>(src: &B, u: &Word<L>, v: &Word<L>) -> Result<Element<Word<L>>, InducedError>
where
    L: Ord + Clone,
    B: TensorBrackets<L>,
{
    star_blocks(src, u, v, Keep::LeadingRight)
}

/// u ⋆ v: the sum over set partitions of the combined letters of the
/// monomial of per-block brackets, each block split into its u-part and
/// v-part. Blocks of size one reduce to the letter itself and one-sided
/// larger blocks vanish, both through the unit conventions; the empty
/// monomial is a unit.
pub fn star_sym<L, S>(
    src: &S,
    u: &Monomial<L>,
    v: &Monomial<L>,
) -> Result<Element<Monomial<L>>, InducedError>
where
    L: Ord + Clone,
    S: SymBrackets<L>,
{
    let xs: Vec<&L> = u.iter_letters().collect();
    let ys: Vec<&L> = v.iter_letters().collect();
    let k = xs.len();
    let mut out = Element::zero();
    'partitions: for partition in set_partitions(k + ys.len()) {
        let mut acc = Element::basis(Monomial::one());
        for block in &partition {
            let bu: Vec<L> = block
                .iter()
                .filter(|&&i| i <= k)
                .map(|&i| xs[i - 1].clone())
                .collect();
            let bv: Vec<L> = block
                .iter()
                .filter(|&&i| i > k)
                .map(|&i| ys[i - k - 1].clone())
                .collect();
            let factor = src.bracket(&bu, &bv)?;
            if factor.is_zero() {
                continue 'partitions;
            }
            acc = lin2(&acc, &factor, |m, x| {
                Element::basis(m.mul(&Monomial::single(x.clone())))
            });
        }
        out += acc;
    }
    Ok(out)
}
