//! Pairings between a dual tensor (or symmetric) algebra and its predual.
//!
//! Words of different lengths are not orthogonal here: the dual word is
//! padded, i.e. the pairing sums over order-preserving injections of the
//! primal word into the dual one, with every unmatched dual letter evaluated
//! on the operad unit. The symmetric version drops the order constraint and
//! weights each matched letter by the symmetry factor of its orbit.

use algebra_core::{rat, Monomial, Rational, Word};
use operads::{Descriptor, OpKey};

use crate::orbit::Coinv;
use crate::HopfError;

/// ⟪f₁…f_k , x₁…x_l⟫ on T(P*) × T(P).
pub fn padded_word_pairing(desc: &Descriptor, f: &Word<OpKey>, x: &Word<OpKey>) -> Rational {
    let unit = desc.unit_key();
    let k = f.len();
    let l = x.len();
    if l > k {
        return rat(0);
    }
    // row i = dual letters consumed, column j = primal letters matched
    let mut prev = vec![rat(0); l + 1];
    prev[0] = rat(1);
    for i in 1..=k {
        let mut cur = vec![rat(0); l + 1];
        let skip = if f.0[i - 1] == unit { rat(1) } else { rat(0) };
        for j in 0..=l.min(i) {
            let mut v = &prev[j] * &skip;
            if j > 0 && f.0[i - 1] == x.0[j - 1] {
                v = v + prev[j - 1].clone();
            }
            cur[j] = v;
        }
        prev = cur;
    }
    prev[l].clone()
}

/// ⟪f_{ω₁}…f_{ω_k} , x₁…x_l⟫ on S(coinv P*) × S(coinv P), letters taken up
/// to orbit. Sums over injective (not order-preserving) matchings.
pub fn padded_mono_pairing(
    coinv: &Coinv,
    f: &Monomial<OpKey>,
    x: &Monomial<OpKey>,
) -> Result<Rational, HopfError> {
    let unit = coinv.desc().unit_key();
    let fs: Vec<OpKey> = f.iter_letters().map(|k| coinv.rep(k)).collect::<Result<_, _>>()?;
    let xs: Vec<OpKey> = x.iter_letters().map(|k| coinv.rep(k)).collect::<Result<_, _>>()?;
    if xs.len() > fs.len() {
        return Ok(rat(0));
    }
    let weights: Vec<Rational> = fs
        .iter()
        .map(|k| coinv.sym_factor(k).map(|s| rat(s as i64)))
        .collect::<Result<_, _>>()?;
    fn go(
        fs: &[OpKey],
        weights: &[Rational],
        xs: &[OpKey],
        unit: &OpKey,
        used: &mut Vec<bool>,
        j: usize,
    ) -> Rational {
        if j == xs.len() {
            for (i, f) in fs.iter().enumerate() {
                if !used[i] && f != unit {
                    return rat(0);
                }
            }
            return rat(1);
        }
        let mut total = rat(0);
        for i in 0..fs.len() {
            if !used[i] && fs[i] == xs[j] {
                used[i] = true;
                total = total + &weights[i] * &go(fs, weights, xs, unit, used, j + 1);
                used[i] = false;
            }
        }
        total
    }
    let mut used = vec![false; fs.len()];
    Ok(go(&fs, &weights, &xs, &unit, &mut used, 0))
}
