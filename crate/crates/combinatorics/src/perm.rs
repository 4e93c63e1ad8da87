use crate::{bad, ParseError};
use itertools::Itertools;
use std::fmt;

/// Hard ceiling for permutation arities accepted by enumeration and parsing;
/// keeps the one-line digit notation unambiguous.
pub const MAX_PERM_N: usize = 8;

/// A permutation of [n], stored as 1-based images: `p.image(i) = σ(i)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((1..=n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, ParseError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(bad("perm", &format!("{images:?}"), "not a permutation"));
            }
            seen[x] = true;
        }
        Ok(Perm(images))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// Function composition: `(self.compose(other))(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n());
        Perm(other.0.iter().map(|&i| self.0[i - 1]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.n()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x - 1] = i + 1;
        }
        Perm(v)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// Ranks of a sequence of distinct values, as a permutation:
    /// standardize([30, 10, 20]) = 312.
    pub fn standardize(values: &[usize]) -> Perm {
        let mut idx: Vec<usize> = (0..values.len()).collect();
        idx.sort_by_key(|&i| values[i]);
        let mut out = vec![0; values.len()];
        for (rank, &i) in idx.iter().enumerate() {
            out[i] = rank + 1;
        }
        Perm(out)
    }

    /// σ₁ ⊕ … ⊕ σ_k acting on consecutive blocks.
    pub fn direct_sum(parts: &[Perm]) -> Perm {
        let mut v = Vec::new();
        let mut off = 0;
        for p in parts {
            v.extend(p.0.iter().map(|&x| x + off));
            off += p.n();
        }
        Perm(v)
    }
}

/// The permutation moving block i (of the given size) to slot σ(i), keeping
/// each block in order. Blocks sit consecutively on both sides.
pub fn block_perm(sigma: &Perm, sizes: &[usize]) -> Perm {
    let n = sigma.n();
    assert_eq!(n, sizes.len());
    let mut src_off = vec![0; n + 1];
    for i in 0..n {
        src_off[i + 1] = src_off[i] + sizes[i];
    }
    // target slot j holds block σ⁻¹(j)
    let inv = sigma.inverse();
    let mut tgt_off = vec![0; n + 1];
    for j in 0..n {
        tgt_off[j + 1] = tgt_off[j] + sizes[inv.image(j + 1) - 1];
    }
    let mut v = vec![0; src_off[n]];
    for i in 0..n {
        let j = sigma.image(i + 1);
        for s in 0..sizes[i] {
            v[src_off[i] + s] = tgt_off[j - 1] + s + 1;
        }
    }
    Perm(v)
}

pub fn enumerate_perms(n: usize) -> Vec<Perm> {
    assert!(n <= MAX_PERM_N, "permutation arity {n} exceeds hard limit {MAX_PERM_N}");
    (1..=n).permutations(n).map(Perm).collect()
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in &self.0 {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Perm {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let digits: Option<Vec<usize>> =
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect();
        let images = digits.ok_or_else(|| bad("perm", s, "expected digits"))?;
        if images.is_empty() || images.len() > MAX_PERM_N {
            return Err(bad("perm", s, format!("length must be 1..={MAX_PERM_N}")));
        }
        Perm::from_images(images).map_err(|_| bad("perm", s, "not a permutation"))
    }
}
