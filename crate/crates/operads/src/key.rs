use std::fmt;
use std::str::FromStr;

use combinatorics::{Dg, ParseError, Perm, Qo, Tree};

/// Basis key of an operad component: one variant per underlying object kind.
///
/// The key alone does not pin down the operad — `Q` keys serve both the
/// quasi-order and the order family, `D` keys both digraph families — so all
/// composition goes through a [`Descriptor`](crate::Descriptor).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OpKey {
    /// `e_n`, the single basis element of arity n in the commutative family.
    E(usize),
    /// A permutation, written as the word of its images.
    P(Perm),
    /// A rooted tree labelled by 1..=n.
    T(Tree),
    /// A quasi-order (or order) on 1..=n.
    Q(Qo),
    /// A simple digraph on 1..=n.
    D(Dg),
}

impl OpKey {
    pub fn arity(&self) -> usize {
        match self {
            OpKey::E(n) => *n,
            OpKey::P(p) => p.n(),
            OpKey::T(t) => t.size(),
            OpKey::Q(q) => q.n(),
            OpKey::D(d) => d.n(),
        }
    }
}

impl fmt::Display for OpKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpKey::E(n) => write!(f, "e{n}"),
            OpKey::P(p) => write!(f, "perm[{p}]"),
            OpKey::T(t) => write!(f, "tree[{t}]"),
            OpKey::Q(q) => write!(f, "{q}"),
            OpKey::D(d) => write!(f, "{d}"),
        }
    }
}

impl FromStr for OpKey {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("perm[") {
            let inner = rest.strip_suffix(']').ok_or_else(|| ParseError::Bad {
                kind: "key",
                text: s.into(),
                reason: "missing closing bracket".into(),
            })?;
            return Ok(OpKey::P(inner.parse()?));
        }
        if let Some(rest) = s.strip_prefix("tree[") {
            let inner = rest.strip_suffix(']').ok_or_else(|| ParseError::Bad {
                kind: "key",
                text: s.into(),
                reason: "missing closing bracket".into(),
            })?;
            return Ok(OpKey::T(inner.parse()?));
        }
        if s.starts_with("qo{") {
            return Ok(OpKey::Q(s.parse()?));
        }
        if s.starts_with("dg{") {
            return Ok(OpKey::D(s.parse()?));
        }
        if let Some(rest) = s.strip_prefix('e') {
            if let Ok(n) = rest.parse::<usize>() {
                if n >= 1 {
                    return Ok(OpKey::E(n));
                }
            }
        }
        Err(ParseError::Bad {
            kind: "key",
            text: s.into(),
            reason: "expected e<n>, perm[..], tree[..], qo{..} or dg{..}".into(),
        })
    }
}

/// Where a label of the outer (host) object lands when an arity-`n` object is
/// spliced into slot `i`: labels below the slot stay put, labels above it jump
/// over the inserted window.
pub fn host_label(j: usize, i: usize, n: usize) -> usize {
    if j < i {
        j
    } else {
        debug_assert!(j > i);
        j + n - 1
    }
}

/// Where label `k` of the inserted (guest) object lands: the window occupies
/// positions i..i+n-1.
pub fn guest_label(k: usize, i: usize) -> usize {
    i + k - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_roundtrip() {
        for text in ["e3", "perm[213]", "tree[1[2,3]]", "qo{2; 1<2}", "dg{3; 1->2, 3->1}"] {
            let key: OpKey = text.parse().unwrap();
            assert_eq!(key.to_string(), text);
        }
        assert_eq!("e1".parse::<OpKey>().unwrap().arity(), 1);
        assert!("e0".parse::<OpKey>().is_err());
        assert!("perm[213".parse::<OpKey>().is_err());
        assert!("poset{2}".parse::<OpKey>().is_err());
    }

    #[test]
    fn splice_labels() {
        // splicing an arity-2 object into slot 1 of an arity-2 host:
        // host 2 -> 3, guest 1 -> 1, guest 2 -> 2
        assert_eq!(host_label(2, 1, 2), 3);
        assert_eq!(guest_label(1, 1), 1);
        assert_eq!(guest_label(2, 1), 2);
        // slot 2 of an arity-3 host with an arity-2 guest:
        // host 1 -> 1, host 3 -> 4, guest 1 -> 2, guest 2 -> 3
        assert_eq!(host_label(1, 2, 2), 1);
        assert_eq!(host_label(3, 2, 2), 4);
        assert_eq!(guest_label(1, 2), 2);
        assert_eq!(guest_label(2, 2), 3);
    }
}
