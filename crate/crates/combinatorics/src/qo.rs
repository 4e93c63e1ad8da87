use crate::perm::Perm;
use crate::{bad, ParseError};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

/// Hard ceiling for quasi-order enumeration (6942 of them at n = 5).
pub const MAX_QO_N: usize = 5;

/// A quasi-order (reflexive transitive relation) on [n], stored as the full
/// relation matrix. Constructors close under transitivity, so any two equal
/// relations compare equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Qo {
    n: usize,
    le: Vec<bool>,
}

impl Qo {
    /// The discrete quasi-order (no relations besides reflexivity).
    pub fn antichain(n: usize) -> Self {
        let mut le = vec![false; n * n];
        for i in 0..n {
            le[i * n + i] = true;
        }
        Qo { n, le }
    }

    pub fn chain(n: usize) -> Self {
        let mut q = Qo::antichain(n);
        for i in 1..n {
            q.set(i, i + 1);
        }
        q.close();
        q
    }

    /// Builds from generating relations: `less` pairs impose a<b, `equiv`
    /// pairs impose a~b; the transitive closure is taken.
    pub fn from_relations(n: usize, less: &[(usize, usize)], equiv: &[(usize, usize)]) -> Self {
        let mut q = Qo::antichain(n);
        for &(a, b) in less {
            q.set(a, b);
        }
        for &(a, b) in equiv {
            q.set(a, b);
            q.set(b, a);
        }
        q.close();
        q
    }

    fn set(&mut self, a: usize, b: usize) {
        assert!(a >= 1 && a <= self.n && b >= 1 && b <= self.n);
        self.le[(a - 1) * self.n + (b - 1)] = true;
    }

    fn close(&mut self) {
        let n = self.n;
        for k in 0..n {
            for i in 0..n {
                if self.le[i * n + k] {
                    for j in 0..n {
                        if self.le[k * n + j] {
                            self.le[i * n + j] = true;
                        }
                    }
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 1-based relation test.
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le[(a - 1) * self.n + (b - 1)]
    }

    pub fn equivalent(&self, a: usize, b: usize) -> bool {
        self.le(a, b) && self.le(b, a)
    }

    pub fn is_antisymmetric(&self) -> bool {
        (1..=self.n).all(|a| (a + 1..=self.n).all(|b| !(self.le(a, b) && self.le(b, a))))
    }

    /// Image under the relabeling α: the result relates α(u), α(v) exactly
    /// when this relation relates u, v.
    pub fn relabel(&self, alpha: &Perm) -> Qo {
        assert_eq!(alpha.n(), self.n);
        let inv = alpha.inverse();
        let mut out = Qo::antichain(self.n);
        for x in 1..=self.n {
            for y in 1..=self.n {
                if self.le(inv.image(x), inv.image(y)) {
                    out.set(x, y);
                }
            }
        }
        out
    }

    /// Induced relation on the listed members (1-based, strictly increasing),
    /// standardized to [k].
    pub fn restrict(&self, members: &[usize]) -> Qo {
        let k = members.len();
        let mut out = Qo::antichain(k);
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                if self.le(a, b) {
                    out.set(i + 1, j + 1);
                }
            }
        }
        out
    }

    /// Contracts the window {i, …, i+len−1} to the single vertex i. Outside
    /// vertices keep their relative order; two outside vertices also become
    /// comparable when they sandwich the window, and the window inherits all
    /// comparabilities of its members.
    pub fn contract_window(&self, i: usize, len: usize) -> Qo {
        let n = self.n;
        assert!(len >= 1 && i >= 1 && i + len - 1 <= n);
        let in_b = |x: usize| x >= i && x < i + len;
        // old label -> new label (window members all map to i)
        let newlab = |x: usize| if x < i + len { x.min(i) } else { x - len + 1 };
        let m = n - len + 1;
        let mut out = Qo::antichain(m);
        let reaches_b = |x: usize| (i..i + len).any(|b| self.le(x, b));
        let b_reaches = |y: usize| (i..i + len).any(|b| self.le(b, y));
        for x in 1..=n {
            for y in 1..=n {
                if in_b(x) || in_b(y) {
                    continue;
                }
                if self.le(x, y) || (reaches_b(x) && b_reaches(y)) {
                    out.set(newlab(x), newlab(y));
                }
            }
        }
        for x in 1..=n {
            if in_b(x) {
                continue;
            }
            if reaches_b(x) {
                out.set(newlab(x), i);
            }
            if b_reaches(x) {
                out.set(i, newlab(x));
            }
        }
        debug_assert!(out.is_transitive());
        out
    }

    /// Window convexity: nothing outside sits between two window members.
    pub fn window_is_convex(&self, i: usize, len: usize) -> bool {
        let in_b = |x: usize| x >= i && x < i + len;
        (1..=self.n).filter(|&y| !in_b(y)).all(|y| {
            let above = (i..i + len).any(|x| self.le(x, y));
            let below = (i..i + len).any(|z| self.le(y, z));
            !(above && below)
        })
    }

    /// Upward closure test for an arbitrary member set (1-based).
    pub fn is_ideal(&self, members: &[usize]) -> bool {
        let mask: Vec<bool> = {
            let mut m = vec![false; self.n + 1];
            for &x in members {
                m[x] = true;
            }
            m
        };
        (1..=self.n).all(|x| {
            !mask[x] || (1..=self.n).all(|y| !self.le(x, y) || mask[y])
        })
    }

    fn is_transitive(&self) -> bool {
        let n = self.n;
        (1..=n).all(|a| {
            (1..=n).all(|b| {
                !self.le(a, b) || (1..=n).all(|c| !self.le(b, c) || self.le(a, c))
            })
        })
    }

    /// Connected components of the comparability graph, sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n + 1];
        let mut out = Vec::new();
        for s in 1..=self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = vec![s];
            while let Some(x) = queue.pop() {
                for y in 1..=self.n {
                    if !seen[y] && (self.le(x, y) || self.le(y, x)) {
                        seen[y] = true;
                        comp.push(y);
                        queue.push(y);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out.sort();
        out
    }

    /// Equivalence classes x~y (mutual comparability), each sorted, ordered
    /// by minimum.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n + 1];
        let mut out = Vec::new();
        for x in 1..=self.n {
            if seen[x] {
                continue;
            }
            let cls: Vec<usize> = (x..=self.n).filter(|&y| self.equivalent(x, y)).collect();
            for &y in &cls {
                seen[y] = true;
            }
            out.push(cls);
        }
        out
    }

    /// Generating relations: within-class chains `a~b` plus covers of the
    /// condensation `a<b`, each named by class minima.
    fn generators(&self) -> Vec<(usize, char, usize)> {
        let classes = self.classes();
        let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
        let mut rels = Vec::new();
        for cls in &classes {
            for w in cls.windows(2) {
                rels.push((w[0], '~', w[1]));
            }
        }
        let lt = |a: usize, b: usize| self.le(a, b) && !self.le(b, a);
        for &a in &reps {
            for &b in &reps {
                if lt(a, b) && !reps.iter().any(|&c| lt(a, c) && lt(c, b)) {
                    rels.push((a, '<', b));
                }
            }
        }
        rels.sort_by_key(|&(a, s, b)| (a, b, s));
        rels
    }
}

static QOS: Lazy<Mutex<HashMap<usize, Arc<Vec<Qo>>>>> = Lazy::new(Default::default);

/// All quasi-orders on [n] (1, 4, 29, 355, 6942 for n = 1..=5).
pub fn enumerate_qos(n: usize) -> Arc<Vec<Qo>> {
    assert!(
        (1..=MAX_QO_N).contains(&n),
        "quasi-order size {n} outside 1..={MAX_QO_N}"
    );
    if let Some(v) = QOS.lock().unwrap().get(&n) {
        return v.clone();
    }
    let cells: Vec<(usize, usize)> =
        (1..=n).flat_map(|a| (1..=n).filter(move |&b| b != a).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << cells.len()) {
        let mut q = Qo::antichain(n);
        for (bit, &(a, b)) in cells.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                q.set(a, b);
            }
        }
        if q.is_transitive() {
            out.push(q);
        }
    }
    out.sort();
    let arc = Arc::new(out);
    QOS.lock().unwrap().insert(n, arc.clone());
    arc
}

static ORDERS: Lazy<Mutex<HashMap<usize, Arc<Vec<Qo>>>>> = Lazy::new(Default::default);

/// All partial orders on [n] (1, 3, 19, 219 for n = 1..=4).
pub fn enumerate_orders(n: usize) -> Arc<Vec<Qo>> {
    if let Some(v) = ORDERS.lock().unwrap().get(&n) {
        return v.clone();
    }
    let arc = Arc::new(
        enumerate_qos(n).iter().filter(|q| q.is_antisymmetric()).cloned().collect::<Vec<_>>(),
    );
    ORDERS.lock().unwrap().insert(n, arc.clone());
    arc
}

impl fmt::Display for Qo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels = self.generators();
        if rels.is_empty() {
            return write!(f, "qo{{{}}}", self.n);
        }
        let parts: Vec<String> =
            rels.iter().map(|(a, s, b)| format!("{a}{s}{b}")).collect();
        write!(f, "qo{{{}; {}}}", self.n, parts.join(", "))
    }
}

impl std::str::FromStr for Qo {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let body = compact
            .strip_prefix("qo{")
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| bad("qo", s, "expected qo{...}"))?;
        let (head, rels_text) = match body.split_once(';') {
            Some((h, r)) => (h, r),
            None => (body, ""),
        };
        let n: usize =
            head.parse().map_err(|_| bad("qo", s, "expected a vertex count"))?;
        if n == 0 {
            return Err(bad("qo", s, "vertex count must be positive"));
        }
        let mut less = Vec::new();
        let mut equiv = Vec::new();
        for rel in rels_text.split(',').filter(|r| !r.is_empty()) {
            let (sym, target) = if rel.contains('<') {
                ('<', &mut less)
            } else if rel.contains('~') {
                ('~', &mut equiv)
            } else {
                return Err(bad("qo", s, format!("relation {rel:?} needs < or ~")));
            };
            let (a, b) = rel.split_once(sym).unwrap();
            let a: usize = a.parse().map_err(|_| bad("qo", s, format!("bad vertex in {rel:?}")))?;
            let b: usize = b.parse().map_err(|_| bad("qo", s, format!("bad vertex in {rel:?}")))?;
            if a < 1 || a > n || b < 1 || b > n || a == b {
                return Err(bad("qo", s, format!("vertices in {rel:?} outside [{n}]")));
            }
            target.push((a, b));
        }
        Ok(Qo::from_relations(n, &less, &equiv))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_qos(1).len(), 1);
        assert_eq!(enumerate_qos(2).len(), 4);
        assert_eq!(enumerate_qos(3).len(), 29);
        assert_eq!(enumerate_qos(4).len(), 355);
        assert_eq!(enumerate_orders(1).len(), 1);
        assert_eq!(enumerate_orders(2).len(), 3);
        assert_eq!(enumerate_orders(3).len(), 19);
        assert_eq!(enumerate_orders(4).len(), 219);
    }

    #[test]
    fn display_roundtrip() {
        for s in ["qo{1}", "qo{3}", "qo{2; 1<2}", "qo{3; 1<2, 2~3}", "qo{4; 1~2, 1<3, 3~4}"] {
            let q: Qo = s.parse().unwrap();
            assert_eq!(q.to_string(), s);
        }
        // non-cover generators are re-expressed minimally
        let q: Qo = "qo{3; 1<2, 2<3, 1<3}".parse().unwrap();
        assert_eq!(q.to_string(), "qo{3; 1<2, 2<3}");
        assert!("qo{2; 1<3}".parse::<Qo>().is_err());
        assert!("po{2}".parse::<Qo>().is_err());
    }

    #[test]
    fn closure_is_taken() {
        let q = Qo::from_relations(3, &[(1, 2), (2, 3)], &[]);
        assert!(q.le(1, 3));
        let e = Qo::from_relations(3, &[], &[(1, 2), (2, 3)]);
        assert!(e.equivalent(1, 3));
    }

    #[test]
    fn restriction_standardizes() {
        let q: Qo = "qo{4; 1<3, 3<4}".parse().unwrap();
        assert_eq!(q.restrict(&[1, 3, 4]), Qo::chain(3));
        assert_eq!(q.restrict(&[2, 3]), Qo::antichain(2));
    }

    #[test]
    fn contraction_clauses() {
        // chain 1<2<3, contract {2,3}: 1 < contracted vertex
        let q = Qo::chain(3);
        assert_eq!(q.contract_window(2, 2), Qo::chain(2));
        // sandwich: 1 <= 2, 3 <= ...; contract {2} trivially identity
        assert_eq!(q.contract_window(2, 1), q);
        // outside pair through the window: 1<2, 3<2 with window {2}:
        // contracting a singleton never adds outside relations
        let w: Qo = "qo{3; 1<2, 3<2}".parse().unwrap();
        assert_eq!(w.contract_window(2, 1), w);
        // window {2,3} of qo{4; 1<2, 3<4}: outside pair (1,4) gets related
        // through the window
        let v: Qo = "qo{4; 1<2, 3<4}".parse().unwrap();
        let c = v.contract_window(2, 2);
        assert!(c.le(1, 2) && c.le(2, 3) && c.le(1, 3));
        assert_eq!(c, Qo::chain(3));
    }

    #[test]
    fn convexity_and_ideals() {
        let q = Qo::chain(3);
        assert!(q.window_is_convex(1, 2));
        assert!(q.window_is_convex(2, 2));
        // relabeled chain 2<1<3: vertex 1 sits between window members 2 and 3
        let v: Qo = "qo{3; 2<1, 1<3}".parse().unwrap();
        assert!(!v.window_is_convex(2, 2));
        assert!(q.is_ideal(&[3]));
        assert!(q.is_ideal(&[2, 3]));
        assert!(!q.is_ideal(&[1]));
        assert!(q.is_ideal(&[]));
    }

    #[test]
    fn components_and_classes() {
        let q: Qo = "qo{4; 1<3, 2~4}".parse().unwrap();
        assert_eq!(q.components(), vec![vec![1, 3], vec![2, 4]]);
        assert_eq!(q.classes(), vec![vec![1], vec![2, 4], vec![3]]);
    }
}
