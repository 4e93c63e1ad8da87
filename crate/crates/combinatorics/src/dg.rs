use crate::perm::Perm;
use crate::{bad, ParseError};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

/// Hard ceiling for digraph sizes; composition scans all 2^(n(n-1)) graphs
/// on the composite vertex set.
pub const MAX_DG_N: usize = 5;

/// A simple digraph on [n]: no loops, at most one edge per ordered pair.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Dg {
    n: usize,
    adj: Vec<bool>,
}

impl Dg {
    pub fn empty(n: usize) -> Self {
        Dg { n, adj: vec![false; n * n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Dg::empty(n);
        for &(a, b) in edges {
            assert!(a >= 1 && a <= n && b >= 1 && b <= n && a != b, "bad edge {a}->{b}");
            g.adj[(a - 1) * n + (b - 1)] = true;
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 1-based edge test.
    pub fn edge(&self, a: usize, b: usize) -> bool {
        self.adj[(a - 1) * self.n + (b - 1)]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for a in 1..=self.n {
            for b in 1..=self.n {
                if self.edge(a, b) {
                    v.push((a, b));
                }
            }
        }
        v
    }

    pub fn relabel(&self, alpha: &Perm) -> Dg {
        assert_eq!(alpha.n(), self.n);
        let inv = alpha.inverse();
        let mut out = Dg::empty(self.n);
        for x in 1..=self.n {
            for y in 1..=self.n {
                if x != y && self.edge(inv.image(x), inv.image(y)) {
                    out.adj[(x - 1) * self.n + (y - 1)] = true;
                }
            }
        }
        out
    }

    /// Induced subgraph on the listed vertices (1-based, strictly
    /// increasing), standardized to [k].
    pub fn restrict(&self, members: &[usize]) -> Dg {
        let k = members.len();
        let mut out = Dg::empty(k);
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                if i != j && self.edge(a, b) {
                    out.adj[i * k + j] = true;
                }
            }
        }
        out
    }

    /// Contracts the window {i, …, i+len−1} to vertex i: edges incident to
    /// the window merge (losing multiplicity), loops are dropped, edges
    /// between outside vertices are untouched.
    pub fn contract_window(&self, i: usize, len: usize) -> Dg {
        let n = self.n;
        assert!(len >= 1 && i >= 1 && i + len - 1 <= n);
        let in_b = |x: usize| x >= i && x < i + len;
        let newlab = |x: usize| if x < i + len { x.min(i) } else { x - len + 1 };
        let m = n - len + 1;
        let mut out = Dg::empty(m);
        for x in 1..=n {
            for y in 1..=n {
                if self.edge(x, y) && !(in_b(x) && in_b(y)) {
                    let (a, b) = (newlab(x), newlab(y));
                    if a != b {
                        out.adj[(a - 1) * m + (b - 1)] = true;
                    }
                }
            }
        }
        out
    }

    /// No directed path leaves the window and comes back.
    pub fn window_is_convex(&self, i: usize, len: usize) -> bool {
        let in_b = |x: usize| x >= i && x < i + len;
        // outside vertices reachable from the window through outside vertices
        let mut reached = vec![false; self.n + 1];
        let mut queue: Vec<usize> = Vec::new();
        for b in i..i + len {
            for y in 1..=self.n {
                if !in_b(y) && self.edge(b, y) && !reached[y] {
                    reached[y] = true;
                    queue.push(y);
                }
            }
        }
        while let Some(x) = queue.pop() {
            if (i..i + len).any(|b| self.edge(x, b)) {
                return false;
            }
            for y in 1..=self.n {
                if !in_b(y) && self.edge(x, y) && !reached[y] {
                    reached[y] = true;
                    queue.push(y);
                }
            }
        }
        true
    }

    pub fn is_acyclic(&self) -> bool {
        // reachability closure; a cycle shows up as x reaching itself
        let n = self.n;
        let mut reach = self.adj.clone();
        for k in 0..n {
            for a in 0..n {
                if reach[a * n + k] {
                    for b in 0..n {
                        if reach[k * n + b] {
                            reach[a * n + b] = true;
                        }
                    }
                }
            }
        }
        (0..n).all(|x| !reach[x * n + x])
    }

    /// Weakly connected components, sorted.
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
                    if !seen[y] && (self.edge(x, y) || self.edge(y, x)) {
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

    pub fn on_cycle(&self, v: usize) -> bool {
        // v lies on a directed cycle iff v reaches itself
        let n = self.n;
        let mut reach = self.adj.clone();
        for k in 0..n {
            for a in 0..n {
                if reach[a * n + k] {
                    for b in 0..n {
                        if reach[k * n + b] {
                            reach[a * n + b] = true;
                        }
                    }
                }
            }
        }
        reach[(v - 1) * n + (v - 1)]
    }
}

/// Visits every simple digraph on [n] once, reusing one buffer.
pub fn for_each_dg(n: usize, mut f: impl FnMut(&Dg)) {
    assert!(
        (1..=MAX_DG_N).contains(&n),
        "digraph size {n} outside 1..={MAX_DG_N}"
    );
    let cells: Vec<(usize, usize)> =
        (1..=n).flat_map(|a| (1..=n).filter(move |&b| b != a).map(move |b| (a, b))).collect();
    let mut g = Dg::empty(n);
    for mask in 0u64..(1 << cells.len()) {
        for (bit, &(a, b)) in cells.iter().enumerate() {
            g.adj[(a - 1) * n + (b - 1)] = mask >> bit & 1 == 1;
        }
        f(&g);
    }
}

static DGS: Lazy<Mutex<HashMap<usize, Arc<Vec<Dg>>>>> = Lazy::new(Default::default);

/// All simple digraphs on [n], cached; 2^(n(n-1)) of them, so n ≤ 4 only.
pub fn enumerate_dgs(n: usize) -> Arc<Vec<Dg>> {
    assert!(n <= 4, "digraph enumeration is cached only up to n = 4; use for_each_dg");
    if let Some(v) = DGS.lock().unwrap().get(&n) {
        return v.clone();
    }
    let mut out = Vec::new();
    for_each_dg(n, |g| out.push(g.clone()));
    out.sort();
    let arc = Arc::new(out);
    DGS.lock().unwrap().insert(n, arc.clone());
    arc
}

impl fmt::Display for Dg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges = self.edges();
        if edges.is_empty() {
            return write!(f, "dg{{{}}}", self.n);
        }
        let parts: Vec<String> = edges.iter().map(|(a, b)| format!("{a}->{b}")).collect();
        write!(f, "dg{{{}; {}}}", self.n, parts.join(", "))
    }
}

impl std::str::FromStr for Dg {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let body = compact
            .strip_prefix("dg{")
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| bad("dg", s, "expected dg{...}"))?;
        let (head, edge_text) = match body.split_once(';') {
            Some((h, r)) => (h, r),
            None => (body, ""),
        };
        let n: usize = head.parse().map_err(|_| bad("dg", s, "expected a vertex count"))?;
        if n == 0 {
            return Err(bad("dg", s, "vertex count must be positive"));
        }
        let mut edges = Vec::new();
        for e in edge_text.split(',').filter(|e| !e.is_empty()) {
            let (a, b) = e
                .split_once("->")
                .ok_or_else(|| bad("dg", s, format!("edge {e:?} needs ->")))?;
            let a: usize = a.parse().map_err(|_| bad("dg", s, format!("bad vertex in {e:?}")))?;
            let b: usize = b.parse().map_err(|_| bad("dg", s, format!("bad vertex in {e:?}")))?;
            if a < 1 || a > n || b < 1 || b > n || a == b {
                return Err(bad("dg", s, format!("edge {e:?} outside [{n}]")));
            }
            edges.push((a, b));
        }
        Ok(Dg::from_edges(n, &edges))
    }
}
