use crate::{bad, ParseError};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

/// Hard ceiling for labelled-tree enumeration (n^{n-1} grows fast).
pub const MAX_TREE_N: usize = 7;

/// A rooted tree with distinct vertex labels, children kept sorted so that
/// structural equality is equality of labelled trees.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Tree {
    pub label: usize,
    children: Vec<Tree>,
}

impl Tree {
    pub fn leaf(label: usize) -> Self {
        Tree { label, children: Vec::new() }
    }

    pub fn node(label: usize, mut children: Vec<Tree>) -> Self {
        children.sort();
        Tree { label, children }
    }

    pub fn children(&self) -> &[Tree] {
        &self.children
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(Tree::size).sum::<usize>()
    }

    pub fn labels(&self) -> Vec<usize> {
        let mut v = vec![self.label];
        for c in &self.children {
            v.extend(c.labels());
        }
        v.sort();
        v
    }

    /// True when the labels are exactly 1..=size.
    pub fn is_standard(&self) -> bool {
        self.labels() == (1..=self.size()).collect::<Vec<_>>()
    }

    pub fn relabel(&self, f: &impl Fn(usize) -> usize) -> Tree {
        Tree::node(f(self.label), self.children.iter().map(|c| c.relabel(f)).collect())
    }

    /// Preorder (parent index, label) view; parents index into the returned
    /// vectors, root first with parent None.
    pub fn flatten(&self) -> (Vec<Option<usize>>, Vec<usize>) {
        let mut parents = Vec::new();
        let mut labels = Vec::new();
        fn walk(t: &Tree, parent: Option<usize>, ps: &mut Vec<Option<usize>>, ls: &mut Vec<usize>) {
            let me = ps.len();
            ps.push(parent);
            ls.push(t.label);
            for c in &t.children {
                walk(c, Some(me), ps, ls);
            }
        }
        walk(self, None, &mut parents, &mut labels);
        (parents, labels)
    }

    /// Inverse of `flatten`; accepts parent/label vectors describing one tree.
    pub fn assemble(parents: &[Option<usize>], labels: &[usize]) -> Tree {
        let n = parents.len();
        assert_eq!(n, labels.len());
        let mut kids: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut root = None;
        for (i, p) in parents.iter().enumerate() {
            match p {
                Some(q) => kids[*q].push(i),
                None => {
                    assert!(root.is_none(), "two roots");
                    root = Some(i);
                }
            }
        }
        fn build(i: usize, kids: &[Vec<usize>], labels: &[usize]) -> Tree {
            Tree::node(labels[i], kids[i].iter().map(|&c| build(c, kids, labels)).collect())
        }
        build(root.expect("no root"), &kids, labels)
    }
}

static TREES: Lazy<Mutex<HashMap<usize, Arc<Vec<Tree>>>>> = Lazy::new(Default::default);

/// All rooted trees labelled bijectively by [n]; there are n^{n-1} of them.
pub fn enumerate_trees(n: usize) -> Arc<Vec<Tree>> {
    assert!(
        (1..=MAX_TREE_N).contains(&n),
        "tree vertex count {n} outside 1..={MAX_TREE_N}"
    );
    if let Some(v) = TREES.lock().unwrap().get(&n) {
        return v.clone();
    }
    let mut out = Vec::new();
    // parent assignments: vertex v != root points at parent[v] ∈ [n]
    let mut parent = vec![0usize; n + 1];
    for root in 1..=n {
        let others: Vec<usize> = (1..=n).filter(|&v| v != root).collect();
        let mut stack = vec![0usize; others.len()];
        'outer: loop {
            for (slot, &v) in others.iter().enumerate() {
                parent[v] = stack[slot] + 1;
            }
            // acyclic iff every vertex reaches the root
            let ok = (1..=n).all(|mut v| {
                let mut steps = 0;
                while v != root {
                    v = parent[v];
                    steps += 1;
                    if steps > n {
                        return false;
                    }
                }
                true
            });
            if ok {
                let parents: Vec<Option<usize>> = (1..=n)
                    .map(|v| if v == root { None } else { Some(parent[v] - 1) })
                    .collect();
                let labels: Vec<usize> = (1..=n).collect();
                out.push(Tree::assemble(&parents, &labels));
            }
            // next assignment
            for slot in 0..others.len() {
                stack[slot] += 1;
                if stack[slot] < n {
                    continue 'outer;
                }
                stack[slot] = 0;
            }
            break;
        }
    }
    out.sort();
    out.dedup();
    let arc = Arc::new(out);
    TREES.lock().unwrap().insert(n, arc.clone());
    arc
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)?;
        if !self.children.is_empty() {
            let parts: Vec<String> = self.children.iter().map(|c| c.to_string()).collect();
            write!(f, "[{}]", parts.join(","))?;
        }
        Ok(())
    }
}

fn parse_tree_inner(s: &str, pos: &mut usize, orig: &str) -> Result<Tree, ParseError> {
    let bytes = s.as_bytes();
    let start = *pos;
    while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
        *pos += 1;
    }
    if *pos == start {
        return Err(bad("tree", orig, format!("expected a label at offset {start}")));
    }
    let label: usize = s[start..*pos].parse().unwrap();
    let mut children = Vec::new();
    if *pos < bytes.len() && bytes[*pos] == b'[' {
        *pos += 1;
        loop {
            children.push(parse_tree_inner(s, pos, orig)?);
            if *pos < bytes.len() && bytes[*pos] == b',' {
                *pos += 1;
                continue;
            }
            break;
        }
        if *pos >= bytes.len() || bytes[*pos] != b']' {
            return Err(bad("tree", orig, "missing ']'"));
        }
        *pos += 1;
    }
    Ok(Tree::node(label, children))
}

impl std::str::FromStr for Tree {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let t = parse_tree_inner(&compact, &mut pos, s)?;
        if pos != compact.len() {
            return Err(bad("tree", s, "trailing input"));
        }
        Ok(t)
    }
}

/// A rooted tree with colored vertices, considered up to isomorphism:
/// children are kept sorted, so equal values mean isomorphic colored trees.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct IsoTree {
    pub color: usize,
    children: Vec<IsoTree>,
}

impl IsoTree {
    pub fn leaf(color: usize) -> Self {
        IsoTree { color, children: Vec::new() }
    }

    pub fn node(color: usize, mut children: Vec<IsoTree>) -> Self {
        children.sort();
        IsoTree { color, children }
    }

    pub fn children(&self) -> &[IsoTree] {
        &self.children
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(IsoTree::size).sum::<usize>()
    }

    pub fn max_color(&self) -> usize {
        self.children.iter().map(IsoTree::max_color).max().unwrap_or(0).max(self.color)
    }

    pub fn recolor(&self, f: &impl Fn(usize) -> usize) -> IsoTree {
        IsoTree::node(f(self.color), self.children.iter().map(|c| c.recolor(f)).collect())
    }

    /// Preorder (parent, color) view, root first.
    pub fn flatten(&self) -> (Vec<Option<usize>>, Vec<usize>) {
        let mut parents = Vec::new();
        let mut colors = Vec::new();
        fn walk(
            t: &IsoTree,
            parent: Option<usize>,
            ps: &mut Vec<Option<usize>>,
            cs: &mut Vec<usize>,
        ) {
            let me = ps.len();
            ps.push(parent);
            cs.push(t.color);
            for c in &t.children {
                walk(c, Some(me), ps, cs);
            }
        }
        walk(self, None, &mut parents, &mut colors);
        (parents, colors)
    }

    pub fn assemble(parents: &[Option<usize>], colors: &[usize]) -> IsoTree {
        let n = parents.len();
        assert_eq!(n, colors.len());
        let mut kids: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut root = None;
        for (i, p) in parents.iter().enumerate() {
            match p {
                Some(q) => kids[*q].push(i),
                None => {
                    assert!(root.is_none(), "two roots");
                    root = Some(i);
                }
            }
        }
        fn build(i: usize, kids: &[Vec<usize>], colors: &[usize]) -> IsoTree {
            IsoTree::node(colors[i], kids[i].iter().map(|&c| build(c, kids, colors)).collect())
        }
        build(root.expect("no root"), &kids, colors)
    }
}

fn color_char(c: usize) -> char {
    assert!((1..=26).contains(&c), "color {c} outside 1..=26");
    (b'a' + (c - 1) as u8) as char
}

impl fmt::Display for IsoTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", color_char(self.color))?;
        if !self.children.is_empty() {
            let parts: Vec<String> = self.children.iter().map(|c| c.to_string()).collect();
            write!(f, "[{}]", parts.join(","))?;
        }
        Ok(())
    }
}

fn parse_iso_inner(s: &str, pos: &mut usize, orig: &str) -> Result<IsoTree, ParseError> {
    let bytes = s.as_bytes();
    if *pos >= bytes.len() || !bytes[*pos].is_ascii_lowercase() {
        return Err(bad("decorated tree", orig, format!("expected a color letter at offset {pos}", pos = *pos)));
    }
    let color = (bytes[*pos] - b'a') as usize + 1;
    *pos += 1;
    let mut children = Vec::new();
    if *pos < bytes.len() && bytes[*pos] == b'[' {
        *pos += 1;
        loop {
            children.push(parse_iso_inner(s, pos, orig)?);
            if *pos < bytes.len() && bytes[*pos] == b',' {
                *pos += 1;
                continue;
            }
            break;
        }
        if *pos >= bytes.len() || bytes[*pos] != b']' {
            return Err(bad("decorated tree", orig, "missing ']'"));
        }
        *pos += 1;
    }
    Ok(IsoTree::node(color, children))
}

impl std::str::FromStr for IsoTree {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let t = parse_iso_inner(&compact, &mut pos, s)?;
        if pos != compact.len() {
            return Err(bad("decorated tree", s, "trailing input"));
        }
        Ok(t)
    }
}
