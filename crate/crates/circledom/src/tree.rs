//! Rooted trees, AHU canonical codes, child isomorphism classes, the
//! alpha parameter of the FPT algorithm, and subforest-key enumeration.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A rooted tree on vertices 0..t; `parent[root] == root`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    parent: Vec<usize>,
    root: usize,
    children: Vec<Vec<usize>>,
}

impl RootedTree {
    pub fn from_parents(parent: Vec<usize>, root: usize) -> Result<Self> {
        let t = parent.len();
        if root >= t || parent[root] != root {
            return Err(Error::MalformedTree("root/parent mismatch".into()));
        }
        let mut children = vec![Vec::new(); t];
        for (v, &p) in parent.iter().enumerate() {
            if p >= t {
                return Err(Error::MalformedTree(format!("parent {p} out of range")));
            }
            if v != root {
                if v == p {
                    return Err(Error::MalformedTree("two roots".into()));
                }
                children[p].push(v);
            }
        }
        // connectivity: every vertex must reach the root
        for mut v in 0..t {
            let mut steps = 0;
            while v != root {
                v = parent[v];
                steps += 1;
                if steps > t {
                    return Err(Error::MalformedTree("parent relation has a cycle".into()));
                }
            }
        }
        Ok(Self {
            parent,
            root,
            children,
        })
    }

    /// Path on t vertices rooted at one end.
    pub fn path(t: usize) -> Self {
        assert!(t >= 1);
        let parent = (0..t).map(|v| v.saturating_sub(1)).collect();
        Self::from_parents(parent, 0).unwrap()
    }

    /// Star on t vertices (a center with t-1 leaves), rooted at the center.
    pub fn star(t: usize) -> Self {
        assert!(t >= 1);
        let parent = vec![0; t];
        Self::from_parents(parent, 0).unwrap()
    }

    pub fn size(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> usize {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.children[v].is_empty()
    }

    /// Vertices of the subtree T[v] (v and its descendants).
    pub fn subtree_vertices(&self, v: usize) -> Vec<usize> {
        let mut out = vec![v];
        let mut i = 0;
        while i < out.len() {
            out.extend_from_slice(&self.children[out[i]]);
            i += 1;
        }
        out
    }

    /// |T[v]|
    pub fn subtree_size(&self, v: usize) -> usize {
        self.subtree_vertices(v).len()
    }

    /// Undirected edges of the tree.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.size())
            .filter(|&v| v != self.root)
            .map(|v| (self.parent[v], v))
            .collect()
    }

    /// The same tree re-rooted at `r`.
    pub fn rerooted(&self, r: usize) -> Self {
        let t = self.size();
        let mut adj = vec![Vec::new(); t];
        for (u, v) in self.edges() {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut parent = vec![usize::MAX; t];
        parent[r] = r;
        let mut stack = vec![r];
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if parent[v] == usize::MAX {
                    parent[v] = u;
                    stack.push(v);
                }
            }
        }
        Self::from_parents(parent, r).unwrap()
    }

    /// AHU canonical code of the rooted subtree T[v]: equal codes iff the
    /// rooted subtrees are isomorphic. A leaf encodes as "()".
    pub fn canonical_code(&self, v: usize) -> String {
        let mut codes: Vec<String> = self.children[v]
            .iter()
            .map(|&c| self.canonical_code(c))
            .collect();
        codes.sort();
        let mut out = String::with_capacity(2 + codes.iter().map(String::len).sum::<usize>());
        out.push('(');
        for c in codes {
            out.push_str(&c);
        }
        out.push(')');
        out
    }

    /// Canonical code of the tree seen as unrooted (rooted at its center(s)).
    pub fn unrooted_code(&self) -> String {
        unrooted_canonical_code(self.size(), &self.edges())
    }

    /// A centroid: a vertex minimizing the largest component of T - v.
    pub fn centroid(&self) -> usize {
        let t = self.size();
        let mut best = (usize::MAX, 0);
        for v in 0..t {
            let rt = self.rerooted(v);
            let heaviest = rt.children(v).iter().map(|&c| rt.subtree_size(c)).max().unwrap_or(0);
            if heaviest < best.0 {
                best = (heaviest, v);
            }
        }
        best.1
    }

    /// Partitions the child subtrees of v into isomorphism classes.
    pub fn child_iso_classes(&self, v: usize) -> Vec<IsoClass> {
        let mut by_code: HashMap<String, Vec<usize>> = HashMap::new();
        for &c in &self.children[v] {
            by_code.entry(self.canonical_code(c)).or_default().push(c);
        }
        let mut classes: Vec<IsoClass> = by_code
            .into_iter()
            .map(|(code, members)| IsoClass { code, members })
            .collect();
        classes.sort_by(|a, b| a.code.cmp(&b.code));
        classes
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "t {}", self.size());
        let line: Vec<String> = (0..self.size())
            .map(|v| {
                if v == self.root {
                    "0".to_string()
                } else {
                    (self.parent[v] + 1).to_string()
                }
            })
            .collect();
        let _ = writeln!(out, "{}", line.join(" "));
        out
    }
}

/// One isomorphism class among the child subtrees of a vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoClass {
    pub code: String,
    pub members: Vec<usize>,
}

impl IsoClass {
    pub fn multiplicity(&self) -> usize {
        self.members.len()
    }
}

/// A sub-multiset of the child-subtree multiset of `owner`: one
/// multiplicity per isomorphism class, componentwise bounded.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubforestKey {
    pub owner: usize,
    pub mult: Vec<usize>,
}

/// All multiplicity vectors for vertex `y`; the count is the product of
/// (d_i + 1) over y's classes.
pub fn enumerate_subforest_keys(tree: &RootedTree, y: usize) -> Vec<SubforestKey> {
    let classes = tree.child_iso_classes(y);
    let mut keys = vec![Vec::new()];
    for class in &classes {
        let mut next = Vec::new();
        for prefix in &keys {
            for m in 0..=class.multiplicity() {
                let mut v = prefix.clone();
                v.push(m);
                next.push(v);
            }
        }
        keys = next;
    }
    keys.into_iter()
        .map(|mult| SubforestKey { owner: y, mult })
        .collect()
}

/// Which alpha quantity to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaMode {
    /// alpha_r^T for the tree's current root.
    PerRoot,
    /// alpha^T, maximized over all roots.
    MaxOverRoots,
}

/// Result of an alpha computation, with argmax data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaReport {
    pub value: u128,
    pub argmax_root: usize,
    pub argmax_vertex: usize,
}

/// alpha_r^T(v) = product of (d_i + 1) over the isomorphism classes of
/// the child subtrees of v.
pub fn alpha_at(tree: &RootedTree, v: usize) -> u128 {
    tree.child_iso_classes(v)
        .iter()
        .map(|c| c.multiplicity() as u128 + 1)
        .product()
}

/// alpha_r^T (per-root) or alpha^T (max over roots), with argmax data.
pub fn alpha(tree: &RootedTree, mode: AlphaMode) -> AlphaReport {
    let roots: Vec<usize> = match mode {
        AlphaMode::PerRoot => vec![tree.root()],
        AlphaMode::MaxOverRoots => (0..tree.size()).collect(),
    };
    let mut best = AlphaReport {
        value: 0,
        argmax_root: tree.root(),
        argmax_vertex: tree.root(),
    };
    for r in roots {
        let rt = tree.rerooted(r);
        for v in 0..rt.size() {
            let a = alpha_at(&rt, v);
            if a > best.value {
                best = AlphaReport {
                    value: a,
                    argmax_root: r,
                    argmax_vertex: v,
                };
            }
        }
    }
    best
}

/// Canonical code of an unrooted tree given by its edges: the minimum AHU
/// code over the tree's center(s).
pub fn unrooted_canonical_code(n: usize, edges: &[(usize, usize)]) -> String {
    assert!(n >= 1);
    assert_eq!(edges.len(), n - 1);
    if n == 1 {
        return "()".to_string();
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    // peel leaves to find the 1 or 2 centers
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut frontier: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &frontier {
            removed[v] = true;
            remaining -= 1;
            for &u in &adj[v] {
                if !removed[u] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        frontier = next;
    }
    let centers: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    centers
        .iter()
        .map(|&c| {
            let t = tree_from_adj(n, &adj, c);
            t.canonical_code(c)
        })
        .min()
        .unwrap()
}

fn tree_from_adj(n: usize, adj: &[Vec<usize>], root: usize) -> RootedTree {
    let mut parent = vec![usize::MAX; n];
    parent[root] = root;
    let mut stack = vec![root];
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if parent[v] == usize::MAX {
                parent[v] = u;
                stack.push(v);
            }
        }
    }
    RootedTree::from_parents(parent, root).unwrap()
}

/// Vertex bijection from T[from] onto T[to] for two isomorphic rooted
/// subtrees of the same tree (children are matched up by canonical code).
pub fn rooted_subtree_iso_map(tree: &RootedTree, from: usize, to: usize) -> HashMap<usize, usize> {
    debug_assert_eq!(tree.canonical_code(from), tree.canonical_code(to));
    let mut map = HashMap::new();
    fn go(tree: &RootedTree, from: usize, to: usize, map: &mut HashMap<usize, usize>) {
        map.insert(from, to);
        let key = |&v: &usize| tree.canonical_code(v);
        let mut cf: Vec<usize> = tree.children(from).to_vec();
        let mut ct: Vec<usize> = tree.children(to).to_vec();
        cf.sort_by_key(key);
        ct.sort_by_key(key);
        for (f, t) in cf.iter().zip(ct.iter()) {
            go(tree, *f, *t, map);
        }
    }
    go(tree, from, to, &mut map);
    map
}

/// Parses the tree file format: line 1 = "t <size>", line 2 = 1-based
/// parent per vertex, 0 for the root.
pub fn parse_tree(text: &str) -> Result<RootedTree> {
    let mut lines = text.lines().filter(|l| !l.trim_start().starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::MalformedTree("empty input".into()))?;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("t") {
        return Err(Error::MalformedTree("missing `t` header".into()));
    }
    let t: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::MalformedTree("bad size".into()))?;
    let entries: Vec<usize> = lines
        .flat_map(|l| l.split_whitespace())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Error::MalformedTree(format!("bad parent `{s}`")))
        })
        .collect::<Result<_>>()?;
    if entries.len() != t {
        return Err(Error::MalformedTree(format!(
            "expected {t} parent entries, found {}",
            entries.len()
        )));
    }
    let mut root = None;
    let mut parent = vec![0usize; t];
    for (v, &p) in entries.iter().enumerate() {
        if p == 0 {
            if root.is_some() {
                return Err(Error::MalformedTree("two roots".into()));
            }
            root = Some(v);
            parent[v] = v;
        } else {
            if p > t {
                return Err(Error::MalformedTree(format!("parent {p} out of range")));
            }
            parent[v] = p - 1;
        }
    }
    let root = root.ok_or_else(|| Error::MalformedTree("no root".into()))?;
    RootedTree::from_parents(parent, root)
}
