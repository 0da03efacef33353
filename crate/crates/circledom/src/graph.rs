//! Abstract graphs (intersection graphs of chord diagrams and reduction
//! outputs) and verification of the domination variants.

use crate::tree::{unrooted_canonical_code, RootedTree};

/// Simple undirected graph with adjacency stored as per-vertex bitmasks
/// (64-bit words), so domination checks during subset enumeration are cheap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    /// adj[v] = neighbor mask of v, `words` u64 words per vertex.
    adj: Vec<u64>,
    edges: usize,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Self {
            n,
            words,
            adj: vec![0; n * words],
            edges: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n);
        if self.has_edge(u, v) {
            return;
        }
        self.adj[u * self.words + v / 64] |= 1 << (v % 64);
        self.adj[v * self.words + u / 64] |= 1 << (u % 64);
        self.edges += 1;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn neighbor_mask(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(v, u))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbor_mask(v).iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// The domination variants: the structural condition imposed on the induced
/// subgraph of a dominating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DominationVariant {
    Plain,
    Connected,
    Total,
    Independent,
    Acyclic,
    ConnectedAcyclic,
    /// Induced subgraph isomorphic to the given tree (as an unrooted tree).
    GivenTree(RootedTree),
    /// Induced subgraph is a tree on exactly k vertices, k >= 1.
    FixedSizeTree(usize),
}

/// True iff every vertex outside S has at least one neighbor in S.
pub fn verify_dominating(g: &Graph, s: &[usize]) -> bool {
    let words = g.n.div_ceil(64).max(1);
    let mut covered = vec![0u64; words];
    for &v in s {
        covered[v / 64] |= 1 << (v % 64);
        for (w, m) in covered.iter_mut().zip(g.neighbor_mask(v)) {
            *w |= m;
        }
    }
    (0..g.n).all(|v| covered[v / 64] >> (v % 64) & 1 == 1)
}

fn induced_edges(g: &Graph, s: &[usize]) -> Vec<(usize, usize)> {
    let mut es = Vec::new();
    for (i, &u) in s.iter().enumerate() {
        for &v in &s[i + 1..] {
            if g.has_edge(u, v) {
                es.push((u, v));
            }
        }
    }
    es
}

fn induced_connected(g: &Graph, s: &[usize]) -> bool {
    if s.is_empty() {
        return false;
    }
    let mut seen = vec![false; s.len()];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..s.len() {
            if !seen[j] && g.has_edge(s[i], s[j]) {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.iter().all(|&x| x)
}

fn induced_acyclic(g: &Graph, s: &[usize]) -> bool {
    // union-find over induced edges
    let mut parent: Vec<usize> = (0..s.len()).collect();
    fn find(p: &mut Vec<usize>, mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (i, &u) in s.iter().enumerate() {
        for (dj, &v) in s[i + 1..].iter().enumerate() {
            if g.has_edge(u, v) {
                let (ru, rv) = (find(&mut parent, i), find(&mut parent, i + 1 + dj));
                if ru == rv {
                    return false;
                }
                parent[ru] = rv;
            }
        }
    }
    true
}

/// True iff the subgraph induced by S is a tree isomorphic to T (unrooted).
pub fn induced_isomorphic_to_tree(g: &Graph, s: &[usize], t: &RootedTree) -> bool {
    if s.len() != t.size() {
        return false;
    }
    if !induced_connected(g, s) || !induced_acyclic(g, s) {
        return false;
    }
    if s.len() <= 2 {
        return true; // all trees of size 1 or 2 are isomorphic
    }
    let edges = induced_edges(g, s);
    let relabel: std::collections::HashMap<usize, usize> =
        s.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let edges: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (relabel[&u], relabel[&v])).collect();
    unrooted_canonical_code(s.len(), &edges) == t.unrooted_code()
}

/// True iff S dominates and G[S] satisfies the variant's structural
/// condition.
pub fn verify_variant(g: &Graph, s: &[usize], variant: &DominationVariant) -> bool {
    if s.iter().any(|&v| v >= g.n) {
        return false;
    }
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != s.len() {
        return false;
    }
    if !verify_dominating(g, &sorted) {
        return false;
    }
    match variant {
        DominationVariant::Plain => true,
        DominationVariant::Connected => induced_connected(g, &sorted),
        DominationVariant::Total => sorted
            .iter()
            .all(|&u| sorted.iter().any(|&v| g.has_edge(u, v))),
        DominationVariant::Independent => induced_edges(g, &sorted).is_empty(),
        DominationVariant::Acyclic => induced_acyclic(g, &sorted),
        DominationVariant::ConnectedAcyclic => {
            induced_connected(g, &sorted) && induced_acyclic(g, &sorted)
        }
        DominationVariant::GivenTree(t) => induced_isomorphic_to_tree(g, &sorted, t),
        DominationVariant::FixedSizeTree(k) => {
            sorted.len() == *k && induced_connected(g, &sorted) && induced_acyclic(g, &sorted)
        }
    }
}

/// Builds the path graph on n vertices 0-1-...-(n-1). Test helper used
/// across modules.
pub fn path_graph(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}
