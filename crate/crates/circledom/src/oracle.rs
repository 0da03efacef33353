//! Exhaustive reference solvers. These are the ground truth the dynamic
//! program, the FPT algorithm and the reduction generators are checked
//! against at small scale; none of them is meant to scale.

use crate::error::{Error, Result};
use crate::graph::{verify_variant, DominationVariant, Graph};
use crate::tree::RootedTree;

/// A k-colored graph (the source problem of the hardness constructions).
#[derive(Debug, Clone)]
pub struct ColoredGraph {
    pub graph: Graph,
    /// color[v] in 0..k
    pub color: Vec<usize>,
    pub k: usize,
}

impl ColoredGraph {
    pub fn new(graph: Graph, color: Vec<usize>, k: usize) -> Result<Self> {
        assert_eq!(graph.n(), color.len());
        for i in 0..k {
            if !color.contains(&i) {
                return Err(Error::MalformedColoredGraph(format!("empty color class {i}")));
            }
        }
        let cg = Self { graph, color, k };
        if let Some((u, v)) = cg.monochromatic_edge() {
            return Err(Error::MonochromaticEdge(u, v, cg.color[u]));
        }
        Ok(cg)
    }

    pub fn monochromatic_edge(&self) -> Option<(usize, usize)> {
        for u in 0..self.graph.n() {
            for v in (u + 1)..self.graph.n() {
                if self.graph.has_edge(u, v) && self.color[u] == self.color[v] {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// Vertices of each color class, in vertex order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k];
        for (v, &c) in self.color.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }

    pub fn is_balanced(&self) -> bool {
        let classes = self.classes();
        classes.iter().all(|c| c.len() == classes[0].len())
    }
}

/// A 3-Partition instance: 3m positive integers to be split into m triples
/// of equal sum B.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreePartitionInstance {
    pub items: Vec<u64>,
    pub m: usize,
    pub b: u64,
}

impl ThreePartitionInstance {
    pub fn new(items: Vec<u64>, m: usize) -> Result<Self> {
        if m == 0 || items.len() != 3 * m {
            return Err(Error::BadThreePartition(format!(
                "need 3m items, got {} for m = {m}",
                items.len()
            )));
        }
        if items.iter().any(|&a| a == 0) {
            return Err(Error::BadThreePartition("items must be positive".into()));
        }
        let total: u64 = items.iter().sum();
        if total % m as u64 != 0 {
            return Err(Error::BadThreePartition(format!(
                "sum {total} not divisible by m = {m}"
            )));
        }
        Ok(Self {
            items,
            m,
            b: total / m as u64,
        })
    }

    /// Items violating the strict B/4 < a < B/2 constraint. Violators make
    /// the instance nonstandard but still solvable in principle; the tree
    /// gadget generator rejects them outright.
    pub fn constraint_violations(&self) -> Vec<u64> {
        self.items
            .iter()
            .copied()
            .filter(|&a| 4 * a <= self.b || 2 * a >= self.b)
            .collect()
    }
}

/// Calls `f` on every k-subset of 0..n in lexicographic order until it
/// returns false.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return;
        }
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn dominates_mask(g: &Graph, s: &[usize]) -> bool {
    let words = g.n().div_ceil(64).max(1);
    let mut covered = vec![0u64; words];
    for &v in s {
        covered[v / 64] |= 1 << (v % 64);
        for (w, m) in covered.iter_mut().zip(g.neighbor_mask(v)) {
            *w |= m;
        }
    }
    let full_words = g.n() / 64;
    if covered[..full_words].iter().any(|&w| w != !0) {
        return false;
    }
    let rem = g.n() % 64;
    rem == 0 || covered[full_words] == (1u64 << rem) - 1
}

/// Smallest dominating set of the given variant with size at most kmax,
/// by increasing-cardinality subset enumeration (lexicographic within a
/// cardinality, so the witness is deterministic).
pub fn brute_min_dominating(
    g: &Graph,
    variant: &DominationVariant,
    kmax: usize,
) -> Option<(usize, Vec<usize>)> {
    if g.n() == 0 {
        return None;
    }
    let kmax = kmax.min(g.n());
    for k in 1..=kmax {
        let mut hit: Option<Vec<usize>> = None;
        for_each_subset(g.n(), k, |s| {
            if dominates_mask(g, s) && verify_variant(g, s, variant) {
                hit = Some(s.to_vec());
                false
            } else {
                true
            }
        });
        if let Some(s) = hit {
            return Some((k, s));
        }
    }
    None
}

/// All dominating sets of the given variant with size exactly s.
pub fn brute_all_dominating_of_size(
    g: &Graph,
    variant: &DominationVariant,
    s: usize,
) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_subset(g.n(), s, |sub| {
        if dominates_mask(g, sub) && verify_variant(g, sub, variant) {
            out.push(sub.to_vec());
        }
        true
    });
    out
}

/// A k-colored clique (one vertex per color, pairwise adjacent), found by
/// product enumeration over the color classes.
pub fn brute_colored_clique(cg: &ColoredGraph) -> Option<Vec<usize>> {
    let classes = cg.classes();
    let mut pick = vec![0usize; cg.k];
    'outer: loop {
        let cand: Vec<usize> = (0..cg.k).map(|i| classes[i][pick[i]]).collect();
        let ok = (0..cg.k)
            .all(|i| (i + 1..cg.k).all(|j| cg.graph.has_edge(cand[i], cand[j])));
        if ok {
            return Some(cand);
        }
        for i in (0..cg.k).rev() {
            pick[i] += 1;
            if pick[i] < classes[i].len() {
                continue 'outer;
            }
            pick[i] = 0;
        }
        return None;
    }
}

/// A valid 3-partition (m triples of item values, each summing to B), by
/// exhaustive matching over item indices.
pub fn brute_3partition(inst: &ThreePartitionInstance) -> Option<Vec<[u64; 3]>> {
    let n = inst.items.len();
    let mut used = vec![false; n];
    let mut triples: Vec<[usize; 3]> = Vec::new();
    fn go(
        inst: &ThreePartitionInstance,
        used: &mut [bool],
        triples: &mut Vec<[usize; 3]>,
    ) -> bool {
        let first = match used.iter().position(|&u| !u) {
            None => return true,
            Some(i) => i,
        };
        used[first] = true;
        for j in first + 1..used.len() {
            if used[j] || inst.items[first] + inst.items[j] >= inst.b {
                continue;
            }
            used[j] = true;
            for k in j + 1..used.len() {
                if used[k] || inst.items[first] + inst.items[j] + inst.items[k] != inst.b {
                    continue;
                }
                used[k] = true;
                triples.push([first, j, k]);
                if go(inst, used, triples) {
                    return true;
                }
                triples.pop();
                used[k] = false;
            }
            used[j] = false;
        }
        used[first] = false;
        false
    }
    if go(inst, &mut used, &mut triples) {
        Some(
            triples
                .iter()
                .map(|t| [inst.items[t[0]], inst.items[t[1]], inst.items[t[2]]])
                .collect(),
        )
    } else {
        None
    }
}

/// A dominating set inducing a subgraph isomorphic to T (as an unrooted
/// tree), by subset enumeration. Intended for tiny inputs.
pub fn brute_tree_dominating(g: &Graph, t: &RootedTree) -> Option<Vec<usize>> {
    let variant = DominationVariant::GivenTree(t.clone());
    let mut hit = None;
    for_each_subset(g.n(), t.size(), |s| {
        if dominates_mask(g, s) && verify_variant(g, s, &variant) {
            hit = Some(s.to_vec());
            false
        } else {
            true
        }
    });
    hit
}
