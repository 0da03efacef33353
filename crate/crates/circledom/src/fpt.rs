//! FPT algorithm for dominating sets inducing a prescribed tree T.
//!
//! Same region geometry as the minimum-tree DP, but boolean entries are
//! keyed by where the piece sits in T: a tree entry (region, w) means the
//! region admits a valid tree isomorphic to the subtree T[w], with the
//! region's splitting chord playing w; a forest entry (region, key) holds a
//! sub-multiset of the child subtrees of key.owner, identified only by
//! isomorphism-class multiplicities. Deduplicating child subtrees by
//! canonical code is what keeps the key count at the alpha bound instead of
//! exponential in the child count.

use std::collections::HashMap;

use crate::dp::{t1_geometry, t2_geometry, Region};
use crate::repr::CircleRepresentation;
use crate::tree::{rooted_subtree_iso_map, IsoClass, RootedTree, SubforestKey};

#[derive(Clone, Debug)]
enum Deriv {
    /// Unit region of this chord, playing a leaf vertex.
    SeedLeaf { chord: usize },
    /// Forest key obtained from the tree entry for child vertex `vertex`
    /// of the same region.
    Lift { vertex: usize },
    /// Two sibling forests side by side (rule F1).
    Merge { r1: Region, k1: SubforestKey, r2: Region, k2: SubforestKey },
    /// The full child multiset of a vertex hooked to its own chord
    /// (rule F2); produces the tree entry for that vertex.
    Assemble { chord: usize, r1: Region, k1: SubforestKey, r2: Option<(Region, SubforestKey)> },
}

/// One materialized component of a forest entry: a chord→vertex map into
/// T[root_used] for some concrete class member root_used; reassigned to a
/// distinct sibling of the same class at assembly time.
struct Instance {
    class: usize,
    root_used: usize,
    map: Vec<(usize, usize)>,
}

struct Solver<'a> {
    repr: &'a CircleRepresentation,
    tree: RootedTree,
    m: usize,
    arc_free: Vec<Vec<bool>>,
    /// per vertex: iso classes of its child subtrees
    classes: Vec<Vec<IsoClass>>,
    /// per vertex: index of its class within its parent's class list
    class_in_parent: Vec<usize>,
    /// per vertex: |T[v]|
    weight: Vec<usize>,
    /// per class list: chord count of one member subtree
    tree_tab: HashMap<(Region, usize), Deriv>,
    forest_tab: HashMap<(Region, SubforestKey), Deriv>,
    /// new tree entries per weight, in derivation order
    tree_sizes: Vec<Vec<(Region, usize)>>,
    forest_sizes: Vec<Vec<(Region, SubforestKey)>>,
    by_first: HashMap<(usize, usize), Vec<(Region, SubforestKey)>>,
    by_second: HashMap<(usize, usize), Vec<(Region, SubforestKey)>>,
}

impl<'a> Solver<'a> {
    fn new(repr: &'a CircleRepresentation, tree: RootedTree) -> Self {
        let t = tree.size();
        let classes: Vec<Vec<IsoClass>> =
            (0..t).map(|v| tree.child_iso_classes(v)).collect();
        let mut class_in_parent = vec![usize::MAX; t];
        for v in 0..t {
            if v == tree.root() {
                continue;
            }
            let p = tree.parent(v);
            class_in_parent[v] = classes[p]
                .iter()
                .position(|c| c.members.contains(&v))
                .unwrap();
        }
        let weight = (0..t).map(|v| tree.subtree_size(v)).collect();
        Solver {
            repr,
            m: repr.num_slots(),
            arc_free: repr.arc_free_table(),
            classes,
            class_in_parent,
            weight,
            tree,
            tree_tab: HashMap::new(),
            forest_tab: HashMap::new(),
            tree_sizes: vec![Vec::new(); t + 1],
            forest_sizes: vec![Vec::new(); t + 1],
            by_first: HashMap::new(),
            by_second: HashMap::new(),
        }
    }

    /// Chord count of a forest key: sum of multiplicity × member size per
    /// class of the owner.
    fn key_weight(&self, key: &SubforestKey) -> usize {
        key.mult
            .iter()
            .zip(&self.classes[key.owner])
            .map(|(&m, class)| m * self.weight[class.members[0]])
            .sum()
    }

    fn insert_tree(&mut self, r: Region, w: usize, deriv: Deriv) {
        let j = self.weight[w];
        for reg in [r, r.flipped()] {
            if self.tree_tab.contains_key(&(reg, w)) {
                continue;
            }
            self.tree_tab.insert((reg, w), deriv.clone());
            self.tree_sizes[j].push((reg, w));
        }
    }

    fn insert_forest(&mut self, r: Region, key: SubforestKey, deriv: Deriv) {
        let j = self.key_weight(&key);
        for reg in [r, r.flipped()] {
            if self.forest_tab.contains_key(&(reg, key.clone())) {
                continue;
            }
            self.forest_tab.insert((reg, key.clone()), deriv.clone());
            self.forest_sizes[j].push((reg, key.clone()));
            self.by_first.entry((j, reg.a)).or_default().push((reg, key.clone()));
            self.by_second.entry((j, reg.c)).or_default().push((reg, key.clone()));
        }
    }

    /// Tree entries just created at weight j become forest entries (one
    /// unit of the child's class) available to its parent.
    fn lift_new_trees(&mut self, j: usize) {
        let batch = self.tree_sizes[j].clone();
        for (reg, w) in batch {
            if w == self.tree.root() {
                continue;
            }
            let p = self.tree.parent(w);
            let mut mult = vec![0usize; self.classes[p].len()];
            mult[self.class_in_parent[w]] = 1;
            self.insert_forest(reg, SubforestKey { owner: p, mult }, Deriv::Lift { vertex: w });
        }
    }

    fn caps(&self, y: usize) -> Vec<usize> {
        self.classes[y].iter().map(|c| c.multiplicity()).collect()
    }

    fn round(&mut self, j: usize) {
        let m = self.m;
        let mut new_forest: Vec<(Region, SubforestKey, Deriv)> = Vec::new();
        let mut new_tree: Vec<(Region, usize, Deriv)> = Vec::new();

        // F1: sibling forests of the same owner, multiplicities bounded by
        // the owner's child multiset
        for j1 in 1..j {
            let j2 = j - j1;
            for idx in 0..self.forest_sizes[j1].len() {
                let (r1, k1) = self.forest_sizes[j1][idx].clone();
                let caps = self.caps(k1.owner);
                let away = (r1.d + m - r1.a) % m;
                let mut e = (r1.c + 1) % m;
                while (e + m - r1.a) % m < away && self.arc_free[r1.c][e] {
                    if let Some(cands) = self.by_first.get(&(j2, e)) {
                        for (r2, k2) in cands {
                            if k2.owner != k1.owner {
                                continue;
                            }
                            let sum: Vec<usize> =
                                k1.mult.iter().zip(&k2.mult).map(|(a, b)| a + b).collect();
                            if sum.iter().zip(&caps).any(|(s, c)| s > c) {
                                continue;
                            }
                            if let Some(res) = t1_geometry(&self.arc_free, m, r1, *r2) {
                                new_forest.push((
                                    res,
                                    SubforestKey { owner: k1.owner, mult: sum },
                                    Deriv::Merge {
                                        r1,
                                        k1: k1.clone(),
                                        r2: *r2,
                                        k2: k2.clone(),
                                    },
                                ));
                            }
                        }
                    }
                    e = (e + 1) % m;
                }
            }
        }

        // F2: a forest holding the FULL child multiset of y (possibly split
        // across the two operands) plus a chord playing y itself
        for j1 in 1..j {
            for idx in 0..self.forest_sizes[j1].len() {
                let (r1, k1) = self.forest_sizes[j1][idx].clone();
                let y = k1.owner;
                if self.weight[y] != j {
                    continue;
                }
                let caps = self.caps(y);
                let full = k1.mult == caps;
                let need: Vec<usize> =
                    caps.iter().zip(&k1.mult).map(|(c, m)| c - m).collect();
                let j2 = j - 1 - j1;
                let mut u = (r1.a + m - 1) % m;
                while u != r1.a && self.arc_free[u][r1.a] {
                    if self.arc_free[r1.b][u] {
                        let v = self.repr.partner_slot(u);
                        let chord = self.repr.chord_at(u);
                        if full && j2 == 0 {
                            if let Some(res) = t2_geometry(&self.arc_free, m, r1, None, u, v) {
                                new_tree.push((
                                    res,
                                    y,
                                    Deriv::Assemble { chord, r1, k1: k1.clone(), r2: None },
                                ));
                            }
                        }
                        if j2 >= 1 && !full {
                            let mut g = (v + m - 1) % m;
                            while g != v && self.arc_free[g][v] {
                                if let Some(cands) = self.by_second.get(&(j2, g)) {
                                    for (r2, k2) in cands {
                                        if k2.owner != y || k2.mult != need {
                                            continue;
                                        }
                                        if let Some(res) =
                                            t2_geometry(&self.arc_free, m, r1, Some(*r2), u, v)
                                        {
                                            new_tree.push((
                                                res,
                                                y,
                                                Deriv::Assemble {
                                                    chord,
                                                    r1,
                                                    k1: k1.clone(),
                                                    r2: Some((*r2, k2.clone())),
                                                },
                                            ));
                                        }
                                    }
                                }
                                g = (g + m - 1) % m;
                            }
                        }
                    }
                    u = (u + m - 1) % m;
                }
            }
        }

        for (r, key, d) in new_forest {
            self.insert_forest(r, key, d);
        }
        for (r, w, d) in new_tree {
            self.insert_tree(r, w, d);
        }
        self.lift_new_trees(j);
    }

    fn run(&mut self) {
        if self.repr.n() == 0 {
            return;
        }
        // seeds: any chord can play any leaf of T
        let leaves: Vec<usize> = (0..self.tree.size()).filter(|&v| self.tree.is_leaf(v)).collect();
        for chord in 0..self.repr.n() {
            let (p, q) = self.repr.chord_ends(chord);
            for &w in &leaves {
                self.insert_tree(Region::unit(p, q), w, Deriv::SeedLeaf { chord });
            }
        }
        self.lift_new_trees(1);
        for j in 2..=self.tree.size() {
            self.round(j);
        }
    }

    fn materialize_tree(&self, r: Region, w: usize) -> Vec<(usize, usize)> {
        match self.tree_tab.get(&(r, w)).unwrap().clone() {
            Deriv::SeedLeaf { chord } => vec![(chord, w)],
            Deriv::Assemble { chord, r1, k1, r2 } => {
                let mut instances = self.materialize_forest(r1, &k1);
                if let Some((reg2, k2)) = r2 {
                    instances.extend(self.materialize_forest(reg2, &k2));
                }
                let mut map = vec![(chord, w)];
                // hand each instance a distinct concrete child of its class
                let mut used = vec![0usize; self.classes[w].len()];
                for inst in instances {
                    let target = self.classes[w][inst.class].members[used[inst.class]];
                    used[inst.class] += 1;
                    if target == inst.root_used {
                        map.extend(inst.map);
                    } else {
                        let iso = rooted_subtree_iso_map(&self.tree, inst.root_used, target);
                        map.extend(inst.map.iter().map(|&(c, v)| (c, iso[&v])));
                    }
                }
                map
            }
            _ => unreachable!("tree entries are seeded or assembled"),
        }
    }

    fn materialize_forest(&self, r: Region, key: &SubforestKey) -> Vec<Instance> {
        match self.forest_tab.get(&(r, key.clone())).unwrap().clone() {
            Deriv::Lift { vertex } => vec![Instance {
                class: self.class_in_parent[vertex],
                root_used: vertex,
                map: self.materialize_tree(r, vertex),
            }],
            Deriv::Merge { r1, k1, r2, k2 } => {
                let mut out = self.materialize_forest(r1, &k1);
                out.extend(self.materialize_forest(r2, &k2));
                out
            }
            _ => unreachable!("forest entries are lifted or merged"),
        }
    }

    fn answer(&self) -> Option<(Vec<usize>, Vec<(usize, usize)>)> {
        let t = self.tree.size();
        for &(r, w) in &self.tree_sizes[t] {
            if w != self.tree.root() {
                continue;
            }
            if self.arc_free[r.c][r.d] && self.arc_free[r.b][r.a] {
                let mut map = self.materialize_tree(r, w);
                map.sort_unstable();
                let chords: Vec<usize> = map.iter().map(|&(c, _)| c).collect();
                debug_assert_eq!(chords.len(), t);
                return Some((chords, map));
            }
        }
        None
    }
}

/// Dominating set of the diagram inducing a subgraph isomorphic to `tree`,
/// together with the isomorphism as (chord id, tree vertex) pairs sorted by
/// chord. Internally re-roots the tree at a centroid (the answer does not
/// depend on the root; a shallow balanced root keeps the key space small).
pub fn fpt_tree_dominating(
    repr: &CircleRepresentation,
    tree: &RootedTree,
) -> Option<(Vec<usize>, Vec<(usize, usize)>)> {
    fpt_tree_dominating_rooted(repr, tree, tree.centroid())
}

/// Same, with an explicit root choice (exposed so tests can confirm root
/// independence).
pub fn fpt_tree_dominating_rooted(
    repr: &CircleRepresentation,
    tree: &RootedTree,
    root: usize,
) -> Option<(Vec<usize>, Vec<(usize, usize)>)> {
    let mut solver = Solver::new(repr, tree.rerooted(root));
    solver.run();
    solver.answer()
}
