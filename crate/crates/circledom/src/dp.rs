//! Region dynamic program for minimum dominating trees in circle graphs.
//!
//! A region is a pair of disjoint circle arcs; the table records, per region
//! and per exact chord count, whether a valid forest (resp. tree) of that
//! size exists: a chord set spanning the region's four boundary slots, split
//! by it (exactly one chord per component crossing between the two arcs),
//! and dominating every chord inside the arcs. Unit regions are seeded by
//! single chords; two join rules grow them. Exact sizes (not just minima)
//! are kept because dominating trees of a given size do not exist
//! monotonically in the size.

use std::collections::HashMap;

use crate::repr::CircleRepresentation;

/// Arc union [a,c] ∪ [d,b]; the four slots appear in anticlockwise order
/// a, c, d, b. Gaps (the complement) are the open arcs (c,d) and (b,a).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Region {
    pub a: usize,
    pub c: usize,
    pub d: usize,
    pub b: usize,
}

impl Region {
    /// Region of a single chord with endpoints p and q: arcs [p,p] and [q,q].
    pub fn unit(p: usize, q: usize) -> Self {
        Region { a: p, c: p, d: q, b: q }
    }

    /// Same region read from the other arc; both spellings are stored.
    pub fn flipped(self) -> Self {
        Region { a: self.d, c: self.b, d: self.a, b: self.c }
    }

    pub fn is_unit(self) -> bool {
        self.a == self.c && self.d == self.b
    }
}

/// How a table entry was first derived, for witness reconstruction.
#[derive(Clone, Copy, Debug)]
pub enum Deriv {
    /// Unit region of this chord.
    Seed(usize),
    /// Side-by-side forest union (join rule 1).
    Join { r1: Region, j1: usize, r2: Region, j2: usize },
    /// Forest(s) hooked together by one extra chord into a tree (join rule 2).
    Attach { chord: usize, r1: Region, j1: usize, r2: Option<(Region, usize)> },
}

pub struct RegionTable {
    /// chord count
    pub n: usize,
    /// slot count (2n)
    m: usize,
    arc_free: Vec<Vec<bool>>,
    forest: HashMap<(Region, usize), Deriv>,
    tree: HashMap<(Region, usize), Deriv>,
    /// regions first reaching a forest (resp. tree) entry at each size, in
    /// derivation order — the source of witness determinism
    forest_sizes: Vec<Vec<Region>>,
    tree_sizes: Vec<Vec<Region>>,
    /// (size, slot of region.a) → regions, for the inner operand of rule 1
    by_first: HashMap<(usize, usize), Vec<Region>>,
    /// (size, slot of region.c) → regions, for the inner operand of rule 2
    by_second: HashMap<(usize, usize), Vec<Region>>,
}

/// Checks that the slots appear in anticlockwise order starting at the
/// first element. Each element carries whether it may coincide with its
/// predecessor (only boundary slots of a degenerate unit region may; any
/// two distinct chords occupy distinct slots, so cross-operand comparisons
/// are strict — that is what makes entry sizes exact).
fn chain_ok(m: usize, elems: &[(usize, bool)]) -> bool {
    let anchor = elems[0].0;
    let mut prev = 0usize;
    for (i, &(x, eq_ok)) in elems.iter().enumerate() {
        let r = (x + m - anchor) % m;
        if i == 0 {
            continue;
        }
        if r < prev || (r == prev && !eq_ok) {
            return false;
        }
        prev = r;
    }
    true
}

/// Geometric test for join rule 1: r2 = ef−gh nested in the middle gap of
/// r1 = ab−cd with chord-free slack arcs (c,e) and (f,d); the union is a
/// valid forest for ab−gh.
pub(crate) fn t1_geometry(arc_free: &[Vec<bool>], m: usize, r1: Region, r2: Region) -> Option<Region> {
    let Region { a, c, d, b } = r1;
    let Region { a: e, c: g, d: h, b: f } = r2;
    let ok = chain_ok(
        m,
        &[
            (a, false),
            (c, true),
            (e, false),
            (g, true),
            (h, false),
            (f, true),
            (d, false),
            (b, true),
        ],
    ) && arc_free[c][e]
        && arc_free[f][d];
    ok.then_some(Region { a, c: g, d: h, b })
}

/// Geometric test for join rule 2: chord uv crosses from the outer gap of
/// r1 = ab−cd to the middle of (optional) r2 = ef−gh, with chord-free arcs
/// (u,a), (g,v), (v,h), (b,u); the union plus uv is a valid TREE for df−ce.
/// With r2 absent, e = f = g = h = v.
pub(crate) fn t2_geometry(
    arc_free: &[Vec<bool>],
    m: usize,
    r1: Region,
    r2: Option<Region>,
    u: usize,
    v: usize,
) -> Option<Region> {
    let Region { a, c, d, b } = r1;
    match r2 {
        None => {
            let ok = chain_ok(
                m,
                &[(u, false), (a, false), (c, true), (v, false), (d, false), (b, true)],
            ) && arc_free[u][a]
                && arc_free[b][u];
            ok.then_some(Region { a: d, c, d: v, b: v })
        }
        Some(Region { a: e, c: g, d: h, b: f }) => {
            let ok = chain_ok(
                m,
                &[
                    (u, false),
                    (a, false),
                    (c, true),
                    (e, false),
                    (g, true),
                    (v, false),
                    (h, false),
                    (f, true),
                    (d, false),
                    (b, true),
                ],
            ) && arc_free[u][a]
                && arc_free[g][v]
                && arc_free[v][h]
                && arc_free[b][u];
            ok.then_some(Region { a: d, c, d: e, b: f })
        }
    }
}

impl RegionTable {
    fn empty(repr: &CircleRepresentation) -> Self {
        let n = repr.n();
        RegionTable {
            n,
            m: repr.num_slots(),
            arc_free: repr.arc_free_table(),
            forest: HashMap::new(),
            tree: HashMap::new(),
            forest_sizes: vec![Vec::new(); n + 1],
            tree_sizes: vec![Vec::new(); n + 1],
            by_first: HashMap::new(),
            by_second: HashMap::new(),
        }
    }

    fn insert_forest(&mut self, r: Region, j: usize, deriv: Deriv) {
        for reg in [r, r.flipped()] {
            if self.forest.contains_key(&(reg, j)) {
                continue;
            }
            self.forest.insert((reg, j), deriv);
            self.forest_sizes[j].push(reg);
            self.by_first.entry((j, reg.a)).or_default().push(reg);
            self.by_second.entry((j, reg.c)).or_default().push(reg);
        }
    }

    fn insert_tree(&mut self, r: Region, j: usize, deriv: Deriv) {
        for reg in [r, r.flipped()] {
            if self.tree.contains_key(&(reg, j)) {
                continue;
            }
            self.tree.insert((reg, j), deriv);
            self.tree_sizes[j].push(reg);
        }
        self.insert_forest(r, j, deriv);
    }

    /// Least size of a valid forest for the region, if any.
    pub fn v1(&self, r: Region) -> Option<usize> {
        (1..=self.n).find(|&j| self.forest.contains_key(&(r, j)))
    }

    /// Least size of a valid tree for the region, if any.
    pub fn v2(&self, r: Region) -> Option<usize> {
        (1..=self.n).find(|&j| self.tree.contains_key(&(r, j)))
    }

    pub fn has_forest(&self, r: Region, j: usize) -> bool {
        self.forest.contains_key(&(r, j))
    }

    pub fn has_tree(&self, r: Region, j: usize) -> bool {
        self.tree.contains_key(&(r, j))
    }

    /// Number of distinct regions holding at least one entry.
    pub fn region_count(&self) -> usize {
        let regions: std::collections::HashSet<Region> =
            self.forest.keys().chain(self.tree.keys()).map(|&(r, _)| r).collect();
        regions.len()
    }

    /// Total (region, size) entries across both tables.
    pub fn entry_count(&self) -> usize {
        self.forest.len() + self.tree.len()
    }

    /// Chord set behind an entry, as sorted chord ids.
    pub fn materialize(&self, r: Region, j: usize, tree: bool) -> Vec<usize> {
        let deriv = if tree { self.tree[&(r, j)] } else { self.forest[&(r, j)] };
        let mut out = Vec::new();
        self.collect(deriv, &mut out);
        out.sort_unstable();
        out.dedup();
        debug_assert_eq!(out.len(), j);
        out
    }

    fn collect(&self, deriv: Deriv, out: &mut Vec<usize>) {
        match deriv {
            Deriv::Seed(c) => out.push(c),
            Deriv::Join { r1, j1, r2, j2 } => {
                self.collect(self.forest[&(r1, j1)], out);
                self.collect(self.forest[&(r2, j2)], out);
            }
            Deriv::Attach { chord, r1, j1, r2 } => {
                out.push(chord);
                self.collect(self.forest[&(r1, j1)], out);
                if let Some((r, j)) = r2 {
                    self.collect(self.forest[&(r, j)], out);
                }
            }
        }
    }

    /// A valid tree of size exactly k whose two gap arcs are chord-free is a
    /// dominating tree of the whole diagram.
    pub fn dominating_tree_witness(&self, k: usize) -> Option<Vec<usize>> {
        if k == 0 || k > self.n {
            return None;
        }
        for &r in &self.tree_sizes[k] {
            if self.arc_free[r.c][r.d] && self.arc_free[r.b][r.a] {
                return Some(self.materialize(r, k, true));
            }
        }
        None
    }

    fn round(&mut self, repr: &CircleRepresentation, j: usize) {
        let m = self.m;
        let mut produced: Vec<(Region, Deriv, bool)> = Vec::new();

        // rule 1: outer forest of size j1, inner forest of size j2 = j - j1
        for j1 in 1..j {
            let j2 = j - j1;
            for idx in 0..self.forest_sizes[j1].len() {
                let r1 = self.forest_sizes[j1][idx];
                let away = (r1.d + m - r1.a) % m;
                let mut e = (r1.c + 1) % m;
                while (e + m - r1.a) % m < away && self.arc_free[r1.c][e] {
                    if let Some(cands) = self.by_first.get(&(j2, e)) {
                        for &r2 in cands {
                            if let Some(res) = t1_geometry(&self.arc_free, m, r1, r2) {
                                produced.push((
                                    res,
                                    Deriv::Join { r1, j1, r2, j2 },
                                    false,
                                ));
                            }
                        }
                    }
                    e = (e + 1) % m;
                }
            }
        }

        // rule 2: forest of size j1, hook chord, optional inner forest of
        // size j - 1 - j1
        for j1 in 1..j {
            for idx in 0..self.forest_sizes[j1].len() {
                let r1 = self.forest_sizes[j1][idx];
                let mut u = (r1.a + m - 1) % m;
                while u != r1.a && self.arc_free[u][r1.a] {
                    if self.arc_free[r1.b][u] {
                        let v = repr.partner_slot(u);
                        if j1 == j - 1 {
                            if let Some(res) = t2_geometry(&self.arc_free, m, r1, None, u, v) {
                                produced.push((
                                    res,
                                    Deriv::Attach { chord: repr.chord_at(u), r1, j1, r2: None },
                                    true,
                                ));
                            }
                        }
                        let j2 = j - 1 - j1;
                        if j2 >= 1 {
                            let mut g = (v + m - 1) % m;
                            while g != v && self.arc_free[g][v] {
                                if let Some(cands) = self.by_second.get(&(j2, g)) {
                                    for &r2 in cands {
                                        if let Some(res) =
                                            t2_geometry(&self.arc_free, m, r1, Some(r2), u, v)
                                        {
                                            produced.push((
                                                res,
                                                Deriv::Attach {
                                                    chord: repr.chord_at(u),
                                                    r1,
                                                    j1,
                                                    r2: Some((r2, j2)),
                                                },
                                                true,
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

        for (r, deriv, tree) in produced {
            if tree {
                self.insert_tree(r, j, deriv);
            } else {
                self.insert_forest(r, j, deriv);
            }
        }
    }
}

/// Table with only the unit regions seeded (one per chord, both spellings).
pub fn init_regions(repr: &CircleRepresentation) -> RegionTable {
    let mut t = RegionTable::empty(repr);
    for chord in 0..repr.n() {
        let (p, q) = repr.chord_ends(chord);
        t.insert_tree(Region::unit(p, q), 1, Deriv::Seed(chord));
    }
    t
}

/// Join rule 1 at the level of minimum forest sizes: if both operands have
/// finite minimum forest values and the geometry applies, returns the
/// combined region and size.
pub fn try_combine_t1(
    table: &RegionTable,
    r1: Region,
    r2: Region,
) -> Option<(Region, usize)> {
    let j1 = table.v1(r1)?;
    let j2 = table.v1(r2)?;
    let res = t1_geometry(&table.arc_free, table.m, r1, r2)?;
    Some((res, j1 + j2))
}

/// Join rule 2 at the level of minimum forest sizes; the result is a tree
/// value (and hence also a forest value).
pub fn try_combine_t2(
    repr: &CircleRepresentation,
    table: &RegionTable,
    r1: Region,
    r2: Option<Region>,
    chord: usize,
) -> Option<(Region, usize)> {
    let j1 = table.v1(r1)?;
    let j2 = match r2 {
        Some(r) => table.v1(r)?,
        None => 0,
    };
    let (u, v) = repr.chord_ends(chord);
    let res = t2_geometry(&table.arc_free, table.m, r1, r2, u, v)
        .or_else(|| t2_geometry(&table.arc_free, table.m, r1, r2, v, u))?;
    Some((res, j1 + j2 + 1))
}

/// Runs the full size-bucketed fixpoint: all entries of total size j are
/// derived from completed smaller sizes, for j = 2..n.
pub fn solve(repr: &CircleRepresentation) -> RegionTable {
    let mut table = init_regions(repr);
    for j in 2..=repr.n() {
        table.round(repr, j);
    }
    table
}

/// Minimum dominating tree of the diagram: smallest k with a valid tree
/// whose gap arcs are chord-free. Returns (size, sorted chord ids).
pub fn min_dominating_tree(repr: &CircleRepresentation) -> Option<(usize, Vec<usize>)> {
    let table = solve(repr);
    (1..=repr.n()).find_map(|k| table.dominating_tree_witness(k).map(|w| (k, w)))
}

/// Dominating tree with exactly k chords, if one exists.
pub fn dominating_tree_of_size(repr: &CircleRepresentation, k: usize) -> Option<Vec<usize>> {
    solve(repr).dominating_tree_witness(k)
}
