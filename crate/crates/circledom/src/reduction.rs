//! Instance generators for the four hardness constructions, plus the
//! forward-direction witness builders. These produce structured circle
//! diagrams whose answers are known from their combinatorial source
//! (colored clique / 3-partition), which makes them strong end-to-end test
//! inputs for the solvers.

use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{ColoredGraph, ThreePartitionInstance};
use crate::repr::CircleRepresentation;
use crate::tree::RootedTree;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChordRole {
    Extremal,
    Inner,
    Memory,
    Outer,
    L,
    R,
    Parallel,
    Distance,
    Root,
    Branch,
    Pendant,
    Chain,
}

impl ChordRole {
    pub fn as_str(self) -> &'static str {
        match self {
            ChordRole::Extremal => "extremal",
            ChordRole::Inner => "inner",
            ChordRole::Memory => "memory",
            ChordRole::Outer => "outer",
            ChordRole::L => "L",
            ChordRole::R => "R",
            ChordRole::Parallel => "parallel",
            ChordRole::Distance => "distance",
            ChordRole::Root => "root",
            ChordRole::Branch => "branch",
            ChordRole::Pendant => "pendant",
            ChordRole::Chain => "chain",
        }
    }
}

fn role_of(name: &str) -> ChordRole {
    if name == "root" {
        ChordRole::Root
    } else if let Some(prefix) = name.split('_').next() {
        match prefix {
            "ext" => ChordRole::Extremal,
            "inn" => ChordRole::Inner,
            "mem" => ChordRole::Memory,
            "out" => ChordRole::Outer,
            "L" => ChordRole::L,
            "R" => ChordRole::R,
            "par1" | "par2" | "par3" => ChordRole::Parallel,
            "d" | "dbar" => ChordRole::Distance,
            "g" => ChordRole::Branch,
            "b" => ChordRole::Pendant,
            "c" => ChordRole::Chain,
            other => unreachable!("unknown role prefix {other}"),
        }
    } else {
        unreachable!()
    }
}

#[derive(Clone, Debug)]
pub enum ReductionSource {
    Colored(ColoredGraph),
    ThreePartition(ThreePartitionInstance),
}

/// A generated hardness instance: the diagram, per-chord roles, the solution
/// bound encoded by the construction, and the slot ranges of the
/// construction's named coordinates (inclusive).
pub struct ReductionInstance {
    pub repr: CircleRepresentation,
    pub roles: Vec<ChordRole>,
    pub target_size: usize,
    pub layout: Vec<(String, (usize, usize))>,
    pub source: ReductionSource,
}

impl ReductionInstance {
    fn build(
        labels: Vec<String>,
        target_size: usize,
        layout: Vec<(String, (usize, usize))>,
        source: ReductionSource,
    ) -> Result<Self> {
        let repr = CircleRepresentation::from_slot_labels(&labels)?;
        let roles = (0..repr.n()).map(|c| role_of(repr.chord_name(c))).collect();
        Ok(ReductionInstance { repr, roles, target_size, layout, source })
    }

    pub fn chords_with_role(&self, role: ChordRole) -> Vec<usize> {
        (0..self.repr.n()).filter(|&c| self.roles[c] == role).collect()
    }

    pub fn kind(&self) -> &'static str {
        match self.source {
            ReductionSource::Colored(_) => "colored-clique",
            ReductionSource::ThreePartition(_) => "3-partition",
        }
    }

    pub fn metadata_json(&self) -> serde_json::Value {
        let roles: serde_json::Map<String, serde_json::Value> = (0..self.repr.n())
            .map(|c| {
                (self.repr.chord_name(c).to_string(), json!(self.roles[c].as_str()))
            })
            .collect();
        json!({
            "schema": 1,
            "source": self.kind(),
            "target_size": self.target_size,
            "roles": roles,
            "layout": self
                .layout
                .iter()
                .map(|(name, (s, e))| json!({"name": name, "start": s, "end": e}))
                .collect::<Vec<_>>(),
        })
    }
}

/// Pads the color classes with isolated vertices until they all have the
/// same size. Isolated vertices cannot join any clique (k ≥ 2), so the
/// colored-clique answer is unchanged.
pub fn normalize_kcc(cg: &ColoredGraph) -> ColoredGraph {
    let classes = cg.classes();
    let n = classes.iter().map(|c| c.len()).max().unwrap_or(0);
    let extra: usize = classes.iter().map(|c| n - c.len()).sum();
    if extra == 0 {
        return cg.clone();
    }
    let old = cg.graph.n();
    let mut g = Graph::new(old + extra);
    for u in 0..old {
        for v in cg.graph.neighbors(u) {
            if u < v {
                g.add_edge(u, v);
            }
        }
    }
    let mut color = cg.color.clone();
    for (i, class) in classes.iter().enumerate() {
        for _ in class.len()..n {
            color.push(i);
        }
    }
    ColoredGraph::new(g, color, cg.k).expect("padding preserves validity")
}

fn checked_kcc(cg: &ColoredGraph) -> Result<(Vec<Vec<usize>>, usize, usize)> {
    if cg.k < 2 {
        return Err(Error::DegenerateK(cg.k));
    }
    if !cg.is_balanced() {
        return Err(Error::UnbalancedClasses);
    }
    let classes = cg.classes();
    let n = classes[0].len();
    Ok((classes, cg.k, n))
}

/// Dominating-set gadget: k sections of k+1 clusters; extremal chords frame
/// each cluster, twin inner chords force cluster values to be monotone,
/// memory chords carry a section's value across it, and outer chords encode
/// the edges. A dominating set of size k(k+1)/2 exists iff the source has a
/// k-colored clique.
pub fn gen_domset_from_kcc(cg: &ColoredGraph) -> Result<ReductionInstance> {
    let (classes, k, n) = checked_kcc(cg)?;
    let mut labels: Vec<String> = Vec::new();
    let mut layout: Vec<(String, (usize, usize))> = Vec::new();

    for i in 1..=k {
        let sec_start = labels.len();
        for j in 1..=k + 1 {
            let cl_start = labels.len();
            labels.push(format!("ext_{i}_{j}"));
            for l in 0..=n {
                // interval ]l,l+1[: incoming twin rights (nested-in first),
                // then outgoing twin lefts
                if j >= 2 {
                    labels.push(format!("inn_{i}_{}_{l}_1", j - 1));
                    labels.push(format!("inn_{i}_{}_{l}_0", j - 1));
                }
                if j <= k {
                    labels.push(format!("inn_{i}_{j}_{l}_0"));
                    labels.push(format!("inn_{i}_{j}_{l}_1"));
                }
                if l < n {
                    let p = l + 1;
                    if j == 1 || j == k + 1 {
                        labels.push(format!("mem_{i}_{p}"));
                    } else {
                        // the middle cluster j of section i talks to section
                        // t: as the lower-colored side when j > i, as the
                        // higher-colored side when j <= i
                        if j > i {
                            let t = j;
                            for q in 1..=n {
                                if cg.graph.has_edge(classes[i - 1][p - 1], classes[t - 1][q - 1])
                                {
                                    labels.push(format!("out_{i}_{p}_{t}_{q}"));
                                }
                            }
                        } else {
                            let t = j - 1;
                            for q in 1..=n {
                                if cg.graph.has_edge(classes[t - 1][q - 1], classes[i - 1][p - 1])
                                {
                                    labels.push(format!("out_{t}_{q}_{i}_{p}"));
                                }
                            }
                        }
                    }
                }
            }
            labels.push(format!("ext_{i}_{j}"));
            layout.push((format!("sec{i}_cl{j}"), (cl_start, labels.len() - 1)));
        }
        layout.push((format!("sec{i}"), (sec_start, labels.len() - 1)));
    }

    let inst = ReductionInstance::build(
        labels,
        k * (k + 1) / 2,
        layout,
        ReductionSource::Colored(cg.clone()),
    )?;
    debug_assert_eq!(
        inst.repr.n(),
        k * (k + 1) + 2 * k * k * (n + 1) + k * n + cg.graph.edge_count()
    );
    Ok(inst)
}

fn clique_values(cg: &ColoredGraph, clique: &[usize]) -> Result<Vec<usize>> {
    let classes = cg.classes();
    if clique.len() != cg.k {
        return Err(Error::NotAClique(format!(
            "expected {} vertices, got {}",
            cg.k,
            clique.len()
        )));
    }
    let mut values = vec![0usize; cg.k];
    for &v in clique {
        if v >= cg.graph.n() {
            return Err(Error::NotAClique(format!("vertex {v} out of range")));
        }
        let c = cg.color[v];
        if values[c] != 0 {
            return Err(Error::NotAClique(format!("two vertices of color {c}")));
        }
        values[c] = classes[c].iter().position(|&x| x == v).unwrap() + 1;
    }
    for a in 0..clique.len() {
        for b in a + 1..clique.len() {
            if !cg.graph.has_edge(clique[a], clique[b]) {
                return Err(Error::NotAClique(format!(
                    "missing edge {} {}",
                    clique[a], clique[b]
                )));
            }
        }
    }
    Ok(values)
}

/// The k memory chords at the clique's per-color values plus the k(k−1)/2
/// outer chords of the clique edges: a dominating set of size k(k+1)/2.
pub fn witness_domset_from_clique(
    inst: &ReductionInstance,
    clique: &[usize],
) -> Result<Vec<usize>> {
    let cg = match &inst.source {
        ReductionSource::Colored(cg) => cg,
        _ => return Err(Error::NotAClique("wrong instance kind".into())),
    };
    let values = clique_values(cg, clique)?;
    let mut chords = Vec::new();
    for i in 1..=cg.k {
        chords.push(inst.repr.chord_id(&format!("mem_{i}_{}", values[i - 1]))?);
    }
    for i in 1..=cg.k {
        for j in i + 1..=cg.k {
            chords.push(inst.repr.chord_id(&format!(
                "out_{i}_{}_{j}_{}",
                values[i - 1],
                values[j - 1]
            ))?);
        }
    }
    chords.sort_unstable();
    Ok(chords)
}

/// Shared generator for the independent-domination gadget and its acyclic
/// extension (which adds a third parallel set and the distance clique per
/// color interval).
fn gen_lr_gadget(cg: &ColoredGraph, acyclic: bool) -> Result<ReductionInstance> {
    let (classes, k, n) = checked_kcc(cg)?;
    let p = 2 * k + 1;
    let mut labels: Vec<String> = Vec::new();
    let mut layout: Vec<(String, (usize, usize))> = Vec::new();

    // a chord for every cross-color NON-edge
    let non_edge = |a: usize, pa: usize, b: usize, qb: usize| {
        !cg.graph.has_edge(classes[a - 1][pa - 1], classes[b - 1][qb - 1])
    };

    for i in 1..=k {
        let h_start = labels.len();
        // first subinterval: the L left endpoints (with the distance-chord
        // left endpoints tucked after each), framed by parallel set 1
        for t in 1..=p {
            labels.push(format!("par1_{i}_{t}"));
        }
        for j in 1..=n {
            labels.push(format!("L_{i}_{j}"));
            if acyclic {
                labels.push(format!("d_{i}_{j}"));
                labels.push(format!("dbar_{i}_{j}"));
            }
        }
        for t in (1..=p).rev() {
            labels.push(format!("par1_{i}_{t}"));
        }
        // second subinterval: l_j right / r_j left interleaved; the open gap
        // between them is the vertex interval v_j, where outer chords land
        if acyclic {
            for t in 1..=p {
                labels.push(format!("par3_{i}_{t}"));
            }
        }
        for j in 1..=n {
            labels.push(format!("L_{i}_{j}"));
            let v_start = labels.len();
            for s in 1..=k {
                if s == i {
                    continue;
                }
                for q in 1..=n {
                    let present = if s < i { non_edge(s, q, i, j) } else { non_edge(i, j, s, q) };
                    if present {
                        if s < i {
                            labels.push(format!("out_{s}_{q}_{i}_{j}"));
                        } else {
                            labels.push(format!("out_{i}_{j}_{s}_{q}"));
                        }
                    }
                }
            }
            layout.push((format!("v_{i}_{j}"), (v_start - 1, labels.len())));
            labels.push(format!("R_{i}_{j}"));
        }
        if acyclic {
            for t in (1..=p).rev() {
                labels.push(format!("par3_{i}_{t}"));
            }
        }
        // third subinterval: the R right endpoints (distance-chord rights
        // after each), framed by parallel set 2
        for t in 1..=p {
            labels.push(format!("par2_{i}_{t}"));
        }
        for j in 1..=n {
            labels.push(format!("R_{i}_{j}"));
            if acyclic {
                labels.push(format!("dbar_{i}_{j}"));
                labels.push(format!("d_{i}_{j}"));
            }
        }
        for t in (1..=p).rev() {
            labels.push(format!("par2_{i}_{t}"));
        }
        layout.push((format!("H_{i}"), (h_start, labels.len() - 1)));
    }

    ReductionInstance::build(labels, 2 * k, layout, ReductionSource::Colored(cg.clone()))
}

/// Independent-domination gadget (target 2k): per color, the two interleaved
/// cliques L and R framed by two sets of 2k+1 parallel twins; outer chords
/// encode cross-color non-edges.
pub fn gen_independent_from_kcc(cg: &ColoredGraph) -> Result<ReductionInstance> {
    gen_lr_gadget(cg, false)
}

/// Acyclic-domination gadget (target 2k): the independent gadget plus a
/// third parallel set across the middle subinterval and a clique of
/// distance chords (each with a nested twin) per color.
pub fn gen_acyclic_from_kcc(cg: &ColoredGraph) -> Result<ReductionInstance> {
    gen_lr_gadget(cg, true)
}

/// The 2k chords {L_i_{j_i}, R_i_{j_i}} for a colored clique: independent
/// (hence acyclic) and dominating on either gadget.
pub fn witness_from_clique_lr(
    inst: &ReductionInstance,
    clique: &[usize],
) -> Result<Vec<usize>> {
    let cg = match &inst.source {
        ReductionSource::Colored(cg) => cg,
        _ => return Err(Error::NotAClique("wrong instance kind".into())),
    };
    let values = clique_values(cg, clique)?;
    let mut chords = Vec::new();
    for i in 1..=cg.k {
        chords.push(inst.repr.chord_id(&format!("L_{i}_{}", values[i - 1]))?);
        chords.push(inst.repr.chord_id(&format!("R_{i}_{}", values[i - 1]))?);
    }
    chords.sort_unstable();
    Ok(chords)
}

fn chain_exists(i: usize, mb: usize, b: u64) -> bool {
    i >= 1 && i < mb && i as u64 % b != 0
}

/// 3-partition gadget: a root chord crossed by mB nested branch chords;
/// pendant b_i straddles the left endpoint of g_i; chain chords link
/// consecutive positions except across block boundaries (multiples of B).
/// The target tree is a root with one hanging path of a_i vertices per item.
pub fn gen_tree_from_3partition(
    inst: &ThreePartitionInstance,
) -> Result<(RootedTree, ReductionInstance)> {
    if !inst.constraint_violations().is_empty() {
        return Err(Error::BadThreePartition(
            "items must satisfy B/4 < a < B/2 strictly".into(),
        ));
    }
    let mb = inst.m * inst.b as usize;
    if mb <= 6 {
        // root identification needs deg(r) = mB to exceed every other degree
        return Err(Error::RootDegreeTooSmall(mb));
    }

    let mut labels: Vec<String> = Vec::new();
    let mut layout: Vec<(String, (usize, usize))> = Vec::new();
    labels.push("root".into());
    let mut block_start = labels.len();
    for i in 1..=mb {
        let pos_start = labels.len();
        labels.push(format!("b_{i}"));
        if chain_exists(i, mb, inst.b) {
            labels.push(format!("c_{i}"));
        }
        labels.push(format!("g_{i}"));
        if chain_exists(i - 1, mb, inst.b) {
            labels.push(format!("c_{}", i - 1));
        }
        labels.push(format!("b_{i}"));
        layout.push((format!("pos_{i}"), (pos_start, labels.len() - 1)));
        if i as u64 % inst.b == 0 {
            layout.push((
                format!("block_{}", i as u64 / inst.b),
                (block_start, labels.len() - 1),
            ));
            block_start = labels.len();
        }
    }
    labels.push("root".into());
    for i in (1..=mb).rev() {
        labels.push(format!("g_{i}"));
    }

    // root vertex 0, then one path per item
    let mut parent = vec![0usize];
    for &a in &inst.items {
        let mut prev = 0;
        for _ in 0..a {
            parent.push(prev);
            prev = parent.len() - 1;
        }
    }
    let tree = RootedTree::from_parents(parent, 0)?;
    assert_eq!(tree.size(), mb + 1);

    let red = ReductionInstance::build(
        labels,
        mb + 1,
        layout,
        ReductionSource::ThreePartition(inst.clone()),
    )?;
    assert_eq!(red.repr.n(), 3 * mb - inst.m + 1);
    let root_id = red.repr.chord_id("root")?;
    assert_eq!(red.repr.intersection_graph().degree(root_id), mb);
    Ok((tree, red))
}

/// Root plus, per triple and per item in it, the branch chord at the item's
/// start position and the a−1 chain chords after it.
pub fn witness_tree_from_partition(
    inst: &ReductionInstance,
    triples: &[[u64; 3]],
) -> Result<Vec<usize>> {
    let src = match &inst.source {
        ReductionSource::ThreePartition(t) => t,
        _ => return Err(Error::BadPartition("wrong instance kind".into())),
    };
    if triples.len() != src.m {
        return Err(Error::BadPartition(format!(
            "expected {} triples, got {}",
            src.m,
            triples.len()
        )));
    }
    let mut pool = src.items.clone();
    pool.sort_unstable();
    let mut used: Vec<u64> = triples.iter().flatten().copied().collect();
    used.sort_unstable();
    if pool != used {
        return Err(Error::BadPartition("triples are not a permutation of the items".into()));
    }
    for t in triples {
        if t.iter().sum::<u64>() != src.b {
            return Err(Error::BadPartition(format!("triple {t:?} does not sum to {}", src.b)));
        }
    }

    let mut chords = vec![inst.repr.chord_id("root")?];
    for (j, triple) in triples.iter().enumerate() {
        let mut acc = 0u64;
        for &a in triple {
            let start = j as u64 * src.b + acc;
            chords.push(inst.repr.chord_id(&format!("g_{}", start + 1))?);
            for l in 1..a {
                chords.push(inst.repr.chord_id(&format!("c_{}", start + l))?);
            }
            acc += a;
        }
    }
    chords.sort_unstable();
    Ok(chords)
}

/// Set-cover star gadget: bipartite sets/elements graph plus an apex over
/// the set side and k+1 pendants on the apex. The graph (not a circle
/// graph) has a dominating set isomorphic to the star with k leaves iff a
/// set cover of size at most k exists.
pub fn gen_star_from_setcover(
    universe: usize,
    collection: &[Vec<usize>],
    k: usize,
) -> Result<(Graph, RootedTree)> {
    if collection.is_empty() {
        return Err(Error::EmptyCollection);
    }
    let c = collection.len();
    let apex = c + universe;
    let mut g = Graph::new(apex + 1 + (k + 1));
    for (i, set) in collection.iter().enumerate() {
        for &e in set {
            if e >= universe {
                return Err(Error::ItemOutOfRange(e as u64, universe as u64));
            }
            g.add_edge(i, c + e);
        }
        g.add_edge(apex, i);
    }
    for pend in 0..=k {
        g.add_edge(apex, apex + 1 + pend);
    }
    Ok((g, RootedTree::star(k + 1)))
}

/// Parses the colored graph format: "p <n> <m> <k>" header, "c <v> <color>"
/// lines, "e <u> <v>" lines; vertices and colors are 1-based.
pub fn parse_colored_graph(text: &str) -> Result<ColoredGraph> {
    let mut n = 0usize;
    let mut m = 0usize;
    let mut k = 0usize;
    let mut seen_header = false;
    let mut color: Vec<Option<usize>> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for line in text.lines() {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            [] => {}
            f if f[0].starts_with('#') => {}
            ["p", a, b, c] => {
                n = a.parse().map_err(|_| Error::MalformedColoredGraph(line.into()))?;
                m = b.parse().map_err(|_| Error::MalformedColoredGraph(line.into()))?;
                k = c.parse().map_err(|_| Error::MalformedColoredGraph(line.into()))?;
                color = vec![None; n];
                seen_header = true;
            }
            ["c", v, col] if seen_header => {
                let v: usize = v.parse().map_err(|_| Error::MalformedColoredGraph(line.into()))?;
                let col: usize =
                    col.parse().map_err(|_| Error::MalformedColoredGraph(line.into()))?;
                if v == 0 || v > n || col == 0 || col > k {
                    return Err(Error::MalformedColoredGraph(line.into()));
                }
                color[v - 1] = Some(col - 1);
            }
            ["e", u, v] if seen_header => {
                let u: usize = u.parse().map_err(|_| Error::MalformedColoredGraph(line.into()))?;
                let v: usize = v.parse().map_err(|_| Error::MalformedColoredGraph(line.into()))?;
                if u == 0 || u > n || v == 0 || v > n || u == v {
                    return Err(Error::MalformedColoredGraph(line.into()));
                }
                edges.push((u - 1, v - 1));
            }
            _ => return Err(Error::MalformedColoredGraph(line.into())),
        }
    }
    if !seen_header {
        return Err(Error::MalformedColoredGraph("missing p header".into()));
    }
    if edges.len() != m {
        return Err(Error::MalformedColoredGraph(format!(
            "header declares {m} edges, found {}",
            edges.len()
        )));
    }
    let color: Vec<usize> = color
        .into_iter()
        .enumerate()
        .map(|(v, c)| c.ok_or(Error::MalformedColoredGraph(format!("vertex {} uncolored", v + 1))))
        .collect::<Result<_>>()?;
    let mut g = Graph::new(n);
    for (u, v) in edges {
        g.add_edge(u, v);
    }
    ColoredGraph::new(g, color, k)
}

/// Parses the 3-partition format: "tp <m> <B>" then 3m positive integers.
pub fn parse_three_partition(text: &str) -> Result<ThreePartitionInstance> {
    let mut tokens = text
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .flat_map(|l| l.split_whitespace());
    if tokens.next() != Some("tp") {
        return Err(Error::BadThreePartition("missing tp header".into()));
    }
    let m: usize = tokens
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::BadThreePartition("bad m".into()))?;
    let b: u64 = tokens
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::BadThreePartition("bad B".into()))?;
    let items: Vec<u64> = tokens
        .map(|t| t.parse().map_err(|_| Error::BadThreePartition(format!("bad item {t}"))))
        .collect::<Result<_>>()?;
    let inst = ThreePartitionInstance::new(items, m)?;
    if inst.b != b {
        return Err(Error::BadThreePartition(format!(
            "declared B = {b} but items imply B = {}",
            inst.b
        )));
    }
    Ok(inst)
}

pub fn serialize_three_partition(inst: &ThreePartitionInstance) -> String {
    let items: Vec<String> = inst.items.iter().map(|a| a.to_string()).collect();
    format!("tp {} {}\n{}\n", inst.m, inst.b, items.join(" "))
}
