#![allow(dead_code)]

use std::collections::HashSet;

use circledom::repr::CircleRepresentation;
use circledom::tree::{unrooted_canonical_code, RootedTree};

/// Every chord diagram on n chords: one per perfect matching of 2n slots.
/// Counts follow the double factorial (2n-1)!!: 1, 3, 15, 105, ...
pub fn all_matchings(n: usize) -> Vec<CircleRepresentation> {
    fn rec(assign: &mut Vec<usize>, next: usize, out: &mut Vec<CircleRepresentation>) {
        match assign.iter().position(|&x| x == usize::MAX) {
            None => {
                let labels: Vec<String> = assign.iter().map(|&c| format!("c{c}")).collect();
                out.push(CircleRepresentation::from_slot_labels(&labels).unwrap());
            }
            Some(first) => {
                assign[first] = next;
                for j in first + 1..assign.len() {
                    if assign[j] == usize::MAX {
                        assign[j] = next;
                        rec(assign, next + 1, out);
                        assign[j] = usize::MAX;
                    }
                }
                assign[first] = usize::MAX;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![usize::MAX; 2 * n], 0, &mut out);
    out
}

/// One representative per free (unlabeled, unrooted) tree on t vertices,
/// from the increasing-parent enumeration deduplicated by canonical code.
/// Counts: 1, 1, 1, 2, 3, 6, 11, 23, 47, 106 for t = 1..10.
pub fn free_trees(t: usize) -> Vec<RootedTree> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut parent = vec![0usize; t];
    fn rec(
        parent: &mut Vec<usize>,
        v: usize,
        seen: &mut HashSet<String>,
        out: &mut Vec<RootedTree>,
    ) {
        let t = parent.len();
        if v == t {
            let edges: Vec<(usize, usize)> = (1..t).map(|u| (parent[u], u)).collect();
            if seen.insert(unrooted_canonical_code(t, &edges)) {
                out.push(RootedTree::from_parents(parent.clone(), 0).unwrap());
            }
            return;
        }
        for p in 0..v {
            parent[v] = p;
            rec(parent, v + 1, seen, out);
        }
    }
    rec(&mut parent, 1, &mut seen, &mut out);
    out
}

/// All rooted trees on t vertices up to rooted isomorphism.
pub fn rooted_trees(t: usize) -> Vec<RootedTree> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for tree in free_trees(t) {
        for r in 0..t {
            let rooted = tree.rerooted(r);
            if seen.insert(rooted.canonical_code(r)) {
                out.push(rooted);
            }
        }
    }
    out
}
