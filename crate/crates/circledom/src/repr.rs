//! Chord diagrams: 2n endpoint slots on an anticlockwise-oriented circle,
//! each chord owning exactly two slots. The fixed origin sits between slot
//! 2n-1 and slot 0; arcs are anticlockwise and may wrap across the origin.

use std::collections::HashMap;
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A circle representation: a perfect matching of the 2n slots into chords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleRepresentation {
    names: Vec<String>,
    name_idx: HashMap<String, usize>,
    /// slots[i] = chord occupying slot i, for i in 0..2n.
    slots: Vec<usize>,
    /// chord -> (lower slot, higher slot)
    ends: Vec<(usize, usize)>,
}

impl CircleRepresentation {
    /// Builds a representation from the chord label occupying each slot,
    /// in anticlockwise slot order.
    pub fn from_slot_labels<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        if labels.len() % 2 != 0 {
            return Err(Error::BadSlotCount {
                expected: labels.len() + 1,
                found: labels.len(),
            });
        }
        let mut names: Vec<String> = Vec::new();
        let mut name_idx: HashMap<String, usize> = HashMap::new();
        let mut slots = Vec::with_capacity(labels.len());
        let mut seen: HashMap<usize, Vec<usize>> = HashMap::new();
        for (pos, lab) in labels.iter().enumerate() {
            let lab = lab.as_ref();
            let id = *name_idx.entry(lab.to_string()).or_insert_with(|| {
                names.push(lab.to_string());
                names.len() - 1
            });
            slots.push(id);
            seen.entry(id).or_default().push(pos);
        }
        let mut ends = vec![(usize::MAX, usize::MAX); names.len()];
        for (id, positions) in seen {
            if positions.len() != 2 {
                return Err(Error::BadLabelCount(names[id].clone(), positions.len()));
            }
            ends[id] = (positions[0].min(positions[1]), positions[0].max(positions[1]));
        }
        Ok(Self {
            names,
            name_idx,
            slots,
            ends,
        })
    }

    /// Number of chords.
    pub fn n(&self) -> usize {
        self.names.len()
    }

    /// Number of slots (2n).
    pub fn num_slots(&self) -> usize {
        self.slots.len()
    }

    pub fn chord_name(&self, id: usize) -> &str {
        &self.names[id]
    }

    pub fn chord_id(&self, name: &str) -> Result<usize> {
        self.name_idx
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownChord(name.to_string()))
    }

    /// Endpoints of a chord as (lower slot, higher slot).
    pub fn chord_ends(&self, id: usize) -> (usize, usize) {
        self.ends[id]
    }

    /// Chord occupying a slot.
    pub fn chord_at(&self, slot: usize) -> usize {
        self.slots[slot]
    }

    /// The other endpoint of the chord occupying `slot`.
    pub fn partner_slot(&self, slot: usize) -> usize {
        let (lo, hi) = self.ends[self.slots[slot]];
        if slot == lo {
            hi
        } else {
            lo
        }
    }

    /// True iff the chords cross, i.e. exactly one endpoint of `y` lies
    /// strictly between the two endpoints of `x` in anticlockwise order.
    pub fn chords_cross_ids(&self, x: usize, y: usize) -> bool {
        if x == y {
            return false;
        }
        let (a, b) = self.ends[x];
        let (c, d) = self.ends[y];
        (a < c && c < b) != (a < d && d < b)
    }

    /// Crossing test by chord label.
    pub fn chords_cross(&self, x: &str, y: &str) -> Result<bool> {
        Ok(self.chords_cross_ids(self.chord_id(x)?, self.chord_id(y)?))
    }

    /// The intersection graph of the chords: vertex i = chord i, edges =
    /// crossing pairs.
    pub fn intersection_graph(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for x in 0..n {
            for y in (x + 1)..n {
                if self.chords_cross_ids(x, y) {
                    g.add_edge(x, y);
                }
            }
        }
        g
    }

    /// Slots strictly inside the anticlockwise open arc (p, q). For p == q
    /// this is every slot except p.
    pub fn open_arc_slots(&self, p: usize, q: usize) -> impl Iterator<Item = usize> + '_ {
        let m = self.num_slots();
        let count = if p == q {
            m - 1
        } else {
            ((q + m - p) % m).saturating_sub(1)
        };
        (1..=count).map(move |i| (p + i) % m)
    }

    /// True iff no chord has both endpoints strictly inside the
    /// anticlockwise open arc (p, q).
    pub fn open_interval_chord_free(&self, p: usize, q: usize) -> bool {
        let m = self.num_slots();
        if m == 0 {
            return true;
        }
        let inside = |s: usize| -> bool {
            if p == q {
                s != p
            } else {
                let d = (s + m - p) % m;
                d != 0 && d < (q + m - p) % m
            }
        };
        self.ends.iter().all(|&(lo, hi)| !(inside(lo) && inside(hi)))
    }

    /// Table of `open_interval_chord_free` for all ordered slot pairs.
    pub fn arc_free_table(&self) -> Vec<Vec<bool>> {
        let m = self.num_slots();
        let mut t = vec![vec![true; m]; m];
        for p in 0..m {
            for q in 0..m {
                t[p][q] = self.open_interval_chord_free(p, q);
            }
        }
        t
    }

    /// Serializes to the representation file format.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.n());
        if !self.slots.is_empty() {
            let line: Vec<&str> = self.slots.iter().map(|&c| self.names[c].as_str()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }

    /// Uniformly random diagram on n chords, deterministic per seed.
    /// Chords are labeled c0..c{n-1} by first endpoint.
    pub fn random(n: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut slots: Vec<usize> = (0..2 * n).collect();
        slots.shuffle(&mut rng);
        // pair consecutive shuffled slots: a uniform perfect matching
        let mut owner = vec![usize::MAX; 2 * n];
        for (pair, ch) in slots.chunks(2).zip(0..) {
            owner[pair[0]] = ch;
            owner[pair[1]] = ch;
        }
        // relabel chords by order of first appearance
        let mut relabel = vec![usize::MAX; n];
        let mut next = 0;
        let mut labels = Vec::with_capacity(2 * n);
        for &c in &owner {
            if relabel[c] == usize::MAX {
                relabel[c] = next;
                next += 1;
            }
            labels.push(format!("c{}", relabel[c]));
        }
        Self::from_slot_labels(&labels).expect("matching is well-formed by construction")
    }
}

/// Parses the representation file format: line 1 = n, line 2 = 2n chord
/// labels in slot order. Lines starting with '#' are ignored.
pub fn parse_representation(text: &str) -> Result<CircleRepresentation> {
    let mut lines = text.lines().filter(|l| !l.trim_start().starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::MalformedHeader("empty input".into()))?;
    let n: usize = header
        .trim()
        .parse()
        .map_err(|_| Error::MalformedHeader(header.trim().to_string()))?;
    let labels: Vec<&str> = lines.flat_map(|l| l.split_whitespace()).collect();
    if labels.len() != 2 * n {
        return Err(Error::BadSlotCount {
            expected: 2 * n,
            found: labels.len(),
        });
    }
    let repr = CircleRepresentation::from_slot_labels(&labels)?;
    debug_assert_eq!(repr.n(), n);
    if repr.n() != n {
        return Err(Error::BadLabelCount(
            format!("{} distinct labels for {} chords", repr.n(), n),
            0,
        ));
    }
    Ok(repr)
}

/// Serializes so that `parse_representation(serialize_representation(r)) == r`.
pub fn serialize_representation(repr: &CircleRepresentation) -> String {
    repr.serialize()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_k2() {
        let r = parse_representation("2\na b a b").unwrap();
        assert_eq!(r.n(), 2);
        assert_eq!(r.chord_ends(r.chord_id("a").unwrap()), (0, 2));
        assert_eq!(r.chord_ends(r.chord_id("b").unwrap()), (1, 3));
        assert!(r.chords_cross("a", "b").unwrap());
    }

    #[test]
    fn parse_disjoint() {
        let r = parse_representation("2\na a b b").unwrap();
        assert!(!r.chords_cross("a", "b").unwrap());
    }

    #[test]
    fn parse_p3() {
        let r = parse_representation("3\na b a c b c").unwrap();
        let g = r.intersection_graph();
        let (a, b, c) = (
            r.chord_id("a").unwrap(),
            r.chord_id("b").unwrap(),
            r.chord_id("c").unwrap(),
        );
        assert!(g.has_edge(a, b));
        assert!(g.has_edge(b, c));
        assert!(!g.has_edge(a, c));
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_representation("x\na b"),
            Err(Error::MalformedHeader(_))
        ));
        assert!(matches!(
            parse_representation("2\na b a"),
            Err(Error::BadSlotCount { .. })
        ));
        assert!(matches!(
            parse_representation("2\na a a b"),
            Err(Error::BadLabelCount(_, _)) | Err(Error::BadSlotCount { .. })
        ));
    }

    #[test]
    fn serialize_round_trip() {
        for text in ["2\na b a b\n", "0\n", "3\na b a c b c\n"] {
            let r = parse_representation(text).unwrap();
            assert_eq!(serialize_representation(&r), text);
            assert_eq!(parse_representation(&serialize_representation(&r)).unwrap(), r);
        }
    }

    #[test]
    fn crossing_cases() {
        let r = parse_representation("2\na b a b").unwrap();
        assert!(r.chords_cross("a", "b").unwrap()); // interleaved (0,2),(1,3)
        let r = parse_representation("2\na a b b").unwrap();
        assert!(!r.chords_cross("a", "b").unwrap()); // disjoint arcs
        let r = parse_representation("2\na b b a").unwrap();
        assert!(!r.chords_cross("a", "b").unwrap()); // nested
        assert!(r.chords_cross("a", "missing").is_err());
    }

    #[test]
    fn triangle_graph() {
        let r = parse_representation("3\na b c a b c").unwrap();
        assert_eq!(r.intersection_graph().edge_count(), 3);
    }

    #[test]
    fn open_arcs() {
        let r = parse_representation("2\na b a b").unwrap();
        assert!(r.open_interval_chord_free(0, 2));
        let r = parse_representation("2\na a b b").unwrap();
        assert!(r.open_interval_chord_free(3, 1)); // wrap-around arc
        let r = parse_representation("2\na b b a").unwrap();
        assert!(!r.open_interval_chord_free(0, 3)); // b entirely inside
    }

    #[test]
    fn random_is_deterministic_and_well_formed() {
        assert_eq!(CircleRepresentation::random(0, 7).n(), 0);
        let a = CircleRepresentation::random(5, 1);
        let b = CircleRepresentation::random(5, 1);
        assert_eq!(a, b);
        for seed in 0..1000 {
            let r = CircleRepresentation::random(5, seed);
            let mut counts = vec![0usize; r.n()];
            for s in 0..r.num_slots() {
                counts[r.chord_at(s)] += 1;
            }
            assert!(counts.iter().all(|&c| c == 2));
        }
    }
}
