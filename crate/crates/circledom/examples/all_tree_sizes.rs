//! Dominating-tree sizes are not monotone: a diagram can have dominating
//! trees of sizes 1 and 2 but none of size 3. This example scans every
//! size for two diagrams.

use circledom::dp;
use circledom::repr::parse_representation;

fn scan(label: &str, text: &str) {
    let repr = parse_representation(text).unwrap();
    let table = dp::solve(&repr);
    let sizes: Vec<usize> =
        (1..=repr.n()).filter(|&k| table.dominating_tree_witness(k).is_some()).collect();
    println!("{label}: dominating trees exist at sizes {sizes:?}");
}

fn main() {
    // three mutually crossing chords: any single chord dominates, any pair
    // induces an edge, but all three form a triangle - not a tree
    scan("triangle", "3\na b c a b c\n");
    scan("random 8-chord diagram", &circledom::CircleRepresentation::random(8, 4).serialize());
}
