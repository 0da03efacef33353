//! Ask whether a diagram has a dominating set whose induced graph is
//! isomorphic to a *specific* tree, and print the chord-to-vertex
//! assignment the solver found.

use circledom::fpt::fpt_tree_dominating;
use circledom::graph::{verify_variant, DominationVariant};
use circledom::repr::CircleRepresentation;
use circledom::tree::RootedTree;

fn main() {
    let repr = CircleRepresentation::random(9, 42);
    println!("diagram: {}", repr.serialize().lines().nth(1).unwrap());

    for (label, tree) in [
        ("path on 3 vertices", RootedTree::path(3)),
        ("star with 3 leaves", RootedTree::star(4)),
    ] {
        match fpt_tree_dominating(&repr, &tree) {
            Some((chords, map)) => {
                println!("{label}: yes");
                for &(chord, vertex) in &map {
                    println!("  chord {} plays tree vertex {}", repr.chord_name(chord), vertex);
                }
                let g = repr.intersection_graph();
                assert!(verify_variant(&g, &chords, &DominationVariant::GivenTree(tree)));
            }
            None => println!("{label}: no"),
        }
    }
}
