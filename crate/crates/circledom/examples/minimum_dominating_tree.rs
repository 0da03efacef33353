//! Find a minimum connected acyclic dominating set (a dominating induced
//! tree) of a chord diagram, and double-check the witness.

use circledom::dp::min_dominating_tree;
use circledom::graph::{verify_variant, DominationVariant};
use circledom::repr::parse_representation;

fn main() {
    // five chords: b, c, d form a path through a and e
    let text = "5\na b a c b d c e d e\n";
    let repr = parse_representation(text).unwrap();
    let g = repr.intersection_graph();

    match min_dominating_tree(&repr) {
        Some((size, chords)) => {
            let names: Vec<&str> = chords.iter().map(|&c| repr.chord_name(c)).collect();
            println!("minimum dominating tree: size {size}, chords {names:?}");
            assert!(verify_variant(&g, &chords, &DominationVariant::ConnectedAcyclic));
            println!("witness re-verified");
        }
        None => println!("no dominating induced tree exists"),
    }

    // two chords that do not cross: no connected dominating set at all
    let repr = parse_representation("2\na a b b\n").unwrap();
    assert!(min_dominating_tree(&repr).is_none());
    println!("disconnected diagram correctly reports none");
}
