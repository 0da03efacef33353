//! Sample random chord diagrams, round-trip them through the text format,
//! and cross-check the table-based solver against brute force.

use circledom::dp::min_dominating_tree;
use circledom::graph::DominationVariant;
use circledom::oracle::brute_min_dominating;
use circledom::repr::{parse_representation, CircleRepresentation};

fn main() {
    let mut agreements = 0;
    for seed in 0..20 {
        let repr = CircleRepresentation::random(7, seed);
        assert_eq!(parse_representation(&repr.serialize()).unwrap(), repr);

        let fast = min_dominating_tree(&repr).map(|(k, _)| k);
        let g = repr.intersection_graph();
        let slow =
            brute_min_dominating(&g, &DominationVariant::ConnectedAcyclic, repr.n())
                .map(|(k, _)| k);
        assert_eq!(fast, slow);
        agreements += 1;
        println!("seed {seed:>2}: minimum dominating tree = {fast:?}");
    }
    println!("{agreements}/20 diagrams agree with brute force");
}
