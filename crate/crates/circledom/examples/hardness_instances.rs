//! Generate structured "hard" diagrams from combinatorial sources and check
//! the forward-direction witnesses: a colored clique or a 3-partition of
//! the source yields a dominating set of the promised shape and size.

use circledom::graph::{verify_variant, Graph, DominationVariant};
use circledom::oracle::{brute_colored_clique, ColoredGraph, ThreePartitionInstance};
use circledom::reduction::{
    gen_acyclic_from_kcc, gen_domset_from_kcc, gen_independent_from_kcc,
    gen_tree_from_3partition, witness_domset_from_clique, witness_from_clique_lr,
    witness_tree_from_partition,
};

fn main() {
    // two colors, two vertices each, one cross edge
    let mut g = Graph::new(4);
    g.add_edge(0, 2);
    let cg = ColoredGraph::new(g, vec![0, 0, 1, 1], 2).unwrap();
    let clique = brute_colored_clique(&cg).unwrap();

    let inst = gen_domset_from_kcc(&cg).unwrap();
    let w = witness_domset_from_clique(&inst, &clique).unwrap();
    println!(
        "dominating-set gadget: {} chords, clique -> dominating set of size {}",
        inst.repr.n(),
        w.len()
    );
    assert!(verify_variant(&inst.repr.intersection_graph(), &w, &DominationVariant::Plain));

    let inst = gen_independent_from_kcc(&cg).unwrap();
    let w = witness_from_clique_lr(&inst, &clique).unwrap();
    println!(
        "independent gadget:    {} chords, independent dominating set of size {}",
        inst.repr.n(),
        w.len()
    );
    assert!(verify_variant(&inst.repr.intersection_graph(), &w, &DominationVariant::Independent));

    let inst = gen_acyclic_from_kcc(&cg).unwrap();
    let w = witness_from_clique_lr(&inst, &clique).unwrap();
    println!(
        "acyclic gadget:        {} chords, acyclic dominating set of size {}",
        inst.repr.n(),
        w.len()
    );
    assert!(verify_variant(&inst.repr.intersection_graph(), &w, &DominationVariant::Acyclic));

    let src = ThreePartitionInstance::new(vec![2, 2, 2, 2, 3, 3], 2).unwrap();
    let (tree, inst) = gen_tree_from_3partition(&src).unwrap();
    let w = witness_tree_from_partition(&inst, &[[2, 2, 3], [2, 2, 3]]).unwrap();
    println!(
        "3-partition gadget:    {} chords, dominating copy of a {}-vertex tree",
        inst.repr.n(),
        tree.size()
    );
    assert!(verify_variant(
        &inst.repr.intersection_graph(),
        &w,
        &DominationVariant::GivenTree(tree)
    ));

    println!("all witnesses verified");
}
