//! The branching measure alpha of a rooted tree: the maximum, over roots
//! and vertices, of the number of sub-multisets of a vertex's child
//! subtrees counted up to isomorphism. It governs the running time of the
//! given-tree solver.

use circledom::tree::{alpha, AlphaMode, RootedTree};

fn main() {
    println!("{:<12} {:>6} {:>6}", "tree", "t", "alpha");
    for t in 1..=8 {
        let report = alpha(&RootedTree::path(t), AlphaMode::MaxOverRoots);
        println!("{:<12} {:>6} {:>6}", "path", t, report.value);
    }
    for t in 2..=8 {
        let report = alpha(&RootedTree::star(t), AlphaMode::MaxOverRoots);
        println!("{:<12} {:>6} {:>6}", "star", t, report.value);
    }

    // a spider with three legs of length two, evaluated for a fixed root
    let spider = RootedTree::from_parents(vec![0, 0, 1, 0, 3, 0, 5], 0).unwrap();
    let fixed = alpha(&spider, AlphaMode::PerRoot);
    let best = alpha(&spider, AlphaMode::MaxOverRoots);
    println!(
        "spider: alpha {} at its own root, {} maximized (root {})",
        fixed.value,
        best.value,
        best.argmax_root + 1
    );
}
