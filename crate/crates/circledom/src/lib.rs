//! Minimum dominating trees in circle graphs: an exact region-based dynamic
//! program, an FPT algorithm for dominating sets inducing a prescribed tree,
//! exhaustive reference solvers, and generators for the circle-diagram
//! hardness gadgets.

pub mod error;
pub mod fpt;
pub mod dp;
pub mod graph;
pub mod oracle;
pub mod reduction;
pub mod report;
pub mod repr;
pub mod tree;

pub use error::{Error, Result};
pub use graph::{verify_variant, DominationVariant, Graph};
pub use repr::{parse_representation, serialize_representation, CircleRepresentation};
pub use tree::{AlphaMode, AlphaReport, RootedTree, SubforestKey};
