use thiserror::Error;

/// Errors produced by parsers, generators and witness builders.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("chord label `{0}` appears {1} times, expected 2")]
    BadLabelCount(String, usize),
    #[error("expected {expected} endpoint slots, found {found}")]
    BadSlotCount { expected: usize, found: usize },
    #[error("unknown chord id `{0}`")]
    UnknownChord(String),
    #[error("malformed tree file: {0}")]
    MalformedTree(String),
    #[error("monochromatic edge {0}-{1} (both colored {2})")]
    MonochromaticEdge(usize, usize, usize),
    #[error("color classes are unbalanced; run normalize_kcc first")]
    UnbalancedClasses,
    #[error("construction needs k >= 2, got k = {0}")]
    DegenerateK(usize),
    #[error("3-partition instance invalid: {0}")]
    BadThreePartition(String),
    #[error("item {0} violates the strict B/4 < a < B/2 constraint (B = {1})")]
    ItemOutOfRange(u64, u64),
    #[error("root degree mB = {0} must exceed 6 for the root to be identifiable")]
    RootDegreeTooSmall(usize),
    #[error("not a valid colored clique: {0}")]
    NotAClique(String),
    #[error("not a valid 3-partition: {0}")]
    BadPartition(String),
    #[error("set collection must be non-empty")]
    EmptyCollection,
    #[error("malformed colored graph file: {0}")]
    MalformedColoredGraph(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
