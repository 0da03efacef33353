//! Machine-readable solve results.

use std::collections::BTreeMap;

use serde::Serialize;

/// Best-effort solver statistics; consumers should not compare these.
#[derive(Serialize, Default, Debug, Clone)]
pub struct SolveStats {
    pub regions: usize,
    pub entries: usize,
    pub elapsed_ms: u128,
}

#[derive(Serialize, Debug, Clone)]
pub struct SolveResult {
    pub schema: u32,
    pub answer: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size: Option<usize>,
    /// Chord names of the dominating set, when the answer is yes.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    /// For the given-tree variant: chord name -> tree vertex it plays.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex_map: Option<BTreeMap<String, usize>>,
    pub variant: String,
    pub stats: SolveStats,
}

impl SolveResult {
    pub fn no(variant: &str, stats: SolveStats) -> Self {
        SolveResult {
            schema: 1,
            answer: "no".into(),
            size: None,
            witness: None,
            vertex_map: None,
            variant: variant.into(),
            stats,
        }
    }

    pub fn yes(variant: &str, witness: Vec<String>, stats: SolveStats) -> Self {
        SolveResult {
            schema: 1,
            answer: "yes".into(),
            size: Some(witness.len()),
            witness: Some(witness),
            vertex_map: None,
            variant: variant.into(),
            stats,
        }
    }

    pub fn is_yes(&self) -> bool {
        self.answer == "yes"
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("result serializes")
    }
}
