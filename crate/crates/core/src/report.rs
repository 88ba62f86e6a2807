//! Machine-readable verification reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Witness data attached to a failing (or informational) report. Elements are
/// rendered as element literals of the group algebra at hand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub kind: String,
    pub elements: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

/// Record of one verification run of one claim against one group.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub group: String,
    pub p: u32,
    pub mode: String,
    pub checked_count: u64,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub details: BTreeMap<String, String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Multi-line human rendering of the same fields as the JSON document.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "claim {} | group {} | p={} | mode {}\n",
            self.claim, self.group, self.p, self.mode
        ));
        out.push_str(&format!(
            "  verdict: {} ({} checked, {} ms)\n",
            match self.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "fail",
            },
            self.checked_count,
            self.elapsed_ms
        ));
        if let Some(seed) = self.seed {
            out.push_str(&format!("  seed: {seed}\n"));
        }
        for (k, v) in &self.details {
            out.push_str(&format!("  {k}: {v}\n"));
        }
        if let Some(w) = &self.witness {
            out.push_str(&format!("  witness [{}]:\n", w.kind));
            for e in &w.elements {
                out.push_str(&format!("    {e}\n"));
            }
            if let Some(note) = &w.note {
                out.push_str(&format!("    note: {note}\n"));
            }
        }
        out
    }
}
