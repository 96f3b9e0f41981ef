//! Outcome records shared by single-graph property checks and campaigns.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Undecided,
}

/// One instance that did not behave as predicted. `status` is `exhausted`,
/// `found`, `undecided`, or `error: ...`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FailureRecord {
    pub graph6: String,
    pub tuple: Vec<usize>,
    pub status: String,
}

impl FailureRecord {
    pub fn is_undecided(&self) -> bool {
        self.status == "undecided"
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub property: String,
    pub family: String,
    /// Graphs examined.
    pub instances: usize,
    /// Individual (graph, tuple) checks performed.
    pub checks: usize,
    pub status: Status,
    /// Empty exactly when `status` is `pass`; undecided checks appear here too.
    pub failures: Vec<FailureRecord>,
    pub undecided: usize,
    /// Counterexamples that were predicted and confirmed (negative suites only).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub confirmed: Vec<FailureRecord>,
    /// Property-specific tallies.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tallies: BTreeMap<String, u64>,
    pub wall_time_ms: u128,
}

impl PropertyReport {
    pub fn new(property: impl Into<String>, family: impl Into<String>) -> Self {
        PropertyReport {
            property: property.into(),
            family: family.into(),
            instances: 0,
            checks: 0,
            status: Status::Pass,
            failures: Vec::new(),
            undecided: 0,
            confirmed: Vec::new(),
            tallies: BTreeMap::new(),
            wall_time_ms: 0,
        }
    }

    /// Recomputes `status` and `undecided` from `failures`.
    pub fn settle(&mut self) {
        self.failures.sort();
        self.undecided = self.failures.iter().filter(|f| f.is_undecided()).count();
        self.status = if self.failures.is_empty() {
            Status::Pass
        } else if self.failures.iter().all(FailureRecord::is_undecided) {
            Status::Undecided
        } else {
            Status::Fail
        };
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn bump(&mut self, tally: &str, by: u64) {
        *self.tallies.entry(tally.to_string()).or_default() += by;
    }
}
