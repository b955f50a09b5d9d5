//! Self-certifying verification reports.
//!
//! A report records what was swept and every counterexample found (capped),
//! serialized as the same family schema the importer accepts — so a failure
//! can be replayed by re-importing it and re-running the check.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::io::FamilyDto;
use crate::Error;

/// Reports keep at most this many serialized counterexamples;
/// `totalFailures` still counts all of them.
pub const FAILURE_CAP: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportMode {
    Exhaustive,
    Sample,
}

/// Outcome of one theorem sweep.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub theorem_id: String,
    pub n: usize,
    pub mode: ReportMode,
    pub families_checked: u64,
    /// First counterexamples, at most [`FAILURE_CAP`] of them.
    pub failures: Vec<FamilyDto>,
    /// Total number of failing families, including any beyond the cap.
    pub total_failures: u64,
    /// Wall-clock seconds for the sweep.
    pub elapsed: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.total_failures == 0
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), Error> {
        fs::write(path, serde_json::to_string_pretty(self)?)?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, Error> {
        let text = fs::read_to_string(path)?;
        Ok(serde_json::from_str(&text)?)
    }
}

/// Mergeable per-shard tally used while a sweep is running.
#[derive(Clone, Debug, Default)]
pub struct Tally {
    pub checked: u64,
    pub failures: Vec<FamilyDto>,
    pub total_failures: u64,
}

impl Tally {
    pub fn record_pass(&mut self) {
        self.checked += 1;
    }

    pub fn record_failure(&mut self, family: FamilyDto) {
        self.checked += 1;
        self.total_failures += 1;
        if self.failures.len() < FAILURE_CAP {
            self.failures.push(family);
        }
    }

    /// In-order merge; keeps the first [`FAILURE_CAP`] counterexamples.
    pub fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.total_failures += other.total_failures;
        for f in other.failures {
            if self.failures.len() >= FAILURE_CAP {
                break;
            }
            self.failures.push(f);
        }
        self
    }

    pub fn into_report(
        self,
        theorem_id: String,
        n: usize,
        mode: ReportMode,
        elapsed: f64,
    ) -> VerificationReport {
        VerificationReport {
            theorem_id,
            n,
            mode,
            families_checked: self.checked,
            failures: self.failures,
            total_failures: self.total_failures,
            elapsed,
        }
    }
}
