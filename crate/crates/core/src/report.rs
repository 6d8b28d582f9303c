//! Outcome records shared by the condition checkers and the check registry.

use std::time::Instant;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Cutoffs {
    pub max_degree: usize,
    pub max_weight: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    pub status: Status,
    pub witnesses: Vec<String>,
    pub elapsed_ms: u64,
    pub cutoffs: Cutoffs,
}

/// Accumulates assertions for one check. A failed assertion always leaves a
/// witness behind.
#[derive(Debug)]
pub struct Tally {
    started: Instant,
    failed: bool,
    skipped: bool,
    witnesses: Vec<String>,
    asserted: usize,
}

impl Default for Tally {
    fn default() -> Self {
        Self::new()
    }
}

impl Tally {
    pub fn new() -> Self {
        Tally { started: Instant::now(), failed: false, skipped: false, witnesses: Vec::new(), asserted: 0 }
    }

    pub fn ensure(&mut self, ok: bool, witness: impl FnOnce() -> String) -> bool {
        self.asserted += 1;
        if !ok {
            self.failed = true;
            self.witnesses.push(witness());
        }
        ok
    }

    pub fn note(&mut self, witness: impl Into<String>) {
        self.witnesses.push(witness.into());
    }

    pub fn skip(&mut self, reason: impl Into<String>) {
        self.skipped = true;
        self.witnesses.push(reason.into());
    }

    /// Records an error as a failure.
    pub fn fail(&mut self, witness: impl Into<String>) {
        self.asserted += 1;
        self.failed = true;
        self.witnesses.push(witness.into());
    }

    pub fn failed(&self) -> bool {
        self.failed
    }

    pub fn asserted(&self) -> usize {
        self.asserted
    }

    pub fn absorb(&mut self, other: Tally) {
        self.failed |= other.failed;
        self.asserted += other.asserted;
        self.witnesses.extend(other.witnesses);
    }

    pub fn finish(self, check_id: impl Into<String>, cutoffs: Cutoffs) -> CheckReport {
        let status = match (self.failed, self.skipped) {
            (true, _) => Status::Fail,
            (false, true) => Status::Skipped,
            (false, false) => Status::Pass,
        };
        CheckReport {
            check_id: check_id.into(),
            status,
            witnesses: self.witnesses,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
            cutoffs,
        }
    }
}
