use std::time::Duration;

use super::IdentityId;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

/// Index bounds a check actually covered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexRange {
    pub n_min: usize,
    pub n_max: usize,
    pub m_max: Option<usize>,
}

/// The first mismatch found, rendered losslessly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub indices: Vec<(String, usize)>,
    pub left: String,
    pub right: String,
    pub difference: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub range: IndexRange,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
    pub elapsed: Duration,
    pub notes: Vec<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Equality ignoring `elapsed`.
    pub fn same_outcome(&self, other: &IdentityReport) -> bool {
        self.id == other.id
            && self.range == other.range
            && self.status == other.status
            && self.counterexample == other.counterexample
            && self.notes == other.notes
    }
}
