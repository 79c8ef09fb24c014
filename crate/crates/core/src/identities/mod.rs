//! Registry of executable identity checks.
//!
//! Each identity compares two sides produced by different code paths over
//! an index range and reports the first exact mismatch. The default mode
//! compares canonical forms; [`Mode::Sampled`] instead evaluates the
//! cross-multiplied difference at random rational points.

mod checks;
mod id;
mod report;

use std::borrow::Cow;
use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

pub use id::{identity_info, list_identities, IdentityId, IdentityInfo};
pub use report::{Counterexample, IdentityReport, IndexRange, Status};

use crate::tables::Tables;

/// Second index used by `verify_all` for two-index identities.
pub const DEFAULT_M_MAX: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("{0} needs a second index bound (m_max)")]
    MissingSecondIndex(IdentityId),
    #[error("tables built to n = {available}, check needs n = {needed}")]
    TablesTooSmall { needed: usize, available: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Symbolic,
    /// Compare at 3 random points drawn from a generator seeded with the
    /// given value.
    Sampled { seed: u64 },
}

/// Runs identity checks against a fixed set of triangles.
#[derive(Clone, Debug)]
pub struct Verifier {
    tables: Cow<'static, Tables>,
    custom: bool,
    mode: Mode,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier::new()
    }
}

impl Verifier {
    /// Symbolic verifier over the standard triangles, rebuilt larger on
    /// demand.
    pub fn new() -> Self {
        Verifier { tables: Cow::Borrowed(Tables::standard()), custom: false, mode: Mode::Symbolic }
    }

    /// Verifier reading from the given triangles, for fault injection.
    pub fn with_tables(tables: Tables) -> Self {
        Verifier { tables: Cow::Owned(tables), custom: true, mode: Mode::Symbolic }
    }

    pub fn mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn tables(&self) -> &Tables {
        &self.tables
    }

    fn tables_for(&self, needed: usize) -> Result<Cow<'_, Tables>, VerifyError> {
        if self.tables.n_max() >= needed {
            return Ok(Cow::Borrowed(&*self.tables));
        }
        if self.custom {
            return Err(VerifyError::TablesTooSmall { needed, available: self.tables.n_max() });
        }
        Ok(Cow::Owned(Tables::build(needed)))
    }

    pub fn verify(&self, id: IdentityId, n_max: usize, m_max: Option<usize>) -> Result<IdentityReport, VerifyError> {
        if id.needs_second_index() && m_max.is_none() {
            return Err(VerifyError::MissingSecondIndex(id));
        }
        let start = Instant::now();
        let tables = self.tables_for(checks::tables_needed(n_max))?;
        let ctx = checks::Ctx::new(&tables, self.mode, id);
        let range = checks::range_of(id, n_max, m_max);
        let counterexample = checks::run(&ctx, id, n_max, m_max.unwrap_or(DEFAULT_M_MAX));
        let status = if counterexample.is_some() { Status::Fail } else { Status::Pass };
        Ok(IdentityReport {
            id,
            range,
            status,
            counterexample,
            elapsed: start.elapsed(),
            notes: ctx.into_notes(),
        })
    }

    /// Every registered identity at its default range, in tag order.
    pub fn verify_all(&self, n_max: usize) -> Result<Vec<IdentityReport>, VerifyError> {
        IdentityId::ALL
            .par_iter()
            .map(|&id| self.verify(id, n_max, Some(DEFAULT_M_MAX)))
            .collect()
    }
}

pub fn verify(id: IdentityId, n_max: usize, m_max: Option<usize>) -> Result<IdentityReport, VerifyError> {
    Verifier::new().verify(id, n_max, m_max)
}

pub fn verify_all(n_max: usize) -> Result<Vec<IdentityReport>, VerifyError> {
    Verifier::new().verify_all(n_max)
}
