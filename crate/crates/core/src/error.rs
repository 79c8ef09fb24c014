use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("negative index {0}")]
    NegativeIndex(i64),
    #[error("brute-force oracle is bounded to n <= {max}, got n = {n}")]
    OracleBoundExceeded { n: i64, max: i64 },
    #[error("({n}, {k}) lies outside the triangle 0 <= k <= n")]
    IndexOutOfTriangle { n: i64, k: i64 },
    #[error("({n}, {l}) is out of range 0 <= l <= n")]
    IndexOutOfRange { n: i64, l: i64 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub(crate) fn index(n: i64) -> Result<usize, SequenceError> {
    usize::try_from(n).map_err(|_| SequenceError::NegativeIndex(n))
}
