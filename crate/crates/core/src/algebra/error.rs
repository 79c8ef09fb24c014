use thiserror::Error;

use super::Var;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// A division that the caller asserted to be exact left a remainder.
    #[error("division is not exact: a remainder term survives")]
    NonExactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("series have different main variables ({0} vs {1})")]
    MixedMainVariable(Var, Var),
    #[error("series constant term is zero and cannot be inverted")]
    NonUnitConstantTerm,
    #[error("series constant term is nonzero; exp is only defined for a_0 = 0")]
    NonzeroConstantTerm,
    #[error("series coefficient mentions the main variable {0}")]
    CoefficientMentionsMainVariable(Var),
    /// Evaluating a rational function hit a zero of its denominator.
    #[error("evaluation hits a pole (denominator vanishes)")]
    Pole,
}
