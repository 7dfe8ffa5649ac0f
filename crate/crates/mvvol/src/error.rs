use thiserror::Error;

/// Failures surfaced to callers. Recursion internals never produce these;
/// unstable lookups inside sums evaluate to zero instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("odd Bernoulli index")]
    OddBernoulliIndex,
    #[error("zeta argument out of range")]
    ZetaOutOfRange,
    #[error("negative exponent")]
    NegativeExponent,
    #[error("unstable type")]
    UnstableType,
    #[error("arity mismatch")]
    ArityMismatch,
    #[error("undefined volume")]
    UndefinedVolume,
    #[error("Siegel--Veech undefined for this type")]
    SiegelVeechUndefined,
    #[error("invalid boundary length")]
    InvalidBoundaryLength,
    #[error("no conjectural data")]
    NoConjecturalData,
    #[error("underdetermined fit")]
    UnderdeterminedFit,
}

pub type Result<T> = std::result::Result<T, Error>;
