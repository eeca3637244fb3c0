//! Error type shared across the construction and verification pipeline.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("list is not closed under conjugation: {0}")]
    NotConjugateClosed(String),

    #[error("list has exactly one real entry and an odd number of conjugate pairs; no centrosymmetric nonnegative realization exists")]
    ObstructedList,

    #[error("no self-conjugate split of the required sizes exists: {0}")]
    UnsplittableList(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not centrosymmetric (residual {residual:e})")]
    NotCentrosymmetric { residual: f64 },

    #[error("vector is not an eigenvector: residual {residual:e} exceeds tolerance")]
    NotAnEigenvector { residual: f64 },

    #[error("eigenvector matrix is rank deficient (rank {rank} < {expected})")]
    RankDeficientX { rank: usize, expected: usize },

    #[error("iteration failed to converge: {0}")]
    ConvergenceFailure(String),

    #[error("companion matrix has a negative entry (coefficient {coeff:e} at degree {degree}); construction inapplicable")]
    CompanionNotNonnegative { degree: usize, coeff: f64 },

    #[error("Perron vector has a zero component; diagonal scaling undefined")]
    ZeroPerronComponent,

    #[error("prescribed diagonal sums to {diag_sum} but spectrum sums to {spectrum_sum}")]
    DiagonalSumMismatch { diag_sum: f64, spectrum_sum: f64 },

    #[error("invalid prescribed diagonal: {0}")]
    InvalidDiagonal(String),

    #[error("symmetrized Perron vector fails the eigenvector check (residual {residual:e})")]
    PerronVectorNotSymmetric { residual: f64 },

    #[error("list contains a negative entry ({0}); construction requires nonnegative reals")]
    NegativeEntryInList(f64),

    #[error("leading value is not strictly dominant (λ1 = λ2 = {0})")]
    PerronNotStrict(f64),

    #[error("list has no real entry dominating all moduli")]
    NoPerronHead,

    #[error("spectrum sum is negative ({0}); no nonnegative realization exists")]
    SpectrumSumNegative(f64),

    #[error("list of four reals fails a necessary realizability check: {0}")]
    NotRealizable4x4(String),

    #[error("conjugate pair has no positive imaginary part; use the all-real construction")]
    NotStrictlyComplex,

    #[error("{construction}: condition {condition} violated: {detail}")]
    ConditionViolation {
        construction: &'static str,
        condition: &'static str,
        detail: String,
    },

    #[error("middle block order {found} does not match the partition ({expected})")]
    MiddleBlockParityMismatch { expected: usize, found: usize },

    #[error("list is too short for this construction (n = {0}, need n >= {1})")]
    OrderTooSmall(usize, usize),

    #[error("spectra have different cardinalities ({0} vs {1})")]
    CardinalityMismatch(usize, usize),

    #[error("no applicable construction; attempts: {}", attempts.join("; "))]
    NoApplicableConstruction { attempts: Vec<String> },

    #[error("unknown fixture name: {0}")]
    UnknownFixture(String),
}

pub type Result<T> = std::result::Result<T, Error>;
