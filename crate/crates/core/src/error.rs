use thiserror::Error;

/// Everything that can go wrong inside the calculator kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("series exponential needs a zero constant term")]
    ExpNonZeroConstant,

    #[error("series logarithm needs constant term 1")]
    LogConstantNotOne,

    #[error("series division: denominator has no invertible leading term at or below the numerator's order of vanishing")]
    NotInvertible,

    #[error("invalid variety: {0}")]
    InvalidVariety(String),

    #[error("symmetric power Sym^{0} is not supported (maximum is 3)")]
    SymPowerTooLarge(u32),

    #[error("symmetric power of a bundle with negative rank {0}")]
    NegativeRank(i64),

    #[error("operator order {0} is not supported (maximum is 3)")]
    OrderTooLarge(u32),

    #[error("Chern character with non-integral or N-dependent rank: {0}")]
    BadRank(String),

    #[error("paper-compat mode is only defined for surfaces cut by two hypersurfaces in P(4), got {0}")]
    CompatModeUnavailable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
