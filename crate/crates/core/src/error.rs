use thiserror::Error;

/// Errors shared by all engine modules.
///
/// Coefficient arithmetic is exact: any operation that would wrap a 64-bit
/// integer reports [`Error::Overflow`] instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("factor list is empty")]
    EmptyFactors,
    #[error("projective factor must have positive dimension")]
    NonPositiveDimension,
    #[error("classes belong to different ambient spaces")]
    AmbientMismatch,
    #[error("exact integer arithmetic overflowed")]
    Overflow,
    #[error("operation requires a surface ambient")]
    NotASurface,
    #[error("operation requires a product-of-projective-spaces ambient")]
    NotAProduct,
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("intersection matrix is not symmetric")]
    AsymmetricMatrix,
    #[error("vector length does not match the ambient basis")]
    LengthMismatch,
    #[error("expected a nonzero class of pure codimension 1")]
    NotADivisorClass,
    #[error("total Chern class must have degree-0 term 1")]
    NotAUnitSeries,
    #[error("index {index} out of range ({count} available)")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("malformed space expression: {0}")]
    MalformedExpression(String),
    #[error("expression carries no smooth dimension annotation")]
    MissingSmoothDim,
}

pub type Result<T> = std::result::Result<T, Error>;
