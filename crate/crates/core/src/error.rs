use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} repeated in cycle notation")]
    RepeatedPoint(usize),
    #[error("malformed cycle notation: {0:?}")]
    Malformed(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("permutation group needs a positive degree")]
    EmptyDegree,
    #[error("unsupported degree {0} for this group family")]
    UnsupportedDegree(usize),
    #[error("group order exceeds the cap of {0} elements")]
    GroupTooLarge(usize),
    #[error("element set is not closed under composition")]
    NotASubgroup,
    #[error("element does not decompose along the embedding")]
    NotDecomposable,
    #[error("character is not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("character belongs to a different group")]
    CharacterGroupMismatch,
    #[error("polynomial weights differ: {0} vs {1}")]
    WeightMismatch(usize, usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("work cap exceeded: need {needed}, cap {cap}")]
    CapExceeded { needed: u128, cap: u128 },
    #[error("invalid cocycle family: {0}")]
    InvalidCocycle(String),
    #[error("identity violated: {0}")]
    IdentityViolated(String),
}

pub type Result<T> = core::result::Result<T, Error>;
