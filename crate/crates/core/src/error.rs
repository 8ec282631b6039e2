use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("characteristic {0} is not allowed (need 0 or an odd prime)")]
    Characteristic(u64),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
    #[error("too many odd generators: {0} (at most {max})", max = crate::poly::MAX_ODD)]
    TooManyOdd(usize),
    #[error("unknown generator `{0}`")]
    UnknownName(String),
    #[error("parity error: {0}")]
    Parity(String),
    #[error("point does not assign: {}", .0.join(", "))]
    Unassigned(Vec<String>),
    #[error("point is not on the scheme: relation `{0}` does not vanish")]
    NotOnScheme(String),
    #[error("morphism is not well defined: relation `{0}` is not mapped into the target ideal")]
    IllDefinedMorphism(String),
    #[error("the ring is zero")]
    ZeroRing,
    #[error("elements do not generate the unit ideal, so they do not cover the spectrum")]
    NotACover,
    #[error("`{0}` is not nilpotent of square zero in the coefficient algebra")]
    SquareNotZero(String),
    #[error("matrix is not invertible: {0}")]
    NotInvertible(String),
    #[error("matrix is not a point of the even group: equation `{0}` fails")]
    NotInGroup(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
