use thiserror::Error;

/// Errors raised anywhere in the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime in the supported range 2..=251")]
    NotPrime(u32),
    #[error("defining polynomial is not a monic irreducible of the requested degree")]
    ReduciblePoly,
    #[error("field size {p}^{k} exceeds 65536")]
    SizeOverflow { p: u32, k: u32 },
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("operands have incompatible sizes: {0}")]
    SizeMismatch(String),
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is singular")]
    Singular,
    #[error("zero polynomial has no factorization")]
    ZeroPoly,
    #[error("modules are defined over different groups")]
    GroupMismatch,
    #[error("word refers to generator {index} but the group has {ngens} generators")]
    BadWord { index: usize, ngens: usize },
    #[error("exponent {i} is not below the characteristic {p}")]
    ExponentTooLarge { i: usize, p: u32 },
    #[error("group has no permutation realization")]
    NoRealization,
    #[error("decomposition could not split or certify within {0} trials")]
    CertificationFailed(usize),
    #[error("isomorphism test exhausted its budget without a certificate")]
    Unknown,
    #[error("element count {0} is not a power of the characteristic")]
    NotPGroup(usize),
    #[error("group order exceeds the enumeration cap {0}")]
    OrderCapExceeded(usize),
    #[error("level {level} outside 1..={max}")]
    LevelOutOfRange { level: usize, max: usize },
    #[error("no projective indecomposable supplied for a composition factor of the top")]
    MissingPim,
    #[error("subgroup is not a Klein four-group")]
    NotKleinFour,
    #[error("value {0} out of range")]
    OutOfRange(usize),
    #[error("character check failed: {0}")]
    CharMismatch(String),
    #[error("character has a negative coefficient after subtraction at weight {0}")]
    NegativeCoefficient(i64),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
    #[error("module of dimension {0} is not valid here")]
    BadDimension(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
