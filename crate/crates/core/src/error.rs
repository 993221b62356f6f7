use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),
    #[error("variable name `{0}` is already in use")]
    VariableCapture(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("map is not parity-homogeneous")]
    NotHomogeneous,
    #[error("element is not even")]
    NotEven,
    #[error("invalid Lie superalgebra input: {0}")]
    InvalidLieAlgebra(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("subalgebra closure failed: {0}")]
    ClosureFailure(String),
    #[error("constructions disagree: {0}")]
    ConstructionMismatch(String),
    #[error("not an ideal")]
    NotAnIdeal,
    #[error("character does not vanish on {0}")]
    CharacterNotAdmissible(String),
    #[error("map is not a conformal derivation")]
    NotADerivation,
    #[error("unsupported family tag `{0}`")]
    UnsupportedTag(String),
    #[error("wrong ambient algebra: {0}")]
    WrongAmbient(String),
    #[error("module check failed after twisting")]
    TwistBroken,
    #[error("catalog row `{row}` failed: {reason}")]
    CatalogFailure { row: String, reason: String },
    #[error("{line}:{col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("export document malformed: {0}")]
    Export(String),
}

pub type Result<T> = std::result::Result<T, Error>;
