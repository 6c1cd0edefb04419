use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("denominator vanishes at the sample point")]
    DenominatorVanishes,
    #[error("no generic point found after {0} samples")]
    NonGenericPoint(usize),
    #[error("sequence was capped before a zero component; finite type not established")]
    NotFiniteType,
    #[error("prescribed degree-0 space contains a map that is not a derivation")]
    PrescribedG0NotDerivations,
    #[error("negative part is not generated by its degree -1 component")]
    NotFundamental,
    #[error("metric is degenerate at the base point")]
    DegenerateMetric,
    #[error("prolongation did not stabilize up to order {0}")]
    NoStabilization(usize),
    #[error("bracket of fields {0} and {1} leaves their span")]
    NotClosed(usize, usize),
    #[error("operator is not diagonalizable with rational eigenvalues: {0}")]
    NotDiagonalizable(String),
    #[error("trace of A^2 vanishes")]
    ZeroTrace,
    #[error("map is not a derivation")]
    NotADerivation,
    #[error("filtration is not compatible with the bracket: {0}")]
    IncompatibleFiltration(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parameters must be specialized to rationals: {0}")]
    SymbolicParameter(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error at column {col}: {msg}")]
    Parse { col: usize, msg: String },
}

pub type Result<T> = core::result::Result<T, Error>;
