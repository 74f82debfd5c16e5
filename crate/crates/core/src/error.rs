use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Why a table failed the inverse-semigroup test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InverseFailure {
    /// No `b` with `aba = a` and `bab = b`.
    NoInverse { element: usize },
    /// At least two such `b`.
    MultipleInverses { element: usize, first: usize, second: usize },
    NonCommutingIdempotents { e: usize, f: usize },
}

impl std::fmt::Display for InverseFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InverseFailure::NoInverse { element } => write!(f, "element {element} has no inverse"),
            InverseFailure::MultipleInverses { element, first, second } => {
                write!(f, "element {element} has inverses {first} and {second}")
            }
            InverseFailure::NonCommutingIdempotents { e, f: g } => {
                write!(f, "idempotents {e} and {g} do not commute")
            }
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },

    #[error("index {value} at {context} is out of range for {size} elements")]
    IndexOutOfRange { context: String, value: usize, size: usize },

    #[error("multiplication is not associative: ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}")]
    NotAssociative { a: usize, b: usize, c: usize, left: usize, right: usize },

    #[error("not an inverse semigroup: {0}")]
    NotInverse(InverseFailure),

    #[error("size {requested} exceeds the configured cap {cap}")]
    SizeCap { requested: u128, cap: usize },

    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),

    #[error("natural order characterizations disagree at ({a}, {b})")]
    OrderClausesDisagree { a: usize, b: usize },

    #[error("linking maps are incompatible: {0}")]
    LinkingIncompatible(String),

    #[error("invalid input: {0}")]
    InvalidSpec(String),

    #[error("invalid ordered groupoid: {0}")]
    InvalidGroupoid(String),

    #[error("identity {x} is not below the domain of arrow {g}")]
    NotBelowDomain { x: usize, g: usize },

    #[error("groupoid is not inductive: identities {x} and {y} have no meet")]
    NotInductive { x: usize, y: usize },

    #[error("search budget exceeded after {visited} nodes ({found} results so far)")]
    SearchBudgetExceeded { visited: u64, found: usize },

    #[error("not a semilattice of groups: {0}")]
    NotSemilatticeOfGroups(String),

    #[error("map does not preserve the heap operation or order: {0}")]
    NotHeapPreserving(String),

    #[error("semigroup has no identity element")]
    NotMonoid,

    #[error("alphabet mismatch: {left} letters vs {right} letters")]
    AlphabetMismatch { left: usize, right: usize },

    #[error("window exceeded: {0}")]
    WindowExceeded(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("i/o error: {0}")]
    Io(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
