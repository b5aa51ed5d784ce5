use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,

    #[error("frame size mismatch: {left} vs {right}")]
    FrameSizeMismatch { left: usize, right: usize },

    #[error("invalid generator set: {0}")]
    InvalidGeneratorSet(String),

    #[error("row {row} is neither purely z nor purely x")]
    NotCss { row: usize },

    #[error("generator {row} is linearly dependent on the preceding rows")]
    DependentRow { row: usize },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("qubit index {index} out of range for {qubits} qubits")]
    QubitOutOfRange { index: usize, qubits: usize },

    #[error("two-qubit gate needs distinct qubits, got {0} twice")]
    SameQubit(usize),

    #[error("window of {frames} frames is too small: need at least {needed}")]
    WindowTooSmall { frames: usize, needed: usize },

    #[error("ambiguous syndrome table: {0}")]
    AmbiguousTable(String),

    #[error("unsupported parameter: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
