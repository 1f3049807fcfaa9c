use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },

    #[error("graph is not regular")]
    NotRegular,

    #[error("label set has {labels} labels but the graph has {order} vertices")]
    SizeMismatch { order: usize, labels: usize },

    #[error("invalid label set: {0}")]
    InvalidLabels(String),

    #[error("magic constant is not an integer: {numerator}/{denominator}")]
    NonIntegerConstant { numerator: i128, denominator: i128 },

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("value {value} does not fit in the label type")]
    Overflow { value: i128 },

    #[error("labeling is not magic: {0}")]
    NotMagic(String),

    #[error("search limited to graphs with at most {limit} vertices (got {order})")]
    TooLarge { order: usize, limit: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("malformed line {0:?}")]
    Malformed(String),
    #[error("vertex id {id} out of range (order {order})")]
    OutOfRange { id: i64, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
