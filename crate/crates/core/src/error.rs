use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("vertex {vertex} out of range (graph has {bound})")]
    VertexOutOfRange { vertex: usize, bound: usize },

    #[error("duplicate edge {0:?}")]
    DuplicateEdge((usize, usize)),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid colour {colour} at vertex {vertex}")]
    InvalidColour { vertex: usize, colour: u32 },

    #[error("pattern has {size} vertices, cap is {cap}")]
    PatternTooLarge { size: usize, cap: usize },

    #[error("instance has {size} vertices, brute-force guard is {guard}")]
    GuardExceeded { size: usize, guard: usize },

    #[error("maximum degree {actual} exceeds bound {bound}")]
    DegreeBound { actual: usize, bound: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("sample budget exceeded: {needed} samples requested, budget {budget}")]
    SampleBudget { needed: String, budget: u64 },

    #[error("pattern must be connected and non-empty")]
    NotConnected,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("construction too large: {0}")]
    SizeBudget(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
