use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),

    #[error("{family}: parameter {value} below minimum {min}")]
    TooSmall {
        family: &'static str,
        value: usize,
        min: usize,
    },

    #[error("graph has no edges")]
    Edgeless,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("representation has no point for vertex {0}")]
    MissingPoint(usize),

    #[error("representation point for vertex {0} is not finite")]
    NonFinitePoint(usize),

    #[error("representation dimension {found} does not match required {expected}")]
    Dimension { expected: usize, found: usize },

    #[error("edge ({0}, {1}) is degenerate (endpoints coincide)")]
    DegenerateEdge(usize, usize),

    #[error("vertices {0} and {1} coincide")]
    CoincidentVertices(usize, usize),

    #[error("vertex {vertex} lies in the interior of edge ({u}, {v})")]
    VertexOnEdge { vertex: usize, u: usize, v: usize },

    #[error("precondition violated on edge ({u}, {v}): {reason}")]
    Precondition { u: usize, v: usize, reason: String },

    #[error("maximum degree {0} exceeds 3")]
    DegreeTooLarge(usize),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("drawing validation failed: {0}")]
    InvalidDrawing(String),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("optimizer failed: {0}")]
    Optimizer(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
