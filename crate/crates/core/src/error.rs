use thiserror::Error;

/// Errors raised by the library.
///
/// Variants other than [`Error::Parse`], [`Error::TooLarge`] and
/// [`Error::GroundMismatch`] report a violated precondition on otherwise
/// well-formed input; [`Error::is_domain_violation`] groups them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("operation requires a nonempty vertex set")]
    EmptyVertexSet,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("cannot contract a loop at vertex {0}")]
    LoopContraction(usize),
    #[error("digraph is not acyclic")]
    NotAcyclic,
    #[error("poset relation is not a strict partial order: {0}")]
    NotPartialOrder(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition of {found} does not match vertex count {expected}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid path cover: {0}")]
    InvalidPathCover(String),
    #[error("invalid cycle cover: {0}")]
    InvalidCycleCover(String),
    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),
    #[error("invalid directed tree: {0}")]
    InvalidTree(String),
    #[error("graph is not anchored by the given vertex set")]
    NotAnchored,
    #[error("incomparability graph is disconnected")]
    Disconnected,
    #[error("orientation is not circular")]
    NotCircular,
    #[error("orientation does not have a unique sink")]
    NotUniqueSink,
    #[error("flip iteration cap of {0} exceeded")]
    IterationCap(u64),
    #[error("not a stable link sequence: {0}")]
    InvalidLinkSequence(String),
    #[error("invalid ordered set partition: {0}")]
    InvalidSetPartition(String),
    #[error("set map is not invertible (value at the empty set is zero)")]
    NotInvertible,
    #[error("set map must take the value 1 at the empty set")]
    NotNormalized,
    #[error("set maps have different ground sets ({0} and {1})")]
    GroundMismatch(usize, usize),
    #[error("invalid path pair: {0}")]
    InvalidPathPair(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    /// True when the error reports input outside an operation's domain, as
    /// opposed to malformed text or capacity limits.
    pub fn is_domain_violation(&self) -> bool {
        !matches!(
            self,
            Error::Parse { .. } | Error::TooLarge { .. } | Error::GroundMismatch(..)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
