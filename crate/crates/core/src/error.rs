use std::fmt;

use thiserror::Error;

use crate::clique::NodeId;

/// Errors shared across parsing, enumeration and benchmarking.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate clique: node {0} appears more than once")]
    DegenerateClique(NodeId),

    #[error("duplicate edge ({0}, {1}) in stream")]
    DuplicateEdge(NodeId, NodeId),

    #[error("self-loop ({0}, {0}) is not a valid edge")]
    SelfLoop(NodeId),

    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),

    #[error("malformed input{}: {msg}", OptLine(*.line))]
    MalformedInput { line: Option<usize>, msg: String },

    #[error("fixed-depth enumerator only supports d_max in {{3,4,5}}, got {0}; use the recursive variant")]
    FixedDepthUnsupported(usize),

    #[error("d_max must be >= 2, got {0}")]
    InvalidDmax(usize),

    #[error("oracle refuses {nodes} nodes (cap {cap})")]
    OracleTooLarge { nodes: usize, cap: usize },

    #[error("static adjacency does not match the edge stream: {0}")]
    InconsistentInput(String),

    #[error("node sequence is not in the required order: {0}")]
    InvalidOrder(String),

    #[error("no counting convention reproduces the published total {0}")]
    NoConventionMatches(u64),

    #[error("more than one counting convention reproduces the published total {0}")]
    AmbiguousConvention(u64),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

struct OptLine(Option<usize>);

impl fmt::Display for OptLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Some(n) => write!(f, " at line {n}"),
            None => Ok(()),
        }
    }
}

impl Error {
    pub fn malformed(line: impl Into<Option<usize>>, msg: impl Into<String>) -> Self {
        Error::MalformedInput {
            line: line.into(),
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
