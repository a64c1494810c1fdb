use thiserror::Error;

use crate::graph::Sign;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("negative loop at vertex {0}")]
    NegativeLoopForbidden(usize),

    #[error("duplicate edge {u}-{v} with sign {sign}")]
    DuplicateEdge { u: usize, v: usize, sign: Sign },

    #[error("no edge {u}-{v} with sign {sign}")]
    EdgeNotFound { u: usize, v: usize, sign: Sign },

    #[error("cannot contract {u}-{v}: only positive non-loop edges can be contracted")]
    IllegalContraction { u: usize, v: usize },

    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("{what} of size {size} exceeds the supported limit {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error("construction method not applicable: {0}")]
    MethodNotApplicable(String),

    #[error("unsupported input: {0}")]
    UnsupportedInput(String),

    #[error("invalid gallery arguments: {0}")]
    InvalidGalleryArgs(String),

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("incomplete mapping: {0}")]
    IncompleteMapping(String),

    #[error("invalid homomorphism: {0}")]
    InvalidHomomorphism(String),

    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("no circular clique for p = {p}, q = {q}: need p >= 2q and q >= 1")]
    InfeasibleClique { p: u64, q: u64 },

    #[error("invalid input colouring: {0}")]
    InvalidInputColoring(String),

    #[error("no candidate circumference in the search grid is feasible")]
    UnboundedCandidate,

    #[error("feasibility is not monotone: {0}")]
    NonMonotone(String),

    #[error("signatures do not partition the edge set: {0}")]
    NotAPartition(String),

    #[error("edge set is not a cut: {0}")]
    NotACut(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
