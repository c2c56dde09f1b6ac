use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cover relation contains a directed cycle")]
    CycleDetected,
    #[error("covers are not graded: element {element} would need ranks {rank_a} and {rank_b}")]
    NotGraded {
        element: usize,
        rank_a: usize,
        rank_b: usize,
    },
    #[error("weight of element {element} is not strictly positive")]
    NonPositiveWeight { element: usize },
    #[error("unknown element id {id} (poset has {count} elements)")]
    UnknownElement { id: usize, count: usize },
    #[error("instance has {size} elements, oracle limit is {limit}")]
    TooLargeForOracle { size: usize, limit: usize },
    #[error("parameter {value} exceeds the size limit {limit} for {what}")]
    SizeLimit {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("permutations act on different sets ({left} vs {right} points)")]
    SizeMismatch { left: usize, right: usize },
    #[error("flow assignment does not match the network's edge set")]
    EdgeMismatch,
    #[error("flow is not conserved at intermediate vertex {vertex}")]
    ConservationViolated { vertex: usize },
    #[error("network has no source or no sink")]
    NoSourceOrSink,
    #[error("vertex {vertex} lies on no source-to-sink path; its lower bound is unsatisfiable")]
    UnsatisfiableLowerBound { vertex: usize },
    #[error("edge ({tail}, {head}) does not join the two sides of a bipartite network")]
    NotBipartite { tail: usize, head: usize },
    #[error("morphism must be verified (all four axioms passing) before use")]
    MorphismUnverified,
    #[error("vertex set is not an antichain: {lower} lies below {upper}")]
    NotAntichain { lower: usize, upper: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("failed to parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
