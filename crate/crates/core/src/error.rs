use thiserror::Error;

use crate::graph::{Arc, CycleType, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shifting {vertex} by {by} leaves the index range")]
    IndexOutOfRange { vertex: Vertex, by: i64 },

    #[error("vertex {0} appears more than once")]
    RepeatedVertex(Vertex),

    #[error("{kind} needs at least {min} vertices, got {got}")]
    TooShort {
        kind: &'static str,
        min: usize,
        got: usize,
    },

    #[error("cannot concatenate: terminal {terminal} differs from source {source_vertex}")]
    EndpointMismatch {
        terminal: Vertex,
        source_vertex: Vertex,
    },

    #[error("cannot concatenate: vertex {0} is shared by both walks")]
    SharedVertex(Vertex),

    #[error("cycles are not vertex-disjoint at {0}")]
    NotDisjoint(Vertex),

    #[error("arc set is not 2-regular at {0}")]
    NotTwoRegular(Vertex),

    #[error("arc {0} is not in the host digraph")]
    ForeignArc(Arc),

    #[error("cannot parse vertex {0:?}")]
    ParseVertex(String),

    #[error("cannot parse walk {0:?}")]
    ParseWalk(String),

    #[error("cannot parse factor type {0:?}: {1}")]
    ParseCycleType(String, String),

    #[error("{0}")]
    Domain(String),

    #[error("odd cycle length {0} in a bipartite factor type")]
    OddLength(u32),

    #[error("factor type {ty} has order {got}, expected {expected}")]
    OrderMismatch {
        ty: CycleType,
        got: u32,
        expected: u32,
    },

    #[error("factor type {0} is not covered by this construction")]
    Unsupported(CycleType),

    #[error("external patterns differ at factor {0}")]
    Incompatible(usize),

    #[error("internal verification failed: {0}")]
    Verification(String),

    #[error("search exhausted without a solution")]
    SearchExhausted,

    #[error("search budget exceeded")]
    BudgetExceeded,

    #[error("timed out after {0} ms")]
    Timeout(u64),

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
