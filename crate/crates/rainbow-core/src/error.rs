use crate::graph::{Edge, Vertex};

/// Precondition and validation failures surfaced by fallible operations.
///
/// Operations whose contract says "errors: none" panic on misuse instead;
/// everything listed here corresponds to a documented precondition.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("contraction set is empty")]
    EmptyContractionSet,
    #[error("vertex {0} has odd degree; Eulerian decomposition needs all degrees even")]
    OddDegreeVertex(Vertex),
    #[error("member {0} is empty")]
    EmptyMember(usize),
    #[error("members {i} and {j} share edge {edge}")]
    SharedEdge { i: usize, j: usize, edge: Edge },
    #[error("member {0} is not connected")]
    DisconnectedMember(usize),
    #[error("expected exactly {expected} members, found {found}")]
    MemberCountMismatch { expected: usize, found: usize },
    #[error("ambient vertex count {found} exceeds the supported {max} for this operation")]
    AmbientTooLarge { found: usize, max: usize },
    #[error("{count} colors exceed the subset-enumeration cap of {cap}")]
    SubsetCapExceeded { count: usize, cap: usize },
    #[error("{count} ground vertices exceed the bipartition-enumeration cap of {cap}")]
    VertexBudgetExceeded { count: usize, cap: usize },
    #[error("vector 0x{vector:x} does not fit in dimension {dim}")]
    DimensionMismatch { dim: usize, vector: u64 },
    #[error("matroid rank {found} does not match the {expected} colors")]
    RankMismatch { expected: usize, found: usize },
    #[error("closure of member {0} does not contain the target vector")]
    ClosureMissingTarget(usize),
    #[error("member {0} must be a star at the pivot or a cycle")]
    NotStarOrCycle(usize),
    #[error("member {0} is not a star at the pivot vertex")]
    NotAStar(usize),
    #[error("a rainbow cycle exists, so the star/cycle split does not apply")]
    RainbowCyclePresent,
    #[error("script: {0}")]
    Script(String),
}

impl Error {
    /// Shorthand used by the generator validators.
    pub(crate) fn script(msg: impl Into<String>) -> Self {
        Error::Script(msg.into())
    }
}
