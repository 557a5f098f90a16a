use thiserror::Error;

/// Errors reported by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The rank is below 2 or above the supported maximum.
    #[error("invalid rank {0}: expected 2 <= n <= 64")]
    InvalidRank(usize),
    /// Two operands have different ranks.
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch {
        /// Rank of the left operand.
        left: usize,
        /// Rank of the right operand.
        right: usize,
    },
    /// Weight coordinates mix integers and half-integers.
    #[error("weight coordinates must all be integers or all be half-integers")]
    MixedParity,
    /// An index lies outside its admissible range.
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange {
        /// The offending index.
        index: usize,
        /// The largest admissible index.
        max: usize,
    },
    /// The Dynkin adjacency table needs `n >= 4`.
    #[error("unsupported small rank {0}: the adjacency table needs n >= 4")]
    UnsupportedSmallRank(usize),
    /// A weight is not of the form (±1/2, ..., ±1/2).
    #[error("weight is not a spin weight")]
    NotSpinWeight,
    /// A weight that must be dominant is not.
    #[error("weight is not dominant")]
    NotDominant,
    /// A prefix sum of a weight sequence fails dominance.
    #[error("prefix sum of length {0} is not dominant")]
    NotInT(usize),
    /// A tensor element is not highest-weight.
    #[error("tensor element is not highest-weight")]
    NotHighest,
    /// The weight does not index a component of the N-fold tensor power.
    #[error("weight does not lie in the highest-weight set for this length")]
    NotInDelta,
    /// A brute-force computation exceeds the configured size bound.
    #[error("instance too large for brute force: n*N = {size} exceeds limit {limit}")]
    InstanceTooLarge {
        /// The product `n * N`.
        size: usize,
        /// The configured bound.
        limit: usize,
    },
    /// A cell diagram or short Young diagram violates its invariants.
    #[error("invalid diagram: {0}")]
    InvalidDiagram(&'static str),
    /// A tableau violates its invariants.
    #[error("invalid tableau: {0}")]
    InvalidTableau(&'static str),
    /// A triple fails the admissibility conditions.
    #[error("triple is not admissible")]
    NotAdmissible,
    /// An operation was called on a triple of the wrong type.
    #[error("operation requires a triple of a different type")]
    WrongType,
    /// A word could not be parsed.
    #[error("cannot parse word token {0:?}")]
    Parse(alloc::string::String),
}

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
