use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    // exactmath
    #[error("series constant term must be +1 or -1")]
    NonUnitConstantTerm,
    #[error("truncation order {order} is below requested index {index}")]
    InsufficientOrder { order: usize, index: usize },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("both polynomials have degree zero in the elimination variable")]
    DegenerateElimination,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("root certification failed at {bits} bits")]
    PrecisionExhausted { bits: u32 },

    // polytope
    #[error("unsupported ambient dimension {0} (exact hulls need d <= 3)")]
    UnsupportedDimension(usize),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("polytope is not full-dimensional")]
    NotFullDimensional,
    #[error("polytopes do not fit a common rank-{0} lattice")]
    SubspaceMismatch(usize),
    #[error("fan does not refine the normal fan of polytope {0}")]
    FanNotRefining(usize),

    // formulas
    #[error("smoothness hypothesis violated: singular cone with rays {0:?} has no ray in the divisor support")]
    SmoothnessHypothesisViolated(Vec<usize>),
    #[error("no edge line of the Minkowski sum may pass through the origin (ray {0} is tight at 0)")]
    OriginOnEdgeLine(usize),
    #[error("codimension of the cone is below the number of mixed-volume arguments")]
    CodimensionMismatch,

    // arrangement
    #[error("instance too large for subset enumeration (n <= {max_n}, d <= {max_d})")]
    TooLarge { max_n: usize, max_d: usize },
    #[error("normals span a proper subspace: infinitely many critical points")]
    InfinitelyManyCriticalPoints,
    #[error("duplicate hyperplane at index {0}")]
    DuplicateHyperplane(usize),
    #[error("hyperplane normal is zero at index {0}")]
    ZeroNormal(usize),

    // oracle
    #[error("degenerate critical system: {0}")]
    DegenerateSystem(String),
    #[error("oracle supports only d = 1 or d = 2, got {0}")]
    UnsupportedOracleDimension(usize),

    // plumbing
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
