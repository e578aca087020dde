use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },

    #[error("edge ({0}, {0}) is a self-loop")]
    SelfLoop(usize),

    #[error("vertex {vertex} outside 0..{n}")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("graph has {n} vertices, exhaustive search is limited to {limit}")]
    SizeLimitExceeded { n: usize, limit: usize },

    #[error("graph is complete; no vertex cut exists")]
    CompleteGraph,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("matrix is not symmetric at ({row}, {col}): |a_ij - a_ji| = {diff:e}")]
    NotSymmetric { row: usize, col: usize, diff: f64 },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal mass {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("need at least {required} vertices, got {got}")]
    TooFewVertices { required: usize, got: usize },

    #[error("vector length {got} does not match matrix order {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("zero vector has no Rayleigh quotient")]
    ZeroVector,

    #[error("smallest eigenvalue {0:e} is not zero; not a Laplacian spectrum")]
    NotLaplacianSpectrum(f64),

    #[error("invalid family parameters: {0}")]
    FamilyParameter(String),

    #[error("family `{0}` has no closed form")]
    NoClosedForm(String),

    #[error("unknown family spec `{0}`")]
    UnknownFamily(String),

    #[error("side lengths ({0}, {1}, {2}) do not form a non-degenerate triangle")]
    DegenerateTriangle(f64, f64, f64),

    #[error("need at least two weights, got {0}")]
    TooFewWeights(usize),

    #[error("weight {weight} at index {index} exceeds half of the total {total}")]
    UnbalancedWeight { index: usize, weight: f64, total: f64 },

    #[error("component containing vertex {min_vertex} has {size} vertices, more than (n - |X|)/2 = {limit}")]
    UnbalancedComponent { min_vertex: usize, size: usize, limit: f64 },

    #[error("separator leaves {0} component(s); at least two are required")]
    TooFewComponents(usize),

    #[error("embedding has {got} points, graph has {expected} vertices")]
    EmbeddingSize { expected: usize, got: usize },

    #[error("embedding is not zero-sum: |sum| = {norm:e} > {tol:e}")]
    NotZeroSum { norm: f64, tol: f64 },

    #[error("embedding places every vertex at the origin")]
    AllZeroEmbedding,

    #[error("graph is not a tree: {0}")]
    NotATree(String),

    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),

    #[error("separator finder broke its contract: {0}")]
    FinderContract(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
