use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("{n} vertices exceeds the limit of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("vertex {0} listed twice")]
    RepeatedVertex(usize),
    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error("not a solvable prime graph (complement must be triangle-free and 3-colorable)")]
    NotSolvable,
    #[error("not a minimal prime graph")]
    NotMinimal,
    #[error("G({n},{k}) is outside the family n >= 5, n = 0 or 5 mod 6, k = floor((n+2)/6)")]
    OutsideFamily { n: usize, k: usize },
    #[error("invalid circulant parameters n={n}, k={k}")]
    InvalidCirculant { n: usize, k: usize },
    #[error("operation requires the C5 model (5 multiplicities)")]
    NotC5Model,
    #[error("product kind {0} is not a complementary product")]
    NotComplementary(String),
    #[error("unknown product kind {0:?}")]
    UnknownProductKind(String),
    #[error("set is not a maximal clique")]
    NotMaximalClique,
    #[error("no 3-coloring of the complement uses at most two colors on the clique")]
    NoTwoColoredClique,
    #[error("vertex set is not a generation site")]
    NotGenerationSite,
    #[error("automorphism group has more than {max} elements")]
    GroupTooLarge { max: usize },
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("duplicate catalog name {0:?}")]
    DuplicateName(String),
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
