use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operation requires {expected}-dimensional points, found {found}")]
    WrongDimension { expected: usize, found: usize },

    #[error("segment endpoints coincide")]
    DegenerateSegment,

    #[error("duplicate point at index {first} and {second}")]
    DuplicatePoint { first: usize, second: usize },

    #[error("index {index} out of range for {len} points")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("pair indices must be distinct (got {0} twice)")]
    SamePair(usize),

    #[error("need at least {needed} points, found {found}")]
    TooFewPoints { needed: usize, found: usize },

    #[error("point set is not in general position: {0:?} are collinear")]
    NotGeneralPosition([usize; 3]),

    #[error("empty polygon size must be 4 or 5, got {0}")]
    UnsupportedPolygonSize(usize),

    #[error("point sets intersect at {0:?}")]
    NotDisjoint(String),

    #[error("projection failed to become occlusion-free after {0} attempts")]
    ProjectionBudgetExhausted(usize),

    #[error("colour list has {colours} entries for {points} points")]
    ColourCountMismatch { colours: usize, points: usize },

    #[error("colour ids are not dense: id {0} is unused")]
    SparseColours(usize),

    #[error("visibility graph is not complete multipartite: {i} ~ {j} ~ {k} but {i} and {k} are visible")]
    NotMultipartite { i: usize, j: usize, k: usize },

    #[error("point set is not blocked ({0} violations)")]
    NotBlocked(usize),

    #[error("point set is not midpoint-blocked: midpoint of {0} and {1} is missing")]
    NotMidpointBlocked(usize, usize),

    #[error("unknown configuration name {0:?}")]
    UnknownName(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("no valid placement found within {0} candidates")]
    PlacementBudgetExhausted(usize),

    #[error("malformed line {index}: {reason}")]
    MalformedLine { index: usize, reason: String },

    #[error("cannot parse {0:?}")]
    Parse(String),
}
