use thiserror::Error;

/// Error type shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("mixed radicands {0} and {1} in quadratic-extension arithmetic")]
    RadicandMismatch(String, String),
    #[error("division by zero in quadratic extension")]
    ExtDivisionByZero,
    #[error("zero polynomial rejected")]
    ZeroPolynomial,
    #[error("polynomial has degree {0} > 2 in the distinguished variable")]
    NotQuadratic(usize),
    #[error("invalid rational literal {0:?}")]
    BadRational(String),
    #[error("2x4 span matrix must have rank 2, got rank {0}")]
    NotALine(usize),
    #[error("flag frame must be square and invertible")]
    SingularFlag,
    #[error("matrix is not unit upper-triangular")]
    NotUnitUpper,
    #[error("total-positivity test limited to size <= {max}, got {got}")]
    SizeAboveBound { max: usize, got: usize },
    #[error("elementary index {0} out of range 1..={1}")]
    ElementaryIndex(usize, usize),
    #[error("nonpositive parameter {0} in totally positive factorization")]
    NonpositiveParameter(String),
    #[error("word of length {len} does not reduce to the longest permutation of {m} letters")]
    NotReducedWord { len: usize, m: usize },
    #[error("lines not pairwise skew: lines {0} and {1} intersect")]
    NotSkew(usize, usize),
    #[error("degenerate configuration: quadric system kernel has dimension {0}, expected 1")]
    DegenerateQuadricSystem(usize),
    #[error("non-generic configuration: restriction of the quadric to the line degenerates")]
    DegenerateRestriction,
    #[error("repeated parameter {0} in inverse Wronski input")]
    RepeatedParameter(String),
    #[error("polynomial basis is linearly dependent")]
    DependentBasis(),
    #[error("basis polynomial exceeds degree bound {0}")]
    DegreeBound(usize),
    #[error("curve coordinates vanish simultaneously at a real parameter")]
    CurveBasePoint,
    #[error("curve is degenerate: Frenet determinant has {0} real root(s)")]
    DegenerateCurve(usize),
    #[error("line has persistent incidence with the tangent family (identically zero incidence polynomial)")]
    PersistentIncidence,
    #[error("trials must be >= 1")]
    NoTrials,
    #[error("no generic sample found within the trial budget")]
    NoGenericSample,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("evaluation at a common zero of all coordinates")]
    EvalAtBasePoint,
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
