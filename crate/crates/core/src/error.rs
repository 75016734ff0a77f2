use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    ParseError { line: usize, msg: String },
    #[error("unknown vertex id `{0}`")]
    ReferenceError(String),
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("embedding must be all-or-nothing (vertex `{0}`)")]
    MixedEmbedding(String),
    #[error("operation requires an embedded graph")]
    MissingEmbedding,
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph has a vertex of degree < 2")]
    NotMd2,
    #[error("more than {cap} cycle classes")]
    CombinatorialBlowup { cap: usize },
    #[error("cycle classes incomplete: walk count mismatch at length {length}")]
    IncompleteClasses { length: usize },
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("convergence failure: {0}")]
    ConvergenceFailure(String),
    #[error("quadrature failure: error estimate {estimate:e} above tolerance {tol:e}")]
    QuadratureFailure { estimate: f64, tol: f64 },
    #[error("profile integration failed: {0}")]
    OdeFailure(String),
    #[error("no sign change of the arc-length residual on the scan grid")]
    NoBracket,
    #[error("contour leaves the parameter domain without closing")]
    OpenContour,
    #[error("curves overlap along a segment of length {0:e}")]
    DegenerateIntersection(f64),
    #[error("gluing mismatch: matched {matched} of {cut_points} cut ends (max distance {max_mismatch:e})")]
    GluingMismatch { cut_points: usize, matched: usize, max_mismatch: f64 },
    #[error("edge `{0}` does not cross the slicing plane transversally")]
    NonTransverse(String),
    #[error("surgery produced a closed curve without vertices")]
    DetachedLoop,
    #[error("loop is not closed (gap {0:e})")]
    NotClosed(f64),
    #[error("vector is not tangent at the basepoint (dot {0:e})")]
    NotTangent(f64),
    #[error("holonomy elements have different basepoints")]
    BasepointMismatch,
    #[error("stratum `{0}` and its image under sigma differ in cell counts")]
    ShapeMismatch(String),
    #[error("twist on stratum `{0}` does not commute with the boundary")]
    NotChainMap(String),
    #[error("twist on stratum `{0}` is not invertible over the integers")]
    NotInvertible(String),
    #[error("assembled differential does not square to zero: {0}")]
    NotCochainComplex(String),
    #[error("boundary operators of stratum `{0}` do not square to zero")]
    BoundaryNotNilpotent(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Short variant name, used by the CLI on stderr.
    pub fn name(&self) -> &'static str {
        match self {
            Error::ParseError { .. } => "ParseError",
            Error::ReferenceError(_) => "ReferenceError",
            Error::DuplicateId(_) => "DuplicateId",
            Error::MixedEmbedding(_) => "MixedEmbedding",
            Error::MissingEmbedding => "MissingEmbedding",
            Error::NotConnected => "NotConnected",
            Error::NotMd2 => "NotMd2",
            Error::CombinatorialBlowup { .. } => "CombinatorialBlowup",
            Error::IncompleteClasses { .. } => "IncompleteClasses",
            Error::Overflow(_) => "Overflow",
            Error::ConvergenceFailure(_) => "ConvergenceFailure",
            Error::QuadratureFailure { .. } => "QuadratureFailure",
            Error::OdeFailure(_) => "OdeFailure",
            Error::NoBracket => "NoBracket",
            Error::OpenContour => "OpenContour",
            Error::DegenerateIntersection(_) => "DegenerateIntersection",
            Error::GluingMismatch { .. } => "GluingMismatch",
            Error::NonTransverse(_) => "NonTransverse",
            Error::DetachedLoop => "DetachedLoop",
            Error::NotClosed(_) => "NotClosed",
            Error::NotTangent(_) => "NotTangent",
            Error::BasepointMismatch => "BasepointMismatch",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::NotChainMap(_) => "NotChainMap",
            Error::NotInvertible(_) => "NotInvertible",
            Error::NotCochainComplex(_) => "NotCochainComplex",
            Error::BoundaryNotNilpotent(_) => "BoundaryNotNilpotent",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}
