use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("cone is not a face of the given cone")]
    NotAFace,
    #[error("finite locus of the chart values is not the dual face of a face of the chart cone")]
    FiniteLocusNotAFace,
    #[error("values violate the monoid relation {0}")]
    RelationViolation(String),
    #[error("element is not in the chart monoid")]
    NotInMonoid,
    #[error("point is not on chart {0}")]
    ChartMismatch(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no relevant subsets: Proj is empty")]
    EmptyProj,
    #[error("chart cone for relevant subset {0} is not simplicial")]
    NonSimplicial(String),
    #[error("point is not bounded: generator {generator} has negative valuation")]
    NotBounded { generator: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("points are not separated: {0}")]
    NotSeparating(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
