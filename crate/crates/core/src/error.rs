use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("degenerate sphere: the first {0} points are affinely dependent")]
    DegenerateSphere(usize),

    #[error("configuration is not of full rank")]
    NotFullRank,

    #[error("configuration is not full-dimensional (affine rank {rank}, ambient dimension {dim})")]
    NotFullDimensional { rank: usize, dim: usize },

    #[error("unknown label {label} (configuration has {n} elements)")]
    UnknownLabel { label: usize, n: usize },

    #[error("{0:?} is not a facet")]
    NotAFacet(Vec<usize>),

    #[error("configuration is not in convex position")]
    NotConvexPosition,

    #[error("configuration is not in general position")]
    NotGeneralPosition,

    #[error("chirotope is not acyclic: elements {0:?} carry a positive circuit")]
    NotAcyclic(Vec<usize>),

    #[error("inconsistent input: {0}")]
    Inconsistent(String),

    #[error("stereographic projection undefined: point {0} lies at the pole")]
    ProjectionUndefined(usize),

    #[error("decoding degenerate: {0}")]
    DecodingDegenerate(String),

    #[error("search failure: {0}")]
    SearchFailure(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("polynomial is not squarefree: repeated factor of degree {degree}")]
    NotSquarefree { degree: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("stage `{stage}` failed: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn at_stage(self, stage: &'static str) -> Error {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }

    /// The innermost error, skipping stage wrappers.
    pub fn root(&self) -> &Error {
        match self {
            Error::Stage { source, .. } => source.root(),
            other => other,
        }
    }

    pub fn is_search_failure(&self) -> bool {
        matches!(self.root(), Error::SearchFailure(_))
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
