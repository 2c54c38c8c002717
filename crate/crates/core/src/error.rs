use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("edge {{{u}, {v}}} has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),
    #[error("{family} parameter {param} out of range (minimum {min})")]
    ParameterOutOfRange {
        family: &'static str,
        param: usize,
        min: usize,
    },
    #[error("edge list line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RomanError {
    #[error("{n} vertices exceeds the exact solver limit of {limit}")]
    TooLarge { n: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("dimension mismatch: distance matrix is {matrix}x{matrix}, labelling covers {labels} vertices")]
    DimensionMismatch { matrix: usize, labels: usize },
    #[error("labelling is not a Roman dominating function: {0}")]
    InvalidRdf(crate::roman::RdfViolation),
    #[error("matrix of order {n} exceeds the configured limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error("Jacobi iteration did not converge in {sweeps} sweeps (relative off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Roman(#[from] RomanError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PredictionError {
    #[error("no closed form for the {0} family")]
    NoClosedForm(crate::graph::Family),
    #[error("{family} closed form needs parameter >= {min}, got {param}")]
    OutOfRange {
        family: crate::graph::Family,
        param: usize,
        min: usize,
    },
}
