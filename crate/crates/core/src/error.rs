use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Unified error type for the whole crate.
///
/// `Io` is the only variant that maps to an I/O failure at the CLI boundary;
/// everything else is a domain error (bad input data, infeasible config, …).
#[derive(Debug, Error)]
pub enum Error {
    #[error("multiplicity of `{id}` must be finite and non-negative, got {value}")]
    InvalidMultiplicity { id: String, value: f64 },

    #[error("hb-edge `{0}` has empty support")]
    EmptySupport(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown hb-edge `{0}`")]
    UnknownHbEdge(String),

    #[error("hb-edge `{id}` must have a finite positive weight, got {weight}")]
    NonPositiveWeight { id: String, weight: f64 },

    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),

    #[error("duplicate hb-edge id `{0}`")]
    DuplicateHbEdge(String),

    #[error("infeasible generator config: {0}")]
    InfeasibleConfig(String),

    #[error("vertex `{0}` is isolated (m-degree 0)")]
    IsolatedVertex(String),

    #[error("random walk exceeded the step cap of {0} without full exploration")]
    StepCapExceeded(u64),

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("length mismatch: expected {expected} values, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("schema error: {0}")]
    Schema(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Short stable name of the variant, used in CLI diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidMultiplicity { .. } => "InvalidMultiplicity",
            Error::EmptySupport(_) => "EmptySupport",
            Error::UnknownVertex(_) => "UnknownVertex",
            Error::UnknownHbEdge(_) => "UnknownHbEdge",
            Error::NonPositiveWeight { .. } => "NonPositiveWeight",
            Error::DuplicateVertex(_) => "DuplicateVertex",
            Error::DuplicateHbEdge(_) => "DuplicateHbEdge",
            Error::InfeasibleConfig(_) => "InfeasibleConfig",
            Error::IsolatedVertex(_) => "IsolatedVertex",
            Error::StepCapExceeded(_) => "StepCapExceeded",
            Error::InvalidSubset(_) => "InvalidSubset",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::Parse(_) => "ParseError",
            Error::Schema(_) => "SchemaError",
            Error::Io(_) => "IoError",
        }
    }

    /// True for errors that should map to the I/O exit code at the CLI.
    pub fn is_io(&self) -> bool {
        matches!(self, Error::Io(_))
    }
}
