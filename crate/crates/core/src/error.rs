use thiserror::Error;

/// Failures raised by builders, parsers and the search engine.
///
/// Every variant maps to a stable upper-case code (see [`Error::code`]) that
/// the CLI and the C interface surface verbatim.
#[derive(Debug, Error)]
pub enum Error {
    #[error("REJECT_HOST: {0}")]
    RejectHost(String),
    #[error("REJECT: {0}")]
    Reject(String),
    #[error("INVALID_CYCLE: {0}")]
    InvalidCycle(String),
    #[error("REJECT_SHAPE: {0}")]
    RejectShape(String),
    #[error("REJECT_PARAMS: {0}")]
    RejectParams(String),
    #[error("REJECT_PROFILE: {0}")]
    RejectProfile(String),
    #[error("REJECT_ALIGNMENT: {0}")]
    RejectAlignment(String),
    #[error("REJECT_COUNTS: {0}")]
    RejectCounts(String),
    #[error("REJECT_PARTS: {0}")]
    RejectParts(String),
    #[error("REJECT_ROW: {0}")]
    RejectRow(String),
    #[error("UNSUPPORTED: {0}")]
    Unsupported(String),
    #[error("NONEXISTENT: {0}")]
    Nonexistent(String),
    #[error("OPEN: {0}")]
    Open(String),
    #[error("NECESSARY_FAIL: {0}")]
    NecessaryFail(String),
    #[error("NOT_FOUND: {0}")]
    NotFound(String),
    #[error("MISSING_INGREDIENT: {}", .0.join(", "))]
    MissingIngredient(Vec<String>),
    #[error("UNKNOWN_FIXTURE: {0}")]
    UnknownFixture(String),
    #[error("PARSE: line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("UNVERIFIED: {0}")]
    Unverified(String),
    #[error("IO: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::RejectHost(_) => "REJECT_HOST",
            Error::Reject(_) => "REJECT",
            Error::InvalidCycle(_) => "INVALID_CYCLE",
            Error::RejectShape(_) => "REJECT_SHAPE",
            Error::RejectParams(_) => "REJECT_PARAMS",
            Error::RejectProfile(_) => "REJECT_PROFILE",
            Error::RejectAlignment(_) => "REJECT_ALIGNMENT",
            Error::RejectCounts(_) => "REJECT_COUNTS",
            Error::RejectParts(_) => "REJECT_PARTS",
            Error::RejectRow(_) => "REJECT_ROW",
            Error::Unsupported(_) => "UNSUPPORTED",
            Error::Nonexistent(_) => "NONEXISTENT",
            Error::Open(_) => "OPEN",
            Error::NecessaryFail(_) => "NECESSARY_FAIL",
            Error::NotFound(_) => "NOT_FOUND",
            Error::MissingIngredient(_) => "MISSING_INGREDIENT",
            Error::UnknownFixture(_) => "UNKNOWN_FIXTURE",
            Error::Parse { .. } => "PARSE",
            Error::Unverified(_) => "UNVERIFIED",
            Error::Io(_) => "IO",
        }
    }

    /// True for answers that classify the request rather than report a
    /// fault: the design is known not to exist, is open, or needs an
    /// ingredient the caller has to supply.
    pub fn is_classification(&self) -> bool {
        matches!(
            self,
            Error::Nonexistent(_)
                | Error::Open(_)
                | Error::MissingIngredient(_)
                | Error::NecessaryFail(_)
                | Error::NotFound(_)
                | Error::Unsupported(_)
        )
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Error {
        Error::Parse {
            line: 0,
            col: 0,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
