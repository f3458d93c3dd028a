use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An element payload does not belong to the realization it was used with.
    #[error("realization error: {0}")]
    Realization(String),

    #[error("resource limit: {what} needs {requested} but the cap is {cap}")]
    ResourceLimit {
        what: String,
        requested: String,
        cap: u64,
    },

    /// Internal consistency check failed; indicates a bug in an oracle path.
    #[error("integrity error: {0}")]
    Integrity(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A Cayley table or permutation file failed validation.
    #[error("import error: {0}")]
    Import(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn limit(what: impl Into<String>, requested: impl ToString, cap: u64) -> Self {
        Error::ResourceLimit {
            what: what.into(),
            requested: requested.to_string(),
            cap,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
