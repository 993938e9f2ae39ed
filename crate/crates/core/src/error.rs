use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong in the library.
///
/// The variants fall into three families, which the command-line front end
/// maps onto distinct exit codes: invalid input (bad indices, mismatched
/// carriers, violated hypotheses, unparsable files), exceeded capacity
/// bounds, and harness misuse (unknown theorem ids, bad parameters).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pair ({0}, {1}) out of range for carrier of size {2}")]
    IndexOutOfRange(usize, usize, usize),

    #[error("map value {value} at position {index} out of range for codomain of size {codomain}")]
    MapValueOutOfRange {
        index: usize,
        value: usize,
        codomain: usize,
    },

    #[error("carrier mismatch: {0} vs {1}")]
    CarrierMismatch(usize, usize),

    #[error("{role} is not {property}")]
    Hypothesis {
        role: &'static str,
        property: &'static str,
    },

    #[error("malformed operation table: {0}")]
    MalformedTable(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("capacity exceeded: {what} {requested} is over the limit of {limit}")]
    Capacity {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    pub(crate) fn hypothesis(role: &'static str, property: &'static str) -> Self {
        Error::Hypothesis { role, property }
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    /// True for errors caused by the input data itself (as opposed to
    /// capacity limits or harness usage).
    pub fn is_input(&self) -> bool {
        matches!(
            self,
            Error::IndexOutOfRange(..)
                | Error::MapValueOutOfRange { .. }
                | Error::CarrierMismatch(..)
                | Error::Hypothesis { .. }
                | Error::MalformedTable(_)
                | Error::Parse { .. }
        )
    }

    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }
}
