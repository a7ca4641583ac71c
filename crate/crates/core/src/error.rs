use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Unparseable input: group spec, generator file syntax, manifest, check id.
    #[error("parse error: {0}")]
    Parse(String),

    /// Structurally valid input with an out-of-range or unusable parameter.
    #[error("parameter error: {0}")]
    Params(String),

    /// A construction failed (bad generators, mixed degrees, ...).
    #[error("build error: {0}")]
    Build(String),

    /// Built group's order does not match the declared expected order.
    #[error("order gate: expected {expected}, built group has order {got}")]
    OrderGate { expected: u64, got: u64 },

    /// Enumeration exceeded the element cap.
    #[error("enumeration cap of {cap} elements exceeded")]
    CapExceeded { cap: usize },

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl Error {
    /// Process exit code contract: parse failures 2, build/parameter/order
    /// problems 3, cap exhaustion 4.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::UnknownCheck(_) => 2,
            Error::Params(_) | Error::Build(_) | Error::OrderGate { .. } | Error::Io { .. } => 3,
            Error::CapExceeded { .. } => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
