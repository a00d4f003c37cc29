use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} is outside the supported range 1..=64")]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid terminal set: {0}")]
    InvalidTerminals(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// A computational cap was exceeded (enumeration order, oracle order, subset-DP width).
    #[error("{what}: {value} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("cannot parse family spec `{0}`")]
    FamilySyntax(String),
    #[error("malformed report: {0}")]
    Report(String),
}

impl Error {
    /// True for errors that mean "this input is too large for the engine" rather than
    /// "this input is wrong".
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
