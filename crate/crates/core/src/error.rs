use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not closed")]
    NotClosed,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("vertices {0} and {1} are not exchangeable")]
    NotExchangeable(usize, usize),
    #[error("oracle limit exceeded: n = {n} is above the bound {bound}")]
    OracleLimit { n: usize, bound: usize },
    #[error("invalid sequence family: {0}")]
    InvalidSequence(String),
    #[error("vertex {position} of layer {layer} has no forward edges")]
    EmptyLink { layer: usize, position: usize },
    #[error("invalid layer partition: {0}")]
    InvalidPartition(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
