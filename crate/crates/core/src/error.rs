use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {vertex} out of range for graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },

    #[error("vertex set over {set} vertices does not match graph of order {graph}")]
    HostMismatch { set: usize, graph: usize },

    #[error("vertex {0} is not a member of the set")]
    NotMember(usize),

    #[error("graph of order {order} exceeds solver cap of {cap} vertices")]
    CapExceeded { order: usize, cap: usize },

    #[error("graph6 short form supports at most 62 vertices, got {0}")]
    Graph6Size(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is empty")]
    EmptyGraph,

    #[error("graph is not a tree")]
    NotATree,

    #[error("invalid graph family: {0}")]
    InvalidFamily(String),

    #[error("invalid neighborhood partition: {0}")]
    InvalidPartition(String),

    #[error("mapping is not a bijection: {0}")]
    NotBijection(String),

    #[error("invalid labels: {0}")]
    InvalidLabels(String),

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("invalid construction spec: {0}")]
    InvalidSpec(String),

    #[error("witness construction failed: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
