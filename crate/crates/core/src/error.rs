use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge endpoint {vertex} out of range for a graph on {n} vertices")]
    EndpointOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex set indexes a graph on {set_n} vertices, expected {graph_n}")]
    HostMismatch { set_n: usize, graph_n: usize },
    #[error("no edge {{{0}, {1}}}")]
    NoSuchEdge(usize, usize),
    #[error("no vertex {vertex} in a graph on {n} vertices")]
    NoSuchVertex { vertex: usize, n: usize },
    #[error("{0} vertices exceeds the capacity of 512")]
    CapacityExceeded(usize),
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("{n} vertices is above the enumeration cap of {cap}")]
    TooLargeForEnumeration { n: usize, cap: usize },
    #[error("bad partition: {0}")]
    BadPartition(String),
    #[error("invalid quadruple: {0}")]
    InvalidQuadruple(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
