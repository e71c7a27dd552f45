use thiserror::Error;

/// Every failure the library can report. Variant names double as the error
/// names printed by the command-line driver.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("MalformedGraph6: {0}")]
    MalformedGraph6(String),
    #[error("EmptyGraph: a graph needs at least one vertex")]
    EmptyGraph,
    #[error("IsolatedVertex: vertex {vertex} has no neighbors")]
    IsolatedVertex { vertex: usize },
    #[error("SelfLoop: vertex {vertex} is adjacent to itself")]
    SelfLoop { vertex: usize },
    #[error("VertexOutOfRange: vertex {vertex} not below {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("HostMismatch: set over {set_n} vertices used with a graph on {graph_n}")]
    HostMismatch { set_n: usize, graph_n: usize },
    #[error("OracleLimitExceeded: n = {n} exceeds the exhaustive limit {limit}")]
    OracleLimitExceeded { n: usize, limit: usize },
    #[error("NotInDominatingSet: vertex {vertex} is not a member of the set")]
    NotInDominatingSet { vertex: usize },
    #[error("NotDominating: the set does not dominate the graph")]
    NotDominating,
    #[error("NotMinimum: set of size {size} but the domination number is {gamma}")]
    NotMinimum { size: usize, gamma: usize },
    #[error("NotCanonical: member {vertex} has no private neighbor")]
    NotCanonical { vertex: usize },
    #[error("InvalidSurjection: {0}")]
    InvalidSurjection(String),
    #[error("InternalContradiction: {0}")]
    InternalContradiction(String),
    #[error("DomainViolation: ({u}, {v}) lies in D_G x D_H")]
    DomainViolation { u: usize, v: usize },
    #[error("Io: {0}")]
    Io(String),
    #[error("InvalidConfig: {0}")]
    InvalidConfig(String),
    #[error("ProductTooLarge: {n_g} x {n_h} vertices exceeds the cap {cap}")]
    ProductTooLarge { n_g: usize, n_h: usize, cap: usize },
}

impl Error {
    /// Short machine-readable name of the variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::MalformedGraph6(_) => "MalformedGraph6",
            Error::EmptyGraph => "EmptyGraph",
            Error::IsolatedVertex { .. } => "IsolatedVertex",
            Error::SelfLoop { .. } => "SelfLoop",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::HostMismatch { .. } => "HostMismatch",
            Error::OracleLimitExceeded { .. } => "OracleLimitExceeded",
            Error::NotInDominatingSet { .. } => "NotInDominatingSet",
            Error::NotDominating => "NotDominating",
            Error::NotMinimum { .. } => "NotMinimum",
            Error::NotCanonical { .. } => "NotCanonical",
            Error::InvalidSurjection(_) => "InvalidSurjection",
            Error::InternalContradiction(_) => "InternalContradiction",
            Error::DomainViolation { .. } => "DomainViolation",
            Error::Io(_) => "Io",
            Error::InvalidConfig(_) => "InvalidConfig",
            Error::ProductTooLarge { .. } => "ProductTooLarge",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
